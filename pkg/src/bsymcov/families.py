"""Constructors for the concrete codes: Hamming, Reed-Solomon, (consta)cyclic,
the four fixed example codes, and the block-diagonal Hamming covering code."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from . import config
from .gf import FieldSpec, field_make, field_of_order
from .linalg import LinearCode


# -- polynomials over F_q (ascending coefficient lists) --------------------

def poly_trim(a: list[int]) -> list[int]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], F: FieldSpec) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(int(x), int(y)))
    return poly_trim(out)


def poly_divmod(a: Sequence[int], d: Sequence[int], F: FieldSpec) -> tuple[list[int], list[int]]:
    a = poly_trim([int(x) for x in a])
    d = poly_trim([int(x) for x in d])
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = F.inv(d[-1])
    quot = [0] * max(len(a) - len(d) + 1, 0)
    while len(a) >= len(d):
        shift = len(a) - len(d)
        coef = F.mul(a[-1], inv_lead)
        quot[shift] = coef
        for i, di in enumerate(d):
            a[shift + i] = F.sub(a[shift + i], F.mul(coef, di))
        a = poly_trim(a)
    return poly_trim(quot), a


# -- families --------------------------------------------------------------

def projective_points(F: FieldSpec, m: int) -> np.ndarray:
    """One representative per 1-dim subspace of F_q^m, first nonzero entry 1.

    Rows come in lexicographic order (first coordinate most significant).
    """
    q = F.q
    pts = []
    for lead in range(m):
        # zeros before `lead`, a 1 at `lead`, anything after
        tail = m - lead - 1
        for r in range(q**tail):
            v = [0] * m
            v[lead] = 1
            for i in range(tail):
                v[m - 1 - i] = (r // q**i) % q
            pts.append(v)
    pts.sort()
    return np.array(pts, dtype=np.int64)


def hamming_parity_matrix(F: FieldSpec, m: int) -> np.ndarray:
    return projective_points(F, m).T.copy()


def hamming_code(q: int | FieldSpec, m: int) -> LinearCode:
    """The [(q^m-1)/(q-1), (q^m-1)/(q-1) - m, 3]_q Hamming code."""
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    if m < 2:
        raise ValueError("Hamming codes need m >= 2")
    n = (F.q**m - 1) // (F.q - 1)
    config.require(n, "Hamming code length")
    return LinearCode.from_parity_check(F, hamming_parity_matrix(F, m), name=f"Hamming({F.q},{m})")


def rs_code(q: int | FieldSpec, n: int, k: int, points: Sequence[int] | None = None) -> LinearCode:
    """Reed-Solomon code: evaluations of polynomials of degree < k at n points.

    Default points are the field elements 0, 1, ..., n-1 in encoding order.
    """
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    if n > F.q:
        raise ValueError(f"RS length {n} exceeds field size {F.q}")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    pts = list(range(n)) if points is None else [int(p) for p in points]
    if len(pts) != n:
        raise ValueError(f"expected {n} evaluation points")
    if len(set(pts)) != n:
        raise ValueError("evaluation points must be distinct")
    if any(not 0 <= p < F.q for p in pts):
        raise ValueError("evaluation point outside the field")
    G = np.array([[F.pow(p, i) for p in pts] for i in range(k)], dtype=np.int64)
    return LinearCode(F, G, name=f"RS({n},{k}) over F_{F.q}")


def cyclic_code(
    q: int | FieldSpec, n: int, g: Sequence[int], lam: int = 1
) -> LinearCode:
    """Constacyclic code generated by g in F_q[x]/(x^n - lam); lam = 1 is cyclic."""
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    g = poly_trim([int(c) % F.q for c in g])
    if not g:
        raise ValueError("generator polynomial is zero")
    deg = len(g) - 1
    if deg >= n:
        raise ValueError("generator degree must be below n")
    if not lam or not 0 < lam < F.q:
        raise ValueError("lambda must be a nonzero field element")
    modulus = [F.neg(lam)] + [0] * (n - 1) + [1]
    _, rem = poly_divmod(modulus, g, F)
    if rem:
        raise ValueError(f"g does not divide x^{n} - {lam}")
    k = n - deg
    G = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        G[i, i : i + deg + 1] = g
    kind = "cyclic" if lam == 1 else f"{lam}-constacyclic"
    return LinearCode(F, G, name=f"{kind}[{n},{k}] over F_{F.q}")


def constacyclic_shift(x: Sequence[int], lam: int, F: FieldSpec) -> np.ndarray:
    x = np.asarray(x, dtype=np.int64)
    return np.concatenate([[F.mul(lam, int(x[-1]))], x[:-1]])


def block_hamming(q: int | FieldSpec, m: int, t: int) -> LinearCode:
    """Code whose parity-check matrix is t diagonal copies of the Hamming one."""
    F = q if isinstance(q, FieldSpec) else field_of_order(q)
    if t < 1:
        raise ValueError("t must be positive")
    Hb = hamming_parity_matrix(F, m)
    r, nb = Hb.shape
    config.require(t * nb, "block Hamming length")
    H = np.zeros((t * r, t * nb), dtype=np.int64)
    for i in range(t):
        H[i * r : (i + 1) * r, i * nb : (i + 1) * nb] = Hb
    return LinearCode.from_parity_check(F, H, name=f"BlockHamming({F.q},{m},{t})")


_EXAMPLE3_H = [
    [1, 0, 0, 1, 1, 0],
    [0, 1, 0, 0, 1, 1],
    [0, 0, 1, 1, 0, 1],
]

_EXAMPLE4_G = [
    [1, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [1, 1, 0, 0, 1, 1, 0, 0],
    [0, 1, 1, 0, 0, 1, 1, 0],
]


def paper_example(ident: int, size: int | None = None) -> LinearCode:
    """The binary example codes.

    1: generator (I_n | I_n), ``size`` = n >= 2.
    2: [4t, 2t] code with row i equal to 11 at columns 2i, 2i+1, ``size`` = t >= 1.
    3: the [6, 3, 3] code with the fixed 3x6 parity-check matrix.
    4: the [8, 4, 4] code with the fixed 4x8 generator matrix.
    """
    F2 = field_make(2)
    if ident == 1:
        n = 3 if size is None else size
        if n < 2:
            raise ValueError("example 1 needs n >= 2")
        eye = np.eye(n, dtype=np.int64)
        return LinearCode(F2, np.hstack([eye, eye]), name=f"example1(n={n})")
    if ident == 2:
        t = 1 if size is None else size
        if t < 1:
            raise ValueError("example 2 needs t >= 1")
        G = np.zeros((2 * t, 4 * t), dtype=np.int64)
        for i in range(2 * t):
            G[i, 2 * i] = G[i, 2 * i + 1] = 1
        return LinearCode(F2, G, name=f"example2(t={t})")
    if size is not None:
        raise ValueError(f"example {ident} takes no size parameter")
    if ident == 3:
        return LinearCode.from_parity_check(F2, _EXAMPLE3_H, name="example3")
    if ident == 4:
        return LinearCode(F2, _EXAMPLE4_G, name="example4")
    raise ValueError(f"no example {ident}")


@dataclass
class FamilySpec:
    tag: str
    params: list[int] = dc_field(default_factory=list)


FAMILY_TAGS = ("hamming", "rs", "cyclic", "constacyclic", "example1", "example2",
               "example3", "example4", "block_hamming")


def build_family(spec: FamilySpec) -> LinearCode:
    """Construct a code from a family tag and its integer parameters.

    hamming q m | rs q n k [points...] | cyclic q n g0 g1 ... |
    constacyclic q n lam g0 g1 ... | example1 n | example2 t | example3 |
    example4 | block_hamming q m t
    """
    tag, p = spec.tag, list(spec.params)

    def need(count: int, at_least: bool = False):
        if (len(p) < count) if at_least else (len(p) != count):
            raise ValueError(f"family {tag} expects {'at least ' if at_least else ''}{count} parameters")

    if tag == "hamming":
        need(2)
        return hamming_code(p[0], p[1])
    if tag == "rs":
        need(3, at_least=True)
        return rs_code(p[0], p[1], p[2], p[3:] or None)
    if tag == "cyclic":
        need(3, at_least=True)
        return cyclic_code(p[0], p[1], p[2:])
    if tag == "constacyclic":
        need(4, at_least=True)
        return cyclic_code(p[0], p[1], p[3:], lam=p[2])
    if tag in ("example1", "example2"):
        need(1)
        return paper_example(int(tag[-1]), p[0])
    if tag in ("example3", "example4"):
        need(0)
        return paper_example(int(tag[-1]))
    if tag == "block_hamming":
        need(3)
        return block_hamming(p[0], p[1], p[2])
    raise ValueError(f"unknown family {tag!r}")

"""List-decodability in the b-symbol metric and the list-size bounds.

``list_size_at_radius`` measures the largest number of codewords in any
b-symbol ball of a given radius.  Because C = -C, the codewords within
distance d of a centre x are in bijection with the vectors of the coset
x + C of b-weight at most d, so one syndrome-grouped pass over F_q^n gives
the answer for every centre at once.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from . import config
from .bsymbol import check_b, weights_b
from .linalg import LinearCode, coset_count_within, digits_table_row, enumerate_codewords, iter_space


@dataclass
class ListProfile:
    b: int
    radius: int
    L_max: int
    witness: list[int]  # lexicographically smallest centre attaining L_max

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def list_size_at_radius(C: LinearCode, b: int, d: int, method: str = "coset") -> ListProfile:
    check_b(b, C.n)
    if d < 0:
        raise ValueError("radius must be non-negative")
    if method == "coset":
        counts, first = coset_count_within(C, lambda blk: weights_b(blk, b), d)
        best = int(counts.max())
        rank_ = int(first[counts == best].min())
    elif method == "direct":
        best, rank_ = _list_size_direct(C, b, d)
    else:
        raise ValueError(f"unknown method {method!r}")
    return ListProfile(b, d, best, digits_table_row(C.q, C.n, rank_).tolist())


def _list_size_direct(C: LinearCode, b: int, d: int) -> tuple[int, int]:
    F = C.field
    config.require(F.q**C.n * C.size, "direct list-size scan")
    words = enumerate_codewords(C)
    best, best_rank = -1, -1
    for start, block in iter_space(F, C.n):
        count = np.zeros(block.shape[0], dtype=np.int64)
        for c in words:
            count += weights_b(F.sub(block, c[None, :]), b) <= d
        i = int(np.argmax(count))  # argmax returns the first, i.e. smallest rank
        if count[i] > best:
            best, best_rank = int(count[i]), start + i
    return best, best_rank


# -- bound calculators -------------------------------------------------------

def iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for integers x >= 0, k >= 1."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    r = 1 << ((x.bit_length() + k - 1) // k)  # r**k >= x
    while True:
        s = ((k - 1) * r + x // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def floor_power(L: int, q: int, exponent: Fraction) -> int:
    """floor(L * q**exponent) exactly, exponent rational."""
    exponent = Fraction(exponent)
    a, c = exponent.numerator, exponent.denominator
    if a >= 0:
        return iroot(L**c * q**a, c)
    return iroot(L**c // q ** (-a), c)


@dataclass
class ListBound:
    name: str
    status: str  # "holds" (computed) or "inapplicable"
    exponent: Fraction | None = None
    value: int | None = None
    note: str = ""

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["exponent"] = None if self.exponent is None else str(self.exponent)
        return d


def covering_list_bound(L: int, covering_code_size: int) -> int:
    """|C| <= L * |C1| for any C1 whose b-covering radius is at most the list radius."""
    return L * covering_code_size


def list_singleton_bound(q: int, n: int, b: int, d: int, L: int) -> ListBound:
    """|C| <= L * q^(n - d + b - 1) for a (d, L) list-decodable b-symbol code."""
    if not (1 <= b <= n - 1 and b - 1 <= d <= n + b - 1 and L >= 1):
        return ListBound("list_singleton", "inapplicable", note="needs 1<=b<=n-1, b-1<=d, L>=1")
    e = Fraction(n - d + b - 1)
    return ListBound("list_singleton", "holds", e, floor_power(L, q, e))


def block_hamming_list_bound(q: int, n: int, b: int, d: int, L: int, m: int, t: int) -> ListBound:
    """|C| <= L * q^(n - m d / b) when n = t (q^m - 1)/(q - 1) and d = b t."""
    N = (q**m - 1) // (q - 1)
    problems = []
    if n != t * N:
        problems.append(f"n != t(q^m-1)/(q-1) = {t * N}")
    if d != b * t:
        problems.append(f"d != b*t = {b * t}")
    if not 1 <= b <= N:
        problems.append(f"b outside [1, {N}]")
    if t < 1 or L < 1:
        problems.append("need t >= 1 and L >= 1")
    if problems:
        return ListBound("block_hamming_list", "inapplicable", note="; ".join(problems))
    e = n - Fraction(m * d, b)
    note = "" if t % 2 == 0 else "t is odd; the covering construction does not use parity"
    return ListBound("block_hamming_list", "holds", e, floor_power(L, q, e), note)


def punctured_list_bound(q: int, n: int, t: int, v: int, D: int) -> ListBound:
    """Pair-metric size bound via puncturing v coordinates or padding to the next block.

    Exponent min(n - 5(D-1)/4 + v/4, n - 5(D-1)/4 + (q^5-1)/(q-1) - v).
    """
    N = (q**5 - 1) // (q - 1)
    if t < 1 or not 0 <= v <= N - 1 or n != t * N + v or D > 4 * t + 1:
        return ListBound("punctured_list", "inapplicable",
                         note="needs n = t(q^5-1)/(q-1) + v, 0 <= v < (q^5-1)/(q-1), D <= 4t+1")
    base = n - Fraction(5 * (D - 1), 4)
    e = min(base + Fraction(v, 4), base + N - v)
    return ListBound("punctured_list", "holds", e, floor_power(1, q, e))


def mds_length_verdict(q: int, n: int, D: int) -> ListBound:
    """Whether a length-n symbol-pair code of minimum pair distance D cannot be MDS."""
    general = D > 2 * q**5 + 1 and 2 * (q - 1) * n > (D - 1) * (q**5 - 1)
    binary = q == 2 and D >= 63 and 2 * n >= 31 * (D - 1)
    if general or binary:
        which = "general condition" if general else "binary condition D >= 63, n >= 31(D-1)/2"
        return ListBound("mds_length", "holds", note=f"cannot be MDS ({which})")
    return ListBound("mds_length", "inapplicable", note="length/distance conditions not met")


def singleton_list_bounds(
    q: int,
    n: int,
    b: int,
    d: int,
    L: int,
    m: int | None = None,
    t: int | None = None,
    v: int | None = None,
    D: int | None = None,
) -> dict[str, ListBound]:
    """Every list-size bound whose parameters were supplied."""
    out = {"list_singleton": list_singleton_bound(q, n, b, d, L)}
    if m is not None and t is not None:
        out["block_hamming_list"] = block_hamming_list_bound(q, n, b, d, L, m, t)
    if t is not None and v is not None and D is not None:
        out["punctured_list"] = punctured_list_bound(q, n, t, v, D)
    if D is not None:
        out["mds_length"] = mds_length_verdict(q, n, D)
    return out

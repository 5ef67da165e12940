"""Linear algebra over F_q and the :class:`LinearCode` container.

Vectors and matrices are numpy ``int64`` arrays of encoded field elements.
Exhaustive walks over F_q^n are chunked: a fixed table of all suffixes is
combined with one prefix at a time, so memory stays proportional to the
chunk and to the per-syndrome result arrays, never to q^n.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import numpy as np

from . import config
from .gf import FieldSpec

_CHUNK_LOG = 15  # about 2^15 vectors per chunk


def as_matrix(rows, field: FieldSpec) -> np.ndarray:
    M = np.array(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M[None, :]
    if M.ndim != 2 or M.size == 0:
        raise ValueError("matrix must be two-dimensional and non-empty")
    if M.min() < 0 or M.max() >= field.q:
        raise ValueError(f"matrix entries must lie in [0, {field.q})")
    return M


def rref(M: np.ndarray, field: FieldSpec) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form with leftmost pivots scaled to 1.

    Returns ``(R, rank, pivots)``; ``R`` has the same shape as ``M`` with
    zero rows at the bottom.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r] = field.mul(R[r], field.inv(int(R[r, c])))
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = field.sub(R[i], field.mul(R[r], int(R[i, c])))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rank(M: np.ndarray, field: FieldSpec) -> int:
    return rref(M, field)[1]


def null_space(M: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}; shape (n - rank, n)."""
    R, r, pivots = rref(M, field)
    n = M.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for j, f in enumerate(free):
        basis[j, f] = 1
        for i, pc in enumerate(pivots):
            basis[j, pc] = field.neg(int(R[i, f]))
    return basis


def matmul(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Matrix product over the field (A is (r, m), B is (m, c))."""
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = field.add(out, field.mul(A[:, j][:, None], B[j][None, :]))
    return out


@dataclass(frozen=True, eq=False)
class LinearCode:
    """An [n, k]_q linear code given by a full-rank generator matrix.

    ``H`` is an optional parity-check matrix; when absent it is derived on
    demand as a basis of the dual.  ``k == n`` (the whole space) is accepted
    since it is the degenerate one-coset case.
    """

    field: FieldSpec
    G: np.ndarray
    H: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        G = as_matrix(self.G, self.field)
        object.__setattr__(self, "G", G)
        G.setflags(write=False)
        k, n = G.shape
        if n < 2:
            raise ValueError("code length must be at least 2")
        if rank(G, self.field) != k:
            raise ValueError(f"generator matrix has rank below its {k} rows")
        if self.H is not None:
            H = as_matrix(self.H, self.field)
            if H.shape[1] != n:
                raise ValueError("parity-check matrix has the wrong number of columns")
            if H.shape[0] != n - k or rank(H, self.field) != n - k:
                raise ValueError(f"parity-check matrix must have full rank {n - k}")
            if np.any(matmul(G, H.T, self.field)):
                raise ValueError("G * H^T is not zero")
            H.setflags(write=False)
            object.__setattr__(self, "H", H)

    @classmethod
    def from_parity_check(cls, field: FieldSpec, H, name: str = "") -> "LinearCode":
        H = as_matrix(H, field)
        if rank(H, field) != H.shape[0]:
            raise ValueError("parity-check matrix is rank deficient")
        G = null_space(H, field)
        if G.shape[0] == 0:
            raise ValueError("parity-check matrix leaves only the zero code")
        return cls(field, G, H, name)

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return self.q**self.k

    @functools.cached_property
    def standard_form(self) -> tuple[np.ndarray, list[int]]:
        R, _, pivots = rref(self.G, self.field)
        R.setflags(write=False)
        return R, pivots

    @functools.cached_property
    def parity_check(self) -> np.ndarray:
        if self.H is not None:
            return self.H
        if self.k == self.n:
            return np.zeros((0, self.n), dtype=np.int64)
        H = null_space(self.G, self.field)
        H.setflags(write=False)
        return H

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=np.int64)
        if self.k == self.n:
            return True
        return not np.any(matmul(self.parity_check, x[:, None], self.field))

    def encode(self, message) -> np.ndarray:
        m = np.asarray(message, dtype=np.int64)[None, :]
        return matmul(m, self.G, self.field)[0]

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<LinearCode{label} [{self.n}, {self.k}]_{self.q}>"


def dual(C: LinearCode) -> LinearCode:
    if C.k == C.n:
        raise ValueError("the whole space has the zero code as its dual")
    return LinearCode(C.field, C.parity_check, C.G, name=f"dual({C.name})" if C.name else "")


def same_code(A: LinearCode, B: LinearCode) -> bool:
    if A.field != B.field or A.n != B.n or A.k != B.k:
        return False
    return np.array_equal(A.standard_form[0], B.standard_form[0])


def is_subcode(A: LinearCode, B: LinearCode) -> bool:
    """True when every generator of A lies in B."""
    if A.field != B.field or A.n != B.n or A.k > B.k:
        return False
    stacked = np.vstack([B.G, A.G])
    return rank(stacked, A.field) == B.k


def enumerate_codewords(C: LinearCode) -> np.ndarray:
    """All q^k codewords as a (q^k, n) array.

    Row ``i`` is the encoding of the message whose base-q digits are ``i``
    with the first message symbol most significant.
    """
    config.require(C.size, "codeword enumeration")
    F = C.field
    words = np.zeros((1, C.n), dtype=np.int64)
    scalars = np.arange(F.q, dtype=np.int64)
    for row in C.G:
        multiples = F.mul(scalars[:, None], row[None, :])  # (q, n)
        words = F.add(words[:, None, :], multiples[None, :, :]).reshape(-1, C.n)
    return words


def iter_codewords(C: LinearCode) -> Iterator[np.ndarray]:
    yield from enumerate_codewords(C)


def digits_table(q: int, length: int) -> np.ndarray:
    """All vectors of F_q^length in lexicographic order, first coordinate most significant."""
    idx = np.arange(q**length, dtype=np.int64)
    powers = q ** np.arange(length - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def iter_space(field: FieldSpec, n: int, chunk_log: int = _CHUNK_LOG) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(first_index, block)`` covering F_q^n in lexicographic order.

    ``first_index`` is the integer rank of the block's first vector; rows
    of ``block`` have consecutive ranks.
    """
    q = field.q
    config.require(q**n, f"enumeration of F_{q}^{n}")
    low = 1
    while low < n and q ** (low + 1) <= (1 << chunk_log):
        low += 1
    low = min(low, n)
    high = n - low
    suffix = digits_table(q, low)
    block = np.empty((suffix.shape[0], n), dtype=np.int64)
    block[:, high:] = suffix
    for prefix_rank in range(q**high):
        if high:
            block[:, :high] = digits_table_row(q, high, prefix_rank)
        yield prefix_rank * suffix.shape[0], block


def digits_table_row(q: int, length: int, rank_: int) -> np.ndarray:
    out = np.zeros(length, dtype=np.int64)
    for i in range(length - 1, -1, -1):
        out[i] = rank_ % q
        rank_ //= q
    return out


def vector_rank(x: Sequence[int], q: int) -> int:
    r = 0
    for v in x:
        r = r * q + int(v)
    return r


def syndromes(block: np.ndarray, H: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Integer-coded syndromes ``H x^T`` for each row x of ``block``."""
    r = H.shape[0]
    if r == 0:
        return np.zeros(block.shape[0], dtype=np.int64)
    s = matmul(block, H.T, field)  # (N, r)
    powers = field.q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    return s @ powers


def coset_scan(
    C: LinearCode,
    weight_fn: Callable[[np.ndarray], np.ndarray],
    *,
    with_leaders: bool = False,
):
    """Minimum of ``weight_fn`` over each coset of C.

    ``weight_fn`` maps an (N, n) block of vectors to N integer weights.
    Returns an array indexed by integer-coded syndrome; with
    ``with_leaders`` also returns, per syndrome, the rank of the
    lexicographically smallest vector attaining the minimum.
    """
    F = C.field
    H = C.parity_check
    nsyn = F.q ** H.shape[0]
    best = np.full(nsyn, np.iinfo(np.int64).max, dtype=np.int64)
    leader = np.full(nsyn, -1, dtype=np.int64) if with_leaders else None
    for start, block in iter_space(F, C.n):
        syn = syndromes(block, H, F)
        w = np.asarray(weight_fn(block), dtype=np.int64)
        if with_leaders:
            # blocks arrive in rank order, so strict improvement keeps ranks minimal
            order = np.lexsort((np.arange(len(w)), w, syn))
            syn_o = syn[order]
            first = order[np.r_[True, syn_o[1:] != syn_o[:-1]]]
            cand_syn, cand_w = syn[first], w[first]
            better = cand_w < best[cand_syn]
            best[cand_syn[better]] = cand_w[better]
            leader[cand_syn[better]] = start + first[better]
        else:
            np.minimum.at(best, syn, w)
    if with_leaders:
        return best, leader
    return best


def coset_count_within(
    C: LinearCode,
    weight_fn: Callable[[np.ndarray], np.ndarray],
    radius: int,
) -> tuple[np.ndarray, np.ndarray]:
    """Per syndrome: how many coset members have weight <= radius, and the smallest member rank."""
    F = C.field
    H = C.parity_check
    nsyn = F.q ** H.shape[0]
    counts = np.zeros(nsyn, dtype=np.int64)
    first = np.full(nsyn, np.iinfo(np.int64).max, dtype=np.int64)
    for start, block in iter_space(F, C.n):
        syn = syndromes(block, H, F)
        w = np.asarray(weight_fn(block))
        counts += np.bincount(syn[w <= radius], minlength=nsyn)
        np.minimum.at(first, syn, start + np.arange(len(syn)))
    return counts, first


def window_independent(C: LinearCode, cyclic: bool = True) -> list[int]:
    """Start indices i whose k consecutive generator columns i..i+k-1 are independent.

    With ``cyclic`` the window wraps around; otherwise only i <= n-k is tried.
    """
    n, k = C.n, C.k
    starts = range(n) if cyclic else range(n - k + 1)
    out = []
    for i in starts:
        cols = [(i + j) % n for j in range(k)]
        if rank(C.G[:, cols], C.field) == k:
            out.append(i)
    return out


def random_code(field: FieldSpec, n: int, k: int, rng: np.random.Generator) -> LinearCode:
    """Uniformly random full-rank k x n generator (by rejection)."""
    while True:
        G = rng.integers(0, field.q, size=(k, n))
        if rank(G, field) == k:
            return LinearCode(field, G)

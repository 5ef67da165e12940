"""The b-symbol metric: windows, weights, distances, balls and covering radii.

A length-n vector is read as its n cyclic windows of b consecutive symbols;
its b-weight is the number of windows that are not all zero.  ``b = 1`` is
the Hamming metric, which lets the Hamming quantities share every code path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from . import config
from .gf import FieldSpec
from .linalg import LinearCode, coset_scan, enumerate_codewords, iter_space


def check_b(b: int, n: int) -> None:
    if not 1 <= b <= n - 1:
        raise ValueError(f"b must satisfy 1 <= b <= n-1 = {n - 1}, got {b}")


def pi_b(x: Sequence[int], b: int) -> list[tuple[int, ...]]:
    n = len(x)
    check_b(b, n)
    return [tuple(int(x[(i + j) % n]) for j in range(b)) for i in range(n)]


def window_mask(block: np.ndarray, b: int) -> np.ndarray:
    """Boolean (N, n) array: window i of each row holds a nonzero symbol."""
    nz = np.asarray(block) != 0
    acc = nz.copy()
    for j in range(1, b):
        acc |= np.roll(nz, -j, axis=-1)
    return acc


def weights_b(block: np.ndarray, b: int) -> np.ndarray:
    """Vectorised b-weight of every row of an (N, n) block."""
    block = np.asarray(block)
    check_b(b, block.shape[-1])
    return window_mask(block, b).sum(axis=-1)


def wt_b(x: Sequence[int], b: int) -> int:
    return sum(1 for w in pi_b(x, b) if any(w))


def wt_h(x: Sequence[int]) -> int:
    return int(np.count_nonzero(np.asarray(x)))


def d_b(x: Sequence[int], y: Sequence[int], b: int, field: FieldSpec) -> int:
    """b-symbol distance, computed as the b-weight of the difference."""
    diff = field.sub(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
    return int(weights_b(diff[None, :], b)[0])


@dataclass
class WeightProfile:
    b: int
    distribution: dict[int, int]  # weight -> number of nonzero codewords

    @property
    def nonzero_weights(self) -> set[int]:
        return set(self.distribution)


def weight_profile_b(C: LinearCode, b: int) -> WeightProfile:
    check_b(b, C.n)
    words = enumerate_codewords(C)[1:]  # row 0 is the zero codeword
    counts = Counter(int(w) for w in weights_b(words, b))
    return WeightProfile(b, dict(sorted(counts.items())))


def min_distance_b(C: LinearCode, b: int) -> int:
    """Minimum b-weight over nonzero codewords (equal to d_b(C) by linearity)."""
    check_b(b, C.n)
    words = enumerate_codewords(C)[1:]
    return int(weights_b(words, b).min())


def coset_minima_b(C: LinearCode, b: int, with_leaders: bool = False):
    """Least b-weight in each coset, indexed by integer-coded syndrome."""
    check_b(b, C.n)
    return coset_scan(C, lambda blk: weights_b(blk, b), with_leaders=with_leaders)


def covering_radius_b(C: LinearCode, b: int, mode: str = "coset") -> int:
    """Covering radius of C in the b-symbol metric.

    ``coset`` takes the maximum over cosets of the minimum b-weight;
    ``direct`` evaluates max_x min_c d_b(x, c) and exists as an oracle.
    """
    check_b(b, C.n)
    if mode == "coset":
        return int(coset_minima_b(C, b).max())
    if mode == "direct":
        return _covering_radius_direct(C, b)
    raise ValueError(f"unknown mode {mode!r}")


def _covering_radius_direct(C: LinearCode, b: int) -> int:
    F = C.field
    config.require(F.q**C.n * C.size, "direct covering-radius search")
    words = enumerate_codewords(C)
    radius = 0
    for _, block in iter_space(F, C.n):
        best = np.full(block.shape[0], C.n + 1, dtype=np.int64)
        for c in words:
            np.minimum(best, weights_b(F.sub(block, c[None, :]), b), out=best)
        radius = max(radius, int(best.max()))
    return radius


def ball_volume_closed(q: int, n: int, b: int, r: int) -> int | None:
    """Size of a b-symbol ball where a closed form is known, else None."""
    check_b(b, n)
    if r < 0:
        raise ValueError("radius must be non-negative")
    if r >= n:
        return q**n  # every b-weight is at most n
    if r <= b - 1:
        return 1
    if r == b:
        return 1 + n * (q - 1)
    if b == 2 and r == 3:  # n >= 4 here; at n = 3 the ball is the whole space
        return 1 + n * (q - 1) + n * (q - 1) ** 2
    return None


def ball_volume_brute(field: FieldSpec, n: int, b: int, r: int) -> int:
    check_b(b, n)
    total = 0
    for _, block in iter_space(field, n):
        total += int(np.count_nonzero(weights_b(block, b) <= r))
    return total


def ball_volume_b(q: int, n: int, b: int, r: int, method: str = "auto") -> int:
    """|{y in F_q^n : wt_b(y) <= r}| as an exact integer.

    ``auto`` uses a closed form when one applies and brute force otherwise;
    ``closed`` and ``brute`` force one path.
    """
    from .gf import field_of_order

    if method in ("auto", "closed"):
        v = ball_volume_closed(q, n, b, r)
        if v is not None or method == "closed":
            if v is None:
                raise ValueError(f"no closed form for b={b}, r={r}")
            return v
    elif method != "brute":
        raise ValueError(f"unknown method {method!r}")
    if r >= n:
        return q**n
    return ball_volume_brute(field_of_order(q), n, b, r)


@dataclass
class BProfile:
    b: int
    d_H: int
    d_b: int
    R_H: int
    R_b: int
    nonzero_b_weights: set[int] = dc_field(default_factory=set)


def b_profile(C: LinearCode, b: int) -> BProfile:
    prof = weight_profile_b(C, b)
    return BProfile(
        b=b,
        d_H=min_distance_b(C, 1),
        d_b=min(prof.nonzero_weights),
        R_H=covering_radius_b(C, 1),
        R_b=covering_radius_b(C, b),
        nonzero_b_weights=prof.nonzero_weights,
    )

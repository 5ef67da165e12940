import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsymcov import config
from bsymcov.bsymbol import (
    b_profile,
    ball_volume_b,
    ball_volume_brute,
    ball_volume_closed,
    check_b,
    coset_minima_b,
    covering_radius_b,
    d_b,
    min_distance_b,
    pi_b,
    weight_profile_b,
    weights_b,
    wt_b,
    wt_h,
)
from bsymcov.config import BudgetExceeded
from bsymcov.families import cyclic_code, hamming_code, paper_example, rs_code
from bsymcov.gf import field_of_order
from bsymcov.linalg import LinearCode, digits_table

F2 = field_of_order(2)


def test_pi_b_examples():
    assert pi_b([0] * 6, 2) == [(0, 0)] * 6
    assert pi_b([1, 0, 0], 2) == [(1, 0), (0, 0), (0, 1)]
    wins = pi_b([0, 0, 0, 1, 1, 1], 3)
    assert len(wins) == 6 and sum(any(w) for w in wins) == 5


def test_wt_b_examples():
    assert wt_b([0] * 6, 2) == 0
    assert wt_b([0, 0, 0, 1, 1, 1], 2) == 4
    assert wt_b([1, 0, 0, 0, 0, 0], 2) == 2
    assert wt_b([1, 0, 0, 0, 0, 1], 2) == 3  # wraparound pair
    assert wt_b([1, 0, 1, 0], 1) == wt_h([1, 0, 1, 0]) == 2


def test_d_b_translation():
    F3 = field_of_order(3)
    assert d_b([1, 2, 0, 0], [1, 2, 0, 0], 2, F3) == 0
    assert d_b([1, 2, 0, 0], [0, 2, 0, 0], 2, F3) == 2


@pytest.mark.parametrize("b,n", [(0, 4), (4, 4), (5, 4)])
def test_check_b_rejects(b, n):
    with pytest.raises(ValueError):
        check_b(b, n)


def test_min_distance_examples():
    assert min_distance_b(paper_example(3), 2) == 4
    assert min_distance_b(rs_code(5, 4, 2), 2) == 4
    assert min_distance_b(hamming_code(2, 3), 2) <= 5
    assert min_distance_b(hamming_code(2, 3), 2) == 4
    assert min_distance_b(cyclic_code(2, 7, [1, 1, 0, 1]), 2) == 5


def test_covering_examples():
    assert covering_radius_b(paper_example(1, 3), 2) == 4
    assert covering_radius_b(paper_example(4), 2) == 4
    assert covering_radius_b(rs_code(7, 6, 3), 2) == 4


def test_example3_pair_radius_and_witness():
    C = paper_example(3)
    assert covering_radius_b(C, 2) == 3
    assert covering_radius_b(C, 2, mode="direct") == 3
    # worst coset (syndrome 111) contains a wraparound pair of weight 3
    mins = coset_minima_b(C, 2)
    H = C.parity_check
    w = np.array([1, 0, 0, 0, 0, 1])
    assert wt_b(w, 2) == 3
    syn = int((H @ w % 2) @ (2 ** np.arange(H.shape[0] - 1, -1, -1)))
    assert mins[syn] == 3


def test_example4_profiles():
    C = paper_example(4)
    assert weight_profile_b(C, 1).nonzero_weights == {4, 8}
    prof = weight_profile_b(C, 2)
    assert prof.nonzero_weights == {5, 6, 7, 8}
    assert sum(prof.distribution.values()) == 15
    assert wt_b([1, 0, 0, 1, 0, 1, 1, 0], 2) == 7
    assert LinearCode(F2, paper_example(4).G).contains([1, 0, 0, 1, 0, 1, 1, 0])
    rep = LinearCode(F2, [[1, 1]])
    assert weight_profile_b(rep, 1).nonzero_weights == {2}


def test_coset_and_direct_agree(corpus):
    for C in corpus:
        if C.q**C.n * C.size > 2**22:
            continue
        for b in range(1, C.n):
            assert covering_radius_b(C, b) == covering_radius_b(C, b, mode="direct")


def test_direct_mode_budget():
    C = hamming_code(2, 4)
    with config.budget(16):
        with pytest.raises(BudgetExceeded):
            covering_radius_b(C, 2, mode="direct")


def _spaces():
    for q, nmax in ((2, 10), (3, 6), (4, 5)):
        for n in range(2, nmax + 1):
            yield q, n


@pytest.mark.parametrize("q,n", list(_spaces()))
def test_pointwise_sandwich_and_monotonicity(q, n):
    V = digits_table(q, n)[1:]
    h = np.count_nonzero(V, axis=1)
    prev = h
    for b in range(1, n):
        w = weights_b(V, b)
        assert (w >= np.minimum(h + b - 1, n)).all()
        assert (w <= np.minimum(b * h, n)).all()
        assert (w >= prev).all()
        prev = w


def test_uncapped_sandwich_counterexample():
    # the lower bound must be capped at n: all-ones has wt_H + b - 1 = n + 1 > wt_b = n
    assert wt_b([1, 1, 1], 2) == 3 < wt_h([1, 1, 1]) + 2 - 1


@pytest.mark.parametrize("q,n", [(2, 6), (2, 8), (3, 4), (3, 5)])
def test_ball_nesting(q, n):
    V = digits_table(q, n)
    h = np.count_nonzero(V, axis=1)
    for b in range(1, n):
        w = weights_b(V, b)
        for r in range(n):  # r < n; at r >= n the b-ball is the whole space
            assert (h[w <= r] <= max(r - b + 1, 0)).all()
            assert (w[h <= r] <= b * r).all()


def test_ball_volume_examples():
    assert ball_volume_b(2, 7, 2, 2) == 8
    assert ball_volume_b(3, 4, 2, 3) == 25
    assert ball_volume_b(2, 5, 3, 2) == 1


@pytest.mark.parametrize("q,n", [(2, 4), (2, 7), (3, 4), (3, 5), (4, 4)])
def test_closed_matches_brute(q, n):
    F = field_of_order(q)
    for b in range(1, n):
        for r in range(n + 2):
            closed = ball_volume_closed(q, n, b, r)
            if closed is not None:
                assert closed == ball_volume_brute(F, n, b, r), (b, r)


def test_ball_volume_small_n_is_whole_space():
    assert ball_volume_b(2, 3, 2, 3) == 8
    assert ball_volume_b(3, 3, 2, 3, method="brute") == 27


def test_ball_volume_closed_only():
    with pytest.raises(ValueError):
        ball_volume_b(2, 9, 3, 5, method="closed")
    assert ball_volume_b(2, 9, 3, 5) == ball_volume_brute(F2, 9, 3, 5)


@settings(max_examples=100, deadline=None)
@given(q=st.sampled_from([2, 3, 4, 5]), n=st.integers(2, 12), data=st.data())
def test_translation_and_symmetry(q, n, data):
    F = field_of_order(q)
    vec = st.lists(st.integers(0, q - 1), min_size=n, max_size=n)
    x, y, z = data.draw(vec), data.draw(vec), data.draw(vec)
    b = data.draw(st.integers(1, n - 1))
    dxy = d_b(x, y, b, F)
    assert dxy == d_b(y, x, b, F)
    assert dxy == d_b(F.add(x, z), F.add(y, z), b, F)
    assert dxy <= d_b(x, z, b, F) + d_b(z, y, b, F)
    assert (dxy == 0) == (list(x) == list(y))


def test_b_profile():
    prof = b_profile(paper_example(4), 2)
    assert (prof.d_H, prof.d_b, prof.R_H, prof.R_b) == (4, 5, 2, 4)

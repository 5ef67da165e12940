"""Acceptance gate: every criterion checked at exact equality.

Test names carry the criterion number (``test_cNN_...``); the terminal
summary prints one PASS/FAIL line per criterion.
"""

from __future__ import annotations

import numpy as np
import pytest

from bsymcov import (
    ball_volume_b,
    block_hamming,
    bound_report,
    covering_radius_b,
    cyclic_code,
    field_of_order,
    hamming_code,
    list_size_at_radius,
    min_distance_b,
    paper_example,
    perfect_check,
    rs_code,
    singleton_list_bounds,
    sphere_packing_scan,
    subcode_lower_bound,
    weight_profile_b,
)
from bsymcov.bounds import LARGE_B, WINDOW, perfect_by_definition
from bsymcov.bsymbol import ball_volume_brute, weights_b
from bsymcov.linalg import digits_table, enumerate_codewords, random_code
from bsymcov.listdecode import block_hamming_list_bound, list_singleton_bound, mds_length_verdict

from corpus import family_corpus, random_corpus, subcode_pairs

# -- 1. worked examples ------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4])
def test_c01_example1_pair_radius(n):
    assert covering_radius_b(paper_example(1, n), 2) == n + 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_c01_example1_hamming_radius_logged(n):
    # published R_H = n + 1; reported only
    r_h = covering_radius_b(paper_example(1, n), 1)
    print(f"example1 n={n}: R_H computed {r_h}, published {n + 1}")
    assert r_h in (n, n + 1)


@pytest.mark.parametrize("t", [1, 2])
def test_c01_example2_pair_radius(t):
    assert covering_radius_b(paper_example(2, t), 2) == 3 * t


def test_c01_example3_distances():
    C = paper_example(3)
    assert min_distance_b(C, 2) == 4
    assert covering_radius_b(C, 1) == 2


def test_c01_example3_pair_radius():
    assert covering_radius_b(paper_example(3), 2) == 4


def test_c01_example4_radii():
    C = paper_example(4)
    assert covering_radius_b(C, 1) == 2
    assert covering_radius_b(C, 2) == 4


def test_c01_example4_hamming_weights():
    assert weight_profile_b(paper_example(4), 1).nonzero_weights == {4, 8}


def test_c01_example4_pair_weights():
    assert weight_profile_b(paper_example(4), 2).nonzero_weights == {5, 6, 8}


# -- 2. Reed-Solomon covering radius ------------------------------------------


@pytest.mark.parametrize("b", [1, 2, 3])
def test_c02_rs_covering_radius(b):
    C = rs_code(7, 6, 3)
    assert covering_radius_b(C, b) == min(3 + b - 1, 6)


# -- 3. block Hamming construction ---------------------------------------------


def test_c03_block_hamming():
    C = block_hamming(2, 3, 2)
    assert (C.n, C.k, C.q) == (14, 8, 2)
    assert covering_radius_b(C, 1) == 2
    assert covering_radius_b(C, 2) == 4


# -- 4. counterexamples to the metric analogues ---------------------------------


def test_c04_norse_pair_violated_example3():
    assert bound_report(paper_example(3), 2)["norse_analogue"].status == "violated"


def test_c04_delsarte_pair_violated_example4():
    assert bound_report(paper_example(4), 2)["delsarte_analogue"].status == "violated"


def test_c04_hamming_versions_hold():
    assert bound_report(paper_example(3), 1)["norse_analogue"].status == "holds"
    assert bound_report(paper_example(4), 1)["delsarte_analogue"].status == "holds"


# -- 5. ball identities ---------------------------------------------------------


def _ball_cases():
    for q, nmax in ((2, 8), (3, 5)):
        for n in range(2, nmax + 1):
            for b in range(1, min(4, n - 1) + 1):
                yield q, n, b


@pytest.mark.parametrize("q,n,b", list(_ball_cases()))
def test_c05_ball_identities(q, n, b):
    F = field_of_order(q)
    for r in range(b):
        assert ball_volume_brute(F, n, b, r) == 1
    assert ball_volume_brute(F, n, b, b) == 1 + n * (q - 1)


@pytest.mark.parametrize("q,n", [(2, n) for n in range(3, 9)] + [(3, n) for n in range(3, 6)])
def test_c05_pair_ball_radius3(q, n):
    assert ball_volume_brute(field_of_order(q), n, 2, 3) == 1 + n * (q - 1) + n * (q - 1) ** 2


# -- 6. sphere-packing scan -----------------------------------------------------


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_c06_sphere_packing_scan_empty(q):
    assert sphere_packing_scan(q, range(1, 201)) == []


# -- 7. perfectness --------------------------------------------------------------


def test_c07_perfect_check_matches_definition():
    checked = 0
    for C in random_corpus() + family_corpus():
        if C.q**C.n > 2**20:
            continue
        for b in range(1, C.n):
            got = perfect_check(C, b)
            truth = perfect_by_definition(C, b).is_perfect
            assert got.is_perfect == truth, (C, b, got)
            checked += 1
    assert checked >= 300


def test_c07_structural_filters_say_not_perfect():
    hits = {LARGE_B: 0, WINDOW: 0}
    for C in random_corpus() + family_corpus():
        n, k = C.n, C.k
        for b in range(1, n):
            rule = LARGE_B if 2 * b >= n + 1 else WINDOW if b == 2 * (k + 1) <= n - 1 else None
            if rule is None:
                continue
            v = perfect_check(C, b)
            assert v.is_perfect is False and v.deciding_rule == rule
            assert perfect_by_definition(C, b).is_perfect is False
            hits[rule] += 1
    assert hits[LARGE_B] > 0 and hits[WINDOW] > 0


def test_c07_hamming_7_4_pair_verdict():
    for C in (hamming_code(2, 3), cyclic_code(2, 7, [1, 1, 0, 1])):
        d2 = min_distance_b(C, 2)
        assert perfect_check(C, 2).is_perfect == (d2 == 5)


# -- 8. sandwich, redundancy and subcode bounds --------------------------------


def _acceptance_codes():
    codes = random_corpus() + family_corpus()
    assert len(codes) >= 50 + 10
    return codes


def test_c08_sandwich_upper_and_redundancy():
    for C in _acceptance_codes():
        for b in range(1, C.n):
            rep = bound_report(C, b)
            assert rep["sandwich_upper"].status == "holds", (C, b)
            assert rep["redundancy"].status in ("holds", "inapplicable"), (C, b)


def test_c08_sandwich_lower():
    bad = [(C.name, b, rep["sandwich_lower"].value, rep["sandwich_lower"].bound)
           for C in _acceptance_codes() for b in range(1, C.n)
           for rep in [bound_report(C, b)] if rep["sandwich_lower"].status != "holds"]
    assert bad == []


def test_c08_subcode_lower_bound():
    pairs = subcode_pairs()
    assert len(pairs) >= 20
    for C, Cp in pairs:
        for b in range(1, C.n):
            assert subcode_lower_bound(C, Cp, b) <= covering_radius_b(C, b)


# -- 9. metric axioms ---------------------------------------------------------------


def _metric_cases():
    for n in range(2, 7):
        for b in range(1, min(4, n - 1) + 1):
            yield 2, n, b
    for n in range(2, 5):
        for b in range(1, min(3, n - 1) + 1):
            yield 3, n, b


@pytest.mark.parametrize("q,n,b", list(_metric_cases()))
def test_c09_metric_axioms(q, n, b):
    F = field_of_order(q)
    V = digits_table(q, n)
    N = len(V)
    diff = F.sub(V[:, None, :], V[None, :, :]).reshape(N * N, n)
    D = weights_b(diff, b).reshape(N, N)
    assert (D == D.T).all()
    assert (np.diag(D) == 0).all() and (D[~np.eye(N, dtype=bool)] > 0).all()
    powers = q ** np.arange(n - 1, -1, -1)
    for z in V:
        idx = F.add(V, z[None, :]) @ powers
        assert (D[np.ix_(idx, idx)] == D).all()
    # triangle: D[x,z] <= min_y D[x,y] + D[y,z]
    for x in range(N):
        assert (D[x] <= (D[x][:, None] + D).min(axis=0)).all()


# -- 10. list-size bounds -------------------------------------------------------


def test_c10_calculator_values():
    assert list_singleton_bound(2, 14, 2, 4, 1).value == 2**11
    assert block_hamming_list_bound(2, 14, 2, 4, 1, 3, 2).value == 2**8
    bounds = singleton_list_bounds(2, 14, 2, 4, 1, m=3, t=2)
    assert bounds["list_singleton"].value == 2**11 and bounds["block_hamming_list"].value == 2**8
    assert mds_length_verdict(2, 961, 63).status == "holds"


def test_c10_hamming_list_size():
    assert list_size_at_radius(hamming_code(2, 3), 2, 2).L_max == 1


def test_c10_covering_to_list_inequality():
    C1 = block_hamming(2, 3, 2)
    assert covering_radius_b(C1, 2) <= 4
    rng = np.random.default_rng(1414)
    F = field_of_order(2)
    for _ in range(10):
        k = int(rng.integers(5, 13))
        C = random_code(F, 14, k, rng)
        L = list_size_at_radius(C, 2, 4).L_max
        assert C.size <= L * C1.size
    assert len(enumerate_codewords(C1)) == C1.size

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bsymcov import config
from bsymcov.config import BudgetExceeded
from bsymcov.families import paper_example, rs_code
from bsymcov.gf import field_of_order
from bsymcov.linalg import (
    LinearCode,
    coset_scan,
    digits_table,
    dual,
    enumerate_codewords,
    is_subcode,
    matmul,
    random_code,
    rank,
    rref,
    same_code,
    syndromes,
    vector_rank,
    window_independent,
)
from bsymcov.bsymbol import weights_b

from corpus import random_corpus

F2 = field_of_order(2)


def hamming_weights(block):
    return np.count_nonzero(block, axis=1)


def test_rref_identity():
    R, r, piv = rref(np.eye(3, dtype=np.int64), F2)
    assert (R == np.eye(3)).all() and r == 3 and piv == [0, 1, 2]


def test_rref_examples():
    assert rank(paper_example(4).G, F2) == 4
    assert rank(paper_example(3).parity_check, F2) == 3
    R, r, piv = rref(np.array([[0, 2, 1], [0, 1, 1]]), field_of_order(3))
    assert r == 2 and piv == [1, 2]
    assert R.tolist() == [[0, 1, 0], [0, 0, 1]]


@settings(max_examples=60, deadline=None)
@given(q=st.sampled_from([2, 3, 4, 5]), rows=st.integers(1, 5), cols=st.integers(1, 7), seed=st.integers(0, 2**32 - 1))
def test_rref_idempotent(q, rows, cols, seed):
    F = field_of_order(q)
    M = np.random.default_rng(seed).integers(0, q, (rows, cols))
    R, r, piv = rref(M, F)
    R2, r2, piv2 = rref(R, F)
    assert (R == R2).all() and r == r2 and piv == piv2
    for i, c in enumerate(piv):
        assert R[i, c] == 1 and np.count_nonzero(R[:, c]) == 1


def test_code_validation():
    with pytest.raises(ValueError):
        LinearCode(F2, [[1, 1, 0], [1, 1, 0]])  # rank deficient
    with pytest.raises(ValueError):
        LinearCode(F2, [[1]])  # n < 2
    with pytest.raises(ValueError):
        LinearCode(F2, [[1, 0, 1]], H=[[1, 1, 1], [0, 1, 1]])  # G H^T != 0
    C = LinearCode(F2, [[1, 0, 1]], H=[[1, 0, 1], [0, 1, 0]])
    assert C.k == 1 and C.n == 3


def test_dual_examples():
    for n in (2, 3, 4):
        C = paper_example(1, n)
        assert same_code(dual(C), C)
    C4 = paper_example(4)
    assert same_code(dual(C4), C4)
    rep = LinearCode(F2, [[1] * 5])
    D = dual(rep)
    assert D.k == 4
    assert all(w % 2 == 0 for w in hamming_weights(enumerate_codewords(D)))


def test_dual_involution(corpus):
    for C in corpus[:30]:
        D = dual(C)
        assert D.k == C.n - C.k
        assert (matmul(C.G, D.G.T, C.field) == 0).all()
        assert same_code(dual(D), C)


def test_enumerate_examples():
    rep = LinearCode(F2, [[1, 1]])
    assert enumerate_codewords(rep).tolist() == [[0, 0], [1, 1]]
    words = enumerate_codewords(paper_example(3))
    assert len(words) == 8 and [0, 0, 0, 1, 1, 1] in words.tolist()
    assert len(enumerate_codewords(rs_code(5, 4, 2))) == 25


def test_enumerate_distinct(corpus):
    for C in corpus[:20]:
        W = enumerate_codewords(C)
        assert len({tuple(r) for r in W}) == C.size
        assert all(C.contains(w) for w in W[:50])


def test_enumerate_budget():
    C = LinearCode(F2, np.eye(20, 22, dtype=np.int64))
    with config.budget(10):
        with pytest.raises(BudgetExceeded):
            enumerate_codewords(C)


def test_coset_scan_examples():
    whole = LinearCode(F2, np.eye(3, dtype=np.int64))
    mins = coset_scan(whole, hamming_weights)
    assert mins.tolist() == [0]
    assert coset_scan(paper_example(3), hamming_weights).max() == 2
    assert coset_scan(paper_example(4), hamming_weights).max() == 2


def _direct_radius(C, weight_fn):
    V = digits_table(C.q, C.n)
    W = enumerate_codewords(C)
    best = np.full(len(V), C.n + 1)
    for c in W:
        best = np.minimum(best, weight_fn(C.field.sub(V, c[None, :])))
    return int(best.max())


def test_coset_scan_matches_direct(corpus):
    for C in corpus:
        if C.q**C.n * C.size > 2**22:
            continue
        assert coset_scan(C, hamming_weights).max() == _direct_radius(C, hamming_weights)
        assert coset_scan(C, lambda blk: weights_b(blk, 2)).max() == _direct_radius(
            C, lambda blk: weights_b(blk, 2))


def test_syndrome_partition(corpus):
    for C in corpus[:25]:
        V = digits_table(C.q, C.n)
        syn = syndromes(V, C.parity_check, C.field)
        counts = np.bincount(syn, minlength=C.q ** (C.n - C.k))
        assert len(counts) == C.q ** (C.n - C.k)
        assert (counts == C.size).all()


def test_leaders_are_lex_smallest():
    C = paper_example(3)
    mins, lead = coset_scan(C, hamming_weights, with_leaders=True)
    V = digits_table(2, 6)
    syn = syndromes(V, C.parity_check, F2)
    w = hamming_weights(V)
    for s in range(len(mins)):
        members = np.flatnonzero(syn == s)
        best = members[w[members] == w[members].min()]
        assert lead[s] == best.min()


def test_window_examples():
    assert window_independent(rs_code(7, 6, 3)) == list(range(6))
    assert window_independent(paper_example(2, 2)) == []
    assert 0 in window_independent(paper_example(1, 3))
    assert window_independent(paper_example(2, 1)) == [1, 3]


def test_vector_rank_roundtrip():
    V = digits_table(3, 4)
    assert all(vector_rank(v, 3) == i for i, v in enumerate(V))


def test_subcode_relation(corpus):
    for C in corpus[:10]:
        assert is_subcode(C, C)
        if C.k > 1:
            sub = LinearCode(C.field, C.G[:1])
            assert is_subcode(sub, C)


def test_random_code_full_rank():
    rng = np.random.default_rng(3)
    for _ in range(10):
        C = random_code(field_of_order(4), 6, 3, rng)
        assert rank(C.G, C.field) == 3
    assert len(random_corpus(5, seed=1)) == 5

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wexpand.construct import expand_bgw, expand_design
from wexpand.matrix import ZERO, GroupMatrix
from wexpand.seeds import catalog, paley_design, seed_bgw, seed_conference
from wexpand.verify import (
    candidate_encodings,
    resolve_bgw_encoding,
    verify_balanced,
    verify_bgw,
    verify_bibd,
    verify_symmetric_design,
    verify_weighing,
)


def test_weighing_basics():
    assert verify_weighing(np.eye(3, dtype=int)).params == {"n": 3, "p": 1}
    rep = verify_weighing(np.array([[1, 1], [1, 1]]))
    assert not rep.ok and rep.violation["location"]["product"] == "W W^t"
    assert not verify_weighing(np.array([[2]])).ok
    assert not verify_weighing(np.ones((2, 3), dtype=int)).ok


def test_balanced():
    rep = verify_balanced(seed_conference(5))
    assert rep.params == {"n": 6, "p": 5, "lambda": 4}
    # I_2 is a W(2, 1) whose support is the trivial design with lambda = 0
    assert verify_balanced(np.eye(2, dtype=int)).ok
    hadamard = np.array([[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]])
    assert verify_balanced(hadamard).params["lambda"] == 4
    rep = verify_balanced(catalog("W8_5").payload)
    assert not rep.ok and rep.details["reason"] == "NonIntegralLambda"


def test_bgw_report_details():
    rep = verify_bgw(seed_bgw(7, 3))
    assert rep.details == {"quotient_multiset": True, "block_equations": True}


def test_bgw_failures():
    W = seed_bgw(5, 4).data.copy()
    W[1, 2] = (W[1, 2] + 1) % 4
    rep = verify_bgw(GroupMatrix(W, 4))
    assert not rep.ok and rep.details["reason"] == "UnbalancedPair"
    W = seed_bgw(5, 4).data.copy()
    W[1, 2] = ZERO
    assert verify_bgw(GroupMatrix(W, 4)).details["reason"] == "UnequalRowWeight"
    # constant weight, wrong lambda
    rep = verify_bgw(GroupMatrix(np.array([[0, ZERO, ZERO], [ZERO, 0, ZERO], [0, 0, ZERO]]), 1))
    assert not rep.ok


def test_bgw_needs_group_divisibility():
    # support of a projective plane works over Z_1 but lambda = 1 is not divisible by 2
    N = paley_design(3).matrix
    rep = verify_bgw(np.where(N == 1, 0, ZERO), n=2)
    assert not rep.ok and rep.details["reason"] == "NonIntegralLambda"
    assert verify_bgw(np.where(N == 1, 0, ZERO), n=1).ok


def test_bibd_and_symmetric():
    assert verify_bibd(catalog("twin_D").payload).params == {"v": 6, "b": 10, "r": 5, "k": 3, "lambda": 2}
    assert not verify_symmetric_design(catalog("twin_D").payload).ok
    assert verify_symmetric_design(paley_design(5).matrix).params == {"v": 11, "k": 5, "lambda": 2}
    assert not verify_bibd(np.array([[2, 0]])).ok


def test_design_gram_identity_exact():
    N = expand_design(5, 1)
    assert np.array_equal(N @ N.T, 15 * np.eye(61, dtype=int) + 10)


def test_encoding_enumeration():
    tokens = np.arange(5)
    encs = candidate_encodings(tokens, 4)
    # 5 choices of the zero token, 24 bijections in 3 classes of 8
    assert len(encs) == 15
    chosen, tried = resolve_bgw_encoding(seed_bgw(5, 4).data + 1, 4)
    assert chosen is not None and sum(t["ok"] for t in tried) == 1


# -- negative controls: every fixture rejects a single-cell change -------------


def _weighing_mutants(W):
    n = W.shape[0]
    for i, j in [(0, 0), (n // 2, n // 3), (n - 1, n - 1)]:
        for new in (-1, 0, 1):
            if new != W[i, j]:
                M = W.copy()
                M[i, j] = new
                yield M


@pytest.mark.parametrize("name", ["W8_5", "W43_25_appendix"])
def test_weighing_fixture_perturbations(name):
    W = np.array(catalog(name).payload)
    for M in _weighing_mutants(W):
        assert not verify_weighing(M).ok


@pytest.mark.parametrize("name", ["BGW4_3_2_Z2", "BGW31_appendix"])
def test_bgw_fixture_perturbations(name):
    G = catalog(name).payload
    v = G.shape[0]
    for i, j in [(0, 0), (1, 2), (v - 1, v // 2)]:
        for new in [ZERO, *range(G.n)]:
            if new != G.data[i, j]:
                M = G.data.copy()
                M[i, j] = new
                assert not verify_bgw(GroupMatrix(M, G.n)).ok


@pytest.mark.parametrize("name", ["twin_D", "twin_C"])
def test_design_fixture_perturbations(name):
    N = np.array(catalog(name).payload)
    for i in range(N.shape[0]):
        for j in range(N.shape[1]):
            M = N.copy()
            M[i, j] ^= 1
            assert not verify_bibd(M).ok


@given(st.sampled_from([(3, 2, 2), (3, 2, 3), (5, 4, 2), (5, 2, 2)]), st.data())
def test_random_perturbation_of_expanded_bgw(args, data):
    W = expand_bgw(*args)
    v = W.shape[0]
    i, j = data.draw(st.integers(0, v - 1)), data.draw(st.integers(0, v - 1))
    choices = [x for x in [ZERO, *range(W.n)] if x != W.data[i, j]]
    M = W.data.copy()
    M[i, j] = data.draw(st.sampled_from(choices))
    assert not verify_bgw(GroupMatrix(M, W.n)).ok

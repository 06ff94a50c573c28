import numpy as np
import pytest

from wexpand.errors import (
    EvenCharacteristic,
    NoPaleyDesign,
    NotADivisor,
    NotPrimePower,
    NotSymmetric,
    UnknownSeed,
    VerificationFailed,
)
from wexpand.seeds import (
    catalog,
    catalog_names,
    ingest,
    paley_design,
    residual_derived,
    seed_bgw,
    seed_conference,
    twin_mate,
)
from wexpand.verify import verify_balanced, verify_bgw, verify_bibd

ODD_PRIME_POWERS = [3, 5, 7, 9, 11, 13]
PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13]


def divisor_pairs():
    return [(p, k) for p in PRIME_POWERS for k in range(1, p) if (p - 1) % k == 0]


@pytest.mark.parametrize("p,k", divisor_pairs())
def test_seed_bgw_all(p, k):
    rep = verify_bgw(seed_bgw(p, k))
    assert rep.ok
    assert rep.params == {"v": p + 1, "k": p, "lambda": p - 1, "n": k}


def test_seed_bgw_matches_printed_example():
    assert seed_bgw(3, 2) == catalog("BGW4_3_2_Z2").payload


def test_seed_bgw_trivial_group():
    W = seed_bgw(5, 1)
    assert np.array_equal(W.support, 1 - np.eye(6, dtype=int))


def test_seed_bgw_errors():
    with pytest.raises(NotADivisor):
        seed_bgw(5, 3)
    with pytest.raises(NotPrimePower):
        seed_bgw(6, 1)


@pytest.mark.parametrize("p", ODD_PRIME_POWERS)
def test_conference_is_balanced(p):
    rep = verify_balanced(seed_conference(p))
    assert rep.ok and rep.params == {"n": p + 1, "p": p, "lambda": p - 1}


def test_conference_even():
    with pytest.raises(EvenCharacteristic):
        seed_conference(4)


@pytest.mark.parametrize("p,params", [(3, (7, 3, 1)), (5, (11, 5, 2)), (9, (19, 9, 4)), (11, (23, 11, 5))])
def test_paley(p, params):
    v, k, lam = params
    N = paley_design(p).matrix
    assert np.array_equal(N @ N.T, (k - lam) * np.eye(v, dtype=int) + lam)


def test_paley_missing():
    with pytest.raises(NoPaleyDesign):
        paley_design(7)


def test_residual_derived_p5():
    R, D = residual_derived(paley_design(5))
    assert R.matrix.shape == (6, 10) and (R.matrix.sum(axis=1) == 5).all()
    assert D.matrix.shape == (5, 10) and (D.matrix.sum(axis=1) == 4).all()
    assert R.params == {"v": 6, "b": 10, "r": 5, "k": 3, "lambda": 2}


def test_residual_derived_p3():
    R, _ = residual_derived(paley_design(3))
    assert R.params == {"v": 4, "b": 6, "r": 3, "k": 2, "lambda": 1}
    mate = twin_mate(R)
    assert mate is not None and mate.params == R.params


def test_residual_needs_symmetric():
    with pytest.raises(NotSymmetric):
        residual_derived(np.ones((2, 3), dtype=int))


def test_printed_twin_pair():
    D = catalog("twin_D").payload
    C = catalog("twin_C").payload
    assert verify_bibd(D).params == {"v": 6, "b": 10, "r": 5, "k": 3, "lambda": 2}
    assert np.array_equal(twin_mate(D).matrix, C)


def test_fano_has_no_twin():
    assert twin_mate(paley_design(3)) is None


def test_catalog_entries_verify():
    names = catalog_names()
    assert {"W8_5", "twin_D", "twin_C", "BGW4_3_2_Z2", "OA25x6_appendix",
            "W43_25_appendix", "BGW31_appendix"} == set(names)
    assert catalog("W8_5").params == {"n": 8, "p": 5}
    assert catalog("W43_25_appendix").params == {"n": 43, "p": 25}
    e = catalog("BGW31_appendix")
    assert e.params == {"v": 31, "k": 25, "lambda": 20, "n": 4}
    assert e.details["encoding"] == {"0": -1, "1": 1, "2": 2, "3": 3, "4": 0}
    assert sum(t["ok"] for t in e.details["encodings_tried"]) == 1


def test_unknown_seed():
    with pytest.raises(UnknownSeed):
        catalog("W9_9")


def test_ingest_rejects_non_orthogonal(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("# kind=weighing\n1 1\n1 1\n")
    with pytest.raises(VerificationFailed):
        ingest(path, "weighing")

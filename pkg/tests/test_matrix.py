import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wexpand.construct import normalize_weighing
from wexpand.errors import (
    DimensionMismatch,
    NotADivisor,
    NotSquareAfterBorder,
    OverlappingSupports,
    SymbolOutOfRange,
    WrongRowCount,
)
from wexpand.matrix import (
    ZERO,
    GroupMatrix,
    as_int,
    border,
    decompose,
    from_signed,
    group_kron_ones,
    kron,
    recompose,
    reduce_group,
    sign,
    signed_kron,
    split_signs,
    star,
    substitute,
)
from wexpand.seeds import catalog, paley_design, residual_derived, seed_bgw, seed_conference
from wexpand.verify import verify_bgw, verify_weighing


def test_as_int_is_read_only():
    A = as_int([[1, 2]])
    with pytest.raises(ValueError):
        A[0, 0] = 5


def test_group_matrix_range_and_equality():
    with pytest.raises(SymbolOutOfRange):
        GroupMatrix([[0, 3]], 3)
    a = GroupMatrix([[0, ZERO]], 2)
    assert a == GroupMatrix(np.array([[0, -1]]), 2)
    assert a != GroupMatrix([[0, ZERO]], 4)
    assert a.support.tolist() == [[1, 0]]
    assert GroupMatrix.zeros(2, 3, 5).support.sum() == 0


def test_kron_small():
    B = np.array([[1, -1], [0, 1]])
    assert np.array_equal(kron([[1]], B), B)
    assert kron([[1, -1]], [[1, 1]]).tolist() == [[1, 1, -1, -1]]


def test_kron_with_residual_part(w8_5):
    R = normalize_weighing(w8_5).R
    K = kron(seed_conference(5), R)
    assert K.shape == (18, 42)
    assert np.array_equal(K @ K.T, 25 * np.eye(18, dtype=int))


def test_signed_kron_cases():
    R = np.array([[1, 0], [0, 1]])
    Rt = 1 - R
    assert np.array_equal(signed_kron([[1]], [[0]], R, Rt), R)
    assert np.array_equal(signed_kron([[0]], [[1]], R, Rt), Rt)
    with pytest.raises(OverlappingSupports):
        signed_kron([[1]], [[1]], R, Rt)
    with pytest.raises(DimensionMismatch):
        signed_kron([[1, 0]], [[0]], R, Rt)


def test_signed_kron_for_p5():
    R, _ = residual_derived(paley_design(5))
    Rt = 1 - R.matrix
    Wp, Wm = split_signs(seed_conference(5))
    out = signed_kron(Wp, Wm, R.matrix, Rt)
    assert out.shape == (36, 60)
    assert (out.sum(axis=1) == 25).all()


def test_substitute_degenerate_column():
    rows = np.arange(12).reshape(3, 4)
    O = np.array([[0], [1], [2]])
    assert np.array_equal(substitute(O, rows), rows)
    perm = [2, 0, 1]
    assert np.array_equal(substitute(O, rows, perm), rows[perm])


def test_substitute_errors():
    rows = np.eye(3, dtype=int)
    with pytest.raises(SymbolOutOfRange):
        substitute(np.array([[3]]), rows)
    with pytest.raises(WrongRowCount):
        substitute(np.array([[0]]), rows, perm=[0, 0, 1])


def test_substitute_appendix_oa(w8_5, appendix_oa):
    D = normalize_weighing(w8_5).D
    out = substitute(appendix_oa, D)
    assert out.shape == (25, 42)
    assert np.array_equal(out @ out.T, 25 * np.eye(25, dtype=int) - 1)


def test_substitute_derived_design(appendix_oa):
    _, D = residual_derived(paley_design(5))
    assert D.matrix.shape == (5, 10)
    out = substitute(appendix_oa, D.matrix)
    assert out.shape == (25, 60)
    assert (out.sum(axis=1) == 24).all()


def test_border_shapes_and_errors():
    with pytest.raises(NotSquareAfterBorder):
        border(np.zeros((0, 1), dtype=int), np.array([[1]]))
    with pytest.raises(DimensionMismatch):
        border(np.zeros((1, 2), dtype=int), np.zeros((1, 3), dtype=int))
    assert border(np.array([[1]]), np.array([[0]])).tolist() == [[0, 1], [1, 0]]


def test_border_rebuilds_appendix(w8_5, w43, appendix_oa):
    nf = normalize_weighing(w8_5)
    X = border(kron(seed_conference(5), nf.R), substitute(appendix_oa, nf.D))
    assert X.shape == (43, 43)
    assert verify_weighing(X).params == {"n": 43, "p": 25}


def test_group_border_column():
    W = seed_bgw(3, 2)
    top = group_kron_ones(W, 3)
    assert top.shape == (4, 12)
    col = border(GroupMatrix(np.full((1, 2), 0), 2), GroupMatrix(np.full((2, 2), 1), 2))
    assert col.data[:, 0].tolist() == [ZERO, 0, 0]


def test_star():
    Z = GroupMatrix.zeros(3, 3, 4)
    assert star(Z) == Z
    W = seed_bgw(3, 2)
    assert np.array_equal(star(W).data, W.data.T)
    S = star(seed_bgw(5, 4))
    rep = verify_bgw(S)
    assert rep.ok and rep.params == {"v": 6, "k": 5, "lambda": 4, "n": 4}


def test_decompose():
    assert all(B.sum() == 0 for B in decompose(GroupMatrix.zeros(2, 2, 3)).blocks)
    W = seed_bgw(5, 1)
    (B0,) = decompose(W).blocks
    assert np.array_equal(B0, W.support)
    ex = catalog("BGW4_3_2_Z2").payload
    B0, B1 = decompose(ex).blocks
    assert B0.sum(axis=1).tolist() == [3, 2, 2, 2]
    assert B1.sum(axis=1).tolist() == [0, 1, 1, 1]


def test_recompose_overlap():
    dec = decompose(seed_bgw(3, 2))
    bad = type(dec)(2, (dec.blocks[0], dec.blocks[0]))
    with pytest.raises(OverlappingSupports):
        recompose(bad)


def test_reduce_and_sign():
    W = seed_bgw(5, 4)
    assert reduce_group(W, 4) == W
    R2 = reduce_group(W, 2)
    assert verify_bgw(R2).params == {"v": 6, "k": 5, "lambda": 4, "n": 2}
    assert verify_weighing(sign(R2)).params == {"n": 6, "p": 5}
    R1 = reduce_group(W, 1)
    assert np.array_equal(R1.support, W.support)
    with pytest.raises(NotADivisor):
        reduce_group(W, 3)
    with pytest.raises(DimensionMismatch):
        sign(W)


bgw_inputs = st.sampled_from([(3, 2), (5, 2), (5, 4), (7, 2), (7, 3), (7, 6), (9, 4), (9, 8), (13, 6), (13, 12)])


@given(bgw_inputs)
def test_decompose_recompose_roundtrip(pk):
    W = seed_bgw(*pk)
    assert decompose(W).recompose() == W


@given(bgw_inputs, st.data())
def test_operations_preserve_bgw(pk, data):
    W = seed_bgw(*pk)
    params = verify_bgw(W).params
    assert verify_bgw(star(W)).params == params
    d = data.draw(st.sampled_from([k for k in range(1, W.n + 1) if W.n % k == 0]))
    assert verify_bgw(reduce_group(W, d)).params == {**params, "n": d}
    if W.n % 2 == 0:
        S = sign(reduce_group(W, 2))
        assert from_signed(S) == reduce_group(W, 2)
        assert verify_weighing(S).ok


@given(st.lists(st.lists(st.sampled_from([-1, 0, 1]), min_size=3, max_size=3), min_size=1, max_size=4))
def test_split_signs_roundtrip(rows):
    M = np.array(rows)
    Wp, Wm = split_signs(M)
    assert np.array_equal(Wp - Wm, M)
    assert not (Wp * Wm).any()

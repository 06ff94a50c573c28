"""Dense exact matrices used by the constructions.

Integer matrices are plain ``numpy.int64`` arrays.  Matrices over ``{0} ∪ Z_n``
are :class:`GroupMatrix` values: an int64 array of exponents relative to the
generator 1 of Z_n, with :data:`ZERO` (= -1) marking the structural zero.
Exponent 0 is the group identity and is never confused with ZERO.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    NotADivisor,
    NotSquareAfterBorder,
    OverlappingSupports,
    SymbolOutOfRange,
    WrongRowCount,
)

ZERO = -1


def as_int(M) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    A.setflags(write=False)
    return A


@dataclass(frozen=True, eq=False)
class GroupMatrix:
    """Square or rectangular (0, Z_n)-matrix."""

    data: np.ndarray
    n: int

    def __post_init__(self):
        data = np.array(self.data, dtype=np.int64)
        if data.ndim != 2:
            raise ValueError("GroupMatrix data must be 2-dimensional")
        bad = (data != ZERO) & ((data < 0) | (data >= self.n))
        if bad.any():
            r, c = np.argwhere(bad)[0]
            raise SymbolOutOfRange(f"entry ({r}, {c}) = {data[r, c]} not in Z_{self.n}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def shape(self):
        return self.data.shape

    @property
    def support(self) -> np.ndarray:
        return (self.data != ZERO).astype(np.int64)

    def __eq__(self, other):
        return (
            isinstance(other, GroupMatrix)
            and self.n == other.n
            and np.array_equal(self.data, other.data)
        )

    def __repr__(self):
        return f"GroupMatrix(n={self.n}, shape={self.shape})"

    @classmethod
    def zeros(cls, rows, cols, n):
        return cls(np.full((rows, cols), ZERO), n)


@dataclass(frozen=True, eq=False)
class BlockDecomposition:
    """W = sum_e e * B_e with disjoint 0/1 blocks."""

    n: int
    blocks: tuple[np.ndarray, ...]

    def recompose(self) -> GroupMatrix:
        return recompose(self)


def kron(A, B) -> np.ndarray:
    return as_int(np.kron(np.asarray(A, dtype=np.int64), np.asarray(B, dtype=np.int64)))


def signed_kron(Wplus, Wminus, R, Rtwin) -> np.ndarray:
    """W+ ⊗ R + W- ⊗ R' as a 0/1 matrix."""
    Wplus, Wminus, R, Rtwin = map(as_int, (Wplus, Wminus, R, Rtwin))
    if Wplus.shape != Wminus.shape or R.shape != Rtwin.shape:
        raise DimensionMismatch(
            f"W+ {Wplus.shape} / W- {Wminus.shape}, R {R.shape} / R' {Rtwin.shape}"
        )
    if (Wplus * Wminus).any():
        raise OverlappingSupports("W+ and W- share a nonzero cell")
    out = np.kron(Wplus, R) + np.kron(Wminus, Rtwin)
    if (out > 1).any():
        raise OverlappingSupports("an output cell received two contributions")
    return as_int(out)


def substitute(O, rows_of, perm=None):
    """Replace each symbol s of the array O by row ``perm[s]`` of ``rows_of``.

    ``O`` may be an OrthogonalArray or a plain 2-d symbol array.  ``rows_of``
    is an integer matrix or a GroupMatrix; the result has the same kind.
    """
    symbols = np.asarray(getattr(O, "data", O), dtype=np.int64)
    group = isinstance(rows_of, GroupMatrix)
    table = rows_of.data if group else as_int(rows_of)
    p = table.shape[0]
    if perm is None:
        perm = np.arange(p)
    perm = np.asarray(perm, dtype=np.int64)
    if sorted(perm.tolist()) != list(range(p)):
        raise WrongRowCount(f"assignment {perm.tolist()} is not a permutation of {p} rows")
    sym_count = getattr(O, "p", None)
    if sym_count is not None and sym_count != p:
        raise WrongRowCount(f"array has {sym_count} symbols but {p} rows were supplied")
    if symbols.size and (symbols.min() < 0 or symbols.max() >= p):
        raise SymbolOutOfRange(f"symbols must lie in 0..{p - 1}")
    rows, cols = symbols.shape
    # (rows, cols, width) -> (rows, cols * width)
    out = table[perm[symbols]].reshape(rows, cols * table.shape[1])
    return GroupMatrix(out, rows_of.n) if group else as_int(out)


def border(R, D):
    """Assemble [[0, R], [1, D]].

    For a GroupMatrix the border column holds ZERO beside R and the identity
    (exponent 0) beside D.
    """
    group = isinstance(R, GroupMatrix)
    Rd = R.data if group else as_int(R)
    Dd = D.data if group else as_int(D)
    if Rd.shape[1] != Dd.shape[1]:
        raise DimensionMismatch(f"R has {Rd.shape[1]} columns, D has {Dd.shape[1]}")
    if Rd.shape[0] + Dd.shape[0] != Rd.shape[1] + 1:
        raise NotSquareAfterBorder(
            f"{Rd.shape[0]} + {Dd.shape[0]} rows vs {Rd.shape[1]} + 1 columns"
        )
    off, on = (ZERO, 0) if group else (0, 1)
    top = np.hstack([np.full((Rd.shape[0], 1), off), Rd])
    bottom = np.hstack([np.full((Dd.shape[0], 1), on), Dd])
    out = np.vstack([top, bottom])
    return GroupMatrix(out, R.n) if group else as_int(out)


def group_kron_ones(W: GroupMatrix, width: int) -> GroupMatrix:
    """W ⊗ (1 1 ... 1): every entry repeated ``width`` times along its row."""
    return GroupMatrix(np.repeat(W.data, width, axis=1), W.n)


def star(W: GroupMatrix) -> GroupMatrix:
    """(i, j) entry is -w_ji, ZERO staying ZERO."""
    T = W.data.T
    return GroupMatrix(np.where(T == ZERO, ZERO, (-T) % W.n), W.n)


def decompose(W: GroupMatrix) -> BlockDecomposition:
    blocks = []
    for e in range(W.n):
        B = (W.data == e).astype(np.int64)
        B.setflags(write=False)
        blocks.append(B)
    return BlockDecomposition(W.n, tuple(blocks))


def recompose(dec: BlockDecomposition) -> GroupMatrix:
    blocks = [np.asarray(B, dtype=np.int64) for B in dec.blocks]
    total = sum(blocks)
    if (total > 1).any():
        raise OverlappingSupports("blocks are not disjoint")
    data = np.full(blocks[0].shape, ZERO)
    for e, B in enumerate(blocks):
        data[B == 1] = e
    return GroupMatrix(data, dec.n)


def reduce_group(W: GroupMatrix, k: int) -> GroupMatrix:
    """Push W through the quotient map Z_n -> Z_k."""
    if k < 1 or W.n % k:
        raise NotADivisor(f"{k} does not divide {W.n}")
    return GroupMatrix(np.where(W.data == ZERO, ZERO, W.data % k), k)


def sign(W: GroupMatrix) -> np.ndarray:
    """Z_2 matrix to (0, ±1): exponent 0 -> +1, 1 -> -1."""
    if W.n != 2:
        raise DimensionMismatch(f"sign() needs a matrix over Z_2, got Z_{W.n}")
    return as_int(np.where(W.data == ZERO, 0, np.where(W.data == 0, 1, -1)))


def from_signed(M) -> GroupMatrix:
    """(0, ±1) matrix to Z_2 exponents, the inverse of :func:`sign`."""
    M = as_int(M)
    if not np.isin(M, (-1, 0, 1)).all():
        raise SymbolOutOfRange("entries must be 0, 1 or -1")
    return GroupMatrix(np.where(M == 0, ZERO, np.where(M == 1, 0, 1)), 2)


def split_signs(W):
    """W = W+ - W- with 0/1 parts."""
    W = as_int(W)
    return as_int(W == 1), as_int(W == -1)

"""Orthogonal arrays from the geometry of GF(p)^{m+1}.

Rows are the vectors v of GF(p)^{m+1}, columns the points c of PG(m, p), and
the entry at (v, c) is the inner product <v, c>.  Two rows v, w agree exactly
at the points of the hyperplane <v - w, .> = 0, which gives the constant
pairwise agreement (p^m - 1)/(p - 1).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import AgreementViolation, ColumnImbalance
from .gf import field_of_order


@dataclass(frozen=True, eq=False)
class OrthogonalArray:
    p: int
    m: int
    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=np.int64)
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @property
    def shape(self):
        return self.data.shape

    def __eq__(self, other):
        return (
            isinstance(other, OrthogonalArray)
            and (self.p, self.m) == (other.p, other.m)
            and np.array_equal(self.data, other.data)
        )

    @classmethod
    def from_symbols(cls, rows, p=None, m=None):
        """Wrap a raw symbol array; alphabets {1..p} are shifted to {0..p-1}."""
        data = np.array(rows, dtype=np.int64)
        if data.size and data.min() == 1:
            data = data - 1
        if p is None:
            p = int(data.max()) + 1
        if m is None:
            m = round(np.log(data.shape[0]) / np.log(p)) - 1
        return cls(p, m, data)


def projective_points(F, dim: int) -> list[tuple[int, ...]]:
    """Points of PG(dim, q) as coordinate tuples with first nonzero entry 1.

    Coordinates are element encodings; the list is in lexicographic order.
    """
    pts = []
    for vec in itertools.product(range(F.q), repeat=dim + 1):
        lead = next((x for x in vec if x), None)
        if lead == 1:
            pts.append(vec)
    return pts


def oa_build(p: int, m: int) -> OrthogonalArray:
    """The p^{m+1} x (p^{m+1}-1)/(p-1) array over {0..p-1}."""
    F = field_of_order(p)
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    rows = list(itertools.product(range(p), repeat=m + 1))
    cols = projective_points(F, m)
    data = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, v in enumerate(rows):
        for c, pt in enumerate(cols):
            acc = 0
            for a, b in zip(v, pt):
                acc = F.add(acc, F.mul(a, b))
            data[r, c] = acc
    return OrthogonalArray(p, m, data)


@dataclass(frozen=True)
class OAReport:
    agreement: int
    column_balanced: bool


def verify_oa(O) -> OAReport:
    """Brute-force check of column balance and constant pairwise agreement.

    The expected agreement is read off the first pair of rows; every other
    pair must match it.  When ``O`` carries (p, m) the count must also equal
    (p^m - 1)/(p - 1).
    """
    data = np.asarray(getattr(O, "data", O), dtype=np.int64)
    N, ncols = data.shape
    p = getattr(O, "p", None) or int(data.max()) + 1
    for c in range(ncols):
        counts = np.bincount(data[:, c], minlength=p)
        if len(counts) > p or (counts != N // p).any():
            s = int(np.argmax(counts != N // p))
            raise ColumnImbalance(c, s, int(counts[s]))
    expected = None
    m = getattr(O, "m", None)
    if m is not None and getattr(O, "p", None):
        expected = (p**m - 1) // (p - 1)
    for i in range(N):
        agree = (data[i + 1 :] == data[i]).sum(axis=1)
        for off, a in enumerate(agree):
            if expected is None:
                expected = int(a)
            if a != expected:
                raise AgreementViolation(i, i + 1 + off, int(a), expected)
    return OAReport(agreement=expected if expected is not None else 0, column_balanced=True)


def strength_two(O) -> bool:
    """Every ordered symbol pair occurs equally often in every column pair."""
    data = np.asarray(getattr(O, "data", O), dtype=np.int64)
    N, ncols = data.shape
    p = int(data.max()) + 1
    for a, b in itertools.combinations(range(ncols), 2):
        counts = np.bincount(data[:, a] * p + data[:, b], minlength=p * p)
        if (counts != N // (p * p)).any():
            return False
    return True


def find_equivalence(A, B):
    """Search for a row bijection and column bijection carrying A onto B.

    Per-column symbol relabelings are free, so a column is only the partition
    of rows it induces; the search matches pairwise agreement sets.  Column
    pins come from singleton agreement sets, so the search is exhaustive for
    m = 1 and a best effort beyond that (a hit is always checked).  Returns
    ``(row_map, col_map, relabel)`` with ``B[row_map[x], col_map[c]] ==
    relabel[c][A[x, c]]``, or None.
    """
    A = np.asarray(getattr(A, "data", A), dtype=np.int64)
    B = np.asarray(getattr(B, "data", B), dtype=np.int64)
    if A.shape != B.shape:
        return None
    N, ncols = A.shape
    agree_A = [[frozenset(np.flatnonzero(A[x] == A[y]).tolist()) for y in range(N)] for x in range(N)]
    agree_B = [[frozenset(np.flatnonzero(B[x] == B[y]).tolist()) for y in range(N)] for x in range(N)]

    row_map: dict[int, int] = {}
    col_map: dict[int, int] = {}

    def extend_cols(x, y):
        # collect column constraints from every mapped row; return new
        # assignments or None on conflict
        new: dict[int, int] = {}
        used = set(col_map.values())
        for x2, y2 in row_map.items():
            sa, sb = agree_A[x][x2], agree_B[y][y2]
            if len(sa) != len(sb):
                return None
            free_a = []
            for c in sa:
                t = col_map.get(c, new.get(c))
                if t is None:
                    free_a.append(c)
                elif t not in sb:
                    return None
            for c, t in list(col_map.items()) + list(new.items()):
                if c not in sa and t in sb:
                    return None
            taken = {col_map.get(c, new.get(c)) for c in sa} - {None}
            free_b = sorted(set(sb) - taken)
            if len(free_a) == 1 and len(free_b) == 1:
                t = free_b[0]
                if t in used or t in new.values():
                    return None
                new[free_a[0]] = t
        return new

    def finish():
        cmap = dict(col_map)
        leftover = iter(sorted(set(range(ncols)) - set(cmap.values())))
        for c in range(ncols):
            if c not in cmap:
                cmap[c] = next(leftover)
        relabel = []
        for c in range(ncols):
            lab = {}
            for x in range(N):
                s, t = int(A[x, c]), int(B[row_map[x], cmap[c]])
                if lab.setdefault(s, t) != t:
                    return None
            if len(set(lab.values())) != len(lab):
                return None
            relabel.append(lab)
        return [row_map[x] for x in range(N)], [cmap[c] for c in range(ncols)], relabel

    def search(x):
        if x == N:
            return finish()
        used_rows = set(row_map.values())
        for y in range(N):
            if y in used_rows:
                continue
            new = extend_cols(x, y)
            if new is None:
                continue
            row_map[x] = y
            col_map.update(new)
            found = search(x + 1)
            if found:
                return found
            del row_map[x]
            for c in new:
                del col_map[c]
        return None

    return search(0)

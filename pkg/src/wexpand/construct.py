"""The three expansions: weighing matrices, symmetric designs and BGWs.

All three share one shape.  A seed in normal form [[0, R], [1, D]] is grown
to [[0, ℛ], [1, 𝒟]], where ℛ is a Kronecker product of R with an ingredient
matrix of order t_m = (p^{m+1}-1)/(p-1) and 𝒟 replaces the symbols of the
p^{m+1} x t_m orthogonal array by the rows of D.  Every output is checked
by the matching verifier before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    IngredientMismatch,
    IngredientUnavailable,
    NotAWeighingMatrix,
    NoTwin,
    NotPrimePower,
    VerificationFailed,
)
from .gf import is_prime_power
from .matrix import (
    GroupMatrix,
    as_int,
    border,
    group_kron_ones,
    kron,
    reduce_group,
    sign,
    signed_kron,
    split_signs,
    substitute,
)
from .oa import OrthogonalArray, oa_build
from .seeds import paley_design, residual_derived, seed_bgw, seed_conference, twin_mate
from .verify import verify_bgw, verify_symmetric_design, verify_weighing

AUTO = "auto"

__all__ = [
    "AUTO",
    "ExpansionPlan",
    "NormalForm",
    "expand_bgw",
    "expand_design",
    "expand_weighing",
    "normalize_weighing",
    "reduce_group",
    "sign",
    "table1",
    "target_order",
]


def t(p: int, m: int) -> int:
    """(p^{m+1} - 1)/(p - 1), the number of points of PG(m, p)."""
    return sum(p**i for i in range(m + 1))


def target_order(n: int, p: int, m: int) -> tuple[int, int]:
    """Order and weight produced from a W(n, p) seed at exponent m."""
    return t(p, m) * (n - 1) + 1, p ** (m + 1)


@dataclass(frozen=True, eq=False)
class NormalForm:
    W: np.ndarray
    R: np.ndarray
    D: np.ndarray
    row_permutation: tuple[int, ...]
    sign_vector: tuple[int, ...]
    column: int = 0


def normalize_weighing(W, column: int = 0) -> NormalForm:
    """Reorder and negate rows so W = [[0, R], [1, D]] on the chosen column."""
    W = as_int(W)
    rep = verify_weighing(W)
    if not rep.ok:
        raise NotAWeighingMatrix(rep.violation)
    n = W.shape[0]
    cols = [column] + [c for c in range(n) if c != column]
    M = W[:, cols]
    signs = np.where(M[:, 0] == -1, -1, 1)
    M = M * signs[:, None]
    zero_rows = [i for i in range(n) if M[i, 0] == 0]
    one_rows = [i for i in range(n) if M[i, 0] == 1]
    order = zero_rows + one_rows
    M = as_int(M[order])
    R, D = as_int(M[: len(zero_rows), 1:]), as_int(M[len(zero_rows) :, 1:])
    p = rep.params["p"]
    ok = (
        np.array_equal(R @ R.T, p * np.eye(len(R), dtype=np.int64))
        and np.array_equal(D @ D.T, p * np.eye(len(D), dtype=np.int64) - 1)
        and not (R @ D.T).any()
    )
    if not ok:
        raise VerificationFailed("normal form invariants failed")
    return NormalForm(M, R, D, tuple(order), tuple(int(s) for s in signs), column)


@dataclass
class ExpansionPlan:
    """What went into one expansion; returned alongside the matrix on request."""

    seed: str
    m: int
    ingredient_source: str  # supplied | recursive
    ingredient: np.ndarray | None = None
    oa: OrthogonalArray | None = None
    perm: tuple[int, ...] | None = None
    notes: list[str] = field(default_factory=list)


def _expected_bgw(p, j, k):
    return {"v": t(p, j), "k": p**j, "lambda": p ** (j - 1) * (p - 1), "n": k}


def expand_bgw(p: int, k: int, m: int, perm=None) -> GroupMatrix:
    """Classical BGW(t_m, p^m, p^{m-1}(p-1)) over Z_k, grown level by level.

    Level j+1 borders W_j ⊗ (1 ... 1) (p copies) over the array O(p, j) with its
    symbols replaced by rows of the seed's derived block.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    W = seed_bgw(p, k)
    D_seed = GroupMatrix(W.data[1:, 1:], k)
    for j in range(1, m):
        top = group_kron_ones(W, p)
        bottom = substitute(oa_build(p, j), D_seed, perm)
        W = border(top, bottom)
        rep = verify_bgw(W)
        if not rep.ok or rep.params != _expected_bgw(p, j + 1, k):
            raise VerificationFailed(f"expand_bgw level {j + 1} failed: {rep.violation}", rep)
    return W


def balanced_ingredient(p: int, m: int) -> np.ndarray:
    """Balanced W(t_m, p^m) for odd prime powers p, signed from the Z_2 BGW."""
    if m == 0:
        return as_int([[1]])
    if p % 2 == 0:
        raise IngredientUnavailable(
            f"no W({t(p, m)}, {p**m}) ingredient for even p = {p} "
            "(the Z_2 quotient needs 2 | p - 1; at m = 1 this is a W(p+1, p), "
            f"and W({p + 1}, {p}) with odd order does not exist)"
        )
    if m == 1:
        return seed_conference(p)
    return sign(reduce_group(expand_bgw(p, 2, m), 2))


def expand_weighing(
    seed, m: int, ingredient=AUTO, perm=None, column: int = 0, return_plan: bool = False
):
    """W(t_m (n-1) + 1, p^{m+1}) from a W(n, p) seed with p a prime power.

    With ``return_plan`` the result is ``(W, ExpansionPlan)``.
    """
    nf = normalize_weighing(seed, column)
    n = nf.W.shape[0]
    p = len(nf.D)
    if not is_prime_power(p):
        raise NotPrimePower(p)
    source = "supplied"
    if isinstance(ingredient, str) and ingredient == AUTO:
        ingredient = balanced_ingredient(p, m)
        source = "recursive"
    ingredient = as_int(ingredient)
    irep = verify_weighing(ingredient)
    if not irep.ok or irep.params != {"n": t(p, m), "p": p**m}:
        raise IngredientMismatch(
            f"ingredient must be a W({t(p, m)}, {p**m}); got {irep.params} ok={irep.ok}"
        )
    oa = oa_build(p, m)
    top = kron(ingredient, nf.R)
    bottom = substitute(oa, nf.D, perm)
    out = border(top, bottom)
    rep = verify_weighing(out)
    v, w = target_order(n, p, m)
    if not rep.ok or rep.params != {"n": v, "p": w}:
        raise VerificationFailed(f"expanded matrix is not a W({v}, {w}): {rep.violation}", rep)
    if return_plan:
        plan = ExpansionPlan(f"W({n}, {p})", m, source, ingredient, oa,
                             None if perm is None else tuple(perm))
        return out, plan
    return out


def expand_design(p: int, m: int, perm=None, block_index: int = 0) -> np.ndarray:
    """Symmetric design from the quadratic-residue SBIBD(2p+1, p, (p-1)/2).

    ℛ = W+ ⊗ R + W- ⊗ R' pairs the residual design R and its twin R' with the
    sign pattern of a balanced W(t_m, p^m); 𝒟 spreads the derived design over
    the orthogonal array.  Parameters are measured from the output.
    """
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    S = paley_design(p)
    R, D = residual_derived(S, block_index)
    twin = twin_mate(R)
    if twin is None:
        raise NoTwin(f"residual design of SBIBD({2 * p + 1}, {p}, {(p - 1) // 2}) has no twin")
    if not is_prime_power(p):
        raise IngredientUnavailable(f"p = {p} is not a prime power")
    W = balanced_ingredient(p, m)
    Wp, Wm = split_signs(W)
    top = signed_kron(Wp, Wm, R.matrix, twin.matrix)
    bottom = substitute(oa_build(p, m), D.matrix, perm)
    out = border(top, bottom)
    rep = verify_symmetric_design(out)
    if not rep.ok:
        raise VerificationFailed(f"expanded design failed: {rep.violation}", rep)
    return out


# -- Table 1 -------------------------------------------------------------

# Published seed list, in print order with repeated rows dropped.
TABLE1_SEEDS = [
    (7, 4), (6, 5), (8, 5), (10, 5), (12, 5), (8, 7), (12, 7), (16, 7), (20, 7),
    (10, 8), (12, 8), (14, 8), (16, 3), (16, 4), (16, 5), (16, 8), (16, 11),
    (16, 13), (10, 9), (12, 9), (13, 9), (14, 9), (16, 9), (14, 13), (18, 13),
    (19, 9), (20, 13),
]


@dataclass
class Table1Entry:
    m: int
    order: int
    weight: int
    status: str  # verified | formula-only | failed
    note: str = ""


@dataclass
class Table1Row:
    seed: tuple[int, int]
    source: str
    entries: list[Table1Entry]


def _classical(v, k):
    """(q, m) with v = t_m(q), k = q^m for an odd prime power q and m >= 2."""
    for q in range(3, k + 1, 2):
        m = 2
        while q**m <= k:
            if q**m == k and t(q, m) == v and is_prime_power(q):
                return q, m
            m += 1
    return None


def _seed_matrix(v, k, extra):
    if (v, k) in extra:
        return as_int(extra[(v, k)]), "supplied"
    if v == k + 1 and k % 2 == 1 and is_prime_power(k):
        return seed_conference(k), "conference"
    qm = _classical(v, k)
    if qm:
        return balanced_ingredient(*qm), f"signed BGW over Z_2 (q={qm[0]}, m={qm[1]})"
    if (v, k) == (8, 5):
        from .seeds import catalog

        return catalog("W8_5").payload, "catalog W8_5"
    return None, "literature (not embedded)"


def table1(max_order: int = 1000, seeds=None, extra_seeds=None) -> list[Table1Row]:
    """Reproduce the reachable part of the order/weight table.

    ``extra_seeds`` maps (v, k) to an ingested W(v, k) so literature seeds can
    be run too.
    """
    extra = dict(extra_seeds or {})
    rows = []
    for v, k in seeds or TABLE1_SEEDS:
        W, source = _seed_matrix(v, k, extra)
        entries = []
        m = 1
        while target_order(v, k, m)[0] <= max_order:
            order, weight = target_order(v, k, m)
            if k % 2 == 0:
                entries.append(
                    Table1Entry(
                        m, order, weight, "formula-only",
                        f"ingredient W({t(k, m)}, {k**m}) unavailable for even weight",
                    )
                )
            elif W is None:
                entries.append(Table1Entry(m, order, weight, "formula-only", "seed not available"))
            else:
                try:
                    out = expand_weighing(W, m)
                    rep = verify_weighing(out)
                    status = "verified" if rep.ok and rep.params == {"n": order, "p": weight} else "failed"
                    entries.append(Table1Entry(m, order, weight, status))
                except (VerificationFailed, IngredientMismatch, IngredientUnavailable) as exc:
                    entries.append(Table1Entry(m, order, weight, "failed", str(exc)))
            m += 1
        rows.append(Table1Row((v, k), source, entries))
    return rows

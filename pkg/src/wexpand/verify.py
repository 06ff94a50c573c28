"""Definitional checkers for every object the package produces.

These are the acceptance oracles.  They work straight from the definitions
(Gram identities, quotient multisets, block equations) with exact int64
arithmetic and share no assembly code with the constructions: group matrices
are read as raw exponent arrays and the B_i blocks are rebuilt here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass, field

import numpy as np

ZERO = -1


@dataclass
class VerifyReport:
    kind: str
    params: dict
    ok: bool
    violation: dict | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok

    def to_dict(self) -> dict:
        return asdict(self)


def _fail(kind, params, location, expected, actual, **details):
    return VerifyReport(
        kind,
        params,
        False,
        {"location": location, "expected": expected, "actual": actual},
        details,
    )


def _first_mismatch(G, target):
    bad = np.argwhere(G != target)
    if len(bad) == 0:
        return None
    i, j = (int(x) for x in bad[0])
    return (i, j), int(target[i, j]), int(G[i, j])


def _int_array(M):
    A = np.asarray(getattr(M, "data", M))
    return A.astype(np.int64)


def verify_weighing(W) -> VerifyReport:
    """W W^t = p I and W^t W = p I with p the common row weight."""
    W = _int_array(W)
    kind = "weighing"
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        return _fail(kind, {}, "shape", "square", list(W.shape))
    n = W.shape[0]
    if not np.isin(W, (-1, 0, 1)).all():
        i, j = (int(x) for x in np.argwhere(~np.isin(W, (-1, 0, 1)))[0])
        return _fail(kind, {"n": n}, [i, j], "0 or ±1", int(W[i, j]))
    p = int(np.count_nonzero(W[0])) if n else 0
    params = {"n": n, "p": p}
    target = p * np.eye(n, dtype=np.int64)
    for label, G in (("W W^t", W @ W.T), ("W^t W", W.T @ W)):
        bad = _first_mismatch(G, target)
        if bad:
            loc, exp, act = bad
            return _fail(kind, params, {"product": label, "cell": list(loc)}, exp, act)
    return VerifyReport(kind, params, True)


def verify_balanced(W) -> VerifyReport:
    """A weighing matrix whose support is an SBIBD(n, p, λ)."""
    base = verify_weighing(W)
    if not base.ok:
        base.kind = "balanced"
        return base
    W = _int_array(W)
    n, p = base.params["n"], base.params["p"]
    kind = "balanced"
    if n < 2:
        return VerifyReport(kind, {"n": n, "p": p, "lambda": 0}, True)
    num = p * (p - 1)
    if num % (n - 1):
        return _fail(
            kind,
            {"n": n, "p": p},
            "lambda",
            "integer p(p-1)/(n-1)",
            f"{num}/{n - 1}",
            reason="NonIntegralLambda",
        )
    lam = num // (n - 1)
    params = {"n": n, "p": p, "lambda": lam}
    N = np.abs(W)
    target = (p - lam) * np.eye(n, dtype=np.int64) + lam
    bad = _first_mismatch(N @ N.T, target)
    if bad:
        return _fail(kind, params, list(bad[0]), bad[1], bad[2])
    return VerifyReport(kind, params, True)


def _bgw_blocks(M, n):
    return [(M == e).astype(np.int64) for e in range(n)]


def bgw_block_equations(M, n, k, lam) -> int | None:
    """Return the first shift h whose block equation fails, else None."""
    v = M.shape[0]
    B = _bgw_blocks(M, n)
    off = (lam // n) * (np.ones((v, v), dtype=np.int64) - np.eye(v, dtype=np.int64))
    for h in range(n):
        target = off + (k * np.eye(v, dtype=np.int64) if h == 0 else 0)
        rows = sum(B[i] @ B[(i - h) % n].T for i in range(n))
        cols = sum(B[(i - h) % n].T @ B[i] for i in range(n))
        if not (np.array_equal(rows, target) and np.array_equal(cols, target)):
            return h
    return None


def bgw_quotient_check(M, n, lam):
    """First ordered row pair whose quotient multiset is unbalanced, else None."""
    v = M.shape[0]
    want = lam // n
    for i in range(v):
        both = (M[i] != ZERO) & (M != ZERO)
        diff = (M[i] - M) % n
        counts = np.zeros((v, n), dtype=np.int64)
        r, c = np.nonzero(both)
        np.add.at(counts, (r, diff[r, c]), 1)
        counts[i] = want
        bad = np.argwhere(counts != want)
        if len(bad):
            j, e = (int(x) for x in bad[0])
            return i, j, e, int(counts[j, e])
    return None


def verify_bgw(W, n: int | None = None) -> VerifyReport:
    """BGW(v, k, λ; Z_n): constant row support k and balanced row quotients.

    ``W`` is a GroupMatrix or a raw exponent array with -1 for ZERO (then
    ``n`` is required).  λ = k(k-1)/(v-1) is derived, never supplied.
    """
    if n is None:
        n = W.n
    M = _int_array(W)
    kind = "bgw"
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        return _fail(kind, {"n": n}, "shape", "square", list(M.shape))
    v = M.shape[0]
    if ((M != ZERO) & ((M < 0) | (M >= n))).any():
        i, j = (int(x) for x in np.argwhere((M != ZERO) & ((M < 0) | (M >= n)))[0])
        return _fail(kind, {"v": v, "n": n}, [i, j], f"ZERO or 0..{n - 1}", int(M[i, j]))
    weights = (M != ZERO).sum(axis=1)
    k = int(weights[0]) if v else 0
    if (weights != k).any():
        i = int(np.argmax(weights != k))
        return _fail(
            kind, {"v": v, "n": n}, {"row": i}, k, int(weights[i]), reason="UnequalRowWeight"
        )
    if v < 2:
        return VerifyReport(kind, {"v": v, "k": k, "lambda": 0, "n": n}, True)
    num = k * (k - 1)
    if num % (v - 1) or (num // (v - 1)) % n:
        return _fail(
            kind,
            {"v": v, "k": k, "n": n},
            "lambda",
            "k(k-1)/(v-1) integral and divisible by n",
            f"{num}/{v - 1}",
            reason="NonIntegralLambda",
        )
    lam = num // (v - 1)
    params = {"v": v, "k": k, "lambda": lam, "n": n}
    quot = bgw_quotient_check(M, n, lam)
    blocks = bgw_block_equations(M, n, k, lam)
    details = {"quotient_multiset": quot is None, "block_equations": blocks is None}
    if quot is not None:
        i, j, e, cnt = quot
        return _fail(
            kind,
            params,
            {"rows": [i, j], "exponent": e},
            lam // n,
            cnt,
            reason="UnbalancedPair",
            **details,
        )
    if blocks is not None:
        return _fail(
            kind, params, {"shift": blocks}, "block equation", "mismatch",
            reason="BlockEquationFailure", **details,
        )
    return VerifyReport(kind, params, True, None, details)


def verify_bibd(N) -> VerifyReport:
    """Constant row sum r, column sum k and N N^t = (r - λ) I + λ J."""
    N = _int_array(N)
    kind = "bibd"
    if N.ndim != 2:
        return _fail(kind, {}, "shape", "2-d", list(N.shape))
    if not np.isin(N, (0, 1)).all():
        i, j = (int(x) for x in np.argwhere(~np.isin(N, (0, 1)))[0])
        return _fail(kind, {}, [i, j], "0 or 1", int(N[i, j]))
    v, b = N.shape
    rs, cs = N.sum(axis=1), N.sum(axis=0)
    r, k = int(rs[0]), int(cs[0])
    if (rs != r).any():
        i = int(np.argmax(rs != r))
        return _fail(kind, {"v": v, "b": b}, {"row": i}, r, int(rs[i]))
    if (cs != k).any():
        j = int(np.argmax(cs != k))
        return _fail(kind, {"v": v, "b": b, "r": r}, {"col": j}, k, int(cs[j]))
    G = N @ N.T
    lam = int(G[0, 1]) if v > 1 else 0
    params = {"v": v, "b": b, "r": r, "k": k, "lambda": lam}
    target = (r - lam) * np.eye(v, dtype=np.int64) + lam
    bad = _first_mismatch(G, target)
    if bad:
        return _fail(kind, params, list(bad[0]), bad[1], bad[2])
    return VerifyReport(kind, params, True)


def verify_symmetric_design(N) -> VerifyReport:
    rep = verify_bibd(N)
    rep.kind = "symmetric_design"
    if not rep.ok:
        return rep
    p = rep.params
    if p["v"] != p["b"] or p["r"] != p["k"]:
        return _fail(rep.kind, p, "shape", "v = b and r = k", [p["v"], p["b"], p["r"], p["k"]])
    rep.params = {"v": p["v"], "k": p["k"], "lambda": p["lambda"]}
    return rep


# -- symbol-encoding resolution for printed group matrices ----------------


def _affine_class(images, n):
    """All relabelings u*x + c (u a unit) of an exponent tuple."""
    units = [u for u in range(1, n) if math.gcd(u, n) == 1] or [1]
    return {tuple((u * x + c) % n for x in images) for u in units for c in range(n)}


def candidate_encodings(tokens, n):
    """One representative per BGW-equivalent token -> exponent labeling.

    Each distinct token may play ZERO; the remaining n tokens are mapped
    bijectively onto Z_n.  Labelings related by x -> u x + c (u a unit of Z_n)
    preserve the BGW property, so only one per class is kept; it is the
    ``token mod n`` labeling when that lies in the class.
    """
    out = []
    values = sorted(set(int(t) for t in tokens))
    for z in values:
        rest = [t for t in values if t != z]
        if len(rest) != n:
            continue
        natural = tuple(t % n for t in rest)
        seen = set()
        for images in itertools.permutations(range(n)):
            if images in seen:
                continue
            cls = _affine_class(images, n)
            seen |= cls
            rep = natural if natural in cls else min(cls)
            enc = {z: ZERO}
            enc.update(dict(zip(rest, rep)))
            out.append(enc)
    return out


def resolve_bgw_encoding(tokens, n):
    """Try every candidate encoding; return (encoding or None, per-candidate results)."""
    T = np.asarray(tokens, dtype=np.int64)
    tried = []
    passing = []
    for enc in candidate_encodings(T.ravel(), n):
        M = np.vectorize(enc.get)(T)
        rep = verify_bgw(M, n)
        tried.append({"encoding": {str(k): v for k, v in enc.items()}, "ok": rep.ok})
        if rep.ok:
            passing.append(enc)
    chosen = passing[0] if len(passing) == 1 else None
    return chosen, tried

"""Seed objects consumed by the expansions.

* :func:`seed_bgw` is the discrete-log BGW(p+1, p, p-1) over Z_k, bordered by a
  point at infinity so it is already in normal form.
* :func:`seed_conference` signs the Z_2 case into a conference matrix.
* :func:`paley_design` and :func:`residual_derived` give the quadratic-residue
  SBIBD(2p+1, p, (p-1)/2) and its two halves; :func:`twin_mate` checks the
  complement.
* :func:`catalog` serves the published example and appendix matrices and
  :func:`ingest` loads anything else from disk.  Every payload is verified on
  load.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import formats
from .errors import (
    AgreementViolation,
    ColumnImbalance,
    EvenCharacteristic,
    NoPaleyDesign,
    NotADivisor,
    NotPrimePower,
    NotSymmetric,
    ParseError,
    UnknownSeed,
    VerificationFailed,
)
from .gf import field_of_order, is_prime_power
from .matrix import ZERO, GroupMatrix, as_int, from_signed, sign
from .oa import verify_oa
from .verify import (
    VerifyReport,
    resolve_bgw_encoding,
    verify_bgw,
    verify_bibd,
    verify_symmetric_design,
    verify_weighing,
)


@dataclass(frozen=True, eq=False)
class DesignIncidence:
    matrix: np.ndarray
    params: dict | None = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", as_int(self.matrix))


def _bgw_params(p):
    return {"v": p + 1, "k": p, "lambda": p - 1}


def seed_bgw(p: int, k: int) -> GroupMatrix:
    """BGW(p+1, p, p-1) over Z_k, rows and columns ordered (inf, 0, 1, ...).

    w(inf, x) = w(x, inf) = identity, w(x, x) = ZERO and w(x, y) = log(y - x)
    mod k.
    """
    F = field_of_order(p)
    if k < 1 or (p - 1) % k:
        raise NotADivisor(f"{k} does not divide {p - 1}")
    data = np.full((p + 1, p + 1), ZERO, dtype=np.int64)
    data[0, 1:] = 0
    data[1:, 0] = 0
    for x in range(p):
        for y in range(p):
            if x != y:
                data[1 + x, 1 + y] = F.log(F.sub(y, x)) % k
    W = GroupMatrix(data, k)
    rep = verify_bgw(W)
    if not rep.ok or rep.params != {**_bgw_params(p), "n": k}:
        raise VerificationFailed(f"seed_bgw({p}, {k}) did not verify", rep)
    return W


def seed_conference(p: int) -> np.ndarray:
    """Conference matrix W(p+1, p) for an odd prime power p."""
    if not is_prime_power(p):
        raise NotPrimePower(p)
    if p % 2 == 0:
        raise EvenCharacteristic(f"2 does not divide {p} - 1")
    return sign(seed_bgw(p, 2))


def paley_design(p: int) -> DesignIncidence:
    """Quadratic-residue SBIBD(2p+1, p, (p-1)/2); needs 2p+1 a prime power = 3 mod 4."""
    q = 2 * p + 1
    if q % 4 != 3 or not is_prime_power(q):
        raise NoPaleyDesign(f"q = {q} is not a prime power congruent to 3 mod 4")
    F = field_of_order(q)
    squares = {F.mul(x, x) for x in range(1, q)}
    N = np.zeros((q, q), dtype=np.int64)
    for x in range(q):
        for r in range(q):
            N[x, r] = F.sub(x, r) in squares
    rep = verify_symmetric_design(N)
    expected = {"v": q, "k": p, "lambda": (p - 1) // 2}
    if not rep.ok or rep.params != expected:
        raise VerificationFailed(f"paley_design({p}) did not verify", rep)
    return DesignIncidence(N, rep.params)


def residual_derived(S, block_index: int = 0):
    """Split a symmetric design on one block: (residual R, derived D)."""
    N = as_int(getattr(S, "matrix", S))
    if not verify_symmetric_design(N).ok:
        raise NotSymmetric("input is not a symmetric design")
    if not 0 <= block_index < N.shape[1]:
        raise IndexError(block_index)
    on = N[:, block_index] == 1
    rest = np.delete(N, block_index, axis=1)
    R, D = rest[~on], rest[on]
    parts = []
    for part, label in ((R, "residual"), (D, "derived")):
        rep = verify_bibd(part)
        if not rep.ok:
            raise VerificationFailed(f"{label} design did not verify", rep)
        parts.append(DesignIncidence(part, rep.params))
    return tuple(parts)


def twin_mate(R) -> DesignIncidence | None:
    """J - R when it is a BIBD with the same parameters as R, else None."""
    N = as_int(getattr(R, "matrix", R))
    base = verify_bibd(N)
    if not base.ok:
        raise VerificationFailed("twin_mate needs a BIBD", base)
    C = 1 - N
    rep = verify_bibd(C)
    if rep.ok and rep.params == base.params:
        return DesignIncidence(C, rep.params)
    return None


# -- catalog of printed matrices --------------------------------------------


@dataclass(frozen=True, eq=False)
class SeedCatalogEntry:
    name: str
    kind: str
    payload: object
    params: dict
    source: str = ""
    details: dict = field(default_factory=dict)


_CATALOG = {
    # name: (fixture file, kind, description)
    "W8_5": ("W8_5.txt", "weighing", "W(8,5) that starts the W(43,25) example"),
    "twin_D": ("twin_D.txt", "design", "BIBD(6,10,5,3,2) with a twin mate"),
    "twin_C": ("twin_C.txt", "design", "the printed twin mate of twin_D"),
    "BGW4_3_2_Z2": ("BGW4_Z2.txt", "bgw", "seed BGW(4,3,2) over Z_2 for p = 3"),
    "OA25x6_appendix": ("OA25x6.txt", "oa", "appendix 25x6 orthogonal array"),
    "W43_25_appendix": ("W43_25.txt", "weighing", "appendix W(43,25)"),
    "BGW31_appendix": ("BGW31.txt", "bgw", "appendix order-31 BGW over Z_4"),
}


def fixture_path(filename: str):
    return resources.files("wexpand") / "fixtures" / filename


def catalog_names() -> list[str]:
    return list(_CATALOG)


def catalog(name: str) -> SeedCatalogEntry:
    if name not in _CATALOG:
        raise UnknownSeed(f"{name!r}; known: {', '.join(_CATALOG)}")
    filename, kind, description = _CATALOG[name]
    path = fixture_path(filename)
    entry = ingest(path, kind)
    return SeedCatalogEntry(name, kind, entry.payload, entry.params, description, entry.details)


def _load(mf: formats.MatrixFile, kind: str):
    """Parse and verify; returns (payload, report, details)."""
    details = {}
    if kind == "weighing":
        W = formats.to_weighing(mf)
        rep = verify_weighing(W)
        return W, rep, details
    if kind == "bgw":
        if mf.header.get("kind") == "weighing" or "n" not in mf.header:
            G = from_signed(formats.to_weighing(mf))
            return G, verify_bgw(G), details
        n = int(mf.header["n"])
        encoding, tried = resolve_bgw_encoding(formats.raw_tokens(mf), n)
        details["encodings_tried"] = tried
        if encoding is None:
            G = formats.to_bgw(mf)
            return G, verify_bgw(G), details
        details["encoding"] = {str(k): v for k, v in encoding.items()}
        G = formats.to_bgw(mf, encoding)
        return G, verify_bgw(G), details
    if kind == "design":
        N = formats.to_design(mf)
        return N, verify_bibd(N), details
    if kind == "oa":
        O = formats.to_oa(mf)
        try:
            r = verify_oa(O)
        except (AgreementViolation, ColumnImbalance) as exc:
            raise VerificationFailed(str(exc)) from exc
        params = {"rows": O.shape[0], "cols": O.shape[1], "p": O.p, "m": O.m,
                  "agreement": r.agreement}
        return O, VerifyReport("oa", params, True), details
    raise ParseError(f"unknown kind {kind!r}")


def ingest(path, kind: str) -> SeedCatalogEntry:
    """Load a matrix file and verify it as ``kind``; reject failures."""
    mf = formats.read(path)
    payload, rep, details = _load(mf, kind)
    if not rep.ok:
        raise VerificationFailed(f"{path} does not verify as {kind}: {rep.violation}", rep)
    name = getattr(path, "name", str(path))
    return SeedCatalogEntry(str(name), kind, payload, rep.params, str(path), details)

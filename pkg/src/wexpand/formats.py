"""Plain-text matrix files.

A file is optional ``# key=value`` header lines followed by rows of
whitespace-separated tokens:

* weighing: tokens ``0``, ``1`` and ``-`` (for -1), as the matrices are printed;
* bgw: integers, ``0`` is the structural zero and ``j`` in 1..n is the group
  element j mod n (so ``n`` itself is the identity); the header carries ``n``;
* design / oa: non-negative integers.  ``layout=transposed`` stores the
  transpose, which is how the appendix array is printed.

Canonical files (single spaces, ``\\n`` line ends, header in insertion order)
round-trip byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ParseError
from .matrix import ZERO, GroupMatrix, as_int
from .oa import OrthogonalArray

KINDS = ("weighing", "bgw", "design", "oa")


@dataclass
class MatrixFile:
    header: dict = field(default_factory=dict)
    tokens: list = field(default_factory=list)

    @property
    def kind(self):
        return self.header.get("kind")

    def dumps(self) -> str:
        lines = [f"# {k}={v}" for k, v in self.header.items()]
        lines += [" ".join(row) for row in self.tokens]
        return "\n".join(lines) + "\n"


def loads(text: str) -> MatrixFile:
    header, rows = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, value = body.split("=", 1)
                header[key.strip()] = value.strip()
            continue
        rows.append(line.split())
    if rows and len({len(r) for r in rows}) != 1:
        raise ParseError(f"ragged rows: lengths {sorted({len(r) for r in rows})}")
    return MatrixFile(header, rows)


def read(path) -> MatrixFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    return loads(text)


def write(path, mf: MatrixFile) -> None:
    Path(path).write_text(mf.dumps())


_SIGNED = {"0": 0, "1": 1, "-": -1, "-1": -1, "+1": 1}


def to_weighing(mf: MatrixFile) -> np.ndarray:
    try:
        return as_int([[_SIGNED[t] for t in row] for row in mf.tokens])
    except KeyError as exc:
        raise ParseError(f"bad weighing token {exc.args[0]!r}") from None


def from_weighing(W, **header) -> MatrixFile:
    W = as_int(W)
    sym = {0: "0", 1: "1", -1: "-"}
    return MatrixFile({"kind": "weighing", **header}, [[sym[int(x)] for x in row] for row in W])


def _ints(mf: MatrixFile) -> np.ndarray:
    try:
        return np.array([[int(t) for t in row] for row in mf.tokens], dtype=np.int64)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def raw_tokens(mf: MatrixFile) -> np.ndarray:
    return _ints(mf)


def to_bgw(mf: MatrixFile, encoding: dict | None = None) -> GroupMatrix:
    if "n" not in mf.header:
        raise ParseError("bgw file needs an n=<group order> header line")
    n = int(mf.header["n"])
    T = _ints(mf)
    if encoding is None:
        if T.size and (T.min() < 0 or T.max() > n):
            raise ParseError(f"bgw tokens must lie in 0..{n}")
        data = np.where(T == 0, ZERO, T % n)
    else:
        data = np.vectorize(lambda t: encoding[int(t)])(T) if T.size else T
    return GroupMatrix(data, n)


def from_bgw(W: GroupMatrix, **header) -> MatrixFile:
    n = W.n
    tok = np.where(W.data == ZERO, 0, np.where(W.data == 0, n, W.data))
    return MatrixFile(
        {"kind": "bgw", "n": str(n), **header}, [[str(int(x)) for x in row] for row in tok]
    )


def to_design(mf: MatrixFile) -> np.ndarray:
    M = _ints(mf)
    if mf.header.get("layout") == "transposed":
        M = M.T
    return as_int(M)


def from_design(N, **header) -> MatrixFile:
    return MatrixFile({"kind": "design", **header}, [[str(int(x)) for x in row] for row in as_int(N)])


def to_oa(mf: MatrixFile) -> OrthogonalArray:
    M = _ints(mf)
    if mf.header.get("layout") == "transposed":
        M = M.T
    p = int(mf.header["p"]) if "p" in mf.header else None
    m = int(mf.header["m"]) if "m" in mf.header else None
    return OrthogonalArray.from_symbols(M, p, m)


def from_oa(O: OrthogonalArray, **header) -> MatrixFile:
    head = {"kind": "oa", "p": str(O.p), "m": str(O.m), **header}
    M = O.data.T if head.get("layout") == "transposed" else O.data
    return MatrixFile(head, [[str(int(x)) for x in row] for row in M])

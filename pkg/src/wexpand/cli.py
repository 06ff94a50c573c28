"""Command-line entry point: ``wexpand <command> ...``.

Exit codes: 0 when the result verifies, 2 when a precondition fails (the
error class name goes to stderr), 3 when verification fails.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__, formats
from .construct import expand_bgw, expand_design, expand_weighing, table1
from .errors import DesignError, VerificationFailed
from .matrix import GroupMatrix
from .oa import oa_build, verify_oa
from .scheme import eigenmatrices, scheme_from_bgw, verify_scheme
from .seeds import catalog, catalog_names, ingest, seed_conference

SCHEMA = 1
EXIT_OK, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    ok: bool = False
    details: dict = field(default_factory=dict)
    timing: float = 0.0
    schema: int = SCHEMA

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True, default=_jsonable)


def _jsonable(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    return str(x)


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _emit(report: RunReport, out: str | None, mf: formats.MatrixFile | None, stream):
    """Write the matrix (if any) and print the report."""
    if mf is not None:
        text = mf.dumps()
        if out:
            Path(out).write_text(text)
            report.outputs = {"path": out, "sha256": _sha256(text.encode())}
        else:
            report.outputs = {"sha256": _sha256(text.encode())}
    print(report.to_json(), file=stream)


def _perm(spec):
    if spec is None:
        return None
    return tuple(int(x) for x in spec.split(","))


def _load_seed(name):
    """Catalog name, or a path to a weighing-matrix file."""
    if name in catalog_names():
        return catalog(name).payload, {"seed": name}
    path = Path(name)
    data = path.read_bytes() if path.exists() else b""
    entry = ingest(path, "weighing")
    return entry.payload, {"seed": str(path), "sha256": _sha256(data)}


def cmd_construct(args) -> tuple[RunReport, formats.MatrixFile | None]:
    from .verify import verify_bgw, verify_symmetric_design, verify_weighing

    rep = RunReport(f"construct {args.kind}")
    perm = _perm(args.perm)
    rep.inputs = {"p": args.p, "m": args.m, "perm": perm}
    if args.kind == "weighing":
        if args.seed:
            seed, info = _load_seed(args.seed)
        else:
            seed, info = seed_conference(args.p), {"seed": f"conference({args.p})"}
        rep.inputs.update(info)
        ingredient = "auto"
        if args.ingredient and args.ingredient != "auto":
            ingredient, iinfo = _load_seed(args.ingredient)
            rep.inputs["ingredient"] = iinfo
        W, plan = expand_weighing(seed, args.m, ingredient, perm, return_plan=True)
        rep.details["ingredient_source"] = plan.ingredient_source
        check = verify_weighing(W)
        mf = formats.from_weighing(W)
    elif args.kind in ("bgw", "scheme"):
        k = args.group or 2
        rep.inputs["group"] = k
        W = expand_bgw(args.p, k, args.m, perm)
        check = verify_bgw(W)
        mf = formats.from_bgw(W)
        if args.kind == "scheme":
            S = scheme_from_bgw(W)
            sr = verify_scheme(S)
            E = eigenmatrices(S)
            rep.details["scheme"] = {
                "size": sr.size,
                "classes": [list(map(str, l)) for l in S.labels],
                "symmetric": sr.symmetric,
                "symmetric_iff_n2": sr.symmetric_iff_n2,
                "identities": sr.identities,
                "multiplicities": list(E.multiplicities),
                "max_residual": E.max_residual,
            }
    elif args.kind == "design":
        N = expand_design(args.p, args.m, perm)
        check = verify_symmetric_design(N)
        mf = formats.from_design(N)
    else:  # argparse restricts choices
        raise ValueError(args.kind)
    rep.params, rep.ok = check.params, check.ok
    if not check.ok:
        raise VerificationFailed(f"output did not verify: {check.violation}", check)
    return rep, mf


def cmd_verify(args):
    from .verify import verify_bgw, verify_bibd, verify_symmetric_design, verify_weighing

    raw = Path(args.path).read_bytes() if Path(args.path).exists() else b""
    rep = RunReport("verify", inputs={"path": args.path, "kind": args.kind, "sha256": _sha256(raw)})
    mf = formats.read(args.path)
    if args.kind == "bgw":
        entry = ingest(args.path, "bgw")  # resolves printed encodings
        rep.details.update(entry.details)
        check = verify_bgw(entry.payload)
    elif args.kind == "weighing":
        check = verify_weighing(formats.to_weighing(mf))
    elif args.kind == "design":
        N = formats.to_design(mf)
        check = verify_symmetric_design(N)
        if not check.ok:
            check = verify_bibd(N)
    else:  # oa
        O = formats.to_oa(mf)
        r = verify_oa(O)
        rep.params, rep.ok = {"rows": O.shape[0], "cols": O.shape[1], "agreement": r.agreement}, True
        return rep, None
    rep.params, rep.ok = check.params, check.ok
    if not check.ok:
        rep.details["violation"] = check.violation
    return rep, None


def cmd_oa(args):
    O = oa_build(args.p, args.m)
    r = verify_oa(O)
    rep = RunReport("oa", inputs={"p": args.p, "m": args.m})
    rep.params = {"rows": O.shape[0], "cols": O.shape[1], "agreement": r.agreement}
    rep.ok = True
    return rep, formats.from_oa(O)


def cmd_table1(args):
    extra = {}
    for path in args.extra_seed or []:
        W = ingest(path, "weighing").payload
        extra[(W.shape[0], int(np.count_nonzero(W[0])))] = W
    rows = table1(args.max, extra_seeds=extra)
    rep = RunReport("table1", inputs={"max": args.max, "extra_seeds": args.extra_seed or []})
    rep.details["rows"] = [
        {
            "seed": list(r.seed),
            "source": r.source,
            "entries": [asdict(e) for e in r.entries],
        }
        for r in rows
    ]
    rep.ok = not any(e.status == "failed" for r in rows for e in r.entries)
    if args.text:
        for r in rows:
            cells = ", ".join(f"({e.order},{e.weight}) {e.status}" for e in r.entries)
            print(f"{r.seed} -> {cells}", file=sys.stderr)
    return rep, None


def cmd_catalog(args):
    rep = RunReport(f"catalog {args.action}")
    if args.action == "list":
        entries = [catalog(n) for n in catalog_names()]
        rep.details["entries"] = [{"name": e.name, "kind": e.kind, "params": e.params} for e in entries]
        rep.ok = True
        return rep, None
    if not args.name:
        raise DesignError("catalog show needs a name")
    e = catalog(args.name)
    rep.params, rep.ok = e.params, True
    rep.details = {"name": e.name, "kind": e.kind, "source": e.source}
    if "encoding" in e.details:
        rep.details["encoding"] = e.details["encoding"]
    payload = e.payload
    if isinstance(payload, GroupMatrix):
        mf = formats.from_bgw(payload)
    elif e.kind == "oa":
        mf = formats.from_oa(payload)
    elif e.kind == "design":
        mf = formats.from_design(payload)
    else:
        mf = formats.from_weighing(payload)
    return rep, mf


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wexpand", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build and verify a matrix")
    c.add_argument("kind", choices=["weighing", "bgw", "design", "scheme"])
    c.add_argument("--p", type=int, required=True, help="prime power weight of the seed")
    c.add_argument("--m", type=int, default=1)
    c.add_argument("--group", type=int, help="cyclic group order for bgw/scheme")
    c.add_argument("--seed", help="catalog name or weighing-matrix file")
    c.add_argument("--ingredient", help="'auto' (default), a catalog name, or a file holding the W(t_m, p^m)")
    c.add_argument("--perm", help="comma-separated symbol permutation of 0..p-1")
    c.add_argument("--out", help="write the matrix here")
    c.add_argument("--report", help="write the JSON report here instead of stdout")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="verify a matrix file")
    v.add_argument("path")
    v.add_argument("--kind", choices=list(formats.KINDS), required=True)
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify, out=None)

    o = sub.add_parser("oa", help="build the orthogonal array for (p, m)")
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--m", type=int, required=True)
    o.add_argument("--out")
    o.add_argument("--report")
    o.set_defaults(func=cmd_oa)

    t = sub.add_parser("table1", help="reproduce the order/weight table")
    t.add_argument("--max", type=int, default=1000)
    t.add_argument("--extra-seed", action="append", help="weighing-matrix file to use as a seed")
    t.add_argument("--text", action="store_true", help="also print a summary to stderr")
    t.add_argument("--report")
    t.set_defaults(func=cmd_table1, out=None)

    k = sub.add_parser("catalog", help="embedded matrices")
    k.add_argument("action", choices=["list", "show"])
    k.add_argument("name", nargs="?")
    k.add_argument("--out")
    k.add_argument("--report")
    k.set_defaults(func=cmd_catalog)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report, mf = args.func(args)
    except VerificationFailed as exc:
        print(f"VerificationFailed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (DesignError, ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    report.timing = round(time.perf_counter() - t0, 6)
    if args.command == "catalog" and args.action == "show" and not args.out:
        # show prints the matrix itself
        print(mf.dumps(), end="")
        mf = None
    if args.report:
        with open(args.report, "w") as fh:
            _emit(report, args.out, mf, fh)
    else:
        _emit(report, args.out, mf, sys.stdout)
    return EXIT_OK if report.ok else EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())

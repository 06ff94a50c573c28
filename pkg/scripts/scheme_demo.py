"""Build the association scheme of a BGW and print its eigenmatrix P.

    python scripts/scheme_demo.py --p 5 --group 4 --m 1
"""

import argparse

import numpy as np

from wexpand.construct import expand_bgw
from wexpand.scheme import eigenmatrices, extract_bgw, scheme_from_bgw, verify_scheme


def fmt(z):
    z = complex(np.round(z, 6))
    if abs(z.imag) < 1e-9:
        return f"{z.real:g}"
    if abs(z.real) < 1e-9:
        return f"{z.imag:g}i"
    return f"{z.real:g}{z.imag:+g}i"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--group", type=int, default=2)
    ap.add_argument("--m", type=int, default=1)
    args = ap.parse_args()

    W = expand_bgw(args.p, args.group, args.m)
    S = scheme_from_bgw(W)
    r = verify_scheme(S)
    E = eigenmatrices(S)
    print(f"BGW({S.v},{S.k},{S.lam}) over Z_{S.n}: {S.size} vertices, {len(S.classes)} classes")
    print("symmetric:", r.symmetric)
    for name, ident in r.identities.items():
        print(f"  {name}: coefficients {ident['coefficients']} hold={ident['holds']}")
    heads = ["".join(map(str, l)) for l in S.labels]
    print("P (rows idempotents, columns classes)")
    print("      " + " ".join(f"{h:>10}" for h in heads))
    for lab, row in zip(E.idempotent_labels, E.P):
        print(f"{''.join(map(str, lab)):>6}" + " ".join(f"{fmt(z):>10}" for z in row))
    print("multiplicities:", E.multiplicities)
    print(f"max residual: {E.max_residual:.2e}")
    print("round trip:", extract_bgw(S) == W)


if __name__ == "__main__":
    main()

"""Print the order/weight table with a verification status per target.

    python scripts/reproduce_table1.py --max 1000 [--extra-seed W.txt ...]
"""

import argparse

import numpy as np

from wexpand.construct import table1
from wexpand.seeds import ingest


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=1000)
    ap.add_argument("--extra-seed", action="append", default=[])
    args = ap.parse_args()
    extra = {}
    for path in args.extra_seed:
        W = ingest(path, "weighing").payload
        extra[(W.shape[0], int(np.count_nonzero(W[0])))] = W
    rows = table1(args.max, extra_seeds=extra)
    width = max(len(str(r.seed)) for r in rows)
    for r in rows:
        cells = ", ".join(f"({e.order},{e.weight}) {e.status}" for e in r.entries)
        print(f"{str(r.seed):<{width}}  {cells}   [{r.source}]")
    counts = {}
    for r in rows:
        for e in r.entries:
            counts[e.status] = counts.get(e.status, 0) + 1
    print("\n" + ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))


if __name__ == "__main__":
    main()

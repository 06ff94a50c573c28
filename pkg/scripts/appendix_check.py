"""Check the shipped appendix matrices and rebuild W(43,25) from its parts."""

import numpy as np

from wexpand.construct import normalize_weighing
from wexpand.matrix import border, kron, substitute
from wexpand.oa import find_equivalence, oa_build, verify_oa
from wexpand.seeds import catalog, seed_conference
from wexpand.verify import verify_bgw, verify_weighing


def main():
    W43 = catalog("W43_25_appendix").payload
    print("W(43,25) fixture:", verify_weighing(W43).params)

    O = catalog("OA25x6_appendix").payload
    print("25x6 array agreement:", verify_oa(O).agreement)
    hit = find_equivalence(O, oa_build(5, 1))
    print("equivalent to the PG(1,5) array:", hit is not None)

    nf = normalize_weighing(catalog("W8_5").payload)
    X = border(kron(seed_conference(5), nf.R), substitute(O, nf.D))
    print("rebuilt from W(8,5) and the printed array:", verify_weighing(X).params)

    e = catalog("BGW31_appendix")
    print("order-31 BGW:", verify_bgw(e.payload).params)
    print("token encoding:", e.details["encoding"])
    ok = [t for t in e.details["encodings_tried"] if t["ok"]]
    print(f"{len(ok)} of {len(e.details['encodings_tried'])} candidate encodings verify")
    assert np.array_equal(W43 @ W43.T, 25 * np.eye(43, dtype=int))


if __name__ == "__main__":
    main()

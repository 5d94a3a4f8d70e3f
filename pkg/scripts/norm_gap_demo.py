#!/usr/bin/env python3
"""Demonstrate the free-product norm against the sup norm on a join.

Shows the two extremes on single-edge elements: embedded factor vectors
(ratio 1, the embedding is isometric) and the tent function (ratio 2, the
worst case), with the LP certificate and the independent grid oracle side
by side.  Optionally dumps the demo elements as JSON for the CLI.
"""

import argparse
import json
import os
from fractions import Fraction

from latjoin.join_element import JoinElement, embed_factor1, unit_element
from latjoin.norms import brute_force_norm, ell_inf, free_norm_two, sup_norm
from latjoin.plfunc import PLFunction


def describe(name, F, grid):
    cert = free_norm_two(F, ell_inf(F.m), ell_inf(F.n))
    oracle = brute_force_norm(F, grid)
    s = sup_norm(F)
    ratio = float(cert.value) / float(s) if s else float("nan")
    print(f"{name:<18} sup {float(s):6.3f}   free {float(cert.value):6.3f} "
          f"  ratio {ratio:5.3f}   oracle({grid}) {float(oracle):8.5f} "
          f"  witnesses a={tuple(map(float, cert.witness_a))} "
          f"b={tuple(map(float, cert.witness_b))}")
    return cert


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=400)
    ap.add_argument("--dump-dir", help="write the demo elements as JSON here")
    args = ap.parse_args()

    tent = JoinElement.from_cells(
        [[PLFunction((0, Fraction(1, 2), 1), (0, 1, 0))]]
    )
    elements = {
        "embedded(3,-5)": embed_factor1([3, -5], 2),
        "unit": unit_element(2, 2),
        "tent": tent,
    }
    for name, F in elements.items():
        describe(name, F, args.grid)

    if args.dump_dir:
        os.makedirs(args.dump_dir, exist_ok=True)
        for name, F in elements.items():
            safe = name.replace("(", "_").replace(")", "").replace(",", "_")
            path = os.path.join(args.dump_dir, f"{safe}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump(F.to_json_dict(), fh, indent=2)
            print(f"wrote {path}")


if __name__ == "__main__":
    main()

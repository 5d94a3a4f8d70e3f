#!/usr/bin/env python3
"""Tabulate how the p-convexity constant grows with the number of factors.

For n scalar factors, the norm of (sum_i t_i^p)^(1/p) on the positive face
is n while the p-sum of the coordinate norms is n^(1/p); the table shows
the measured ratio against the predicted n^(1-1/p), and the two-factor row
against the sharp constant 2^(1-1/p).
"""

import argparse
import math

from latjoin.norms import pconvexity_ratio


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=4)
    ap.add_argument("--resolution", type=int, default=50)
    ap.add_argument("--p", type=float, nargs="*", default=[1, 1.5, 2, 4])
    ap.add_argument("--with-max-norm", action="store_true",
                    help="include the p = inf column")
    args = ap.parse_args()

    ps = list(args.p) + ([math.inf] if args.with_max_norm else [])
    header = ["n"] + [f"p={p:g}" for p in ps] + ["predicted n^(1-1/p)"]
    print("  ".join(f"{h:>18}" for h in header))
    for n in range(1, args.n_max + 1):
        d = args.resolution if n <= 3 else max(8, args.resolution // 2)
        row = [f"{n:>18}"]
        for p in ps:
            row.append(f"{pconvexity_ratio(n, p, d):>18.10f}")
        preds = ", ".join(
            f"{float(n) ** (1 - (0 if p == math.inf else 1 / p)):.6f}" for p in ps
        )
        print("  ".join(row) + f"  [{preds}]")
    print()
    print("two-factor sharp constants 2^(1-1/p):")
    for p in ps:
        if p == math.inf:
            continue
        got = pconvexity_ratio(2, p, max(args.resolution, 100))
        print(f"  p = {p:<6g} measured {got:.10f}   sharp {2 ** (1 - 1 / p):.10f}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Certify the shipped homology-sphere data and run the suspension ladder.

Steps, each timed:
  1. load the facet list and check it is a closed pseudo-manifold;
  2. verify its integral homology profile equals the 3-sphere's, so the
     data is a homology 3-sphere by this engine's own computation;
  3. suspend twice and verify the 5-sphere profile, the homology-level
     content of the double-suspension phenomenon.
"""

import argparse
import json
import time

from latjoin.homology import (
    HomologyProfile,
    homology,
    load_complex,
    pseudo_manifold_check,
    suspension,
)


def timed(label, fn):
    t0 = time.perf_counter()
    out = fn()
    print(f"[{time.perf_counter() - t0:7.2f}s] {label}")
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("facets", nargs="?", default="data/poincare.facets")
    ap.add_argument("--suspensions", type=int, default=2)
    args = ap.parse_args()

    K = timed(f"loaded {args.facets}", lambda: load_complex(args.facets))
    print(f"           f-vector {K.face_counts()}, "
          f"Euler characteristic {K.euler_characteristic()}")

    ok, msg = timed("pseudo-manifold check", lambda: pseudo_manifold_check(K))
    print(f"           {msg}")
    if not ok:
        raise SystemExit(1)

    prof = timed("integral homology", lambda: homology(K))
    print(f"           profile {json.dumps(prof.to_json_dict())}")
    if prof != HomologyProfile.sphere(K.dim):
        print("           NOT a homology sphere")
        raise SystemExit(1)
    print(f"           certified homology {K.dim}-sphere")

    S = K
    for k in range(1, args.suspensions + 1):
        S = timed(f"suspension #{k}", lambda: suspension(S))
        prof = timed(f"homology of suspension #{k}", lambda: homology(S))
        want = HomologyProfile.sphere(K.dim + k)
        verdict = "==" if prof == want else "!="
        print(f"           profile {json.dumps(prof.to_json_dict())} "
              f"{verdict} sphere({K.dim + k})")
        if prof != want:
            raise SystemExit(1)
    print("all checks passed")


if __name__ == "__main__":
    main()

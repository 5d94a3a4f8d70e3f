"""Command-line interface: norm certificates, homology profiles, property suites.

Exit codes: 0 all checks passed or were skipped, 1 a verification check
failed, 2 usage, parse, or solver errors.  The default arithmetic mode is
exact rationals; set LATJOIN_MODE=float (or pass --mode float) to parse
inputs as floats with a 1e-9 comparison tolerance.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .homology import (
    homology as homology_profile,
    join_complex,
    load_complex,
    pseudo_manifold_check,
    sphere_complex,
    suspension,
)
from .join_element import JoinElement
from .norms import brute_force_norm, ell_p, free_norm_two, sup_norm
from .plfunc import scalar_to_json
from .suites import SuiteConfig, run_suite


def _parse_factor_spec(text: str, dim: int):
    text = text.strip().lower()
    if text in ("linf", "loo", "max"):
        return ell_p(math.inf, dim)
    if text == "l1":
        return ell_p(1, dim)
    if text.startswith("lp:"):
        return ell_p(float(text[3:]), dim)
    raise ValueError(f"unknown factor norm spec {text!r} (use linf, l1, or lp:P)")


def _emit(payload: dict, out_path):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_norm(args) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    F = JoinElement.from_json_dict(data, mode=args.mode)
    specX = _parse_factor_spec(args.factors[0], F.m)
    specY = _parse_factor_spec(args.factors[1], F.n)
    cert = free_norm_two(F, specX, specY)
    payload = {
        "input": args.input,
        "mode": args.mode,
        "shape": [F.m, F.n],
        "factors": list(args.factors),
        "sup_norm": scalar_to_json(sup_norm(F)),
        "certificate": cert.to_json_dict(),
    }
    if args.oracle_grid:
        oracle = brute_force_norm(F, args.oracle_grid)
        payload["oracle"] = {
            "grid": args.oracle_grid,
            "value": scalar_to_json(oracle),
            "gap": float(abs(oracle - cert.value)),
        }
    _emit(payload, args.out)
    return 0


def _cmd_homology(args) -> int:
    if args.sphere is not None:
        K = sphere_complex(args.sphere)
        construction = f"sphere({args.sphere})"
    elif args.join:
        K = join_complex(
            load_complex(args.join[0]), load_complex(args.join[1])
        )
        construction = f"join({args.join[0]}, {args.join[1]})"
    elif args.suspend:
        K = load_complex(args.suspend)
        for _ in range(args.times):
            K = suspension(K)
        construction = f"suspension^{args.times}({args.suspend})"
    elif args.facets:
        K = load_complex(args.facets)
        construction = args.facets
    else:
        raise ValueError("give a facet file or one of --sphere/--join/--suspend")
    prof = homology_profile(K)
    ok, detail = pseudo_manifold_check(K)
    payload = {
        "construction": construction,
        "dimension": K.dim,
        "f_vector": K.face_counts(),
        "euler_characteristic": K.euler_characteristic(),
        "pseudo_manifold": {"closed": ok, "detail": detail},
        "profile": prof.to_json_dict(),
    }
    _emit(payload, args.out)
    return 0


def _cmd_verify(args) -> int:
    fields = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            fields = json.load(fh)
        if not isinstance(fields, dict):
            raise ValueError("config must be a JSON object of SuiteConfig fields")
    if args.seed is not None:
        fields["seed"] = args.seed
    fields.setdefault("mode", args.mode)
    cfg = SuiteConfig(**fields)
    report = run_suite(args.suite, cfg, data_file=args.data)
    _emit(report.to_json_dict(), args.out)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latjoin",
        description="piecewise-linear calculus on joins: norms, homology, property suites",
    )
    parser.add_argument(
        "--mode",
        choices=("rational", "float"),
        default=os.environ.get("LATJOIN_MODE", "rational"),
        help="arithmetic mode for parsing inputs (env LATJOIN_MODE)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_norm = sub.add_parser("norm", help="free-product norm certificate of a join element")
    p_norm.add_argument("input", help="JoinElement JSON file")
    p_norm.add_argument(
        "--factors", nargs=2, default=("linf", "linf"), metavar=("SPECX", "SPECY"),
        help="factor norms: linf, l1, or lp:P (default: linf linf)",
    )
    p_norm.add_argument("--oracle-grid", type=int, default=0,
                        help="also run the grid oracle with this resolution")
    p_norm.add_argument("--out", help="write the JSON report here instead of stdout")
    p_norm.set_defaults(func=_cmd_norm)

    p_hom = sub.add_parser("homology", help="integer homology profile of a complex")
    p_hom.add_argument("facets", nargs="?", help="facet-list file")
    p_hom.add_argument("--sphere", type=int, default=None, metavar="D",
                       help="boundary of the (D+1)-simplex")
    p_hom.add_argument("--join", nargs=2, metavar=("P1", "P2"),
                       help="join of two facet-list files")
    p_hom.add_argument("--suspend", metavar="PATH", help="suspend a facet-list file")
    p_hom.add_argument("--times", type=int, default=1,
                       help="number of suspensions with --suspend")
    p_hom.add_argument("--out", help="write the JSON report here instead of stdout")
    p_hom.set_defaults(func=_cmd_homology)

    p_ver = sub.add_parser("verify", help="run a named property suite")
    p_ver.add_argument("--suite", required=True,
                       help="norms | lattice-axioms | embeddings | relations | homology | pconvexity")
    p_ver.add_argument("--config", help="JSON file of SuiteConfig fields")
    p_ver.add_argument("--seed", type=int, default=None, help="override the seed")
    p_ver.add_argument("--data", default=None,
                       help="facet file for the homology suite (default data/poincare.facets)")
    p_ver.add_argument("--out", help="write the JSON report here instead of stdout")
    p_ver.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, RuntimeError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

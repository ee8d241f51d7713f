"""Command-line front end: counts, enumeration, verification, and tables.

Output is deterministic: identical invocations produce byte-identical
output.  Counts print as decimal strings, exact rationals as num/den,
floats as their shortest round-trip repr.  Exit status 0 on success,
1 when a covering verification fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import asymptotics, combinatorics, covering, lattice_sets
from .bodies import FAMILIES

FORMATS = ("plain", "json", "csv")


def _scalar(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _emit_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _cmd_count(args) -> int:
    if args.set == "m1":
        value = combinatorics.m1_count(args.n, args.k)
    else:
        value = combinatorics.m2_count_closed(args.n, args.k)
    if args.format == "json":
        print(_emit_json({"set": args.set, "n": args.n, "k": args.k, "count": str(value)}))
    elif args.format == "csv":
        print(_emit_csv(["set", "n", "k", "count"], [[args.set, args.n, args.k, value]]))
    else:
        print(value)
    return 0


def _cmd_enumerate(args) -> int:
    spec = lattice_sets.LatticeSetSpec(args.set, args.n, args.k)
    if args.format == "json":
        points = [list(z) for z in lattice_sets.enumerate_points(spec)]
        print(_emit_json({"set": args.set, "n": args.n, "k": args.k, "points": points}))
    else:
        for z in lattice_sets.enumerate_points(spec):
            print(",".join(str(c) for c in z))
    return 0


def _cmd_verify_cover(args) -> int:
    if args.body in ("simplex", "crosspolytope"):
        report = covering.verify_covering_exact(
            args.body, args.n, args.k, args.samples, args.seed,
            corrupt_witness=args.inject_corrupt_witness,
        )
    else:
        report = covering.verify_covering_lp(
            args.body, args.n, args.p, args.k, args.samples, args.seed, args.tol,
            corrupt_witness=args.inject_corrupt_witness,
        )
    if args.format == "json":
        print(_emit_json(report.to_dict()))
    else:
        d = report.to_dict()
        for key in ("kind", "n", "k", "p", "samples", "seed", "witness_failures",
                    "translate_failures", "translates_checked", "success_rate"):
            print(f"{key} = {_scalar(d[key])}")
        print(f"shell_levels = {d['shell_levels']}")
        print("ok" if report.ok else "FAILED")
    return 0 if report.ok else 1


def _cmd_gamma_bound(args) -> int:
    bound = covering.gamma_upper_bound(args.body, args.n, args.p, args.k)
    m, rho = str(bound.m), _scalar(bound.rho)
    if args.format == "json":
        print(_emit_json({"m": m, "rho": rho}))
    elif args.format == "csv":
        print(_emit_csv(["m", "rho"], [[m, rho]]))
    else:
        print(f"m = {m}")
        print(f"rho = {rho}")
    return 0


def _cmd_tnpk(args) -> int:
    seq = covering.t_sequence(args.n, args.p, args.k)
    if args.format == "json":
        payload = {"n": args.n, "p": args.p, "t": [_scalar(t) for t in seq.values]}
        print(_emit_json(payload))
    elif args.format == "csv":
        rows = [[j, _scalar(t)] for j, t in enumerate(seq.values)]
        print(_emit_csv(["k", "t"], rows))
    else:
        for t in seq.values:
            print(_scalar(t))
    return 0


def _cmd_constants(args) -> int:
    consts = asymptotics.growth_constants()
    c_star, peak = asymptotics.printed_variant_max()
    report = {
        "c1": consts.c1,
        "c3": consts.c3,
        "c4": consts.c4,
        "c1_residual": asymptotics.m1_growth(consts.c1) - 2.0,
        "c3_residual": asymptotics.m2_upper_growth(consts.c3) / 2.0 - 1.0,
        "c4_residual": asymptotics.m2_lower_growth(consts.c4) / 2.0 - 1.0,
        "c4_variant": "binomial-entropy",
        "c4_alt_variant_max_at": c_star,
        "c4_alt_variant_max": peak,
        "c4_alt_variant_has_root": False,
    }
    if args.format == "json":
        print(_emit_json(report))
    elif args.format == "csv":
        keys = sorted(report)
        print(_emit_csv(keys, [[_scalar(report[k]) for k in keys]]))
    else:
        for key, value in report.items():
            print(f"{key} = {_scalar(value)}")
    return 0


def _cmd_converge(args) -> int:
    n_list = [int(part) for part in args.n_list.split(",") if part]
    rows = asymptotics.convergence_table(args.body, n_list, args.p)
    if args.format == "json":
        payload = {
            "family": args.body,
            "p": args.p,
            "rows": [
                {"n": r.n, "k": r.k, "ratio": r.ratio, "bound": r.bound} for r in rows
            ],
        }
        print(_emit_json(payload))
    elif args.format == "csv":
        table = [[r.n, r.k, repr(r.ratio), repr(r.bound)] for r in rows]
        print(_emit_csv(["n", "k", "ratio", "bound"], table))
    else:
        for r in rows:
            print(f"n={r.n} k={r.k} ratio={r.ratio!r} bound={r.bound!r}")
    return 0


def _cmd_rz_bound(args) -> int:
    value = asymptotics.rogers_zong_bound(args.n, args.r, args.variant)
    if args.format == "json":
        print(_emit_json({"n": args.n, "r": args.r, "variant": args.variant,
                          "bound": value}))
    else:
        print(repr(value))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hadcover",
        description="Lattice coverings and covering-functional bounds for "
        "simplices, cross-polytopes, and l_p balls.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **help_kw):
        p = sub.add_parser(name, **help_kw)
        p.set_defaults(handler=handler)
        p.add_argument("--format", choices=FORMATS, default="plain")
        return p

    p = add("count", _cmd_count, help="count a translation set")
    p.add_argument("--set", choices=("m1", "m2"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("enumerate", _cmd_enumerate, help="list a translation set, one point per line")
    p.add_argument("--set", choices=("m1", "m2"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("verify-cover", _cmd_verify_cover, help="verify a covering by sampling")
    p.add_argument("--body", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--inject-corrupt-witness", action="store_true",
                   help=argparse.SUPPRESS)

    p = add("gamma-bound", _cmd_gamma_bound, help="covering-functional upper bound")
    p.add_argument("--body", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=float, default=1.0)

    p = add("tnpk", _cmd_tnpk, help="certified l_p scale sequence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--k", type=int, required=True)

    add("constants", _cmd_constants, help="growth constants c1, c3, c4")

    p = add("converge", _cmd_converge, help="threshold/bound table over dimensions")
    p.add_argument("--body", choices=FAMILIES, required=True)
    p.add_argument("--n-list", required=True, help="comma-separated dimensions")
    p.add_argument("--p", type=float, default=1.0)

    p = add("rz-bound", _cmd_rz_bound, help="classical translate-count bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--variant", choices=("remark", "intro"), default="remark")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

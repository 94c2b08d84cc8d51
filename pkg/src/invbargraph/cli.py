"""Command-line interface.

Subcommands: enumerate, stats, dist, totals, map, series, verify.
Exit codes: 0 success, 1 identity violation, 2 usage or guard error.
All numeric output is exact (decimal or num/den rational strings).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from invbargraph import bijections as bj
from invbargraph import gfseries as gf
from invbargraph import invseq, recur, verify
from invbargraph.gfseries import SingularParameterError
from invbargraph.invseq import InversionSequence, Permutation

ENUMERATE_MAX = 12
BRUTE_MAX = 10
TABLE_MAX = 12
VERIFY_NMAX_MAX = 9
VERIFY_ORDER_MAX = 12

_RATIONAL_RE = re.compile(r"[+-]?\d+(/[1-9]\d*)?\Z")


class UsageError(Exception):
    pass


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise UsageError(f"not a rational (use num or num/den): {text!r}")
    return Fraction(text.strip())


def _rational_str(x: Fraction) -> str:
    return str(x)  # Fraction prints num/den, or num when the denominator is 1


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommand handlers -------------------------------------------------------


def _cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= ENUMERATE_MAX:
        raise UsageError(f"n must be in 1..{ENUMERATE_MAX}")
    seqs = invseq.enumerate_sequences(n)
    if args.format == "json":
        text = json.dumps([list(rho.entries) for rho in seqs]) + "\n"
    else:
        text = "".join(rho.to_text() + "\n" for rho in seqs)
    _emit(text, args.out)
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    rho = InversionSequence.from_text(args.sequence)
    record = invseq.stats(rho)
    if args.format == "csv":
        obj = record.to_json_obj()
        text = ",".join(obj) + "\n" + ",".join(str(v) for v in obj.values()) + "\n"
    else:
        text = json.dumps(record.to_json_obj()) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_dist(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be positive")
    if args.engine == "brute" and n > BRUTE_MAX:
        raise UsageError(f"brute enumeration is limited to n <= {BRUTE_MAX}")
    if n > TABLE_MAX:
        raise UsageError(f"tables are limited to n <= {TABLE_MAX}")
    builders = {
        ("area-sper", "brute"): invseq.brute_dist_area_sper,
        ("area-sper", "lemma"): recur.a_table_lemma,
        ("area-sper", "threeterm"): recur.a_table_threeterm,
        ("lda", "brute"): invseq.brute_dist_lda,
        ("lda", "lemma"): recur.b_table_lemma,
        ("lda", "threeterm"): recur.b_table_threeterm,
    }
    table = builders[(args.kind, args.engine)](n)
    text = table.to_json() + "\n" if args.format == "json" else table.to_csv()
    _emit(text, args.out)
    return 0


def _cmd_totals(args: argparse.Namespace) -> int:
    n = args.n
    if n < 1:
        raise UsageError("n must be positive")
    values = {
        "area": str(recur.total_area(n)),
        "sper": str(recur.total_sper(n)),
        "levels": str(recur.total_levels(n)),
        "descents": str(recur.total_descents(n)),
        "ascents": str(recur.total_ascents(n)),
    }
    if args.format == "csv":
        text = ",".join(values) + "\n" + ",".join(values.values()) + "\n"
    else:
        text = json.dumps(values) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_map(args: argparse.Namespace) -> int:
    name, payload = args.map, args.input
    if name == "f-inverse":
        result = bj.f_inverse(bj.CycleForm.from_text(payload)).to_text()
    elif name == "g-inverse":
        result = bj.g_inverse(Permutation.from_text(payload)).to_text()
    else:
        rho = InversionSequence.from_text(payload)
        if name == "complement":
            result = bj.complement(rho).to_text()
        elif name == "area-flip":
            result = bj.area_flip(rho).to_text()
        elif name == "sper-involution":
            image = bj.sper_involution(rho)
            result = "undefined" if image is None else image.to_text()
        elif name == "levels-involution":
            image = bj.levels_involution(rho)
            result = "undefined" if image is None else image.to_text()
        elif name == "f":
            result = bj.f_levels_to_cycles(rho).to_text()
        else:  # g
            result = bj.g_ascents(rho).to_text()
    if args.format == "json":
        text = json.dumps({"map": name, "input": payload, "output": result}) + "\n"
    else:
        text = result + "\n"
    _emit(text, args.out)
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    order = args.order
    if not 1 <= order <= VERIFY_ORDER_MAX:
        raise UsageError(f"order must be in 1..{VERIFY_ORDER_MAX}")

    def need(flag: str) -> Fraction:
        value = getattr(args, flag)
        if value is None:
            raise UsageError(f"series {args.which} requires --{flag}")
        return parse_rational(value)

    if args.which == "A1":
        series = gf.expand_area_ogf(need("p"), order)
    elif args.which == "A":
        series = gf.expand_area_last_ogf(need("p"), need("y"), order)
    elif args.which == "area-gf":
        series = gf.total_area_gf(need("y"), order)
    elif args.which == "tote1":
        series = gf.total_levels_gf(need("y"), order)
    elif args.which == "tote2":
        series = gf.total_descents_gf(need("y"), order)
    else:  # tote3
        series = gf.total_ascents_gf(need("y"), order)
    if args.format == "json":
        text = json.dumps([_rational_str(c) for c in series.coeffs]) + "\n"
    elif args.format == "csv":
        text = "".join(f"{k},{_rational_str(c)}\n" for k, c in enumerate(series.coeffs))
    else:
        text = "".join(f"x^{k}\t{_rational_str(c)}\n" for k, c in enumerate(series.coeffs))
    _emit(text, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if not 3 <= args.nmax <= VERIFY_NMAX_MAX:
        raise UsageError(f"nmax must be in 3..{VERIFY_NMAX_MAX}")
    if not 1 <= args.order <= VERIFY_ORDER_MAX:
        raise UsageError(f"order must be in 1..{VERIFY_ORDER_MAX}")
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    point = None
    if args.p is not None or args.q is not None or args.r is not None:
        if args.p is None or args.q is None or args.r is None:
            raise UsageError("--p, --q and --r must be given together")
        point = (parse_rational(args.p), parse_rational(args.q), parse_rational(args.r))
        if point[1] == 0:
            raise UsageError("q must be nonzero for the kernel identity")
    results, ok = verify.run_verify(
        suites, nmax=args.nmax, order=args.order, seed=args.seed,
        point=point, corrupt=args.corrupt,
    )
    text = json.dumps([r.to_json_obj() for r in results], indent=2) + "\n"
    _emit(text, args.out)
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text",
                        help="output format (default: text)")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write output to a file instead of stdout")

    parser = argparse.ArgumentParser(
        prog="invbargraph",
        description="Exact statistics on bargraphs of inversion sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list all inversion sequences of length n")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("stats", parents=[common],
                       help="bargraph statistics of one sequence")
    p.add_argument("sequence", help="comma-separated entries, e.g. 1,2,1,3,5,3")
    p.set_defaults(handler=_cmd_stats)

    p = sub.add_parser("dist", parents=[common],
                       help="distribution table for a statistic pair")
    p.add_argument("kind", choices=("area-sper", "lda"))
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--engine", choices=("brute", "lemma", "threeterm"),
                   default="lemma")
    p.set_defaults(handler=_cmd_dist)

    p = sub.add_parser("totals", parents=[common],
                       help="closed-form statistic totals over all length-n sequences")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(handler=_cmd_totals)

    p = sub.add_parser("map", parents=[common],
                       help="apply one of the bijections or involutions")
    p.add_argument("map", choices=("complement", "area-flip", "sper-involution",
                                   "levels-involution", "f", "f-inverse",
                                   "g", "g-inverse"))
    p.add_argument("input", help="sequence, permutation, or cycle form")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("series", parents=[common],
                       help="exact coefficients of a closed-form generating function")
    p.add_argument("which", choices=("A", "A1", "area-gf", "tote1", "tote2", "tote3"))
    p.add_argument("--p", default=None)
    p.add_argument("--q", default=None)
    p.add_argument("--r", default=None)
    p.add_argument("--y", default=None)
    p.add_argument("--order", type=int, default=verify.DEFAULT_ORDER)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("verify", parents=[common],
                       help="machine-check the identity suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--nmax", type=int, default=verify.DEFAULT_NMAX)
    p.add_argument("--order", type=int, default=verify.DEFAULT_ORDER)
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--p", default=None, help="kernel-identity point, with --q and --r")
    p.add_argument("--q", default=None)
    p.add_argument("--r", default=None)
    p.add_argument("--corrupt", action="store_true",
                   help="perturb one table cell first (negative control; must fail)")
    p.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (UsageError, SingularParameterError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

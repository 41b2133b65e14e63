"""Command line front end.

Exit codes: 0 success, 1 usage or parse error, 2 invalid quotient,
3 proven-region mismatch in ``scan --strict``, 4 internal disagreement or
failed self-test.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from qdepth import __version__
from qdepth.core import QDepthResult, qdepth_general
from qdepth.monomials import (
    EqualIdealsError,
    IdealParseError,
    MonomialIdeal,
    NotContainedError,
    QuotientPresentation,
    maximal_power_ideal,
    parse_ideal,
    polarize_pair,
)
from qdepth.power import expected_m, qdepth_power_fast
from qdepth.scan import (
    BOUND_VIOLATION,
    COUNTEREXAMPLE,
    PROVEN_MATCH,
    STATUSES,
    report_paths,
    run_scan,
    write_json,
)
from qdepth.selftest import run_selftest
from qdepth.theorems import proven_region

EXIT_USAGE, EXIT_QUOTIENT, EXIT_STRICT, EXIT_INTERNAL = 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    default = argparse.SUPPRESS if suppress else False
    p.add_argument("--json", action="store_true", default=default, help="machine-readable output")
    p.add_argument("--quiet", action="store_true", default=default, help="print only the essentials")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = _Parser(prog="qdepth", description=__doc__.splitlines()[0], parents=[_global_flags(False)])
    parser.add_argument("--version", action="version", version=f"qdepth {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("power", parents=[common], help="qdepth of the t-th power of the maximal ideal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with brute-force enumeration")
    p.add_argument("--oracle-cap", type=int, default=16, help="largest n*t allowed with --oracle")

    p = sub.add_parser("ideal", parents=[common], help="qdepth of outer/inner for ideals given as files")
    p.add_argument("outer", help="ideal file for the outer ideal")
    p.add_argument("--inner", help="ideal file for the inner ideal (default: zero ideal)")
    p.add_argument("--max-vars", type=int, default=22, help="refuse polarized rings larger than this")

    p = sub.add_parser("scan", parents=[common], help="sweep an (n, t) grid")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--out", default="qdepth_scan", help="report path stem; writes STEM.csv and STEM.json")
    p.add_argument("--strict", action="store_true", help="exit 3 if a proven-region cell mismatches")
    p.add_argument("--timing", action="store_true", help="include wall time in the JSON report")

    p = sub.add_parser("selftest", parents=[common], help="run the built-in verification suites")
    p.add_argument("depth", nargs="?", choices=("quick", "full"), default="quick")
    return parser


def _print_result(res: QDepthResult, quiet: bool) -> None:
    if quiet:
        print(res.qdepth)
        return
    print(f"qdepth: {res.qdepth}")
    print(f"polarized qdepth: {res.polarized_qdepth} in {res.nvars} variables ({res.added_vars} added)")
    print(f"certificate (beta row at d={res.polarized_qdepth}): {' '.join(map(str, res.certificate))}")
    if res.witness:
        d, k, b = res.witness
        print(f"witness: beta_{k}^{d} = {b} < 0")
    else:
        print("witness: none (every d is feasible)")


def cmd_power(args) -> int:
    if args.n < 2 or args.t < 1:
        raise UsageError(f"need n >= 2 and t >= 1, got n={args.n}, t={args.t}")
    if args.oracle and args.n * args.t > args.oracle_cap:
        raise UsageError(f"--oracle needs n*t <= {args.oracle_cap}, got {args.n * args.t}")
    res = qdepth_power_fast(args.n, args.t)
    m = expected_m(args.n, args.t)
    agree = None
    if args.oracle:
        oracle = qdepth_general(MonomialIdeal.zero(args.n), maximal_power_ideal(args.n, args.t))
        agree = oracle == res
    if args.json:
        out = {"n": args.n, "t": args.t, "m": m, "proven_region": proven_region(args.n, args.t), **res.to_dict()}
        if agree is not None:
            out["oracle_agrees"] = agree
        print(json.dumps(out, indent=2))
    else:
        _print_result(res, args.quiet)
        if not args.quiet:
            print(f"ceil(n/(t+1)) = {m}")
            if agree is not None:
                print(f"oracle: {'agrees' if agree else 'DISAGREES'}")
    if agree is False:
        print("error: oracle and closed-form results disagree", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


def _read_ideal(path: str) -> MonomialIdeal:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return parse_ideal(text)
    except IdealParseError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def cmd_ideal(args) -> int:
    outer = _read_ideal(args.outer)
    inner = _read_ideal(args.inner) if args.inner else MonomialIdeal.zero(outer.nvars)
    if inner.nvars != outer.nvars:
        raise UsageError(f"inner has {inner.nvars} variables, outer has {outer.nvars}")
    try:
        QuotientPresentation(inner, outer)
    except (NotContainedError, EqualIdealsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_QUOTIENT
    total = outer.nvars + polarize_pair(inner, outer)[2]
    if total > args.max_vars:
        raise UsageError(f"polarized ring has {total} variables, above --max-vars {args.max_vars}")
    res = qdepth_general(inner, outer)
    if args.json:
        print(json.dumps(res.to_dict(), indent=2))
    else:
        _print_result(res, args.quiet)
    return 0


def cmd_scan(args) -> int:
    if args.n_max < 2 or args.t_max < 1:
        raise UsageError("need --n-max >= 2 and --t-max >= 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    csv_path, json_path = report_paths(args.out)
    start = time.perf_counter()
    try:
        report, cells = run_scan(args.n_max, args.t_max, args.out, args.jobs)
        elapsed = time.perf_counter() - start
        if args.timing:
            report["timing"] = {"seconds": round(elapsed, 3)}
        write_json(json_path, report)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return EXIT_USAGE

    counts = report["summary"]["status_counts"]
    bad_proven = [c for c in cells if proven_region(c.n, c.t) and c.status != PROVEN_MATCH]
    if args.json:
        print(json.dumps({"csv": str(csv_path), "json": str(json_path), "seconds": round(elapsed, 3), **report["summary"]}, indent=2))
    elif not args.quiet:
        print(f"scanned {len(cells)} cells (n <= {args.n_max}, t <= {args.t_max}) in {elapsed:.1f}s")
        for s in STATUSES:
            print(f"  {s}: {counts[s]}")
        print(f"reports: {csv_path}, {json_path}")
    for c in cells:
        if c.status in (COUNTEREXAMPLE, BOUND_VIOLATION):
            print(f"{c.status}: n={c.n} t={c.t} qdepth={c.qdepth_computed} m={c.m_expected}", file=sys.stderr)
    if args.strict and bad_proven:
        print(f"error: {len(bad_proven)} proven-region cells do not match", file=sys.stderr)
        return EXIT_STRICT
    return 0


def cmd_selftest(args) -> int:
    echo = (lambda *_: None) if args.quiet else print
    ok = run_selftest(args.depth, echo=echo)
    if args.json:
        print(json.dumps({"depth": args.depth, "passed": ok}))
    elif args.quiet:
        print("pass" if ok else "FAIL")
    return 0 if ok else EXIT_INTERNAL


COMMANDS = {"power": cmd_power, "ideal": cmd_ideal, "scan": cmd_scan, "selftest": cmd_selftest}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface: residual tables, factoring, verification, benchmarks.

Exit codes: 0 success (verify: all passed), 1 verification failures
detected, 2 invalid arguments or domain errors.  Data goes to stdout,
diagnostics to stderr, numbers are decimal in and out.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import NamedTuple

from . import bench as _bench
from . import verify as _verify
from .core import (
    DomainError,
    Side,
    init_anchor,
    rprime,
    x_quotient,
    x_residual,
    y_quotient,
    y_residual,
)
from .factor import scan_divisor_pairs, smallest_nontrivial_divisor

__all__ = ["ResidualRow", "build_parser", "run_cli", "main"]

# full Y walks are O(n) rows; refuse accidental floods unless --to bounds it
Y_FULL_RANGE_LIMIT = 10**6


class ResidualRow(NamedTuple):
    """One emitted walk position; matches the core generators exactly."""

    k: int
    divisor: int
    residual: int
    quotient: int
    rprime: int


def _iter_rows(anchor, side, lo, hi):
    for k in range(lo, hi + 1):
        if side is Side.X:
            div, res = x_residual(anchor, k)
            quo = x_quotient(anchor, k)
        else:
            div, res = y_residual(anchor, k)
            quo = y_quotient(anchor, k)
        yield ResidualRow(k, div, res, quo, rprime(anchor, k))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="divwalk",
        description=(
            "Integer residual and quotient generators over square-root "
            "anchored divisor walks: stream residuals, factor, verify, bench."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("residuals", help="stream k/divisor/residual/quotient/rprime rows")
    r.add_argument("--n", type=int, required=True, help="dividend (>= 1)")
    r.add_argument("--side", choices=("x", "y"), required=True)
    r.add_argument("--from", dest="k_from", type=int, metavar="K", help="first k (clamped)")
    r.add_argument("--to", dest="k_to", type=int, metavar="K", help="last k (clamped)")
    r.add_argument("--format", choices=("table", "csv", "json"), default="table")

    f = sub.add_parser("factor", help="divisor pairs from the X-walk zero scan")
    f.add_argument("--n", type=int, required=True, help="dividend (>= 1)")
    f.add_argument(
        "--first-only",
        action="store_true",
        help="print only the smallest nontrivial divisor (needs n >= 2)",
    )

    v = sub.add_parser("verify", help="cross-check the generators against native division")
    v.add_argument("--min", dest="n_min", type=int, required=True)
    v.add_argument("--max", dest="n_max", type=int, required=True)
    v.add_argument("--mode", choices=("closed", "recurrence", "both"), default="both")
    v.add_argument("--format", choices=("text", "json"), default="text")

    b = sub.add_parser("bench", help="time generator streaming against naive division")
    b.add_argument("--n", type=int, required=True, help="dividend (>= 2)")
    b.add_argument("--side", choices=("x", "y"), default="x")
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--format", choices=("csv",), default="csv")
    return p


def _table_widths(rows_probe, header):
    # widths from the extreme rows: every column is monotone along the walk,
    # so the first and last row bound the digit counts
    widths = [len(h) for h in header]
    for row in rows_probe:
        for i, v in enumerate(row):
            widths[i] = max(widths[i], len(str(v)))
    return widths


def _emit_table(anchor, side, lo, hi, out):
    header = ResidualRow._fields
    probe = [next(_iter_rows(anchor, side, lo, lo)), next(_iter_rows(anchor, side, hi, hi))]
    widths = _table_widths(probe, header)
    out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)) + "\n")
    for row in _iter_rows(anchor, side, lo, hi):
        out.write("  ".join(str(v).rjust(w) for v, w in zip(row, widths)) + "\n")


def _emit_csv(anchor, side, lo, hi, out):
    out.write(",".join(ResidualRow._fields) + "\n")
    for row in _iter_rows(anchor, side, lo, hi):
        out.write(",".join(str(v) for v in row) + "\n")


def _emit_json(anchor, side, lo, hi, out):
    out.write(f'{{"n": {anchor.n}, "side": "{side}", "rows": [')
    for i, row in enumerate(_iter_rows(anchor, side, lo, hi)):
        out.write(", " if i else "")
        out.write(json.dumps(row._asdict()))
    out.write("]}\n")


def _cmd_residuals(args) -> int:
    anchor = init_anchor(args.n)
    side = Side(args.side)
    k_max = anchor.x0 - 1 if side is Side.X else args.n - anchor.y0
    if side is Side.Y and args.k_to is None and args.n > Y_FULL_RANGE_LIMIT:
        raise DomainError(
            f"full Y walk of n={args.n} is {k_max + 1} rows; pass --to to bound it"
        )
    lo = 0 if args.k_from is None else max(args.k_from, 0)
    hi = k_max if args.k_to is None else min(args.k_to, k_max)
    if lo > hi:
        raise DomainError(f"no in-domain k requested; this walk has k in [0, {k_max}]")
    emit = {"table": _emit_table, "csv": _emit_csv, "json": _emit_json}[args.format]
    emit(anchor, side, lo, hi, sys.stdout)
    return 0


def _cmd_factor(args) -> int:
    if args.first_only:
        d = smallest_nontrivial_divisor(args.n)
        print("prime" if d is None else d)
        return 0
    pairs = scan_divisor_pairs(init_anchor(args.n))
    if args.n >= 2 and all(p.small == 1 for p in pairs):
        print("prime")
    else:
        for p in pairs:
            print(f"{p.small} x {p.large}")
    return 0


def _cmd_verify(args) -> int:
    summary = _verify.verify_range(args.n_min, args.n_max, _verify.Mode(args.mode))
    if args.format == "json":
        print(summary.to_json())
    else:
        print(
            f"verify n in [{summary.n_min}, {summary.n_max}] mode={args.mode}: "
            f"{summary.total_checks} checks, {len(summary.failures)} failures"
        )
        for rep in summary.failures:
            ff = rep.first_failure
            print(
                f"FAIL n={rep.n}: side={ff.side} k={ff.k} property={ff.prop} "
                f"expected={ff.expected} actual={ff.actual}"
            )
    return 0 if summary.passed else 1


def _cmd_bench(args) -> int:
    side = Side(args.side)
    if side is Side.Y and args.n > Y_FULL_RANGE_LIMIT:
        raise DomainError(
            f"Y-side bench walks n - y0 + 1 steps; n={args.n} exceeds {Y_FULL_RANGE_LIMIT}"
        )
    reports = _bench.bench_compare(args.n, side, args.reps)
    _bench.write_csv(reports, sys.stdout)
    return 0


_COMMANDS = {
    "residuals": _cmd_residuals,
    "factor": _cmd_factor,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def run_cli(argv=None) -> int:
    """Parse argv and dispatch; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage and 0 on --help; surface as a code
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))

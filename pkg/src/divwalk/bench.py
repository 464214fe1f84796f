"""Throughput harness: generator streaming vs naive division.

GeneratorStream walks a divisor interval keeping rprime by the
addition-only second-difference update with a single mod per step;
NaiveDivision computes n mod divisor afresh each step.  Both produce
every reduced residual over the full in-domain range and must agree on
the residual checksum, or the run is aborted: correctness precedes speed.

Timing wraps each whole loop in a monotonic nanosecond clock; per-step
numbers are derived by plain division and emitted without smoothing.
One untimed warmup pass precedes measurement so JIT compilation and
cache effects stay out of the figures.  No timing claims are made or
asserted anywhere; the harness is an instrument.
"""

from __future__ import annotations

import csv
import enum
import io
import time
from dataclasses import dataclass

from . import kernels
from .core import DomainError, Side, init_anchor

__all__ = [
    "Method",
    "BenchReport",
    "ChecksumMismatchError",
    "CSV_HEADER",
    "bench_compare",
    "write_csv",
    "to_csv",
]


class Method(enum.Enum):
    GENERATOR_STREAM = "generator_stream"
    NAIVE_DIVISION = "naive_division"

    def __str__(self) -> str:
        return self.value


class ChecksumMismatchError(RuntimeError):
    """The two methods disagreed on the residual sum; timings are void."""


CSV_HEADER = ("n", "side", "method", "steps", "wall_time_ns", "ns_per_step", "checksum")


@dataclass(frozen=True)
class BenchReport:
    """One timed loop: steps residuals produced, checksummed for cross-checking."""

    n: int
    side: Side
    method: Method
    steps: int
    wall_time_ns: int
    ns_per_step: float
    checksum: int

    def csv_row(self) -> tuple:
        return (
            self.n,
            str(self.side),
            str(self.method),
            self.steps,
            self.wall_time_ns,
            self.ns_per_step,
            self.checksum,
        )


def bench_compare(n: int, side: Side = Side.X, repetitions: int = 1) -> list[BenchReport]:
    """Time both methods over the full k range of one walk side.

    Returns one report per method per repetition, generator first,
    in repetition order.  Raises ChecksumMismatchError if the methods
    ever disagree on the sum of residuals.
    """
    if n < 2:
        raise DomainError(f"bench needs n >= 2, got {n}")
    if repetitions < 1:
        raise DomainError(f"repetitions must be >= 1, got {repetitions}")
    anchor = init_anchor(n)
    k_hi = anchor.x0 - 1 if side is Side.X else n - anchor.y0
    steps = k_hi + 1
    warm = min(k_hi, 64)
    kernels.stream_checksum(anchor, side, 0, warm)
    kernels.naive_checksum(anchor, side, 0, warm)
    reports = []
    for _ in range(repetitions):
        t0 = time.perf_counter_ns()
        gen_sum = kernels.stream_checksum(anchor, side, 0, k_hi)
        gen_ns = time.perf_counter_ns() - t0
        t0 = time.perf_counter_ns()
        naive_sum = kernels.naive_checksum(anchor, side, 0, k_hi)
        naive_ns = time.perf_counter_ns() - t0
        if gen_sum != naive_sum:
            raise ChecksumMismatchError(
                f"n={n} side={side}: generator checksum {gen_sum} != naive {naive_sum}"
            )
        reports.append(
            BenchReport(n, side, Method.GENERATOR_STREAM, steps, gen_ns, gen_ns / steps, gen_sum)
        )
        reports.append(
            BenchReport(n, side, Method.NAIVE_DIVISION, steps, naive_ns, naive_ns / steps, naive_sum)
        )
    return reports


def write_csv(reports, stream) -> None:
    """Emit reports as CSV with the exact CSV_HEADER column order."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for report in reports:
        writer.writerow(report.csv_row())


def to_csv(reports) -> str:
    buf = io.StringIO()
    write_csv(reports, buf)
    return buf.getvalue()

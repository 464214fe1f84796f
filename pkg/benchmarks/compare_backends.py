#!/usr/bin/env python3
"""Compare the bulk-kernel backends on identical sweeps.

Runs the X-side verification screen, generator streaming and naive
division summing under each backend, asserts their results agree, and
prints per-backend timings.  Usage:

    python benchmarks/compare_backends.py [--n N] [--backends a,b,c] [--reps R]
"""

from __future__ import annotations

import argparse
import time

from divwalk import Side, init_anchor
from divwalk import kernels


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10**10, help="dividend to sweep")
    ap.add_argument("--backends", default="numba,numpy,python")
    ap.add_argument("--reps", type=int, default=3, help="repetitions, best-of")
    args = ap.parse_args()

    anchor = init_anchor(args.n)
    k_hi = anchor.x0 - 1
    steps = k_hi + 1
    jobs = {
        "check_range[X,both]": lambda: kernels.check_range(
            anchor, Side.X, 0, k_hi, kernels.MODE_BOTH
        ),
        "stream_checksum[X]": lambda: kernels.stream_checksum(anchor, Side.X, 0, k_hi),
        "naive_checksum[X]": lambda: kernels.naive_checksum(anchor, Side.X, 0, k_hi),
    }

    print(f"n={args.n}  x0={anchor.x0}  steps={steps}")
    print(f"{'backend':<8}  {'job':<20}  {'best ms':>10}  {'ns/step':>9}")
    expected: dict[str, object] = {}
    for backend in args.backends.split(","):
        kernels.use_backend(backend.strip())
        for name, job in jobs.items():
            job()  # warm JIT and caches outside the clock
            best = None
            out = None
            for _ in range(args.reps):
                t0 = time.perf_counter_ns()
                out = job()
                dt = time.perf_counter_ns() - t0
                best = dt if best is None else min(best, dt)
            if name in expected:
                assert out == expected[name], f"{backend} disagrees on {name}"
            else:
                expected[name] = out
            print(f"{backend:<8}  {name:<20}  {best / 1e6:>10.3f}  {best / steps:>9.2f}")
    kernels.use_backend("auto")


if __name__ == "__main__":
    main()

"""Bulk kernels: divisor scans, verification sweeps, residual streaming.

Three interchangeable backends provide the same chunk-level functions:

* numba  - compiled sequential loops (default when numba is importable)
* numpy  - vectorized ndarray arithmetic
* python - plain-int reference loops, exact at any magnitude

Select one with the DIVWALK_BACKEND environment variable (auto, numba,
numpy, python) before import, or use_backend() at runtime.  The numba and
numpy backends compute in int64.  Every dispatcher below derives an exact
worst-case bound on its intermediates with Python ints first and silently
reroutes the call to the python backend when int64 could overflow, so
results are exact regardless of the selected backend.

Work is fed to backends in chunks of at most CHUNK steps, which caps
ndarray memory and lets failing sweeps stop early.
"""

from __future__ import annotations

import importlib
import os
from typing import NamedTuple

from ..core import Anchor, Side
from . import python_impl as _python

__all__ = [
    "ENV_VAR",
    "BACKEND_CHOICES",
    "INT64_MAX",
    "CHUNK",
    "MODE_CLOSED",
    "MODE_RECURRENCE",
    "MODE_BOTH",
    "use_backend",
    "backend_name",
    "CheckOutcome",
    "x_zero_ks",
    "x_first_zero_desc",
    "check_range",
    "stream_checksum",
    "naive_checksum",
]

ENV_VAR = "DIVWALK_BACKEND"
BACKEND_CHOICES = ("auto", "numba", "numpy", "python")

INT64_MAX = 2**63 - 1
CHUNK = 1 << 18

MODE_CLOSED = _python.MODE_CLOSED
MODE_RECURRENCE = _python.MODE_RECURRENCE
MODE_BOTH = _python.MODE_BOTH

_active = _python
_active_name = "python"


def use_backend(name: str) -> str:
    """Select the bulk backend; returns the resolved name.

    "auto" prefers numba, then numpy, then python, skipping backends whose
    import fails.  Asking for numba or numpy explicitly raises ImportError
    when the package is missing.  Per-call overflow fallback to the python
    backend stays active whatever is selected here.
    """
    global _active, _active_name
    if name not in BACKEND_CHOICES:
        raise ValueError(
            f"backend must be one of {', '.join(BACKEND_CHOICES)}, got {name!r}"
        )
    if name == "auto":
        for candidate in ("numba", "numpy", "python"):
            try:
                return use_backend(candidate)
            except ImportError:
                continue
        raise AssertionError("unreachable: python backend always imports")
    if name == "python":
        mod = _python
    else:
        mod = importlib.import_module(f".{name}_impl", __package__)
    _active, _active_name = mod, name
    return name


def backend_name() -> str:
    """Name of the currently selected backend."""
    return _active_name


def _impl(fits_int64: bool):
    return _active if fits_int64 else _python


def _rp(anchor: Anchor, k: int) -> int:
    return anchor.r0 + k * anchor.delta + k * k


def _residual_sum_bound(d_lo: int, d_hi: int) -> int:
    # each residual is < its divisor, so sum over the divisor interval
    # is bounded by the arithmetic series of (divisor - 1)
    cnt = d_hi - d_lo + 1
    return cnt * (d_lo + d_hi - 2) // 2


def x_zero_ks(anchor: Anchor, k_lo: int, k_hi: int) -> list[int]:
    """All k in [k_lo, k_hi] whose X divisor x0 - k divides n, ascending.

    On the X side every intermediate is bounded by n, so the fast path
    only needs n itself to fit int64.
    """
    if k_hi < k_lo:
        return []
    impl = _impl(anchor.n <= INT64_MAX)
    ks: list[int] = []
    pos = k_lo
    while pos <= k_hi:
        end = min(pos + CHUNK - 1, k_hi)
        ks.extend(
            int(k)
            for k in impl.x_zero_chunk(anchor.x0, anchor.r0, anchor.delta, pos, end)
        )
        pos = end + 1
    return ks


def x_first_zero_desc(anchor: Anchor, k_hi: int, k_lo: int = 0) -> int | None:
    """First k scanning k_hi down to k_lo whose X divisor divides n, else None."""
    if k_hi < k_lo:
        return None
    impl = _impl(anchor.n <= INT64_MAX)
    hi = k_hi
    while hi >= k_lo:
        lo = max(k_lo, hi - CHUNK + 1)
        k = impl.x_first_zero_desc_chunk(anchor.x0, anchor.r0, anchor.delta, hi, lo)
        if k >= 0:
            return int(k)
        hi = lo - 1
    return None


class CheckOutcome(NamedTuple):
    """Screening result for one k window.

    bad_k is the first failing k (-1 when the window is clean) and bad_lo
    the start of the chunk it fell in, so a caller can replay exactly
    [bad_lo, bad_k] with exact arithmetic to name the broken property.
    clean_ks and clean_fired count fully-clean chunks only: k positions
    checked and divisor hits among them (each hit adds a witness check).
    """

    bad_k: int
    bad_lo: int
    clean_ks: int
    clean_fired: int


_CLEAN = CheckOutcome(-1, -1, 0, 0)


def check_range(anchor: Anchor, side: Side, k_lo: int, k_hi: int, mode: int) -> CheckOutcome:
    """Screen every k in [k_lo, k_hi] on one walk side.

    mode is MODE_CLOSED, MODE_RECURRENCE or MODE_BOTH.  Per k the screen
    evaluates the route's identities against native division, the
    second-difference increment, the divisor predicate, and the witness
    identity on hits; recurrence modes replay the walk seeded one step
    before each chunk so every step relation is covered.  Stops at the
    first failing chunk.

    X-side intermediates are bounded by n; Y-side ones by rprime(k_hi+1)
    (the second-difference check looks one step past the window end).
    """
    if k_hi < k_lo:
        return _CLEAN
    n, x0, y0, r0, delta = anchor
    if side is Side.X:
        fits = n <= INT64_MAX
        fn = _impl(fits).x_check_chunk
    else:
        fits = n <= INT64_MAX and _rp(anchor, k_hi + 1) <= INT64_MAX
        fn = _impl(fits).y_check_chunk
    ks = fired = 0
    pos = k_lo
    while pos <= k_hi:
        end = min(pos + CHUNK - 1, k_hi)
        bad_k, f = fn(n, x0, y0, r0, delta, pos, end, mode, pos > 0)
        if bad_k >= 0:
            return CheckOutcome(int(bad_k), pos, ks, fired)
        ks += end - pos + 1
        fired += int(f)
        pos = end + 1
    return CheckOutcome(-1, -1, ks, fired)


def stream_checksum(anchor: Anchor, side: Side, k_lo: int, k_hi: int) -> int:
    """Sum of reduced residuals over [k_lo, k_hi] via incremental rprime.

    rprime is maintained by the addition-only second-difference update and
    reduced once per step; no step divides n.
    """
    if k_hi < k_lo:
        return 0
    if side is Side.X:
        d_lo, d_hi = anchor.x0 - k_hi, anchor.x0 - k_lo
        fits = anchor.n <= INT64_MAX and _residual_sum_bound(d_lo, d_hi) <= INT64_MAX
        impl = _impl(fits)
        run = lambda lo, hi: impl.x_stream_chunk(anchor.x0, anchor.r0, anchor.delta, lo, hi)
    else:
        d_lo, d_hi = anchor.y0 + k_lo, anchor.y0 + k_hi
        fits = (
            _rp(anchor, k_hi + 1) <= INT64_MAX
            and _residual_sum_bound(d_lo, d_hi) <= INT64_MAX
        )
        impl = _impl(fits)
        run = lambda lo, hi: impl.y_stream_chunk(anchor.y0, anchor.r0, anchor.delta, lo, hi)
    total = 0
    pos = k_lo
    while pos <= k_hi:
        end = min(pos + CHUNK - 1, k_hi)
        total += int(run(pos, end))
        pos = end + 1
    return total


def naive_checksum(anchor: Anchor, side: Side, k_lo: int, k_hi: int) -> int:
    """Sum of n mod divisor over [k_lo, k_hi], one hardware division per step."""
    if k_hi < k_lo:
        return 0
    n = anchor.n
    if side is Side.X:
        d_lo, d_hi = anchor.x0 - k_hi, anchor.x0 - k_lo
        base = anchor.x0
        fn_name = "x_naive_chunk"
    else:
        d_lo, d_hi = anchor.y0 + k_lo, anchor.y0 + k_hi
        base = anchor.y0
        fn_name = "y_naive_chunk"
    fits = n <= INT64_MAX and _residual_sum_bound(d_lo, d_hi) <= INT64_MAX
    fn = getattr(_impl(fits), fn_name)
    total = 0
    pos = k_lo
    while pos <= k_hi:
        end = min(pos + CHUNK - 1, k_hi)
        total += int(fn(n, base, pos, end))
        pos = end + 1
    return total


use_backend(os.environ.get(ENV_VAR, "auto"))

"""Cross-validation of every generator identity against native division.

The oracle here is deliberately dumb: divmod on Python ints.  verify_n
sweeps both walks of one dividend and checks, at every k it visits,

* closed-form residual and quotient against the oracle
* the second-difference increment, measured against the signed product
  form n - (x0-k-1)(y0+k+1) one step ahead (not against the generator's
  own polynomial, which would be circular)
* the divisor predicate against oracle divisibility
* the witness identity a*x0 = rprime + a*k (X) or a*y0 = rprime - a*k (Y)
  whenever the predicate fires, with a = rprime div divisor
* in recurrence modes, the stepwise walk against the oracle and (in Both)
  against the closed form, including the floored-division steps where the
  Y-side operand goes negative

Checks per k: 4 in Closed mode, 4 in Recurrence mode, 9 in Both, plus one
witness check per divisor hit per route that evaluates hits.  Failures
are returned as data with the first one localized exactly, never raised.

X sweeps are exhaustive up to x_exhaustive_max and Y sweeps up to
y_exhaustive_max; past a cap, that side is spot-checked on deterministic
log-spaced windows that always include both walk ends and, on the Y side,
the first k with x0 - k < 0 (the signed-quotient regime).  Bulk screening
runs on the selected kernels backend; any flagged window is replayed with
exact scalar arithmetic to name the broken property.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from . import kernels
from .core import (
    Anchor,
    DomainError,
    Side,
    WalkState,
    init_anchor,
    rprime,
    walk_step,
    x_quotient,
    x_residual,
    y_quotient,
    y_residual,
)

__all__ = [
    "Mode",
    "CheckFailure",
    "VerifyReport",
    "RangeSummary",
    "oracle_divmod",
    "verify_n",
    "verify_range",
]


class Mode(enum.Enum):
    """Which route to check: the closed form, the recurrence, or both."""

    CLOSED = "closed"
    RECURRENCE = "recurrence"
    BOTH = "both"

    def __str__(self) -> str:
        return self.value


_KERNEL_MODE = {
    Mode.CLOSED: kernels.MODE_CLOSED,
    Mode.RECURRENCE: kernels.MODE_RECURRENCE,
    Mode.BOTH: kernels.MODE_BOTH,
}
_BASE_CHECKS = {Mode.CLOSED: 4, Mode.RECURRENCE: 4, Mode.BOTH: 9}


@dataclass(frozen=True)
class CheckFailure:
    """One failed identity: property prop at step k came out as actual, not expected."""

    side: Side
    k: int
    prop: str
    expected: int | bool
    actual: int | bool

    def to_dict(self) -> dict:
        return {
            "side": str(self.side),
            "k": self.k,
            "property": self.prop,
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class VerifyReport:
    """Outcome for one dividend; checks_run counts (k, property) pairs evaluated."""

    n: int
    checks_run: int
    passed: bool
    first_failure: CheckFailure | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "checks_run": self.checks_run,
            "passed": self.passed,
            "first_failure": (
                self.first_failure.to_dict() if self.first_failure else None
            ),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True)
class RangeSummary:
    """Aggregate over [n_min, n_max]; failures holds the non-passing reports."""

    n_min: int
    n_max: int
    total_checks: int
    failures: tuple[VerifyReport, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "total_checks": self.total_checks,
            "failures": [f.to_dict() for f in self.failures],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def oracle_divmod(n: int, d: int) -> tuple[int, int]:
    """Ground truth (n div d, n mod d) from the platform divide.

    Knows nothing about anchors, walks or rprime; every generator claim
    is measured against this.
    """
    if d < 1:
        raise DomainError(f"oracle_divmod needs divisor >= 1, got {d}")
    if n < 0:
        raise DomainError(f"oracle_divmod needs dividend >= 0, got {n}")
    return divmod(n, d)


def _closed_state(anchor: Anchor, side: Side, k: int) -> WalkState:
    if side is Side.X:
        div, res = x_residual(anchor, k)
        quo = x_quotient(anchor, k)
    else:
        div, res = y_residual(anchor, k)
        quo = y_quotient(anchor, k)
    return WalkState(side, k, div, quo, res, rprime(anchor, k), anchor.delta)


def _k_checks(anchor, side, mode, k, state):
    """Ordered (name, expected, actual) triples for one k; exact scalar math."""
    n, x0, y0, _, delta = anchor
    div = x0 - k if side is Side.X else y0 + k
    o_q, o_r = oracle_divmod(n, div)
    rp = rprime(anchor, k)
    c_r = rp % div
    c_q = (y0 + k if side is Side.X else x0 - k) + rp // div
    out = []
    if mode is not Mode.RECURRENCE:
        rp_ahead = n - (x0 - k - 1) * (y0 + k + 1)
        out.append(("closed_residual", o_r, c_r))
        out.append(("closed_quotient", o_q, c_q))
        out.append(("second_difference", 2 * k + 1 + delta, rp_ahead - rp))
        out.append(("divisor_predicate", o_r == 0, c_r == 0))
        if c_r == 0:
            a = rp // div
            if side is Side.X:
                out.append(("divisor_witness", rp + a * k, a * x0))
            else:
                out.append(("divisor_witness", rp - a * k, a * y0))
    if mode is not Mode.CLOSED:
        out.append(("walk_residual", o_r, state.residual))
        out.append(("walk_quotient", o_q, state.quotient))
        if mode is Mode.BOTH:
            out.append(("walk_agree_residual", c_r, state.residual))
            out.append(("walk_agree_quotient", c_q, state.quotient))
            out.append(("walk_agree_rprime", rp, state.rprime))
        else:
            out.append(("walk_rprime_consistency", state.residual, state.rprime % div))
            out.append(("walk_predicate", o_r == 0, state.residual == 0))
            if state.residual == 0:
                a = state.rprime // div
                if side is Side.X:
                    out.append(("walk_witness", state.rprime + a * k, a * x0))
                else:
                    out.append(("walk_witness", state.rprime - a * k, a * y0))
    return out


def _localize_window(anchor, side, mode, lo, hi):
    """Replay [lo, hi] exactly, counting checks until the first failure.

    Seeded one step back like the kernels, so step relations across the
    window edge are reproduced.  Returns (checks_counted, failure or None).
    """
    checks = 0
    seed_k = lo - 1 if lo > 0 else lo
    state = None if mode is Mode.CLOSED else _closed_state(anchor, side, seed_k)
    for k in range(lo, hi + 1):
        if state is not None and k > seed_k:
            state = walk_step(state)
        for name, expected, actual in _k_checks(anchor, side, mode, k, state):
            checks += 1
            if expected != actual:
                return checks, CheckFailure(side, k, name, expected, actual)
    return checks, None


def _sample_windows(k_max, samples, window, must_include=()):
    """Deterministic log-spaced spot-check windows over [0, k_max], merged."""
    span = window - 1
    if k_max + 1 <= 2 * samples * window:
        return ((0, k_max),)
    starts = {0, k_max - span}
    for v in must_include:
        starts.add(max(0, min(int(v), k_max - span)))
    for i in range(1, samples - 1):
        a = int(round(k_max ** (i / (samples - 1))))
        starts.add(max(0, min(a, k_max - span)))
    merged: list[list[int]] = []
    for s in sorted(starts):
        if merged and s <= merged[-1][1] + 1:
            merged[-1][1] = max(merged[-1][1], s + span)
        else:
            merged.append([s, s + span])
    return tuple((lo, min(hi, k_max)) for lo, hi in merged)


def verify_n(
    n: int,
    mode: Mode = Mode.BOTH,
    *,
    x_exhaustive_max: int = 20000,
    y_exhaustive_max: int = 2000,
    samples: int = 48,
    window: int = 8,
) -> VerifyReport:
    """Check every identity of both walks of n against the division oracle.

    Exhaustive over all in-domain k while n is within the side's cap;
    above it, spot-checks `samples` log-spaced windows of `window`
    consecutive k.  Returns a report; failures are data, not exceptions,
    with the first one localized to (side, k, property, expected, actual).
    """
    anchor = init_anchor(n)
    kmode = _KERNEL_MODE[mode]
    base = _BASE_CHECKS[mode]
    samples = max(2, samples)
    window = max(2, window)
    total = 0
    for side in (Side.X, Side.Y):
        if side is Side.X:
            k_max, cap, must = anchor.x0 - 1, x_exhaustive_max, ()
        else:
            k_max = n - anchor.y0
            cap = y_exhaustive_max
            must = (min(anchor.x0 + 1, k_max),)
        if n <= cap:
            windows = ((0, k_max),)
        else:
            windows = _sample_windows(k_max, samples, window, must)
        for lo, hi in windows:
            out = kernels.check_range(anchor, side, lo, hi, kmode)
            total += base * out.clean_ks + out.clean_fired
            if out.bad_k >= 0:
                counted, fail = _localize_window(anchor, side, mode, out.bad_lo, out.bad_k)
                total += counted
                if fail is None:
                    raise RuntimeError(
                        f"kernel flagged k={out.bad_k} ({side} side, n={n}) "
                        "but the exact replay found nothing"
                    )
                return VerifyReport(n, total, False, fail)
    return VerifyReport(n, total, True, None)


def verify_range(n_min: int, n_max: int, mode: Mode = Mode.BOTH, **limits) -> RangeSummary:
    """verify_n over every n in [n_min, n_max]; keyword limits pass through.

    Deterministic: reports and totals depend only on the inputs.
    """
    if n_min < 1 or n_max < n_min:
        raise DomainError(f"need 1 <= n_min <= n_max, got [{n_min}, {n_max}]")
    total = 0
    failures = []
    for n in range(n_min, n_max + 1):
        report = verify_n(n, mode, **limits)
        total += report.checks_run
        if not report.passed:
            failures.append(report)
    return RangeSummary(n_min, n_max, total, tuple(failures))

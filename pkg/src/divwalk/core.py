"""Square-root anchored residual and quotient generators for integer division.

Every dividend n >= 1 is anchored at

    x0 = isqrt(n),  y0 = n div x0,  r0 = n mod x0,  delta = y0 - x0,

so n = x0*y0 + r0 with 0 <= r0 < x0.  Two walks leave the anchor:
the X walk decrements the divisor x0, x0-1, ..., 1 and the Y walk
increments it y0, y0+1, ..., n.  At step k the unreduced residual

    rprime(k) = r0 + k*delta + k*k  ==  n - (x0 - k)*(y0 + k)

reduces mod the step's divisor to the true division residual, and one
further integer division recovers the true quotient.  Successive walk
states are also connected by a division-free-in-n recurrence; both
routes are exposed here so they can be checked against each other.

All arithmetic is on Python ints, so every operation is exact at any
magnitude.  delta is never clamped: it is usually 0 or 1 but reaches 2
(n = 8 gives x0 = 2, y0 = 4), and the closed form needs the true value.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

__all__ = [
    "Side",
    "Anchor",
    "WalkState",
    "DomainError",
    "EndOfWalkError",
    "isqrt",
    "init_anchor",
    "rprime",
    "x_residual",
    "x_quotient",
    "y_residual",
    "y_quotient",
    "initial_state",
    "x_walk_step",
    "y_walk_step",
    "walk_step",
]


class DomainError(ValueError):
    """An argument lies outside the operation's stated domain."""


class EndOfWalkError(DomainError):
    """A walk was stepped past its final divisor."""


class Side(enum.Enum):
    """Walk direction: X decrements the divisor, Y increments it."""

    X = "x"
    Y = "y"

    def __str__(self) -> str:
        return self.value


class Anchor(NamedTuple):
    """Fixed per-dividend quantities both walks start from.

    Satisfies n == x0*y0 + r0, 0 <= r0 < x0 (r0 == 0 when n == 1),
    and delta == y0 - x0 >= 0.
    """

    n: int
    x0: int
    y0: int
    r0: int
    delta: int


class WalkState(NamedTuple):
    """One walk position: n == divisor*quotient + residual, 0 <= residual < divisor.

    rprime is the unreduced residual at this k; delta is copied from the
    anchor so a state can be stepped without carrying the anchor around.
    """

    direction: Side
    k: int
    divisor: int
    quotient: int
    residual: int
    rprime: int
    delta: int


def isqrt(n: int) -> int:
    """Exact floor square root: the unique s with s*s <= n < (s+1)*(s+1).

    Integer-only, so values adjacent to huge perfect squares are not
    misrounded the way a float sqrt would be.
    """
    if n < 0:
        raise DomainError(f"isqrt requires n >= 0, got {n}")
    return math.isqrt(n)


def init_anchor(n: int) -> Anchor:
    """Compute the anchor for dividend n >= 1."""
    if n < 1:
        raise DomainError(f"dividend must be >= 1, got {n}")
    x0 = math.isqrt(n)
    y0, r0 = divmod(n, x0)
    return Anchor(n, x0, y0, r0, y0 - x0)


def rprime(anchor: Anchor, k: int) -> int:
    """Unreduced residual r0 + k*delta + k*k at step k.

    Defined for any k >= 0; per-walk domain limits are enforced by the
    residual and quotient operations, not here.  Always >= 0, and equals
    n - (x0 - k)*(y0 + k) exactly.
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    return anchor.r0 + k * anchor.delta + k * k


def _check_x_k(anchor: Anchor, k: int) -> None:
    if not 0 <= k <= anchor.x0 - 1:
        raise DomainError(
            f"X walk of n={anchor.n} has k in [0, {anchor.x0 - 1}], got {k}"
        )


def _check_y_k(anchor: Anchor, k: int) -> None:
    if not 0 <= k <= anchor.n - anchor.y0:
        raise DomainError(
            f"Y walk of n={anchor.n} has k in [0, {anchor.n - anchor.y0}], got {k}"
        )


def x_residual(anchor: Anchor, k: int) -> tuple[int, int]:
    """(divisor, residual) at X step k: divisor x0 - k, residual n mod divisor.

    The residual is obtained by reducing rprime(k), not by dividing n.
    """
    _check_x_k(anchor, k)
    div = anchor.x0 - k
    return div, rprime(anchor, k) % div


def x_quotient(anchor: Anchor, k: int) -> int:
    """Quotient n div (x0 - k), recovered as (y0 + k) + rprime(k) div (x0 - k)."""
    _check_x_k(anchor, k)
    div = anchor.x0 - k
    return (anchor.y0 + k) + rprime(anchor, k) // div


def y_residual(anchor: Anchor, k: int) -> tuple[int, int]:
    """(divisor, residual) at Y step k: divisor y0 + k, residual n mod divisor."""
    _check_y_k(anchor, k)
    div = anchor.y0 + k
    return div, rprime(anchor, k) % div


def y_quotient(anchor: Anchor, k: int) -> int:
    """Quotient n div (y0 + k), recovered as (x0 - k) + rprime(k) div (y0 + k).

    x0 - k goes negative once k passes x0; the rprime term overshoots by
    exactly that amount, so the signed sum is the true quotient.
    """
    _check_y_k(anchor, k)
    div = anchor.y0 + k
    return (anchor.x0 - k) + rprime(anchor, k) // div


def initial_state(anchor: Anchor, side: Side) -> WalkState:
    """Walk state at k = 0: divisor x0 (X side) or y0 (Y side)."""
    if side is Side.X:
        return WalkState(
            Side.X, 0, anchor.x0, anchor.y0, anchor.r0, anchor.r0, anchor.delta
        )
    return WalkState(
        Side.Y, 0, anchor.y0, anchor.x0, anchor.r0, anchor.r0, anchor.delta
    )


def x_walk_step(state: WalkState) -> WalkState:
    """Advance the X walk one step, divisor decreasing by one.

    With t = residual + quotient the next state is

        quotient' = quotient + t div divisor'
        residual' = t mod divisor'
        rprime'   = rprime + 2k + 1 + delta

    which preserves n == divisor*quotient + residual exactly.  Raises
    EndOfWalkError at divisor 1, the walk's last stop.
    """
    if state.direction is not Side.X:
        raise DomainError("x_walk_step needs an X-side state")
    if state.divisor <= 1:
        raise EndOfWalkError("X walk ends at divisor 1")
    div = state.divisor - 1
    t = state.residual + state.quotient
    return WalkState(
        Side.X,
        state.k + 1,
        div,
        state.quotient + t // div,
        t % div,
        state.rprime + 2 * state.k + 1 + state.delta,
        state.delta,
    )


def y_walk_step(state: WalkState) -> WalkState:
    """Advance the Y walk one step, divisor increasing by one.

    With t = residual - quotient the next state is

        quotient' = quotient + t div divisor'
        residual' = t mod divisor'
        rprime'   = rprime + 2k + 1 + delta

    t is frequently negative; floored division (Python's native // and %)
    is what keeps 0 <= residual' < divisor', so this recurrence must not
    be transcribed into a language with truncating division as-is.
    Raises EndOfWalkError at divisor n, the walk's last stop.
    """
    if state.direction is not Side.Y:
        raise DomainError("y_walk_step needs a Y-side state")
    n = state.divisor * state.quotient + state.residual
    if state.divisor >= n:
        raise EndOfWalkError("Y walk ends at divisor n")
    div = state.divisor + 1
    t = state.residual - state.quotient
    return WalkState(
        Side.Y,
        state.k + 1,
        div,
        state.quotient + t // div,
        t % div,
        state.rprime + 2 * state.k + 1 + state.delta,
        state.delta,
    )


def walk_step(state: WalkState) -> WalkState:
    """Side-dispatching wrapper over x_walk_step / y_walk_step."""
    return x_walk_step(state) if state.direction is Side.X else y_walk_step(state)

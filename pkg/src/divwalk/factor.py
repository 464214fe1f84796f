"""Divisor detection as zeros of the reduced residual sequence.

A divisor of n is exactly a walk position whose reduced residual is zero,
so factoring n is a scan for zeros.  Every divisor d <= x0 shows up on
the X walk and pairs with the cofactor n/d > x0 recovered through the
quotient generator, which makes the X scan a complete enumeration.  The
Y-side predicate exists for symmetry and verification; it finds the
divisors in [y0, n] directly.
"""

from __future__ import annotations

from typing import NamedTuple

from . import kernels
from .core import Anchor, DomainError, Side, init_anchor, rprime, x_quotient

__all__ = [
    "FactorPair",
    "is_divisor_at_x",
    "is_divisor_at_y",
    "scan_divisor_pairs",
    "smallest_nontrivial_divisor",
]


class FactorPair(NamedTuple):
    """A divisor and its cofactor: small * large == n, small <= large on the X side."""

    small: int
    large: int
    k_found: int
    side: Side


def is_divisor_at_x(anchor: Anchor, k: int) -> bool:
    """True iff the X divisor x0 - k divides n, read off rprime(k) mod divisor."""
    if not 0 <= k <= anchor.x0 - 1:
        raise DomainError(
            f"X walk of n={anchor.n} has k in [0, {anchor.x0 - 1}], got {k}"
        )
    return rprime(anchor, k) % (anchor.x0 - k) == 0


def is_divisor_at_y(anchor: Anchor, k: int) -> bool:
    """True iff the Y divisor y0 + k divides n."""
    if not 0 <= k <= anchor.n - anchor.y0:
        raise DomainError(
            f"Y walk of n={anchor.n} has k in [0, {anchor.n - anchor.y0}], got {k}"
        )
    return rprime(anchor, k) % (anchor.y0 + k) == 0


def scan_divisor_pairs(anchor: Anchor) -> list[FactorPair]:
    """Every divisor pair of n from the full X scan, in increasing k.

    small runs over all divisors <= x0 in decreasing order; large is
    recovered with the quotient generator, never by dividing n afresh.
    The union of small and large values over the result is the complete
    divisor set of n.  The last pair is always (1, n).
    """
    return [
        FactorPair(anchor.x0 - k, x_quotient(anchor, k), k, Side.X)
        for k in kernels.x_zero_ks(anchor, 0, anchor.x0 - 1)
    ]


def smallest_nontrivial_divisor(n: int) -> int | None:
    """Least divisor of n that is >= 2, or None when n is prime.

    Scans k downward from the k of divisor 2, so the first zero found is
    the smallest nontrivial divisor; any composite n has one at most x0.
    The always-firing divisor 1 (k = x0 - 1) is skipped by construction.
    """
    if n < 2:
        raise DomainError(f"smallest_nontrivial_divisor needs n >= 2, got {n}")
    anchor = init_anchor(n)
    k = kernels.x_first_zero_desc(anchor, anchor.x0 - 2, 0)
    return None if k is None else anchor.x0 - k

"""Division-free residual and quotient generators over divisor walks.

Anchored at the integer square root of the dividend, two walks sweep all
divisors of interest: the X walk decrements from isqrt(n) to 1, the Y
walk increments from n div isqrt(n) to n.  A quadratic unreduced residual
generates every true residual and quotient along the way with one mod
(and, for quotients, one div) per step; its zeros mod the current divisor
are exactly the divisors of n, which turns factoring into a scan.

The package ships exact scalar operations (core), bulk backends with an
int64 fast path and automatic exact fallback (kernels), a divisor scanner
(factor), an oracle-backed verifier (verify), a streaming-vs-division
benchmark (bench), and a CLI (cli; entry point `divwalk`).
"""

from .bench import (
    CSV_HEADER,
    BenchReport,
    ChecksumMismatchError,
    Method,
    bench_compare,
    to_csv,
    write_csv,
)
from .core import (
    Anchor,
    DomainError,
    EndOfWalkError,
    Side,
    WalkState,
    init_anchor,
    initial_state,
    isqrt,
    rprime,
    walk_step,
    x_quotient,
    x_residual,
    x_walk_step,
    y_quotient,
    y_residual,
    y_walk_step,
)
from .factor import (
    FactorPair,
    is_divisor_at_x,
    is_divisor_at_y,
    scan_divisor_pairs,
    smallest_nontrivial_divisor,
)
from .verify import (
    CheckFailure,
    Mode,
    RangeSummary,
    VerifyReport,
    oracle_divmod,
    verify_n,
    verify_range,
)

__version__ = "0.1.0"

__all__ = [
    "Anchor",
    "BenchReport",
    "CSV_HEADER",
    "CheckFailure",
    "ChecksumMismatchError",
    "DomainError",
    "EndOfWalkError",
    "FactorPair",
    "Method",
    "Mode",
    "RangeSummary",
    "Side",
    "VerifyReport",
    "WalkState",
    "bench_compare",
    "init_anchor",
    "initial_state",
    "is_divisor_at_x",
    "is_divisor_at_y",
    "isqrt",
    "oracle_divmod",
    "rprime",
    "scan_divisor_pairs",
    "smallest_nontrivial_divisor",
    "to_csv",
    "verify_n",
    "verify_range",
    "walk_step",
    "write_csv",
    "x_quotient",
    "x_residual",
    "x_walk_step",
    "y_quotient",
    "y_residual",
    "y_walk_step",
    "__version__",
]

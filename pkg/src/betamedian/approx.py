"""Closed-form formulas: the shifted-shape median approximation family,
its exact special cases, and the related mean/mode/gamma-median facts.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .params import BetaParams

__all__ = [
    "ONE_THIRD",
    "approx_median",
    "approx_median_default",
    "exact_median_special",
    "beta_mean",
    "beta_mode",
    "gamma_median_approx",
]

# Nearest double to 1/3.  Kept as the exact division: truncating to 0.333
# visibly degrades the large-shape convergence rate of the approximation.
ONE_THIRD = 1.0 / 3.0


def _check_offset(d: float) -> float:
    if math.isnan(d) or not 0.0 <= d < 1.0:
        raise DomainError(f"offset d must lie in [0, 1), got {d!r}")
    return d


def approx_median(params: BetaParams, d: float) -> float:
    """Median approximation (a - d) / (a + b - 2d), valid for min(a, b) > d.

    d = 0 reduces to the mean; d = 1/3 is the recommended choice (see
    :func:`approx_median_default`).  Satisfies the reflection identity
    approx_median(a, b, d) + approx_median(b, a, d) = 1 exactly.
    """
    _check_offset(d)
    if min(params.a, params.b) <= d:
        raise DomainError(
            f"approximation requires min(a, b) > d, got a={params.a!r}, "
            f"b={params.b!r}, d={d!r}"
        )
    return (params.a - d) / (params.a + params.b - 2.0 * d)


def approx_median_default(params: BetaParams) -> float:
    """The d = 1/3 member of the family: (a - 1/3) / (a + b - 2/3)."""
    return approx_median(params, ONE_THIRD)


def exact_median_special(params: BetaParams) -> float | None:
    """Closed-form median where one exists: b = 1, a = 1, or a = b.

    Returns None when no special case applies.  Matching is by exact
    equality; callers hold exact parameter values.
    """
    a, b = params.a, params.b
    if a == b:
        return 0.5
    if b == 1.0:
        return 2.0 ** (-1.0 / a)
    if a == 1.0:
        return 1.0 - 2.0 ** (-1.0 / b)
    return None


def beta_mean(params: BetaParams) -> float:
    """Mean a / (a + b)."""
    return params.a / (params.a + params.b)


def beta_mode(params: BetaParams) -> float:
    """Mode (a - 1) / (a + b - 2), defined only for a > 1 and b > 1."""
    if min(params.a, params.b) <= 1.0:
        raise DomainError(
            f"mode requires a > 1 and b > 1, got a={params.a!r}, b={params.b!r}"
        )
    return (params.a - 1.0) / (params.a + params.b - 2.0)


def gamma_median_approx(a: float) -> float:
    """Large-shape asymptote a - 1/3 of the unit-scale gamma median."""
    if not math.isfinite(a):
        raise DomainError(f"a must be finite, got {a!r}")
    if a <= ONE_THIRD:
        raise DomainError(f"asymptote requires a > 1/3, got {a!r}")
    return a - ONE_THIRD

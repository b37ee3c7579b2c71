"""Exact-median oracles for the beta and unit-scale gamma distributions.

Both solvers run safeguarded Newton iterations on ``CDF(x) - 1/2``: a
sign-change bracket is maintained at every step, any Newton proposal that
leaves the bracket is replaced by bisection, and the CDF and density share
one prefactor evaluation per step.  Iteration continues past the requested
tolerance while representable progress is still possible, returning the
best point seen; near x = 1 the double grid itself limits how small
|CDF - 1/2| can get, and stopping at the first tolerance hit would leave
several ULP on the table.
"""

from __future__ import annotations

import math

from .approx import ONE_THIRD, gamma_median_approx
from .errors import ConvergenceError, DomainError
from .params import BetaParams, SolverConfig
from .special import (
    _reg_inc_beta_with_density,
    _reg_inc_gamma_with_density,
    CF_MAX_ITER,
    log_gamma,
    reg_inc_gamma_p,
)

__all__ = ["beta_median_exact", "gamma_median_exact"]

_DEFAULT_CONFIG = SolverConfig()
_GUESS_CLIP = 1e-15


def _safeguarded_newton(
    cdf_and_density,
    x: float,
    lo: float,
    hi: float,
    cfg: SolverConfig,
    label: str,
) -> float:
    """Newton on CDF(x) - 1/2 inside a maintained bracket [lo, hi]."""
    best_x = x
    best_f = math.inf
    tolerance_hit = False
    for _ in range(cfg.max_iterations):
        cdf, density = cdf_and_density(x)
        f = cdf - 0.5
        if abs(f) < best_f:
            best_x, best_f = x, abs(f)
        if f == 0.0:
            return x
        if f < 0.0:
            lo = x
        else:
            hi = x
        if abs(f) <= cfg.cdf_tolerance:
            if tolerance_hit:
                return best_x
            tolerance_hit = True  # allow one more polishing step
        nxt = x - f / density if density > 0.0 else 0.5 * (lo + hi)
        if not lo < nxt < hi:
            nxt = 0.5 * (lo + hi)
        if nxt == x or not lo < nxt < hi:
            break  # no representable point left to try
        x = nxt
    if best_f <= cfg.cdf_tolerance or hi - lo <= cfg.x_tolerance:
        return best_x
    raise ConvergenceError(
        f"{label}: no convergence in {cfg.max_iterations} iterations; "
        f"final bracket [{lo!r}, {hi!r}], best |cdf - 1/2| = {best_f:.3e}"
    )


def beta_median_exact(params: BetaParams, cfg: SolverConfig | None = None) -> float:
    """Median of Beta(a, b) by inverting the regularized incomplete beta.

    The returned m satisfies |I_m(a, b) - 1/2| <= cfg.cdf_tolerance
    (default 1e-13) whenever that is representable, and is accurate to a
    couple of ULP in practice.  Starts from the closed-form approximation
    (a - 1/3)/(a + b - 2/3) when both shapes exceed 1/3.
    """
    cfg = cfg or _DEFAULT_CONFIG
    a, b = params.a, params.b
    if min(a, b) > ONE_THIRD:
        x0 = (a - ONE_THIRD) / (a + b - 2.0 * ONE_THIRD)
        x0 = min(max(x0, _GUESS_CLIP), 1.0 - _GUESS_CLIP)
    else:
        x0 = 0.5
    return _safeguarded_newton(
        lambda x: _reg_inc_beta_with_density(x, a, b, CF_MAX_ITER),
        x0,
        0.0,
        1.0,
        cfg,
        f"beta median (a={a!r}, b={b!r})",
    )


def _gamma_bracket(a: float) -> tuple[float, float]:
    """Sign-change bracket for P(a, x) = 1/2, expanded geometrically."""
    lo = max(1e-300, a * 1e-6)
    hi = a + 40.0 * math.sqrt(a) + 40.0
    for _ in range(1100):
        if reg_inc_gamma_p(a, lo) < 0.5:
            break
        lo *= 1e-2
        if lo < 5e-324:
            raise ConvergenceError(f"gamma median bracket collapsed below (a={a!r})")
    else:
        raise ConvergenceError(f"gamma median bracket: no lower bound (a={a!r})")
    for _ in range(1100):
        if reg_inc_gamma_p(a, hi) > 0.5:
            break
        hi *= 2.0
    else:
        raise ConvergenceError(f"gamma median bracket: no upper bound (a={a!r})")
    return lo, hi


def gamma_median_exact(a: float, cfg: SolverConfig | None = None) -> float:
    """Median of the unit-scale Gamma(a) distribution, for any a > 0."""
    cfg = cfg or _DEFAULT_CONFIG
    if not math.isfinite(a) or a <= 0.0:
        raise DomainError(f"shape a must be positive and finite, got {a!r}")
    lo, hi = _gamma_bracket(a)
    if a > ONE_THIRD:
        x0 = gamma_median_approx(a)
    else:
        # Small-shape asymptote of the median: (Gamma(a + 1) / 2)^(1/a).
        x0 = math.exp((log_gamma(a + 1.0) - math.log(2.0)) / a)
    x0 = min(max(x0, lo * (1.0 + 1e-12)), hi * (1.0 - 1e-12))
    return _safeguarded_newton(
        lambda x: _reg_inc_gamma_with_density(a, x),
        x0,
        lo,
        hi,
        cfg,
        f"gamma median (a={a!r})",
    )

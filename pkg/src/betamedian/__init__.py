"""Closed-form median approximation for the beta distribution.

The median of Beta(a, b) has no general closed form, but
(a - 1/3) / (a + b - 2/3) approximates it to better than 4% relative
error whenever both shapes are at least 1, improving rapidly as they
grow.  This package provides that formula (and the wider offset family
(a - d) / (a + b - 2d)), exact medians via CDF inversion for checking
it, the underlying special functions, and grid/rate analysis tools.
"""

from .analysis import (
    ErrorRecord,
    GridSpec,
    RateFitResult,
    default_shape_grid,
    log_spaced,
    rate_fit,
    relative_error_curves,
    relative_error_over_means,
    scaled_abs_error_curves,
    tail_probability_grid,
)
from .approx import (
    ONE_THIRD,
    approx_median,
    approx_median_default,
    beta_mean,
    beta_mode,
    exact_median_special,
    gamma_median_approx,
)
from .errors import ConvergenceError, DomainError
from .params import BetaParams, SolverConfig
from .solver import beta_median_exact, gamma_median_exact
from .special import log_gamma, reg_inc_beta, reg_inc_gamma_p

__version__ = "0.1.0"

__all__ = [
    "BetaParams",
    "ConvergenceError",
    "DomainError",
    "ErrorRecord",
    "GridSpec",
    "ONE_THIRD",
    "RateFitResult",
    "SolverConfig",
    "approx_median",
    "approx_median_default",
    "beta_mean",
    "beta_median_exact",
    "beta_mode",
    "default_shape_grid",
    "exact_median_special",
    "gamma_median_approx",
    "gamma_median_exact",
    "log_gamma",
    "log_spaced",
    "rate_fit",
    "reg_inc_beta",
    "reg_inc_gamma_p",
    "relative_error_curves",
    "relative_error_over_means",
    "scaled_abs_error_curves",
    "tail_probability_grid",
]

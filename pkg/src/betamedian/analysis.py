"""Grid evaluations of the approximation error and empirical rate fits.

Grids are parameterized by the distribution mean p = a/(a+b) with the
smaller shape held fixed: for p <= 0.5 rows use Beta(a, a(1-p)/p) with a
the given shape, and for p > 0.5 the mirrored construction.  All rows are
evaluated sequentially and deterministically; two runs over the same grid
yield identical records.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .approx import ONE_THIRD, approx_median, approx_median_default
from .errors import ConvergenceError, DomainError
from .params import BetaParams, SolverConfig
from .solver import beta_median_exact
from .special import reg_inc_beta

__all__ = [
    "ErrorRecord",
    "GridSpec",
    "RateFitResult",
    "default_shape_grid",
    "log_spaced",
    "relative_error_curves",
    "relative_error_over_means",
    "scaled_abs_error_curves",
    "tail_probability_grid",
    "rate_fit",
]

#: shape grid density used by the default grids: 25 points per decade
POINTS_PER_DECADE = 25


def log_spaced(lo: float, hi: float, n: int) -> list[float]:
    """n log-spaced points from lo to hi inclusive."""
    if not 0.0 < lo < hi:
        raise DomainError(f"need 0 < lo < hi, got lo={lo!r}, hi={hi!r}")
    if n < 2:
        raise DomainError(f"need at least 2 points, got {n!r}")
    ratio = hi / lo
    pts = [lo * ratio ** (i / (n - 1)) for i in range(n)]
    pts[-1] = hi
    return pts


def default_shape_grid(lo: float = 1.0, hi: float = 1024.0) -> list[float]:
    """Log-spaced shape grid at POINTS_PER_DECADE density."""
    n = math.floor(POINTS_PER_DECADE * math.log10(hi / lo)) + 1
    return log_spaced(lo, hi, max(n, 2))


@dataclass(frozen=True)
class GridSpec:
    """Evaluation grid: means, smaller-shape values, and offsets d."""

    p_values: tuple[float, ...]
    shape_values: tuple[float, ...]
    d_values: tuple[float, ...] = (ONE_THIRD,)

    def __post_init__(self) -> None:
        if not self.p_values or not self.shape_values or not self.d_values:
            raise DomainError("grid lists must be non-empty")
        for p in self.p_values:
            if not 0.0 < p < 1.0:
                raise DomainError(f"mean p must lie in (0, 1), got {p!r}")
        prev = 0.0
        for s in self.shape_values:
            if s <= prev:
                raise DomainError("shape_values must be positive and strictly increasing")
            prev = s


@dataclass(frozen=True)
class ErrorRecord:
    """One evaluated grid point.

    ``rel_err`` is signed: (approx - exact) / exact.  ``underflow`` marks
    rows whose absolute error is exactly zero in floating point, where the
    log-scaled error is undefined; such rows are excluded from fits.
    """

    a: float
    b: float
    p: float
    d: float
    approx: float
    exact: float
    rel_err: float
    log_scaled_abs_err: float | None = None
    tail_prob: float | None = None
    underflow: bool = False


@dataclass(frozen=True)
class RateFitResult:
    """Least-squares power-law fit of the approximation's convergence."""

    d: float
    p: float
    slope: float
    intercept: float
    max_abs_residual: float


def _shapes_for_mean(min_shape: float, p: float) -> tuple[float, float]:
    """(a, b) with mean p, holding the smaller shape at min_shape."""
    if p <= 0.5:
        return min_shape, min_shape * (1.0 - p) / p
    return min_shape * p / (1.0 - p), min_shape


def _solved_record(a: float, b: float, p: float, d: float,
                   cfg: SolverConfig | None) -> tuple[float, float]:
    """(approx, exact) for one grid point, annotating failures."""
    try:
        params = BetaParams(a, b)
        approx = approx_median(params, d)
        exact = beta_median_exact(params, cfg)
    except (DomainError, ConvergenceError) as exc:
        raise type(exc)(f"at grid point (a={a!r}, b={b!r}, d={d!r}): {exc}") from exc
    return approx, exact


def relative_error_curves(
    grid: GridSpec, cfg: SolverConfig | None = None
) -> list[ErrorRecord]:
    """Signed relative error of the approximation across the grid.

    One record per (d, p, a), ordered by that tuple; ``shape_values`` are
    the values of a and b is derived from the mean as a(1-p)/p.
    """
    records = []
    for d in sorted(grid.d_values):
        for p in sorted(grid.p_values):
            for a in grid.shape_values:
                b = a * (1.0 - p) / p
                approx, exact = _solved_record(a, b, p, d, cfg)
                records.append(
                    ErrorRecord(
                        a=a, b=b, p=p, d=d, approx=approx, exact=exact,
                        rel_err=(approx - exact) / exact,
                        underflow=approx == exact,
                    )
                )
    return records


def relative_error_over_means(
    min_shape: float,
    p_grid: list[float],
    d: float = ONE_THIRD,
    cfg: SolverConfig | None = None,
) -> list[ErrorRecord]:
    """Relative error over a sweep of means with the smaller shape fixed."""
    records = []
    for p in sorted(p_grid):
        if not 0.0 < p < 1.0:
            raise DomainError(f"mean p must lie in (0, 1), got {p!r}")
        a, b = _shapes_for_mean(min_shape, p)
        approx, exact = _solved_record(a, b, p, d, cfg)
        records.append(
            ErrorRecord(
                a=a, b=b, p=p, d=d, approx=approx, exact=exact,
                rel_err=(approx - exact) / exact,
                underflow=approx == exact,
            )
        )
    return records


def scaled_abs_error_curves(
    p: float,
    shape_values: list[float],
    d_values: list[float],
    cfg: SolverConfig | None = None,
) -> list[ErrorRecord]:
    """ln(|approx - exact| / p) across shapes, one curve per offset d.

    Requires p < 0.5 and min(shape) > max(d).  Rows whose error underflows
    to zero are flagged and carry no log value.
    """
    if not 0.0 < p < 0.5:
        raise DomainError(f"scaled-error curves need 0 < p < 0.5, got {p!r}")
    if min(shape_values) <= max(d_values):
        raise DomainError(
            f"need min(shape_values) > max(d_values), got "
            f"{min(shape_values)!r} <= {max(d_values)!r}"
        )
    records = []
    for d in sorted(d_values):
        for a in shape_values:
            b = a * (1.0 - p) / p
            approx, exact = _solved_record(a, b, p, d, cfg)
            err = abs(approx - exact)
            records.append(
                ErrorRecord(
                    a=a, b=b, p=p, d=d, approx=approx, exact=exact,
                    rel_err=(approx - exact) / exact,
                    log_scaled_abs_err=math.log(err / p) if err > 0.0 else None,
                    underflow=err == 0.0,
                )
            )
    return records


def tail_probability_grid(
    shape_values: list[float],
    p_values: list[float],
    cfg: SolverConfig | None = None,
) -> list[ErrorRecord]:
    """CDF value at the default approximation over a (shape, mean) grid.

    ``tail_prob`` is I_m(a, b) with m = (a - 1/3)/(a + b - 2/3); it equals
    exactly 0.5 when the approximation is exact.  Requires shapes > 1/3.
    """
    records = []
    for s in shape_values:
        if s <= ONE_THIRD:
            raise DomainError(f"tail grid requires shapes > 1/3, got {s!r}")
        for p in sorted(p_values):
            if not 0.0 < p < 1.0:
                raise DomainError(f"mean p must lie in (0, 1), got {p!r}")
            a, b = _shapes_for_mean(s, p)
            approx, exact = _solved_record(a, b, p, ONE_THIRD, cfg)
            records.append(
                ErrorRecord(
                    a=a, b=b, p=p, d=ONE_THIRD, approx=approx, exact=exact,
                    rel_err=(approx - exact) / exact,
                    tail_prob=reg_inc_beta(approx, a, b),
                    underflow=approx == exact,
                )
            )
    return records


def rate_fit(
    p: float,
    a_min: float,
    a_max: float,
    n_points: int,
    d: float,
) -> RateFitResult:
    """Power-law fit of how fast the approximation closes on the median.

    The fitted quantity is the probability-scale deviation
    |I_m(a, b) - 1/2| at the approximate median m(a, b; d) -- the CDF
    distance between the approximation and the true median -- regressed
    as ln(deviation) on ln(a) over log-spaced a with b = a(1-p)/p.
    The slope estimates the convergence-rate exponent: about -3/2 for
    d = 1/3 and about -1/2 for the mean (d = 0).
    """
    if not 0.0 < p < 0.5:
        raise DomainError(f"rate fit needs 0 < p < 0.5, got {p!r}")
    if not 1.0 <= a_min < a_max:
        raise DomainError(f"need 1 <= a_min < a_max, got {a_min!r}, {a_max!r}")
    if n_points < 5:
        raise DomainError(f"need at least 5 points, got {n_points!r}")
    xs = []
    ys = []
    for a in log_spaced(a_min, a_max, n_points):
        b = a * (1.0 - p) / p
        m_hat = approx_median(BetaParams(a, b), d)
        deviation = abs(reg_inc_beta(m_hat, a, b) - 0.5)
        if deviation == 0.0:
            continue  # underflowed point carries no rate information
        xs.append(math.log(a))
        ys.append(math.log(deviation))
    if len(xs) < 5:
        raise ConvergenceError(
            f"rate fit: only {len(xs)} usable points after underflow exclusion"
        )
    n = len(xs)
    x_mean = sum(xs) / n
    y_mean = sum(ys) / n
    sxx = sum((x - x_mean) ** 2 for x in xs)
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    max_resid = max(abs(y - (slope * x + intercept)) for x, y in zip(xs, ys))
    return RateFitResult(d=d, p=p, slope=slope, intercept=intercept,
                         max_abs_residual=max_resid)

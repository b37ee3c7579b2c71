"""Scalar special functions: log-gamma and the regularized incomplete
beta and gamma functions.

Everything here is pure double-precision Python with no shared state.
``log_gamma`` uses a 14-term Lanczos rational approximation.  The two
incomplete functions follow the classic evaluation strategy: a power
series or continued fraction (modified Lentz iteration) multiplied by a
density prefactor.  The prefactor is *not* assembled from three separate
``log_gamma`` calls; it is built from the Lanczos decomposition directly
so that the large leading terms cancel symbolically rather than in
floating point.  That keeps the absolute error at a few ULP for shapes
up to ~1e2 and lets it grow only like ``max(a, b) * eps`` beyond, instead
of the much faster degradation of the naive log-space difference.
"""

from __future__ import annotations

import math

from .errors import ConvergenceError, DomainError

__all__ = ["log_gamma", "reg_inc_beta", "reg_inc_gamma_p"]

# Lanczos coefficients (g = 5.2421875, 14 terms), good to ~1e-15 relative.
_LANCZOS_G = 5.2421875
_LANCZOS_C0 = 0.999999999999997092
_LANCZOS_COF = (
    57.1562356658629235,
    -59.5979603554754912,
    14.1360979747417471,
    -0.491913816097620199,
    0.339946499848118887e-4,
    0.465236289270485756e-4,
    -0.983744753048795646e-4,
    0.158088703224912494e-3,
    -0.210264441724104883e-3,
    0.217439618115212643e-3,
    -0.164318106536763890e-3,
    0.844182239838527433e-4,
    -0.261908384015814087e-4,
    0.368991826595316234e-5,
)
_SQRT_2PI = 2.5066282746310005
_LOG_SQRT_2PI = 0.9189385332046727

# Continued fractions: relative truncation target, underflow floor for the
# Lentz recurrence, and the default iteration cap.
_CF_EPS = 3e-16
_CF_TINY = 1e-300
CF_MAX_ITER = 500

# The power series for the lower incomplete gamma needs O(sqrt(a)) terms
# near x ~ a, so its cap scales well past the continued-fraction cap.
_SERIES_MAX_ITER = 20_000


def _require_finite(name: str, value: float) -> float:
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


def _lanczos_sum(x: float) -> float:
    s = _LANCZOS_C0
    y = x
    for c in _LANCZOS_COF:
        y += 1.0
        s += c / y
    return s


def log_gamma(x: float) -> float:
    """Natural log of the gamma function for x > 0.

    Relative error is a few ULP across [1e-6, 1e8]; exactly 0.0 at the
    integer zeros x = 1 and x = 2.
    """
    _require_finite("x", x)
    if x <= 0.0:
        raise DomainError(f"x must be positive, got {x!r}")
    if x == 1.0 or x == 2.0:
        return 0.0
    t = x + _LANCZOS_G
    return (x + 0.5) * math.log(t) - t + math.log(_SQRT_2PI * _lanczos_sum(x) / x)


def _log_beta_prefactor(a: float, b: float, x: float) -> float:
    """ln( x^a (1-x)^b / B(a, b) ) for 0 < x < 1.

    Combines the Lanczos decompositions of the three gamma factors so the
    (a+g)-scale leading terms cancel exactly.  The remaining log arguments
    sit near 1 when x is near the mean, which is where accuracy matters.
    """
    u = a + _LANCZOS_G
    v = b + _LANCZOS_G
    w = a + b + _LANCZOS_G
    # w/u and w/v both exceed 1, so neither product can underflow to zero.
    t1 = a * math.log(x * (w / u))
    t2 = b * math.log((1.0 - x) * (w / v))
    t3 = 0.5 * math.log(w / (u * v))
    t4 = math.log(_lanczos_sum(a) * _lanczos_sum(b) / _lanczos_sum(a + b) * ((a + b) / (a * b)))
    return t1 + t2 + t3 + _LANCZOS_G - _LOG_SQRT_2PI - t4


def _betacf(a: float, b: float, x: float, max_iter: int) -> float:
    """Continued fraction for the incomplete beta, by modified Lentz."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _CF_TINY:
        d = _CF_TINY
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = 1.0 + aa / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) <= _CF_EPS:
            return h
    raise ConvergenceError(
        f"incomplete beta continued fraction did not converge in {max_iter} "
        f"iterations (a={a!r}, b={b!r}, x={x!r})"
    )


def _check_beta_args(a: float, b: float, x: float) -> None:
    _require_finite("a", a)
    _require_finite("b", b)
    if a <= 0.0:
        raise DomainError(f"a must be positive, got {a!r}")
    if b <= 0.0:
        raise DomainError(f"b must be positive, got {b!r}")
    if math.isnan(x) or not 0.0 <= x <= 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x!r}")


def _reg_inc_beta_with_density(
    x: float, a: float, b: float, max_iter: int
) -> tuple[float, float]:
    """(I_x(a,b), beta density at x), sharing one prefactor evaluation."""
    if x <= 0.0:
        return 0.0, 0.0
    if x >= 1.0:
        return 1.0, 0.0
    # Evaluate the fraction on whichever side of the distribution converges
    # quickly, switching to the complement above the mean-ish threshold.
    if x > (a + 1.0) / (a + b + 2.0):
        pref = math.exp(_log_beta_prefactor(b, a, 1.0 - x))
        cdf = 1.0 - pref * _betacf(b, a, 1.0 - x, max_iter) / b
    else:
        pref = math.exp(_log_beta_prefactor(a, b, x))
        cdf = pref * _betacf(a, b, x, max_iter) / a
    return cdf, pref / (x * (1.0 - x))


def reg_inc_beta(x: float, a: float, b: float, max_iter: int = CF_MAX_ITER) -> float:
    """Regularized incomplete beta function I_x(a, b): the Beta(a, b) CDF.

    Exactly 0.0 at x = 0 and 1.0 at x = 1.  Absolute error is a few ULP
    for shapes up to ~1e2 and grows roughly like ``2e-16 * max(a, b)``
    beyond (measured ~1.5e-10 near shapes of 1e6).

    Raises DomainError on nonpositive shapes or x outside [0, 1], and
    ConvergenceError if the continued fraction does not settle within
    ``max_iter`` terms (needs ~0.8 * sqrt(min(a, b)) near the mean, so
    the default cap of 500 covers min(a, b) up to roughly 3e5).
    """
    _check_beta_args(a, b, x)
    cdf, _ = _reg_inc_beta_with_density(x, a, b, max_iter)
    return cdf


def _log_gamma_prefactor(a: float, x: float) -> float:
    """ln( x^a e^-x / Gamma(a) ) for x > 0, stable for x near a."""
    u = a + _LANCZOS_G
    r = x / u
    if r > 0.0:
        t1 = a * math.log(r)
    else:  # x subnormal: the ratio underflowed, split the logs instead
        t1 = a * (math.log(x) - math.log(u))
    return (
        t1
        + (u - x)
        - 0.5 * math.log(u)
        + math.log(a)
        - _LOG_SQRT_2PI
        - math.log(_lanczos_sum(a))
    )


def reg_inc_gamma_p(a: float, x: float, max_iter: int = CF_MAX_ITER) -> float:
    """Regularized lower incomplete gamma P(a, x): the Gamma(a) CDF at x.

    Power series below x = a + 1, continued fraction for the complement
    above.  Accuracy mirrors ``reg_inc_beta``: a few ULP for a up to ~1e3,
    degrading like ``a * eps`` toward a = 1e6.
    """
    _require_finite("a", a)
    _require_finite("x", x)
    if a <= 0.0:
        raise DomainError(f"a must be positive, got {a!r}")
    if x < 0.0:
        raise DomainError(f"x must be nonnegative, got {x!r}")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        ap = a
        s = 1.0 / a
        term = s
        for _ in range(_SERIES_MAX_ITER):
            ap += 1.0
            term *= x / ap
            s += term
            if abs(term) < abs(s) * _CF_EPS:
                return s * math.exp(_log_gamma_prefactor(a, x))
        raise ConvergenceError(
            f"incomplete gamma series did not converge (a={a!r}, x={x!r})"
        )
    bb = x + 1.0 - a
    c = 1.0 / _CF_TINY
    d = 1.0 / bb
    h = d
    for i in range(1, max_iter + 1):
        an = -i * (i - a)
        bb += 2.0
        d = an * d + bb
        if abs(d) < _CF_TINY:
            d = _CF_TINY
        c = bb + an / c
        if abs(c) < _CF_TINY:
            c = _CF_TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) <= _CF_EPS:
            return 1.0 - math.exp(_log_gamma_prefactor(a, x)) * h
    raise ConvergenceError(
        f"incomplete gamma continued fraction did not converge in {max_iter} "
        f"iterations (a={a!r}, x={x!r})"
    )


def _reg_inc_gamma_with_density(a: float, x: float) -> tuple[float, float]:
    """(P(a,x), gamma density at x), sharing one prefactor evaluation."""
    if x <= 0.0:
        return 0.0, 0.0
    p = reg_inc_gamma_p(a, x)
    return p, math.exp(_log_gamma_prefactor(a, x)) / x

"""Parameter containers used by the solvers and formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = ["BetaParams", "SolverConfig"]


@dataclass(frozen=True)
class BetaParams:
    """Shape pair (a, b) of a Beta(a, b) distribution."""

    a: float
    b: float

    def __post_init__(self) -> None:
        for name, value in (("a", self.a), ("b", self.b)):
            if not math.isfinite(value):
                raise DomainError(f"shape {name} must be finite, got {value!r}")
            if value <= 0.0:
                raise DomainError(f"shape {name} must be positive, got {value!r}")

    @property
    def mean(self) -> float:
        """Distribution mean a / (a + b)."""
        return self.a / (self.a + self.b)

    def swapped(self) -> "BetaParams":
        return BetaParams(self.b, self.a)


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and iteration cap for the median root-finders.

    ``cdf_tolerance`` bounds |CDF(m) - 1/2| at the returned point and
    ``x_tolerance`` bounds the final bracket width; meeting either counts
    as convergence.
    """

    cdf_tolerance: float = 1e-13
    x_tolerance: float = 1e-15
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if not self.cdf_tolerance > 0.0:
            raise DomainError(f"cdf_tolerance must be positive, got {self.cdf_tolerance!r}")
        if not self.x_tolerance > 0.0:
            raise DomainError(f"x_tolerance must be positive, got {self.x_tolerance!r}")
        if self.max_iterations < 1:
            raise DomainError(f"max_iterations must be >= 1, got {self.max_iterations!r}")

"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class ConvergenceError(ArithmeticError):
    """An iterative scheme failed to reach its tolerance within its cap."""

"""Exception types raised across the package."""


class PoleError(ValueError):
    """Argument sits on (or numerically too close to) a pole."""


class DomainError(ValueError):
    """Argument outside the supported evaluation domain."""


class BudgetError(ValueError):
    """Requested table would exceed the configured part-index budget."""


class BracketError(RuntimeError):
    """Root bracketing failed; usually a truncation misconfiguration."""


class BoundaryError(ArithmeticError):
    """Floating evaluation of a floor landed too close to an integer."""

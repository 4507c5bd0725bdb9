"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the supported domain of an operation."""


class DimensionError(ValueError):
    """Operator or vector dimensions are invalid or incompatible."""


class TruncationError(ValueError):
    """Requested quantity is corrupted by the finite truncation dimension."""


class EnumerationLimitError(ValueError):
    """Exhaustive enumeration refused: the search space is too large."""


class ConvergenceError(RuntimeError):
    """A series or iteration failed to reach the requested tolerance."""


class PoleError(ValueError):
    """Evaluation requested at a pole of the function."""


class QuadratureError(RuntimeError):
    """Numerical integration failed to meet the requested tolerance."""


class SingularNodeError(ValueError):
    """Evaluation point collides with a quadrature node of a singular rule."""


class CrossCheckError(ArithmeticError):
    """Two independent evaluation paths of the same quantity disagree."""

"""
Error classes for the rigidity engine.

Every failure the library can report inherits from RigidityError, which carries a
machine-readable code and a details mapping so callers (the CLI in particular) can
render and classify failures without parsing messages.
"""


class RigidityError(Exception):
    """Base class for engine errors with a machine-readable code."""

    def __init__(
        self,
        message: str,
        code: str = "ENGINE_ERROR",
        details: dict[str, str] | None = None,
    ):
        """
        Initialize engine error.

        Args:
            message: Human-readable error message describing the issue
            code: Machine-readable error code for programmatic handling
            details: Additional error context
        """
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}


class DimensionMismatchError(RigidityError, ValueError):
    """Raised when two Laurent objects live in rings of different dimension."""

    def __init__(self, left: int, right: int):
        super().__init__(
            f"Dimension mismatch: {left} != {right}",
            code="DIMENSION_MISMATCH",
            details={"left": str(left), "right": str(right)},
        )
        self.left = left
        self.right = right


class PolynomialSyntaxError(RigidityError, ValueError):
    """
    Raised when polynomial text does not match the grammar.

    The position is a zero-based character offset into the offending text.
    """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(
            f"{message} at position {position}",
            code="POLYNOMIAL_SYNTAX",
            details={"text": text, "position": str(position)},
        )
        self.text = text
        self.position = position


class PresentationError(RigidityError, ValueError):
    """Raised when a module presentation is malformed or outside computational scope."""

    def __init__(self, message: str, details: dict[str, str] | None = None):
        super().__init__(message, code="INVALID_PRESENTATION", details=details)


class BudgetExceededError(RigidityError):
    """
    Raised when the Gröbner engine exhausts its resource budget.

    The engine never returns a partial basis; consumers propagate this error instead
    of degrading a verdict.
    """

    def __init__(self, reason: str, pairs_consumed: int, limit: int):
        super().__init__(
            f"Gröbner budget exceeded ({reason}): {pairs_consumed} pairs consumed, limit {limit}",
            code="BUDGET_EXCEEDED",
            details={
                "reason": reason,
                "pairs_consumed": str(pairs_consumed),
                "limit": str(limit),
            },
        )
        self.reason = reason
        self.pairs_consumed = pairs_consumed
        self.limit = limit


class NumericalFailureError(RigidityError):
    """Raised when a numerical routine cannot produce a trustworthy value."""

    def __init__(self, message: str, details: dict[str, str] | None = None):
        super().__init__(message, code="NUMERICAL_FAILURE", details=details)


class SingularGridError(NumericalFailureError):
    """Raised when too many quadrature samples sit on the zero variety."""

    def __init__(self, fraction: float, shift: tuple[float, ...]):
        super().__init__(
            f"Singular quadrature grid: {fraction:.4%} of samples vanish",
            details={"fraction": repr(fraction), "shift": repr(shift)},
        )
        self.code = "SINGULAR_GRID"
        self.fraction = fraction
        self.shift = shift


class ResolutionTooCoarseError(RigidityError):
    """Raised when adjacent samples of a circle-valued map differ by too large a phase."""

    def __init__(self, max_step: float, tolerance: float):
        super().__init__(
            f"Resolution too coarse: phase step {max_step:.4f} turns exceeds {tolerance}",
            code="RESOLUTION_TOO_COARSE",
            details={"max_step": repr(max_step), "tolerance": repr(tolerance)},
        )
        self.max_step = max_step
        self.tolerance = tolerance


class GridMismatchError(RigidityError, ValueError):
    """Raised when two sampled maps are not defined on the same grid."""

    def __init__(self, left: tuple[int, ...], right: tuple[int, ...]):
        super().__init__(
            f"Grid mismatch: {left} vs {right}",
            code="GRID_MISMATCH",
            details={"left": str(left), "right": str(right)},
        )


__all__ = [
    "BudgetExceededError",
    "DimensionMismatchError",
    "GridMismatchError",
    "NumericalFailureError",
    "PolynomialSyntaxError",
    "PresentationError",
    "ResolutionTooCoarseError",
    "RigidityError",
    "SingularGridError",
]

"""Unified exception hierarchy for the toolkit.

Every error carries the process exit code the CLI reports for it:
0 success, 1 numerical non-convergence, 2 input/parameter error,
3 degenerate dimension.
"""

from typing import Any, Optional


class QexpError(Exception):
    """Base exception for all toolkit errors."""

    def __init__(
        self,
        message: str,
        exit_code: int = 2,
        error_type: str = "qexp_error",
        details: Optional[dict] = None,
    ):
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.error_type = error_type
        self.details = details or {}

    def to_dict(self) -> dict:
        """Convert to the JSON error payload printed by the CLI."""
        return {
            "type": "error",
            "error": {
                "type": self.error_type,
                "message": self.message,
                "details": self.details,
            },
        }


class InvalidInputError(QexpError):
    """Raised when inputs or parameters are malformed or out of range."""

    def __init__(
        self,
        message: str,
        error_type: str = "invalid_input_error",
        details: Optional[dict] = None,
    ):
        super().__init__(message, exit_code=2, error_type=error_type, details=details)


class ShapeMismatchError(InvalidInputError):
    """Raised when matrix shapes or tuple lengths do not line up."""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message, error_type="shape_mismatch_error", details=details)


class NonUnitaryError(InvalidInputError):
    """Raised when a matrix that must be unitary is not, within tolerance."""

    def __init__(self, message: str, residual: Optional[float] = None):
        super().__init__(
            message,
            error_type="non_unitary_error",
            details={"residual": residual} if residual is not None else None,
        )


class HeterogeneousFamilyError(InvalidInputError):
    """Raised when tuples of a family disagree on (n, dim) or the family is empty."""

    def __init__(self, message: str):
        super().__init__(message, error_type="heterogeneous_family_error")


class DegenerateDimensionError(QexpError):
    """Raised when the deflated subspace is {0} and no convention applies."""

    def __init__(self, message: str, dim: int = 1):
        super().__init__(
            message,
            exit_code=3,
            error_type="degenerate_dimension_error",
            details={"dim": dim},
        )


class NoConvergenceError(QexpError):
    """Raised when an iterative solver exhausts its budget."""

    def __init__(self, message: str, iterations: int = 0, residual: Any = None):
        super().__init__(
            message,
            exit_code=1,
            error_type="no_convergence_error",
            details={"iterations": iterations, "residual": residual},
        )
        self.iterations = iterations
        self.residual = residual


class OrderExceededError(InvalidInputError):
    """Raised when a group enumeration would exceed its order cap."""

    def __init__(self, message: str, max_order: int):
        super().__init__(
            message, error_type="order_exceeded_error", details={"max_order": max_order}
        )


class NonInvertibleGeneratorError(InvalidInputError):
    """Raised when a generator is singular or not a bijection."""

    def __init__(self, message: str):
        super().__init__(message, error_type="non_invertible_generator_error")


class SetSizeExceededError(InvalidInputError):
    """Raised when an action's point set is above the configured cap."""

    def __init__(self, message: str, set_size: int, max_set_size: int):
        super().__init__(
            message,
            error_type="set_size_exceeded_error",
            details={"set_size": set_size, "max_set_size": max_set_size},
        )


class NotTransitiveError(InvalidInputError):
    """Raised when a Koopman representation is requested for a non-transitive action."""

    def __init__(self, message: str, orbits: Optional[int] = None):
        super().__init__(
            message,
            error_type="not_transitive_error",
            details={"orbits": orbits} if orbits is not None else None,
        )


class RingRangeError(InvalidInputError):
    """Raised when ring closure is requested outside the supported k range."""

    def __init__(self, message: str, k: int, max_k: int):
        super().__init__(
            message, error_type="ring_range_error", details={"k": k, "max_k": max_k}
        )

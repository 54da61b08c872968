"""
Custom exception hierarchy for polyhopf.

Every error raised on purpose by the library derives from PolyHopfError and carries a stable
error_code, which the command line prints next to the message.
"""

from typing import Any


class PolyHopfError(Exception):
    """
    Base exception for all polyhopf-specific errors.

    All library errors should inherit from this class.
    """

    def __init__(self, message: str, error_code: str | None = None) -> None:
        """
        Initialize a polyhopf error.

        Args:
            message: Human-readable error message
            error_code: Optional error code for categorization
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__


class AlgebraMismatchError(PolyHopfError):
    """Raised when two operands live in different algebras."""

    def __init__(self, left: Any, right: Any) -> None:
        super().__init__(
            f"Incompatible algebras: {left} and {right}", error_code="ALGEBRA_MISMATCH"
        )
        self.left = left
        self.right = right


class UnsupportedAlgebraError(PolyHopfError):
    """Raised when an operation is not defined for the requested algebra."""

    def __init__(self, tag: Any, operation: str) -> None:
        super().__init__(
            f"{operation} is not defined over {tag}", error_code="UNSUPPORTED_ALGEBRA"
        )
        self.tag = tag
        self.operation = operation


class InvalidElementError(PolyHopfError):
    """
    Raised when a value does not satisfy the invariants of its type.

    Covers malformed coefficient arrays, non-unit fiber elements and generators.
    """


class NonInvertibleError(PolyHopfError):
    """Raised when inverting the zero element."""

    def __init__(self) -> None:
        super().__init__("Zero element has no inverse", error_code="NON_INVERTIBLE")


class StructureTableError(PolyHopfError):
    """
    Raised when the relation-generated multiplication table disagrees with the
    Cayley-Dickson table.

    This is a build-time failure: no algebra operation can be trusted afterwards.
    """

    def __init__(self, row: int, column: int, relation: str, doubling: str) -> None:
        message = (
            f"Multiplication table mismatch at e{row}*e{column}: "
            f"relations give {relation}, doubling gives {doubling}"
        )
        super().__init__(message, error_code="STRUCTURE_TABLE_MISMATCH")
        self.row = row
        self.column = column


class FrameInvariantError(PolyHopfError):
    """Raised when a 2 x k matrix is not a Stiefel frame."""

    def __init__(self, sum_name: str, residual: float, tolerance: float) -> None:
        message = (
            f"Stiefel frame invariant {sum_name} violated: residual {residual:.3e} "
            f"exceeds {tolerance:.1e}"
        )
        super().__init__(message, error_code="FRAME_INVARIANT")
        self.sum_name = sum_name
        self.residual = residual
        self.tolerance = tolerance


class PolygonClosureError(PolyHopfError):
    """Raised when edges do not close up or do not have unit perimeter."""

    def __init__(self, quantity: str, residual: float, tolerance: float) -> None:
        message = f"Polygon {quantity} residual {residual:.3e} exceeds {tolerance:.1e}"
        super().__init__(message, error_code="POLYGON_NOT_CLOSED")
        self.quantity = quantity
        self.residual = residual
        self.tolerance = tolerance


class DegeneratePolygonError(PolyHopfError):
    """Raised for the zero polygon, which has no normalization."""

    def __init__(self) -> None:
        super().__init__("All edges are zero", error_code="DEGENERATE_POLYGON")


class DimensionMismatchError(PolyHopfError):
    """Raised when shapes of polygons, frames, rotations or parameters disagree."""

    def __init__(self, what: str, expected: Any, actual: Any) -> None:
        super().__init__(
            f"{what}: expected {expected}, got {actual}", error_code="DIMENSION_MISMATCH"
        )
        self.what = what
        self.expected = expected
        self.actual = actual


class InvalidRotationError(PolyHopfError):
    """Raised when a matrix fails the orthogonality, unitarity or determinant check."""

    def __init__(self, check: str, residual: float, tolerance: float) -> None:
        message = f"Matrix fails {check} check: residual {residual:.3e} exceeds {tolerance:.1e}"
        super().__init__(message, error_code="INVALID_ROTATION")
        self.check = check
        self.residual = residual
        self.tolerance = tolerance


class ZeroFiberError(PolyHopfError):
    """Raised when asking for a fiber element relating two zero spinors."""

    def __init__(self) -> None:
        super().__init__(
            "The fiber over 0 is a single point; no unit witness exists",
            error_code="ZERO_FIBER",
        )


class DegenerateDrawError(PolyHopfError):
    """Raised internally when a random draw is too close to degenerate to orthonormalize."""


class SamplingError(PolyHopfError):
    """Raised when the sampler exhausts its resample budget."""

    def __init__(self, attempts: int) -> None:
        super().__init__(
            f"Sampling failed after {attempts} degenerate draws", error_code="SAMPLING_FAILED"
        )
        self.attempts = attempts


class EnsembleFormatError(PolyHopfError):
    """Raised when an ensemble file cannot be parsed or does not match its header."""

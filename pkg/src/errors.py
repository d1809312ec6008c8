"""Exceptions raised by the Minkowski angle toolkit."""


class MinkowskiError(Exception):
    """Base class for every error raised by this package."""


class PlaneSpecError(MinkowskiError, ValueError):
    """A norm specification failed validation.

    ``path`` names the offending field, e.g. ``"vertices[3]"`` or ``"p"``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class ZeroVectorError(MinkowskiError, ValueError):
    """An operation that needs a nonzero vector received the zero vector."""


class DependentVectorsError(MinkowskiError, ValueError):
    """Input vectors are linearly dependent (or a triangle is degenerate)."""


class ConvexityError(MinkowskiError, ValueError):
    """The operation is only defined in strictly convex planes."""


class AngleDomainError(MinkowskiError, ArithmeticError):
    """An arccos/arcsin argument fell outside [-1, 1] beyond the guard band."""


class QuadratureError(MinkowskiError, ArithmeticError):
    """Adaptive quadrature did not reach the requested accuracy."""


class SearchError(MinkowskiError, ArithmeticError):
    """A bracketing search found no sign change."""


class DetectorDisagreement(MinkowskiError, RuntimeError):
    """Independent characterization detectors returned different verdicts."""

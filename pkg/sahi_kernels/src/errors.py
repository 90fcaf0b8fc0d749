"""Exception hierarchy shared by all sahi_kernels modules."""

from typing import Optional, Tuple


class SahiKernelsError(Exception):
    """Base class for every domain error raised by the package."""


class InvalidComparisonError(SahiKernelsError):
    """Dominance requested between signatures of different length or weight."""


class ShapeError(SahiKernelsError):
    """Length or variable-count mismatch between operands."""


class PoleError(SahiKernelsError):
    """A gamma function was evaluated at (or within tolerance of) a pole."""


class UnsupportedError(SahiKernelsError):
    """The requested parameters lie outside what an exact path supports."""


class PivotError(SahiKernelsError):
    """Two Jack eigenvalues collided during the triangular solve."""

    def __init__(self, message: str, pair: Optional[Tuple[tuple, tuple]] = None):
        super().__init__(message)
        self.pair = pair


class InapplicableError(SahiKernelsError):
    """The hypotheses of a positivity theorem are violated."""


class QuadratureDomainError(SahiKernelsError):
    """A quadrature node hit the singular point phi = 0."""


class ParseError(SahiKernelsError):
    """Malformed signature, rational or polynomial text."""

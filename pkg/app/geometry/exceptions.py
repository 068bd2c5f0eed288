"""
Errors raised by the geometry library.
"""


class GeometryError(Exception):
    """Base class for geometry errors."""


class InvalidModulusError(GeometryError, ValueError):
    """Modulus is reducible, has the wrong degree or h is unsupported."""


class UnsupportedFieldError(GeometryError, ValueError):
    """Operation is not defined for this field size."""


class DegenerateInputError(GeometryError, ValueError):
    """Leading coefficient vanishes."""


class DomainError(GeometryError, ValueError):
    """Argument lies outside the operation's domain."""


class NotReducibleError(GeometryError, ValueError):
    """Cubic cannot be depressed by the standard substitution."""


class PreconditionError(GeometryError, ValueError):
    """Operation precondition does not hold (e.g. a012 = 0)."""


class OutOfScopeError(GeometryError, ValueError):
    """Plane has no rank-1 point."""


class InvalidLabelError(GeometryError, ValueError):
    """Orbit label is not valid for this q."""


class PlaneParseError(GeometryError, ValueError):
    """Plane or pencil input could not be parsed."""


class DependenceError(GeometryError, ValueError):
    """Generators are linearly dependent."""

    def __init__(self, rank, message=None):
        self.rank = rank
        super().__init__(message or f'generators are dependent (rank {rank})')


class InternalInvariantError(GeometryError, RuntimeError):
    """A mathematical invariant failed; indicates a bug, not bad input."""

    def __init__(self, message, record=None):
        self.record = record
        super().__init__(message)

"""Exception hierarchy shared across the package."""


class JonesToolError(Exception):
    """Base class for all errors raised by ajl3."""


class BraidParseError(JonesToolError, ValueError):
    pass


class UnknownToken(BraidParseError):
    pass


class IndexOutOfRange(BraidParseError):
    pass


class OddExponent(JonesToolError, ValueError):
    pass


class DimMismatch(JonesToolError, ValueError):
    pass


class BadSubset(JonesToolError, ValueError):
    pass


class NotHermitian(JonesToolError, ValueError):
    pass


class InvalidState(JonesToolError, ValueError):
    """Matrix fails the density-matrix invariants (Hermitian, unit trace, PSD)."""


class KTooSmall(JonesToolError, ValueError):
    pass


class WordTooLong(JonesToolError, ValueError):
    pass


class StructureViolation(JonesToolError, RuntimeError):
    """A braid unitary left the block pattern every braid image must have.

    Never expected in practice; raising it means the representation is wrong.
    """


class ConsistencyError(JonesToolError, RuntimeError):
    """Two independent computations that must agree did not."""

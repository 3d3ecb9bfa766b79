"""Exception types raised across the package."""


class SymShiftError(Exception):
    """Base class for every error raised by symshift."""


class InvalidParams(SymShiftError, ValueError):
    pass


class InvalidBits(SymShiftError, ValueError):
    pass


class StartsWithZero(SymShiftError, ValueError):
    pass


class NotInM(SymShiftError, ValueError):
    pass


class NotInMStar(NotInM):
    pass


class NotInMpPlus(NotInM):
    pass


class OddLength(SymShiftError, ValueError):
    pass


class NotADivisor(SymShiftError, ValueError):
    pass


class IndexOutOfRange(SymShiftError, IndexError):
    pass


class LengthMismatch(SymShiftError, ValueError):
    pass


class IterationBudgetExceeded(SymShiftError, RuntimeError):
    pass


class StateSpaceTooLarge(SymShiftError, ValueError):
    pass


class WeightOutOfBand(SymShiftError, ValueError):
    pass


class ConstantWeight(SymShiftError, ValueError):
    """The window weight never changes, so no adjusted band exists."""


class NotNormalized(SymShiftError, ValueError):
    pass


class InvariantViolation(SymShiftError, AssertionError):
    """An internal postcondition failed; always a bug, never bad input."""

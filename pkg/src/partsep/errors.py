"""Exception hierarchy.

Everything raised on bad input derives from :class:`PartsepError`, which is a
``ValueError`` so callers that only care about "bad input" can catch that.
"""

from __future__ import annotations


class PartsepError(ValueError):
    pass


class DimensionMismatch(PartsepError):
    pass


# -- density validation -------------------------------------------------------

class ValidationError(PartsepError):
    """A matrix failed one of the density-matrix checks."""


class NotPowerOfTwoDim(ValidationError):
    pass


class NotHermitian(ValidationError):
    pass


class TraceNotOne(ValidationError):
    def __init__(self, trace: complex):
        self.trace = trace
        super().__init__(f"trace is {trace!r}, expected 1")


class NotPositive(ValidationError):
    def __init__(self, min_eigenvalue: float):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(f"minimum eigenvalue {min_eigenvalue!r} is negative")


class NotNormalized(ValidationError):
    pass


# -- state builders -----------------------------------------------------------

class XOutOfRange(PartsepError):
    pass


class NTooSmall(PartsepError):
    pass


class NOutOfRange(PartsepError):
    pass


class WeightsInvalid(PartsepError):
    pass


class CountMismatch(PartsepError):
    pass


class UnsupportedLayout(PartsepError):
    pass


class NotAPermutation(PartsepError):
    pass


# -- partition parsing --------------------------------------------------------

class PartitionError(PartsepError):
    pass


class BadSyntax(PartitionError):
    pass


class IndexOutOfRange(PartitionError):
    pass


class Overlap(PartitionError):
    pass


class Incomplete(PartitionError):
    pass


class EmptySide(PartitionError):
    pass


# -- file formats ---------------------------------------------------------------

class ParseError(PartsepError):
    """Malformed QDM input. ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")

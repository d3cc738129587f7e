"""Exception hierarchy shared by every stage of the checker."""

from __future__ import annotations


class VWUError(Exception):
    """Base class for all library errors."""


class InadmissibleTypeError(VWUError):
    """Raised when a (family, rank) pair is not a finite Cartan type."""


class DimensionMismatchError(VWUError):
    """Raised when a vector does not live in the system's ambient space."""


class NormalizationError(VWUError):
    """Raised when user-supplied coordinates cannot be normalized."""


class PartitionError(VWUError):
    """Raised on malformed partitions or violated partition preconditions."""


class SequenceClassError(VWUError):
    """Raised when a sequence value lies outside its declared lattice class."""


class NotDominantError(VWUError):
    """Raised when an operation requires a dominant weight."""


class ClosureTableError(VWUError):
    """Raised when an orbit closure table file is malformed."""


class UnsupportedFactorError(VWUError):
    """Raised when a factor needs orbit data that has not been loaded."""

    def __init__(self, factor: str, reason: str = "no closure table loaded") -> None:
        super().__init__(f"unsupported factor {factor}: {reason}")
        self.factor = factor
        self.reason = reason


class HeckeSyntaxError(VWUError):
    """Raised when a Hecke algebra element cannot be parsed."""


class DatumMismatchError(VWUError):
    """Raised when elements of different Hecke algebras are combined."""


class CheckerInvariantError(VWUError):
    """Raised when an internal consistency check of the checker fails."""

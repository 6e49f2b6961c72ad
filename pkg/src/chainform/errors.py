"""Exception hierarchy.  Class names double as the error names the CLI prints."""


class ChainformError(Exception):
    """Base class for domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class ParseError(ChainformError):
    pass


class OutOfRange(ChainformError):
    pass


class NotGraded(ChainformError):
    pass


class NoUniqueBounds(ChainformError):
    pass


class CycleDetected(ChainformError):
    pass


class DuplicateCover(ChainformError):
    pass


class NotComparable(ChainformError):
    pass


class NotRelativeRLabeled(ChainformError):
    pass


class NotSymmetric(ChainformError):
    pass


class WeightMismatch(ChainformError):
    pass


class NotContained(ChainformError):
    pass


class TooLong(ChainformError):
    pass


class OutOfBounds(ChainformError):
    pass


class InvalidPermutation(ChainformError):
    pass


class RankTooLarge(ChainformError):
    pass


class FileUnreadable(ChainformError):
    pass

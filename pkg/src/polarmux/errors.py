"""Exception types shared across the package."""


class PolarmuxError(Exception):
    """Base class for all package-specific errors."""


class SizeOverflow(PolarmuxError, ValueError):
    """Requested object exceeds the materialization guard."""


class DimensionMismatch(PolarmuxError, ValueError):
    """Operand shapes are incompatible."""


class OutOfRange(PolarmuxError, ValueError):
    """Index or bound outside the valid range."""


class RankDeficient(PolarmuxError, ArithmeticError):
    """A matrix that must be full rank is singular."""


class InvalidQ(PolarmuxError, ValueError):
    """Subset count must be a power of two dividing the block length."""


class UnsupportedM(PolarmuxError, ValueError):
    """Channel count too large for the supported symbol fields."""


class ConstructionFailed(PolarmuxError, RuntimeError):
    """Randomized matrix-set search exhausted its attempt budget."""


class BadComposition(PolarmuxError, ValueError):
    """Rate split does not match the required block count."""


class PayloadLengthMismatch(PolarmuxError, ValueError):
    """Payload bit count does not match the stream geometry."""


class CrcMismatch(PolarmuxError):
    """A recovered block failed its embedded integrity check."""


class StreamFormatError(PolarmuxError, ValueError):
    """Stream file is malformed (bad magic, version, or header)."""


class NoProgress(PolarmuxError):
    """Stream decoding reached a fixpoint with unsolved groups.

    Carries the partial decode result in ``result`` plus the stuck
    per-channel frontier and the indices of unsolved groups.
    """

    def __init__(self, message, result=None, frontier=None, unsolved=None):
        super().__init__(message)
        self.result = result
        self.frontier = frontier
        self.unsolved = unsolved

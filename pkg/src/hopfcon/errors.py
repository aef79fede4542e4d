"""Exception types shared across the package."""


class HopfconError(Exception):
    """Base class for all hopfcon-specific errors."""


class DimensionMismatchError(HopfconError, ValueError):
    """Amplitude count, factor dimensions, or operator shapes disagree."""


class ZeroNormError(HopfconError, ValueError):
    """A state vector with (numerically) zero norm was supplied."""


class NormalizationError(HopfconError, ValueError):
    """A state vector is too far from unit norm to be accepted."""


class SplitMismatchError(HopfconError, ValueError):
    """The requested bipartition does not fit the state's factor dimensions."""

"""Exception hierarchy for the magiclsb package."""


class StegoError(Exception):
    """Base class for all magiclsb errors."""


class DimensionMismatch(StegoError):
    """Two grids that must share a shape do not."""


class IntensityDeltaTooLarge(StegoError):
    """Requested intensity change exceeds the one-step LSB budget."""


class OutOfGamut(StegoError):
    """HSI triple has no RGB representation inside the unit cube."""


class UnsupportedOrder(StegoError):
    """No magic square exists for the requested order."""


class EmptyKey(StegoError):
    """Secret key must contain at least one byte."""


class UnalignedLength(StegoError):
    """Bit or byte sequence length violates an alignment requirement."""


class BlockLengthMismatch(StegoError):
    """The four message blocks do not have equal, byte-aligned lengths."""


class OddDimensions(StegoError):
    """Width and height must both be even."""


class NonSquare(StegoError):
    """Operation requires a square grid."""


class TooSmall(StegoError):
    """Image is too small to hold even an empty payload."""


class TileMismatch(StegoError):
    """Quadrant tiles are not four equal squares."""


class CapacityExceeded(StegoError):
    """Bit run does not fit in the traversal range."""


class PayloadTooLarge(StegoError):
    """Payload exceeds the carrier capacity."""


class CorruptHeader(StegoError):
    """Decoded header is inconsistent: wrong key or not a stego image."""


class ZeroDenominator(StegoError):
    """Metric denominator is zero (degenerate all-zero image)."""

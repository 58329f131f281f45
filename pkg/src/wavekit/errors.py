"""Typed errors raised across the toolkit."""


class WavekitError(Exception):
    """Base class for all toolkit errors."""


class UnsupportedWavelet(WavekitError):
    pass


class NotOrthogonalFamily(WavekitError):
    pass


class SignalTooShort(WavekitError):
    pass


class OddLengthPeriodic(WavekitError):
    pass


class LengthMismatch(WavekitError):
    pass


class TooManyLevels(WavekitError):
    pass


class MalformedDecomposition(WavekitError):
    pass


class ImageTooSmall(WavekitError):
    pass


class DimensionMismatch(WavekitError):
    pass


class ShapeMismatch(WavekitError):
    pass


class ZeroReference(WavekitError):
    pass


class EmptyData(WavekitError):
    pass


class DegenerateFrame(WavekitError):
    pass


class MalformedWav(WavekitError):
    pass


class UnsupportedEncoding(WavekitError):
    pass


class MalformedPgm(WavekitError):
    pass


class UnsupportedMaxval(WavekitError):
    pass


class IoFailure(WavekitError):
    pass

"""Exception hierarchy shared by every module."""


class KronError(ValueError):
    """Base class for all errors raised by kronsat."""


class ShapeError(KronError):
    """A partition violates a length or monotonicity constraint."""


class WeightMismatch(KronError):
    """Partitions that must share a weight do not."""


class EmptyRange(KronError):
    pass


class ParameterError(KronError):
    pass


class OracleOverflow(KronError):
    """The brute-force oracle was asked for a symmetric group above its limit."""


class InsufficientSamples(KronError):
    pass


class FitMismatch(KronError):
    """A fitted quasipolynomial disagrees with a validation sample.

    Usually means the period or degree is too small.
    """


class ShapeDecompositionError(KronError):
    pass


class VerifyMismatch(KronError):
    """Two independent computation routes disagreed."""

"""Exception types shared across the package."""


class TwoBridgeError(Exception):
    """Base class for all package errors."""


class ZeroDenominator(TwoBridgeError):
    """An intermediate tail of a continued fraction evaluated to zero."""


class InvalidInput(TwoBridgeError):
    """A precondition on a rational or continued fraction was violated."""


class NotPositiveKnot(TwoBridgeError):
    """The rational has no positive-form continued fraction expansion."""


class NonIntegerResult(TwoBridgeError):
    """An exact computation that must be integral produced a fraction."""


class ParseError(TwoBridgeError):
    """Malformed continued-fraction or rational text."""


class CheckpointCorrupt(TwoBridgeError):
    """A checkpoint directory does not match the requested sweep config."""

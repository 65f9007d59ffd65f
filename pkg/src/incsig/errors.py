"""Exception types shared across the library."""


class IncsigError(Exception):
    """Base class for all library errors."""


class InvalidParams(IncsigError):
    """Scheme parameters violate b = k*d, d >= 2, k >= 1 or byte alignment."""


class WrongInputLength(IncsigError):
    """Randomize input is not the configured 2b-bit link size."""


class MalformedPadding(IncsigError):
    """Block sequence is not the image of any raw string under pad()."""


class IndexOutOfRange(IncsigError):
    """Edit indices fall outside the editable block range."""


class EmptyResult(IncsigError):
    """Delete would remove every block of the document."""


class ChainLengthMismatch(IncsigError):
    """Random chain length does not equal block count + d - 1."""


class FreshBlockCountMismatch(IncsigError):
    """Number of fresh sub-blocks does not match the edit operation."""


class MalformedSignature(IncsigError):
    """Serialized signature fails structural validation."""


class MalformedScript(IncsigError):
    """Edit-script line cannot be parsed."""


class TooShort(IncsigError):
    """Legacy pair-chaining hash needs at least two blocks."""

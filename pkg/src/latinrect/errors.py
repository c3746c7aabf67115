"""Exception hierarchy shared by the library and the CLI."""


class LatinRectError(Exception):
    """Base class for all errors raised by latinrect."""


class MalformedInputError(LatinRectError, ValueError):
    """Text could not be parsed (bad token, wrong count, value out of range)."""


class NotLatinError(LatinRectError, ValueError):
    """A table repeats a symbol in some row or column."""


class OrderMismatchError(LatinRectError, ValueError):
    pass


class NotAGroupError(LatinRectError, ValueError):
    pass


class NotARectangleError(LatinRectError, ValueError):
    """Four cells do not satisfy xy = zu = a, xu = zy = b."""


class SearchBoundError(LatinRectError):
    """Order is larger than the configured bound of an exhaustive search."""

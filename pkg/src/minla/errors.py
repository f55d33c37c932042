"""Exception types raised by :mod:`minla`."""


class MinlaError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraph(MinlaError, ValueError):
    pass


class InvalidArrangement(MinlaError, ValueError):
    pass


class MalformedInterval(MinlaError, ValueError):
    pass


class RangeOutOfBounds(MinlaError, ValueError):
    pass


class PreconditionViolated(MinlaError, ValueError):
    pass


class TooLarge(MinlaError, ValueError):
    """The instance exceeds the size limit of an exhaustive procedure."""


class CostOverflow(MinlaError, OverflowError):
    pass


class ParseError(MinlaError, ValueError):
    """A text file does not follow the expected format."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno

"""Exception hierarchy shared by every module."""


class FLLError(Exception):
    """Base class for all errors raised by fllmetric."""


class AlphabetError(FLLError, ValueError):
    """A symbol lies outside Z_m, or two words use different alphabets."""


class ParseError(FLLError, ValueError):
    pass


class LengthError(FLLError, ValueError):
    pass


class RangeError(FLLError, ValueError):
    """A radius, deletion count or segment count is outside its domain."""


class DomainError(FLLError, ValueError):
    """The requested formula does not apply to this alphabet size."""


class SingletonError(FLLError, ValueError):
    pass


class CapacityError(FLLError):
    """An exhaustive enumeration would exceed the configured cap."""

    def __init__(self, parameter: str, size: int, cap: int):
        super().__init__(f"{parameter}: enumeration size {size} exceeds cap {cap}")
        self.parameter = parameter
        self.size = size
        self.cap = cap


class UsageError(FLLError):
    pass

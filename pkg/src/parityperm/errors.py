"""Exception hierarchy shared by every module of the package."""


class ParityPermError(Exception):
    """Base class for all errors raised by parityperm."""


class DuplicateLetter(ParityPermError, ValueError):
    pass


class NonPositiveLetter(ParityPermError, ValueError):
    pass


class BadSupport(ParityPermError, ValueError):
    """Cycles do not cover exactly {1, ..., n}."""


class OddLength(ParityPermError, ValueError):
    pass


class RangeError(ParityPermError, ValueError):
    pass


class NotInDomain(ParityPermError, ValueError):
    """A map was applied outside the set it is defined on."""


class DimensionMismatch(ParityPermError, ValueError):
    pass


class NotRealizable(ParityPermError, ValueError):
    """The sign vector does not describe a region (its constraints form a cycle)."""


class CyclicConstraints(NotRealizable):
    pass


class BruteForceBoundExceeded(ParityPermError):
    pass


class Overflow(ParityPermError, ArithmeticError):
    """A value left the 64-bit unsigned range the counters are guaranteed for."""


class InexactDivision(ParityPermError, ArithmeticError):
    pass


class NotDivisible(InexactDivision):
    pass


U64_MAX = 2**64 - 1


def checked(value: int) -> int:
    """Return ``value`` if it fits an unsigned 64-bit integer, else raise Overflow."""
    if value < 0 or value > U64_MAX:
        raise Overflow(f"value {value} outside the unsigned 64-bit range")
    return value

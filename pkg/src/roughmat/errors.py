"""Exception types raised across the package."""


class RoughMatError(Exception):
    """Base class for every error raised by roughmat."""


# fields
class NonPrimeModulus(RoughMatError, ValueError):
    pass


class MixedFields(RoughMatError, TypeError):
    pass


class DivisionByZero(RoughMatError, ZeroDivisionError):
    pass


# linalg
class NotSquare(RoughMatError, ValueError):
    pass


class InfiniteField(RoughMatError, ValueError):
    pass


class EnumerationTooLarge(RoughMatError, ValueError):
    pass


class UnknownLabel(RoughMatError, KeyError):
    pass


class NonIntegerEntry(RoughMatError, ValueError):
    pass


class LengthMismatch(RoughMatError, ValueError):
    pass


# roughsets
class UniverseMismatch(RoughMatError, ValueError):
    pass


class UniverseTooLarge(RoughMatError, ValueError):
    pass


class InvalidPartition(RoughMatError, ValueError):
    pass


# matroid
class ClosureTooLarge(RoughMatError, ValueError):
    pass


class GroundTooLarge(RoughMatError, ValueError):
    pass


class TooManyTransversals(RoughMatError, ValueError):
    pass


class NotAPartitionMatrix(RoughMatError, ValueError):
    pass


class GroundMismatch(RoughMatError, ValueError):
    pass


# binrel
class WrongField(RoughMatError, ValueError):
    pass


class NotBinaryDependence(RoughMatError, ValueError):
    pass


# file formats
class ParseError(RoughMatError, ValueError):
    pass

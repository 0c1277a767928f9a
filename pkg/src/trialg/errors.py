"""Exception hierarchy shared by every trialg module."""


class TrialgError(Exception):
    """Base class for all errors raised by trialg."""


class DivisionByZero(TrialgError, ZeroDivisionError):
    pass


class FieldMismatch(TrialgError):
    pass


class ZeroPolynomial(TrialgError):
    pass


class ResourceExceeded(TrialgError):
    """A configured enumeration cap was hit; the answer is unknown, not negative."""


class AmbientMismatch(TrialgError):
    pass


class NotSquare(TrialgError):
    pass


class SizeMismatch(TrialgError):
    pass


class Singular(TrialgError):
    pass


class EmptyGenerators(TrialgError):
    pass


class CharacteristicTooSmall(TrialgError):
    """The trace-form radical criterion is only valid for char 0 or p > n."""


class NotAnIdeal(TrialgError):
    pass


class NotTriangularForFlag(TrialgError):
    pass


class NotTriangular(TrialgError):
    pass


class ZeroVector(TrialgError):
    pass


class ParseError(TrialgError):
    pass

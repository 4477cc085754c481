"""Exception hierarchy.

ValidationError covers every rejected precondition (CLI exit code 2);
InvariantViolation marks an internal consistency failure (CLI exit code 1).
"""


class CodesError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(CodesError):
    """A caller-supplied parameter or input violates a documented precondition."""


class InvariantViolation(CodesError):
    """An internal cross-check failed; indicates a bug, never bad user input."""


class AssertionFailed(CodesError):
    """A cataloged reference code did not reproduce one of its recorded facts."""


# -- field construction and arithmetic ---------------------------------------

class NotPrime(ValidationError):
    pass


class NotIrreducible(ValidationError):
    pass


class FieldTooLarge(ValidationError):
    pass


class DivisionByZero(ValidationError, ZeroDivisionError):
    pass


class MixedFields(ValidationError):
    pass


class OrderUnavailable(ValidationError):
    pass


# -- polynomials --------------------------------------------------------------

class ZeroPolynomial(ValidationError):
    pass


class ExponentOutOfRange(ValidationError):
    pass


class NotAClosedCoset(ValidationError):
    pass


# -- cosets and defining sets --------------------------------------------------

class NotCoprime(ValidationError):
    pass


class EmptySet(ValidationError):
    pass


# -- cyclic codes ---------------------------------------------------------------

class NotGaloisClosed(ValidationError):
    pass


class NoSplittingField(ValidationError):
    pass


class LengthMismatch(ValidationError):
    pass


# -- constructions ---------------------------------------------------------------

class ParameterViolation(ValidationError):
    pass


class LocalityDoesNotDivide(ParameterViolation):
    pass


class UnpairedCoset(ParameterViolation):
    pass


class ParityViolation(ParameterViolation):
    pass


class DivisibilityViolation(ParameterViolation):
    pass


# -- analysis and repair ----------------------------------------------------------

class LocalityNotVerified(CodesError):
    """No recovering structure could be certified for one or more coordinates."""

    def __init__(self, message: str, coordinates=()):
        super().__init__(message)
        self.coordinates = tuple(coordinates)


class NoLocalCheck(ValidationError):
    pass

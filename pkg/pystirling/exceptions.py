"""
Pystirling exceptions raised by the polynomial ring, the series algebra and the polynomial families.
"""
from typing import Any, List


class PystirlingException(Exception):
    """
    Base exception for all pystirling exceptions
    """


class NegativePowerOfNonUnit(PystirlingException):
    """
    A polynomial with more than one term was raised to a negative power.
    """

    def __init__(self, term_count: int, exponent: int, *args: object) -> None:
        super().__init__(
            f"Only single-term units can be raised to negative powers, got {term_count} terms with exponent {exponent}",
            *args,
        )


class InvalidLaurentExponent(PystirlingException):
    """
    A negative exponent was requested for an indeterminate other than X_0 and X_1.
    """

    def __init__(self, index: int, exponent: int, *args: object) -> None:
        super().__init__(
            f"Negative exponents are only allowed for X0 and X1, got X{index}^{exponent}",
            *args,
        )


class NonInvertibleSubstitution(PystirlingException):
    """
    A variable occurring with a negative exponent was assigned a polynomial which is not a unit.
    """

    def __init__(self, index: int, *args: object) -> None:
        super().__init__(f"X{index} occurs with a negative exponent but was assigned a non-unit", *args)


class ZeroDenominator(PystirlingException):
    """
    A polynomial with negative exponents was unified or evaluated at zero.
    """

    def __init__(self, index: int, *args: object) -> None:
        super().__init__(f"X{index} occurs with a negative exponent and can not be evaluated at 0", *args)


class NotAUnit(PystirlingException):
    """
    A power series without multiplicative inverse was used where a unit is required.
    """

    def __init__(self, operation: str, *args: object) -> None:
        super().__init__(f"{operation} requires a unit series (nonzero constant term)", *args)


class CompositionCaseViolation(PystirlingException):
    """
    Neither the 0-case nor the 1-case of composition applies to the given operands.
    """

    def __init__(self, case: str, reason: str, *args: object) -> None:
        super().__init__(f"Composition {case} not applicable: {reason}", *args)


class NotInvertible(PystirlingException):
    """
    A power series has no compositional inverse (constant term nonzero or linear term zero).
    """

    def __init__(self, operation: str, *args: object) -> None:
        super().__init__(f"{operation} requires an invertible series (c0 = 0 and c1 != 0)", *args)


class NotRegular(PystirlingException):
    """
    A B-representable family has no orthogonal companion since its leading entry is not a unit.
    """

    def __init__(self, leading: Any, *args: object) -> None:
        super().__init__(f"Family is not regular, leading entry Q(1,1) = {leading} is not a unit", *args)


class DomainViolation(PystirlingException):
    """
    An identity was requested outside of its domain of validity.
    """

    def __init__(self, operation: str, reason: str, *args: object) -> None:
        super().__init__(f"{operation}: {reason}", *args)


class UnsupportedTerm(PystirlingException):
    """
    A function term contains a node which can not be translated into a polynomial.
    """

    def __init__(self, term: Any, *args: object) -> None:
        super().__init__(f"Unsupported function term {term!r}", *args)


class RouteMismatch(PystirlingException):
    """
    Two independent computation routes produced different results.
    """

    def __init__(self, quantity: str, first: Any, second: Any, *args: object) -> None:
        super().__init__(f"Routes for {quantity} disagree: {first} != {second}", *args)


class InvalidSeriesDocument(PystirlingException):
    """
    A series or polynomial document could not be parsed.
    """

    def __init__(self, path: str, reason: str, *args: object) -> None:
        super().__init__(f"Invalid document {path}: {reason}", *args)


class InvalidConfig(PystirlingException):
    """
    A config file is missing, is not valid JSON or does not hold an object.
    """

    def __init__(self, path: str, reason: str, *args: object) -> None:
        super().__init__(f"Invalid config file {path}: {reason}", *args)


class UnknownFamily(PystirlingException):
    """
    A family name was requested which does not exist.
    """

    def __init__(self, available: List[str], name: str, *args: object) -> None:
        super().__init__(f"Unknown family {name}. Expected one of {available}", *args)


class UnknownSuite(PystirlingException):
    """
    A verification suite was requested which does not exist.
    """

    def __init__(self, available: List[str], name: str, *args: object) -> None:
        super().__init__(f"Unknown verification suite {name}. Expected one of {available}", *args)

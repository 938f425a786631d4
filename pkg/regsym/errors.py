"""Exceptions raised by regsym.

Every error the engine can raise derives from `RegsymError`, so callers (the decision pipeline, the CLI) can turn
them into an Inconclusive verdict or a usage exit code without catching unrelated exceptions.
"""


class RegsymError(Exception):
    """Base class for all regsym errors."""


class SymbolSyntaxError(RegsymError, ValueError):
    """Raised when a symbol string does not follow the grammar.

    Attributes
    ----------
    position : int
        Zero-based offset of the offending character in the input text.
    expected : str
        Human readable description of the token the parser was waiting for.
    """

    def __init__(self, message: str, position: int, expected: str) -> None:
        super().__init__(f"{message} at position {position} (expected {expected})")
        self.position = position
        self.expected = expected


class UnsupportedExponent(RegsymError, ValueError):
    """Raised for negative or non-integer powers in a symbol string."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class ZeroPolynomial(RegsymError, ValueError):
    """Raised when an operation needs a nonzero symbol."""


class NotAPolynomialInXi(RegsymError, ValueError):
    """Raised when the Newton polygon is requested for a symbol without any xi dependence."""


class PrecisionExhausted(RegsymError):
    """Raised when edge polynomial roots cannot be certified at the working precision."""


class NumericOverflow(RegsymError, ArithmeticError):
    """Raised when a residual leaves the double precision range."""


class IndexOutOfRange(RegsymError, IndexError):
    """Raised when an elementary symmetric function is requested beyond the number of values."""


class CoincidentNodes(RegsymError, ValueError):
    """Raised when interpolation nodes that must be distinct coincide."""


class StiffnessFailure(RegsymError):
    """Raised by the integrator when the step size collapses."""


class LeadingCoeffVanishes(RegsymError):
    """Raised when the leading coefficient of an operator vanishes on the whole integration span."""


class InsufficientRange(RegsymError, ValueError):
    """Raised when a growth sample is too short to classify."""


class FactorizationIdentityError(RegsymError, AssertionError):
    """Raised when an operator expansion breaks one of the exactly checkable factorization identities."""


class FixtureFormatError(RegsymError, ValueError):
    """Raised for malformed fixture files."""

"""Exception hierarchy for the engine."""


class DivpowError(Exception):
    """Base class for every error raised by this package."""


class IncompatibleOperandsError(DivpowError, ValueError):
    """Operands live over different variable tables or moduli."""


class DomainError(DivpowError, ValueError):
    """An argument is outside the domain of an operation."""


class UnderflowError(DivpowError, ValueError):
    """A clearing target is smaller than some denominator exponent."""


class UnsupportedSizeError(DivpowError, ValueError):
    """The cochain machinery only handles bases of size three or less."""


class NoHigherDegreeError(DivpowError, ValueError):
    """Coboundary requested from the top degree."""


class SizeError(DivpowError, ValueError):
    """A parameter exceeds the configured desk-scale bound."""


class EngineError(DivpowError):
    """Internal consistency failure. Never expected on valid input."""


class DivisibilityError(EngineError, ArithmeticError):
    """An exact integer division left a remainder."""


class DerivationMismatchError(EngineError):
    """Operator output disagrees with the closed form it should reproduce."""


class ParseError(DivpowError, ValueError):
    """Syntax error in a polynomial, operator or job document."""

    def __init__(self, message, source="", pos=None, line=None, column=None):
        self.source = source
        self.pos = pos
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif pos is not None:
            where = f" at position {pos}"
        super().__init__(message + where)


class UndeclaredVariableError(ParseError):
    """An identifier is not in the variable table."""

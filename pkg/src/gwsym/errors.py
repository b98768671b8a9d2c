"""Exception hierarchy shared by all gwsym modules."""


class GWSymError(Exception):
    """Base class for every error raised by this package."""


class ZeroElement(GWSymError, ValueError):
    pass


class UnreducibleClass(GWSymError, ValueError):
    """Square-class reduction needs a factorization beyond the trial-division bound."""


class FieldMismatch(GWSymError, ValueError):
    pass


class UnsupportedField(GWSymError, ValueError):
    pass


class BadUnitPart(GWSymError, ValueError):
    """A function-field unit part vanishes or has a pole at t = 0."""


class SingularGram(GWSymError, ValueError):
    pass


class LengthMismatch(GWSymError, ValueError):
    pass


class OddPower(GWSymError, ValueError):
    pass


class WrongBidegree(GWSymError, ValueError):
    pass


class NonIntegralH(GWSymError, ArithmeticError):
    pass


class NonIntegralCoefficient(GWSymError, ArithmeticError):
    pass


class BadConstantTerm(GWSymError, ValueError):
    pass


class NotSquarefree(GWSymError, ValueError):
    pass


class GuardExceeded(GWSymError, ValueError):
    """A brute-force computation was asked for a size beyond its guard."""


class ParseError(GWSymError, ValueError):
    def __init__(self, offset, expected, text=None):
        self.offset = offset
        self.expected = tuple(expected)
        self.text = text
        msg = f"at offset {offset}: expected one of {', '.join(self.expected)}"
        super().__init__(msg)

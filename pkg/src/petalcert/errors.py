"""Exception hierarchy shared by all petalcert modules."""


class PetalcertError(Exception):
    """Base class for all library errors."""


class DivisionByZero(PetalcertError):
    pass


class NonFiniteValue(PetalcertError):
    pass


class BackendMismatch(PetalcertError):
    pass


class OutOfRange(PetalcertError):
    pass


class NotAUnit(PetalcertError):
    pass


class NotDivisible(PetalcertError):
    def __init__(self, message, exponent=None):
        super().__init__(message)
        self.exponent = exponent


class ExprSyntaxError(PetalcertError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(PetalcertError):
    def __init__(self, name, position=None):
        msg = f"unknown variable {name!r}"
        if position is not None:
            msg += f" (at position {position})"
        super().__init__(msg)
        self.name = name
        self.position = position


class NegativeExponent(PetalcertError):
    pass


class GermFileError(PetalcertError):
    pass


class OrderTooLow(PetalcertError):
    pass


class NotTangentToIdentity(PetalcertError):
    pass


class NotPolynomialInput(PetalcertError):
    pass


class SaturationUnavailable(PetalcertError):
    pass


class NotCharacteristic(PetalcertError):
    pass


class NonRationalDirection(PetalcertError):
    pass


class NotInvariant(PetalcertError):
    pass


class ZeroDenominator(PetalcertError):
    pass


class InsufficientPrecision(PetalcertError):
    pass


class NotIsolated(PetalcertError):
    pass


class TruncationLoss(UserWarning):
    """A parsed or computed term exceeded the working truncation order."""

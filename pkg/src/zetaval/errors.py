"""Exception hierarchy shared by all evaluators."""


class ZetavalError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ZetavalError):
    """Input lies outside the mathematical domain of the operation."""


class DivisionByZeroInterval(ZetavalError):
    """Interval divisor contains zero."""


class UncertifiedDivisor(ZetavalError):
    """Complex-box divisor could not be certified nonzero."""


class PoleProximity(ZetavalError):
    """Argument box contains a pole of the function being evaluated."""


class NotPrime(ZetavalError):
    """An argument required to be prime failed the primality check."""


class SingularModel(ZetavalError):
    """Weierstrass model has discriminant zero, so it is not an elliptic curve."""

"""Exception hierarchy shared by every module of the package."""


class TowerError(Exception):
    """Base class for all errors raised by this package."""


class PadicError(TowerError, ArithmeticError):
    pass


class NotPrime(PadicError, ValueError):
    pass


class PrimeMismatch(PadicError):
    pass


class DenominatorNotUnit(PadicError):
    pass


class NotAUnit(PadicError):
    pass


class NotAResidue(PadicError):
    pass


class BranchInvalid(PadicError):
    pass


class EvenPrimeUnsupported(PadicError):
    pass


class ZeroInput(PadicError, ValueError):
    pass


class PrecisionExceeded(PadicError):
    pass


class InsufficientPrecision(PadicError):
    pass


class NoUnitSeed(TowerError, ValueError):
    """Every seed is divisible by the prime, so the tower is disconnected."""


class AllCoefficientsIndistinguishableFromZero(TowerError):
    pass


class Disconnected(TowerError):
    pass


class InternalConsistencyError(TowerError, AssertionError):
    pass


class LevelTooLarge(TowerError):
    """A tower level would exceed the configured vertex cap."""


class InsufficientLevels(TowerError):
    pass


class ParseError(TowerError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: " if column else f"line {line}: "
        super().__init__(where + message)


class SemanticError(TowerError, ValueError):
    pass

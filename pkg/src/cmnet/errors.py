"""Exception hierarchy shared by every module."""


class CMNetError(Exception):
    """Base class for all library errors."""


class ParamsMismatch(CMNetError):
    pass


class DivisionByZero(CMNetError, ZeroDivisionError):
    pass


class ParseError(CMNetError, ValueError):
    pass


class ZeroDivisor(CMNetError, ZeroDivisionError):
    pass


class GeneratorNotFound(CMNetError):
    pass


class ZeroElement(CMNetError, ValueError):
    pass


class IncompleteSupport(CMNetError):
    pass


class NegativeValuation(CMNetError):
    pass


class NotIntegral(CMNetError, ValueError):
    pass


class NotOnCurve(CMNetError, ValueError):
    pass


class NonIntegralModel(CMNetError):
    pass


class SingularPoint(CMNetError):
    pass


class BoundExceeded(CMNetError):
    pass


class TorsionCollision(CMNetError):
    pass


class DegenerateTransformedPair(CMNetError):
    pass


class PreconditionError(CMNetError, ValueError):
    """A verifier was asked to check a configuration outside its hypotheses."""


class NotAnnihilating(PreconditionError):
    pass


class SingularBase(PreconditionError):
    pass


class HypothesisNotMet(PreconditionError):
    pass


class NoDecomposition(CMNetError):
    pass


class OddDenominatorValuation(CMNetError):
    pass


class OddGValue(CMNetError):
    pass


class ConfigError(CMNetError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SingularCurve(CMNetError, ValueError):
    pass


class InvalidBasePair(CMNetError, ValueError):
    pass

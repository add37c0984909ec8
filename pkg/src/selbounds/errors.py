"""Exception types shared across the package."""


class SelboundsError(Exception):
    """Base class for all errors raised by this package."""


# --- descriptor construction -------------------------------------------------

class NonPositiveLambda(SelboundsError):
    pass


class NegativeRealMu(SelboundsError):
    pass


class EmptyGammaFactors(SelboundsError):
    pass


class ZeroTWithoutRealPointFlag(SelboundsError):
    pass


class UnknownBuiltin(SelboundsError):
    pass


class NonPrimitiveCharacter(SelboundsError):
    pass


class LogTauTooSmall(SelboundsError):
    pass


# --- arithmetic tables -------------------------------------------------------

class LimitTooLarge(SelboundsError):
    pass


class OutOfTableRange(SelboundsError):
    pass


class XBelowTwo(SelboundsError):
    """x from the (x, y) substitution came out below 2: tau too small for (sigma, alpha)."""


class YBelowTwo(SelboundsError):
    pass


# --- closed-form kernel ------------------------------------------------------

class SingularAtUEqualsOne(SelboundsError):
    pass


class DomainViolation(SelboundsError):
    pass


class NegativeArgument(SelboundsError):
    pass


class QuadratureFailure(SelboundsError):
    pass


# --- certified bounds --------------------------------------------------------

class PreconditionFailed(SelboundsError):
    """A checkable numeric range condition of a stated bound does not hold.

    The offending condition is named in the message.
    """


class MissingEulerOrder(SelboundsError):
    pass


class StrongLambdaRequired(SelboundsError):
    pass


class NoCaseApplies(SelboundsError):
    pass


class NotEntire(SelboundsError):
    pass


class EulerOrderMismatch(SelboundsError):
    pass


class ConductorTooSmall(SelboundsError):
    pass


# --- explicit formula / zero data ---------------------------------------------

class EmptyDataset(SelboundsError):
    pass


class NearSingularity(SelboundsError):
    pass


class DatasetTooShort(SelboundsError):
    pass


class ParseError(SelboundsError):
    pass


class NotMonotone(SelboundsError):
    pass


class DensityImplausible(SelboundsError):
    pass


# --- L-function evaluation ----------------------------------------------------

class PoleAtOne(SelboundsError):
    pass


class AccuracyNotReached(SelboundsError):
    pass


class ZeroOnPath(SelboundsError):
    pass


# --- optimization --------------------------------------------------------------

class EmptyFeasibleSet(SelboundsError):
    pass

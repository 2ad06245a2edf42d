"""Exception hierarchy.

Two families: :class:`ValidationError` for inputs that violate a stated
precondition (bad grids, non-positive curvature, out-of-range parameters) and
:class:`NumericalError` for computations that could not produce a trustworthy
number. The CLI maps them to exit codes 1 and 2.
"""


class QLMassError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(QLMassError, ValueError):
    pass


class NumericalError(QLMassError, ArithmeticError):
    pass


# -- surface ----------------------------------------------------------------
class GridMismatch(ValidationError):
    pass


class NonClosedPole(ValidationError):
    pass


class NonPositiveAlpha(ValidationError):
    pass


class NonPositiveLambda(ValidationError):
    pass


class InvalidProfile(ValidationError):
    pass


# -- embedding --------------------------------------------------------------
class NotEmbeddableAsRevolution(ValidationError):
    pass


class PoleSingularity(NumericalError):
    pass


class DegenerateProfile(NumericalError):
    pass


# -- schwarzschild ----------------------------------------------------------
class InsideHorizon(ValidationError):
    pass


class LambdaOutOfRange(ValidationError):
    pass


# -- masses / critical ------------------------------------------------------
class EmptyBracket(NumericalError):
    pass


class CertificateFailed(NumericalError):
    pass


class NotRound(ValidationError):
    pass


# -- algebra ----------------------------------------------------------------
class NoSignChange(NumericalError):
    pass


class NotDecreasing(NumericalError):
    pass


# -- metric tools -----------------------------------------------------------
class DegenerateLeaf(ValidationError):
    pass


class NonPositiveConformalFactor(ValidationError):
    pass


class FactorNonPositive(ValidationError):
    pass


# -- generators -------------------------------------------------------------
class InvalidSpec(ValidationError):
    pass

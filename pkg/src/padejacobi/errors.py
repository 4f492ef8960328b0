"""Exception hierarchy shared by all modules."""


class PadeJacobiError(Exception):
    """Base class for all library errors."""


class AllZero(PadeJacobiError):
    """Every stored series coefficient vanishes."""


class DegreeViolation(PadeJacobiError):
    """Rational function is unbounded at infinity."""


class NonConvergence(PadeJacobiError):
    """Iterative root refinement failed to converge."""


class NotMonic(PadeJacobiError):
    """A monic polynomial was required."""


class InsufficientMoments(PadeJacobiError):
    """Not enough moments for the requested order."""


class SingularPivotExactPath(PadeJacobiError):
    """Leading-minor chain hit a zero pivot during exact inertia."""


class QuadratureNonConvergence(PadeJacobiError):
    """Node doubling failed to stabilize the integral."""


class TooCloseToSupport(PadeJacobiError):
    """Evaluation point too close to the support of the measure."""


class PoleOfPerturbation(PadeJacobiError):
    """Evaluation point is a pole of the rational perturbation."""


class ExhaustedOrder(PadeJacobiError):
    """The series is too short to define the next expansion step."""


class OrderBudgetExceeded(PadeJacobiError):
    """Requested depth exceeds what the series order allows.

    Carries the deepest safely completed expansion in ``partial``.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class PoleHit(PadeJacobiError):
    """Evaluation at a zero of the denominator polynomial."""


class NotAdmissible(PadeJacobiError):
    """The index is excluded because the required P_j(0) vanishes."""


class NonDivisible(PadeJacobiError):
    """A division expected to be exact left a visible remainder."""


class NotClassical(PadeJacobiError):
    """Operation requires a classical positive-definite expansion."""


class SystemSingular(PadeJacobiError):
    """The Pade linear system has no unique solution at this order."""


class NotNormalized(PadeJacobiError):
    """Series must be normalized (first nonzero coefficient of modulus 1)."""


class Inconsistent(PadeJacobiError):
    """Two independent computation routes disagree (precision incident)."""


class InvalidGap(PadeJacobiError):
    """Gap endpoints must satisfy -1 < alpha < 0 < beta < 1."""


class ModulusOutOfRange(PadeJacobiError):
    """Elliptic modulus must lie in [0, 1)."""


class RootBracketFailure(PadeJacobiError):
    """Bisection could not bracket the requested root."""


class ConfigError(PadeJacobiError):
    """Malformed scenario configuration."""

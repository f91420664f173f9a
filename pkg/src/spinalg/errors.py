"""Exception types raised across the package."""


class SpinAlgError(Exception):
    """Base class for all package errors."""


class AlgebraMismatch(SpinAlgError):
    pass


class UnsupportedForGrassmann(SpinAlgError):
    pass


class NonNilpotentArgument(SpinAlgError):
    pass


class SingularMatrix(SpinAlgError, ZeroDivisionError):
    pass


class SizeLimit(SpinAlgError, ValueError):
    pass


class RelationViolation(SpinAlgError):
    """Proposed generator images break the defining relations."""


class NotInvertible(SpinAlgError):
    pass


class NotAutomorphism(SpinAlgError):
    pass


class DecompositionResidual(SpinAlgError):
    """Recomposed factors differ from the input; indicates a bug."""


class InvalidParameter(SpinAlgError, ValueError):
    pass


class DependentInjection(SpinAlgError, ValueError):
    pass


class DegenerateMetric(SpinAlgError):
    pass


class NotConformal(SpinAlgError):
    pass


class NotCausal(SpinAlgError, ValueError):
    pass

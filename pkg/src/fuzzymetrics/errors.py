"""Exception taxonomy shared across the package."""


class FuzzyError(Exception):
    """Base class for every error raised by this package."""


class DomainError(FuzzyError, ValueError):
    """A numeric argument lies outside its admissible range."""


class DimensionMismatch(FuzzyError, ValueError):
    """Operands live in different ambient dimensions."""


class MissingBoundaryLevel(FuzzyError, ValueError):
    """A level family lacks the required alpha=0 or alpha=1 entry."""


class NestednessViolation(FuzzyError, ValueError):
    """Consecutive alpha-cuts are not nested."""


class NonConvexCut(FuzzyError, ValueError):
    """A polygon cut is not in strictly convex CCW position."""


class NonFiniteCoordinate(FuzzyError, ValueError):
    """A coordinate is NaN or infinite."""


class SpecError(FuzzyError, ValueError):
    """A generator spec string or parameter set is malformed."""


class ResourceLimit(FuzzyError, RuntimeError):
    """A brute-force grid exceeded its configured point budget."""

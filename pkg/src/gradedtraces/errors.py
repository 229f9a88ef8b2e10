"""Exception types shared across the package."""


class GradedTracesError(Exception):
    pass


class NotInvertible(GradedTracesError, ZeroDivisionError):
    pass


class InvalidWeight(GradedTracesError, ValueError):
    pass


class ConsistencyFailure(GradedTracesError, AssertionError):
    pass


class OutsideUpperHalfPlane(GradedTracesError, ValueError):
    pass


class GridMismatch(GradedTracesError, ValueError):
    """Two series live on different cosets of the exponent lattice."""


class InsufficientPrecision(GradedTracesError, ValueError):
    pass


class NotMember(GradedTracesError):
    """Raised by membership tests; ``index`` is the first discrepant q-exponent."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"not a member: discrepancy at q^{index}")


class InvalidPivot(GradedTracesError, ValueError):
    pass


class UnsupportedCharge(GradedTracesError, ValueError):
    pass


class InvalidRank(GradedTracesError, ValueError):
    pass


class AbelianCharge(GradedTracesError, ValueError):
    pass


class DegenerateRatio(GradedTracesError, ZeroDivisionError):
    pass


class HypothesisViolation(GradedTracesError, ValueError):
    pass


class ConstructionBug(GradedTracesError, AssertionError):
    pass


class DegreeOverflow(GradedTracesError, ValueError):
    pass

"""Exception hierarchy.

Validation failures (bad input data) map to CLI exit code 2, tolerance
failures to exit code 3.
"""


class ToricfiltError(Exception):
    """Base class for all library errors."""


class ValidationError(ToricfiltError):
    """Input violates a documented precondition or invariant."""


class NotFullDimensional(ValidationError):
    pass


class NotStronglyConvex(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class ConeMismatch(ValidationError):
    pass


class NormalOutsideCone(ValidationError):
    pass


class PointOutsideDualCone(ValidationError):
    pass


class NotCobounded(ValidationError):
    pass


class NonpositiveScale(ValidationError):
    pass


class NotMPrimary(ValidationError):
    pass


class NotInteriorValuation(ValidationError):
    pass


class OutOfRangeT(ValidationError):
    pass


class NotQGorenstein(ValidationError):
    pass


class NotKlt(ValidationError):
    pass


class ModeMismatch(ValidationError):
    pass


class NoCommonBound(ValidationError):
    pass


class UnsupportedRank(ValidationError):
    pass


class ParseError(ValidationError):
    pass


class ToleranceError(ToricfiltError):
    """A requested tolerance could not be met."""


class ToleranceTooTight(ToleranceError):
    pass

"""Exception hierarchy.

Input problems derive from :class:`InvalidInput`; resource caps derive from
:class:`ResourceLimit`.  The CLI maps the two families to distinct exit codes.
"""


class PlumbingError(Exception):
    """Base class for every error raised by this package."""


class InvalidInput(PlumbingError):
    pass


class ResourceLimit(PlumbingError):
    pass


class NotAForest(InvalidInput):
    pass


class ZeroWeight(InvalidInput):
    pass


class InvalidParameter(InvalidInput):
    pass


class MalformedGraph(InvalidInput):
    pass


class NotNegativeDefinite(InvalidInput):
    pass


class TooManyBadVertices(InvalidInput):
    pass


class SingularForm(InvalidInput):
    pass


class NotCharacteristic(InvalidInput):
    pass


class LevelMismatch(InvalidInput):
    pass


class NotBasic(InvalidInput):
    pass


class DifferentSpinc(InvalidInput):
    pass


class NotStabilized(InvalidInput):
    pass


class CycleDetected(PlumbingError):
    """The push-down sequence revisited a vector; termination was violated."""


class StepLimit(ResourceLimit):
    pass


class BoxTooLarge(ResourceLimit):
    pass


class SearchBudgetExceeded(ResourceLimit):
    pass


class BudgetExceeded(ResourceLimit):
    pass


class Unstable(PlumbingError):
    """Brute-force classes changed when the coordinate box was enlarged."""

"""Exception types shared across the toolkit.

Every error raised by library code derives from MuordinaryError so the CLI
can map domain failures to a single exit code.
"""


class MuordinaryError(Exception):
    """Base class for all toolkit errors."""


class ContextMismatch(MuordinaryError):
    """Two series built over different precision contexts were combined."""


class PrecisionError(MuordinaryError):
    """A congruence was requested at higher precision than is stored."""


class UnknownCoordinate(MuordinaryError):
    """A coordinate label is not part of the precision context."""


class DatumError(MuordinaryError):
    """An orbit or datum fails its structural invariants."""


class SlopeEHalf(MuordinaryError):
    """Self-dual orbit whose polygon contains the middle slope e/2.

    The block decomposition of the slope centralizer is only implemented
    away from this case.
    """


class OddSlopeCount(MuordinaryError):
    """Self-dual orbit with an odd number of distinct slopes."""


class ShapeMismatch(MuordinaryError):
    """A weight does not match the signature of the datum it was built for."""


class CompositionError(MuordinaryError):
    """Block sizes do not sum to the length of the weight being restricted."""


class InvalidWeight(MuordinaryError):
    """A weight violates a precondition (e.g. positivity) of an operation."""


class NotSimple(MuordinaryError):
    """An operation restricted to simple weights received a non-simple one."""


class AssignmentError(MuordinaryError):
    """A coordinate assignment is inconsistent with its datum or context."""


class MeasureError(MuordinaryError):
    """A measure seed violates the unit-support requirement."""


class HypothesisError(MuordinaryError):
    """The hypotheses of a congruence statement fail for the given weights.

    Carries the failure report so callers can distinguish a hypothesis
    failure from a failure of the congruence itself.
    """

    def __init__(self, message, failures=()):
        super().__init__(message)
        self.failures = list(failures)

"""Exception types shared across the package."""


class QftError(Exception):
    """Base class for every error raised by qftorus."""


class DomainError(QftError):
    """Input lies outside an operation's mathematical domain."""


class DegenerateInputError(DomainError):
    """Input is degenerate for the requested operation (e.g. +-identity)."""


class DegenerateNormalizationError(QftError):
    """Normalisation failed: the diagonal multiplier lies on the unit circle."""


class BoundaryDegenerateError(QftError):
    """Both multiplier roots lie on the unit circle; no loxodromic choice."""


class OutOfChartError(QftError):
    """A coordinate change left the principal chart (Re lambda' <= 0)."""


class FuchsianInputError(DomainError):
    """Operation undefined on Fuchsian input (real twist, no bending)."""


class BranchCutError(DomainError):
    """A logarithm argument landed on the principal branch cut."""


class SearchFailureError(QftError):
    """A bracketing search exhausted its window without isolating a minimum."""


class RayTraceError(QftError):
    """Pleating-ray continuation failed."""


class SingularRayError(RayTraceError):
    """The trace derivative vanished along the ray (branch point).

    `partial_ray` holds the samples accepted before the failure.
    """

    def __init__(self, message, partial_ray=None):
        super().__init__(message)
        self.partial_ray = partial_ray


class StepTooLargeError(RayTraceError):
    """Corrector failed to converge even after exhausting step halving."""


class UsageError(QftError):
    """Invalid command-line flag combination."""

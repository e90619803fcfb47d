"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 2 for malformed input,
3 for mathematical refusals, 4 for triangular-module certificate failures.
"""


class NakayamaError(Exception):
    exit_code = 1


class InputError(NakayamaError, ValueError):
    exit_code = 2


class EmptySeries(InputError):
    pass


class SimpleProjectivePresent(InputError):
    pass


class NotAdmissible(InputError):
    pass


class InvalidModule(InputError):
    pass


class LengthOutOfRange(InputError):
    pass


class NonPositiveDimension(InputError):
    pass


class Refusal(NakayamaError):
    """The requested quantity is not defined (or not covered by theory) for this input."""

    exit_code = 3


class NotGorensteinProjective(Refusal):
    pass


class HypothesisViolated(Refusal):
    pass


class EmptyCore(Refusal):
    pass


class EmptyCoreQuery(EmptyCore):
    pass


class NotInCore(Refusal):
    pass


class ProjectiveInput(Refusal):
    pass


class ProjectiveInCore(Refusal):
    pass


class DegenerateTube(Refusal):
    pass


class CertificateError(NakayamaError):
    exit_code = 4


class UnknownLabel(CertificateError):
    pass


class LengthMismatch(CertificateError):
    pass


class EmbeddingMismatch(CertificateError):
    pass


class CokerNotGorenstein(CertificateError):
    pass


class NotGorensteinSigma(CertificateError):
    pass


class PreconditionUnmet(CertificateError):
    pass


class DecomposableV(CertificateError):
    pass


class CoreInvariantViolation(NakayamaError, AssertionError):
    """Raised when an assembled Gorenstein core breaks a proven identity (a bug)."""

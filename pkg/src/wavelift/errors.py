"""Exception hierarchy shared by all modules.

Errors map to CLI exit codes: precondition-style errors (everything deriving
from :class:`PreconditionError`) are exit code 3, scenario-schema problems are
exit code 2, anything else is an internal failure (exit code 1).
"""


class LabError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(LabError):
    """A documented numeric-domain or structural precondition was violated."""


class ConfigurationError(PreconditionError):
    """Inadmissible configuration (grid, CFL, cutoff geometry, scenario)."""


class DomainError(PreconditionError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class StructuralError(PreconditionError):
    """Structurally invalid data (non-symmetric matrix, grid mismatch)."""


class DataError(PreconditionError):
    """Non-finite or missing field/sample values."""


class ResolutionError(PreconditionError):
    """Requested scale is below what the grid resolves."""


class SupportError(PreconditionError):
    """A compact-support requirement on a test field is violated."""


class UnsupportedError(PreconditionError):
    """Operation invoked outside its supported regime."""


class InstabilityError(LabError):
    """Time stepping produced a non-finite value.

    Carries the first offending step index in ``step``.
    """

    def __init__(self, step: int, t: float):
        self.step = step
        self.t = t
        super().__init__(f"non-finite value first appeared at step {step} (t={t:.6g})")


class InsufficientDataError(DomainError):
    """Not enough data points for the requested fit or extrapolation."""


class ExperimentError(LabError):
    """A pipeline stage of an experiment failed; ``stage`` names it."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        super().__init__(f"experiment failed at stage '{stage}': {cause}")

"""
Exception hierarchy for the driven two-level-system package.

Every error carries the process exit code the command-line front end
returns when it escapes a subcommand.
"""

EXIT_OK = 0
EXIT_INVALID_ARGUMENTS = 2
EXIT_NON_CONVERGENCE = 3
EXIT_INTEGRATOR_FAILURE = 4


class DrivenTlsError(Exception):
    """Base class for all package errors."""

    exit_code = EXIT_INVALID_ARGUMENTS

    def __init__(self, message, details=None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class InvalidArgumentsError(DrivenTlsError):
    """Raised when user-supplied parameters violate an invariant."""


class DomainError(DrivenTlsError, ValueError):
    """Raised when a numeric kernel is evaluated outside its domain."""


class SeriesTooShortError(DrivenTlsError, ValueError):
    """Raised when a time series is too short for spectral analysis."""


class NonConvergenceError(DrivenTlsError):
    """Raised when the self-consistent solve fails to converge."""

    exit_code = EXIT_NON_CONVERGENCE

    def __init__(self, message, residual=None, iterations=None):
        super().__init__(
            message, details={"residual": residual, "iterations": iterations}
        )
        self.residual = residual
        self.iterations = iterations


class NoMinimumError(DrivenTlsError):
    """Raised when a frequency scan does not bracket a minimum."""

    exit_code = EXIT_NON_CONVERGENCE


class IntegratorError(DrivenTlsError):
    """Raised when the exact integrator fails."""

    exit_code = EXIT_INTEGRATOR_FAILURE


class StepSizeUnderflowError(IntegratorError):
    """Raised when the adaptive step falls below floating-point spacing."""


class ToleranceUnachievableError(IntegratorError):
    """Raised when the requested tolerances cannot be met."""


class ResonanceMismatchWarning(UserWarning):
    """Emitted when RWA-RF is evaluated away from n*omega + epsilon = 0."""

"""
Run configuration types shared by the integrator and the command line.
"""

from dataclasses import dataclass
from typing import Optional

from driven_tls.errors import InvalidArgumentsError
from driven_tls.models.params import DriveParams

METHODS = ("chrw", "rabi-rwa", "rwa-rf", "exact", "all")
INTEGRATOR_METHODS = ("RK45", "DOP853")
MAX_STEP_LIMIT = 0.1


@dataclass(frozen=True)
class IntegratorConfig:
    """Tolerances of the adaptive integrator; max_step is a fraction of 2*pi/omega."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = 0.05
    method: str = "RK45"

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise InvalidArgumentsError("Integrator tolerances must be positive")
        if not 0 < self.max_step <= MAX_STEP_LIMIT:
            raise InvalidArgumentsError(
                f"max_step must lie in (0, {MAX_STEP_LIMIT}] of a drive period"
            )
        if self.method not in INTEGRATOR_METHODS:
            raise InvalidArgumentsError(f"Unknown integrator method: {self.method}")

    def halved(self):
        return IntegratorConfig(
            self.rel_tol / 2, self.abs_tol / 2, self.max_step, self.method
        )


@dataclass(frozen=True)
class RunConfig:
    method: str
    params: DriveParams
    t_max: float
    samples: int
    output: Optional[str] = None
    format: str = "csv"
    photon_n: Optional[int] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidArgumentsError(f"Unknown method: {self.method}")
        if self.samples < 2:
            raise InvalidArgumentsError("samples must be at least 2")
        if not self.t_max > 0:
            raise InvalidArgumentsError("t_max must be positive")

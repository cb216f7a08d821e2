"""
Physical parameter sets, state vectors and sampled observables.

All quantities are angular frequencies (or their inverse, times) with
hbar = 1. The sigma_z basis is ordered (up, down) = (+1, -1).
"""

import dataclasses
import math
from dataclasses import dataclass, field

import numpy as np

from driven_tls.errors import InvalidArgumentsError

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class DriveParams:
    """Tunneling, static bias, drive amplitude and drive frequency."""

    delta: float
    epsilon: float
    amplitude: float
    omega: float

    def __post_init__(self):
        values = (self.delta, self.epsilon, self.amplitude, self.omega)
        if not all(math.isfinite(v) for v in values):
            raise InvalidArgumentsError("Drive parameters must be finite")
        if self.delta <= 0:
            raise InvalidArgumentsError("delta must be positive")
        if self.omega <= 0:
            raise InvalidArgumentsError("omega must be positive")
        if self.amplitude < 0:
            raise InvalidArgumentsError("amplitude must be non-negative")

    @property
    def bare_splitting(self):
        return math.hypot(self.delta, self.epsilon)

    def replace(self, **changes):
        """Return a validated copy with some fields changed."""
        return dataclasses.replace(self, **changes)

    def to_dict(self):
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class SpinState:
    """Normalized two-component amplitude vector in the sigma_z basis."""

    up: complex
    down: complex
    check_norm: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        if self.check_norm and abs(self.norm_squared - 1.0) > NORM_TOLERANCE:
            raise InvalidArgumentsError(
                "Spin state is not normalized",
                details={"norm_squared": self.norm_squared},
            )

    @classmethod
    def spin_down(cls):
        return cls(0j, 1 + 0j)

    @classmethod
    def spin_up(cls):
        return cls(1 + 0j, 0j)

    @classmethod
    def from_array(cls, vector, check_norm=True):
        return cls(complex(vector[0]), complex(vector[1]), check_norm=check_norm)

    def as_array(self):
        return np.array([self.up, self.down], dtype=complex)

    @property
    def norm_squared(self):
        return abs(self.up) ** 2 + abs(self.down) ** 2

    @property
    def population_up(self):
        return abs(self.up) ** 2


@dataclass(frozen=True)
class TimeSeries:
    """Uniformly sampled real observable."""

    t0: float
    dt: float
    values: tuple

    def __post_init__(self):
        if not self.dt > 0:
            raise InvalidArgumentsError("dt must be positive")
        if len(self.values) == 0:
            raise InvalidArgumentsError("TimeSeries needs at least one sample")
        if not all(math.isfinite(v) for v in self.values):
            raise InvalidArgumentsError("TimeSeries samples must be finite")

    @classmethod
    def from_grid(cls, times, values):
        """Series on a uniform grid of at least two points."""
        times = np.asarray(times, dtype=float)
        if times.size < 2:
            raise InvalidArgumentsError("A sampled grid needs at least two points")
        dt = float(times[1] - times[0])
        return cls(float(times[0]), dt, tuple(float(v) for v in values))

    @property
    def times(self):
        return self.t0 + self.dt * np.arange(len(self.values))

    def as_array(self):
        return np.asarray(self.values, dtype=float)

    def __len__(self):
        return len(self.values)

"""
Spectrum model: a discrete |F(nu)| on a uniform angular-frequency grid.
"""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Peak:
    frequency: float
    weight: float


@dataclass(frozen=True)
class CombLabel:
    """Classification of a peak against the comb {n*omega, n*omega +/- omega_r}."""

    frequency: float
    weight: float
    kind: str  # "harmonic", "sideband" or "unclassified"
    n: int
    sign: int
    residual: float
    label: str


@dataclass(frozen=True)
class Spectrum:
    frequencies: np.ndarray
    magnitudes: np.ndarray
    peaks: list = field(default_factory=list)
    # magnitudes at or below this are rounding noise of a flat series
    noise_floor: float = 0.0
    pad_factor: int = 1

    @property
    def bin_width(self):
        return float(self.frequencies[1] - self.frequencies[0])

    @property
    def resolution(self):
        """Unpadded bin width 2*pi/T of the analysed window."""
        return self.pad_factor * self.bin_width

    def __repr__(self):
        return (
            f"<Spectrum bins={len(self.frequencies)} "
            f"bin_width={self.bin_width:.3e} peaks={len(self.peaks)}>"
        )

"""
Models package for the driven two-level-system package.
"""

from .params import DriveParams, SpinState, TimeSeries
from .solution import ChrwSolution, RabiRwaFrame
from .spectrum import CombLabel, Peak, Spectrum
from .run_config import IntegratorConfig, RunConfig

__all__ = [
    "DriveParams",
    "SpinState",
    "TimeSeries",
    "ChrwSolution",
    "RabiRwaFrame",
    "Spectrum",
    "Peak",
    "CombLabel",
    "IntegratorConfig",
    "RunConfig",
]

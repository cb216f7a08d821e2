"""
Result types of the self-consistent and closed-form treatments.
"""

from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class ChrwSolution:
    """Self-consistent (xi, zeta) and every renormalized quantity built on it."""

    xi: float
    zeta: float
    x_norm: float
    z_arg: float
    delta_tilde: float
    epsilon_tilde: float
    j_c: float
    xi_big_tilde: float
    a_tilde: float
    u: float
    v: float
    detuning_tilde: float
    rabi_freq: float
    residual_norm: float

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class RabiRwaFrame:
    """Energy-basis rotation and drive components of the Rabi-RWA treatment."""

    u0: float
    v0: float
    a_x: float
    a_z: float
    detuning: float
    omega_rr: float

    def to_dict(self):
        return asdict(self)

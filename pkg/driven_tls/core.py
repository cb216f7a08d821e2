"""
Bare (lab-frame) Hamiltonian of the biased, sinusoidally driven two-level system.

    H(t) = -(delta/2) sigma_x - ((epsilon + A cos(omega t))/2) sigma_z
"""

import math

import numpy as np

from driven_tls.errors import InvalidArgumentsError

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY = np.eye(2, dtype=complex)


def bare_splitting(p):
    """Return Xi_0 = sqrt(delta^2 + epsilon^2)."""
    return math.hypot(p.delta, p.epsilon)


def drive_period(p):
    return 2.0 * math.pi / p.omega


def hamiltonian_at(p, t):
    """
    Evaluate the lab-frame Hamiltonian at time t.

    Args:
        p: DriveParams
        t: time (same inverse-frequency units as p)

    Returns:
        np.ndarray: 2x2 Hermitian, traceless matrix in the (up, down) basis
    """
    bias = p.epsilon + p.amplitude * math.cos(p.omega * t)
    return -0.5 * p.delta * SIGMA_X - 0.5 * bias * SIGMA_Z


def time_grid(t_max, samples, t0=0.0):
    """Uniform grid of `samples` points from t0 to t0 + t_max inclusive."""
    if samples < 2:
        raise InvalidArgumentsError("samples must be at least 2")
    if not t_max > 0:
        raise InvalidArgumentsError("t_max must be positive")
    return np.linspace(t0, t0 + t_max, samples)

"""
Closed-form comparison treatments.

Rabi-RWA: rotate to the energy eigenbasis, drop the longitudinal drive and
the counter-rotating terms, solve the remaining rotating-wave problem.

RWA-RF: rotating-wave approximation in the frame co-moving with the bias
drive, valid when n*omega + epsilon = 0; P_up = sin^2(J_n(A/w) delta t / 2).
"""

import logging
import math
import warnings

import numpy as np

from driven_tls.core import bare_splitting, time_grid
from driven_tls.errors import ResonanceMismatchWarning
from driven_tls.models.params import TimeSeries
from driven_tls.models.solution import RabiRwaFrame
from driven_tls.special import bessel_j_signed

logger = logging.getLogger(__name__)

RESONANCE_REL_TOL = 1e-9


def rabi_rwa_frame(p):
    xi0 = bare_splitting(p)
    ratio = p.epsilon / xi0
    a_x = p.amplitude * p.delta / xi0
    detuning = xi0 - p.omega
    return RabiRwaFrame(
        u0=math.sqrt(max(0.0, 0.5 - 0.5 * ratio)),
        v0=math.sqrt(max(0.0, 0.5 + 0.5 * ratio)),
        a_x=a_x,
        a_z=p.amplitude * p.epsilon / xi0,
        detuning=detuning,
        omega_rr=math.hypot(detuning, 0.5 * a_x),
    )


def rabi_rwa_frequency(p):
    """Omega_RR = sqrt((Xi_0 - w)^2 + (A delta / (2 Xi_0))^2)."""
    return rabi_rwa_frame(p).omega_rr


def rabi_rwa_population(p, t):
    """
    Spin-up population under the Rabi-RWA Hamiltonian, starting spin-down.

    Written as (1 + <sigma_z>)/2 with 1 = (eps/Xi_0)^2 + (delta/Xi_0)^2
    folded in, so P(0) = 0 exactly. sin^2(W t/2)/W^2 and sin(W t)/W are
    evaluated through sinc to stay finite at W = 0.
    """
    frame = rabi_rwa_frame(p)
    xi0 = bare_splitting(p)
    r_eps = p.epsilon / xi0
    r_del = p.delta / xi0
    det = frame.detuning
    a_x = frame.a_x

    t = np.asarray(t, dtype=float)
    w = frame.omega_rr
    half_sq = (0.5 * t * np.sinc(w * t / (2.0 * math.pi))) ** 2
    full = t * np.sinc(w * t / math.pi)
    cos_wt = np.cos(p.omega * t)
    sin_wt = np.sin(p.omega * t)

    one_plus_sz = (
        r_eps**2 * 0.5 * a_x**2 * half_sq
        - r_eps * r_del * det * a_x * half_sq
        + r_del**2 * (1.0 - cos_wt)
        + r_del * cos_wt * (2.0 * r_del * det**2 - r_eps * det * a_x) * half_sq
        + r_del * sin_wt * (p.delta * det - 0.5 * p.epsilon * a_x) / xi0 * full
    )
    population = np.clip(0.5 * one_plus_sz, 0.0, 1.0)
    return population.item() if population.ndim == 0 else population


def default_photon_number(p):
    """Nearest integer n to the resonance condition n*omega + epsilon = 0."""
    return -int(round(p.epsilon / p.omega))


def rwa_rf_resonance_mismatch(p, n):
    """Return |n*omega + epsilon|."""
    return abs(n * p.omega + p.epsilon)


def rwa_rf_population(p, n, t):
    """
    sin^2(J_n(A/w) delta t / 2).

    n = None picks default_photon_number(p). Off-resonance use is allowed
    but emits a ResonanceMismatchWarning.
    """
    if n is None:
        n = default_photon_number(p)
    mismatch = rwa_rf_resonance_mismatch(p, n)
    if mismatch > RESONANCE_REL_TOL * p.omega:
        logger.info("RWA-RF evaluated off resonance (n=%d, mismatch %.3g)", n, mismatch)
        warnings.warn(
            f"n*omega + epsilon = {mismatch:.3g} != 0 for n={n}",
            ResonanceMismatchWarning,
            stacklevel=2,
        )

    coupling = bessel_j_signed(n, p.amplitude / p.omega) * p.delta
    population = np.sin(0.5 * coupling * np.asarray(t, dtype=float)) ** 2
    return population.item() if population.ndim == 0 else population


def rabi_rwa_series(p, t_max, samples):
    times = time_grid(t_max, samples)
    return TimeSeries.from_grid(times, rabi_rwa_population(p, times))


def rwa_rf_series(p, t_max, samples, n=None):
    times = time_grid(t_max, samples)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ResonanceMismatchWarning)
        values = rwa_rf_population(p, n, times)
    return TimeSeries.from_grid(times, values)

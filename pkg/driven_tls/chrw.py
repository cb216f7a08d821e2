"""
Counter-rotating-hybridized rotating-wave (CHRW) treatment.

A time-dependent rotation exp(S), S = -i (A/2w) sin(wt) (xi sigma_z + zeta sigma_x),
with (xi, zeta) fixed self-consistently, turns the driven Hamiltonian into a
rotating-wave form with renormalized splitting Xi~ and drive A~. Harmonics of
order two and higher in the rotated frame are dropped.
"""

import logging
import math
from collections import namedtuple

import numpy as np
from scipy.optimize import minimize_scalar

from driven_tls.core import bare_splitting, time_grid
from driven_tls.errors import (
    DomainError,
    InvalidArgumentsError,
    NoMinimumError,
    NonConvergenceError,
)
from driven_tls.models.params import SpinState, TimeSeries
from driven_tls.models.solution import ChrwSolution
from driven_tls.special import bessel_j_sequence

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 200
FD_REL_STEP = 1e-7
MAX_JUMP = 0.5
MIN_STAGE_FRACTION = 1e-6
SCAN_POINTS = 61

Renormalized = namedtuple(
    "Renormalized", ["delta_tilde", "epsilon_tilde", "j_c", "xi_big_tilde", "a_tilde"]
)
Residuals = namedtuple("Residuals", ["r_xi", "r_zeta"])
ResonanceShift = namedtuple("ResonanceShift", ["delta_omega", "omega_res"])


# ---------------------------------------------------------------------------
# Renormalization and the self-consistency conditions
# ---------------------------------------------------------------------------


def _transform_scales(p, xi, zeta):
    x_norm = math.hypot(xi, zeta)
    if x_norm == 0.0:
        raise DomainError(
            "xi and zeta cannot both vanish", details={"xi": xi, "zeta": zeta}
        )
    z_arg = p.amplitude / p.omega * x_norm
    return x_norm, z_arg


def renormalize(p, xi, zeta):
    """
    Renormalized tunneling, bias, J_c, splitting and drive for given (xi, zeta).

    Returns:
        Renormalized: (delta_tilde, epsilon_tilde, j_c, xi_big_tilde, a_tilde)

    Raises:
        DomainError: if xi = zeta = 0
    """
    x_norm, z_arg = _transform_scales(p, xi, zeta)
    j0, j1, j2 = bessel_j_sequence(2, z_arg)
    mixing = p.delta * xi - p.epsilon * zeta
    shift = (1.0 - j0) * mixing / x_norm**2

    delta_tilde = p.delta - xi * shift
    epsilon_tilde = p.epsilon + zeta * shift
    j_c = (1.0 - j0 - j2) / x_norm**2
    xi_big_tilde = math.hypot(delta_tilde, epsilon_tilde)
    a_tilde = 2.0 * mixing / x_norm * j1
    return Renormalized(delta_tilde, epsilon_tilde, j_c, xi_big_tilde, a_tilde)


def _bracket_terms(ren, xi, zeta):
    longitudinal = 1.0 - xi - zeta**2 * ren.j_c
    transverse = 1.0 - xi * ren.j_c
    return longitudinal, transverse


def a_tilde_bracket(p, xi, zeta):
    """Renormalized drive in the form that precedes use of the xi-condition."""
    ren = renormalize(p, xi, zeta)
    if ren.xi_big_tilde == 0.0:
        raise DomainError("Renormalized splitting vanishes")
    longitudinal, transverse = _bracket_terms(ren, xi, zeta)
    return p.amplitude * (
        ren.delta_tilde / ren.xi_big_tilde * longitudinal
        + ren.epsilon_tilde / ren.xi_big_tilde * zeta * transverse
    )


def residuals(p, xi, zeta):
    """
    Residuals of the two self-consistency conditions.

    r_xi removes the counter-rotating part of the single-photon term,
    r_zeta removes its longitudinal cos(wt) tau_z part.

    Raises:
        DomainError: if xi = zeta = 0 or the renormalized splitting vanishes
    """
    ren = renormalize(p, xi, zeta)
    if ren.xi_big_tilde == 0.0:
        raise DomainError(
            "Renormalized splitting vanishes", details={"xi": xi, "zeta": zeta}
        )
    longitudinal, transverse = _bracket_terms(ren, xi, zeta)
    r_xi = 0.5 * p.amplitude * (
        ren.delta_tilde / ren.xi_big_tilde * longitudinal
        + ren.epsilon_tilde / ren.xi_big_tilde * zeta * transverse
    ) - 0.5 * ren.a_tilde
    r_zeta = (
        ren.epsilon_tilde * longitudinal - ren.delta_tilde * zeta * transverse
    )
    return Residuals(r_xi, r_zeta)


def weak_drive_limit(p):
    """Analytic (xi, zeta) of the A -> 0 limit."""
    xi0 = bare_splitting(p)
    denom = xi0 * (xi0 + p.omega)
    return (p.omega * xi0 + p.epsilon**2) / denom, p.epsilon * p.delta / denom


# ---------------------------------------------------------------------------
# Damped Newton with continuation in the drive amplitude
# ---------------------------------------------------------------------------


def _jacobian(fun, x, r0):
    jac = np.empty((r0.size, x.size))
    for i in range(x.size):
        h = FD_REL_STEP * max(abs(x[i]), 1.0)
        forward = x.copy()
        backward = x.copy()
        forward[i] += h
        backward[i] -= h
        jac[:, i] = (fun(forward) - fun(backward)) / (2.0 * h)
    return jac


def _newton(fun, x0, tol, max_iter):
    x = np.array(x0, dtype=float)
    r = fun(x)
    norm = float(np.max(np.abs(r)))

    for iteration in range(max_iter):
        if norm < tol:
            return x, norm
        try:
            step = np.linalg.solve(_jacobian(fun, x, r), -r)
        except np.linalg.LinAlgError as exc:
            raise NonConvergenceError(
                "Singular Jacobian in self-consistent solve",
                residual=norm,
                iterations=iteration,
            ) from exc

        damping = 1.0
        while damping >= 1.0 / 1024:
            trial = x + damping * step
            try:
                r_trial = fun(trial)
            except DomainError:
                damping /= 2
                continue
            norm_trial = float(np.max(np.abs(r_trial)))
            if np.isfinite(norm_trial) and norm_trial < norm:
                x, r, norm = trial, r_trial, norm_trial
                break
            damping /= 2
        else:
            raise NonConvergenceError(
                "Line search failed to reduce the residual",
                residual=norm,
                iterations=iteration,
            )

    if norm < tol:
        return x, norm
    raise NonConvergenceError(
        f"Self-consistent solve did not converge in {max_iter} iterations",
        residual=norm,
        iterations=max_iter,
    )


def _stage_solver(p, unbiased):
    if unbiased:

        def fun(x):
            return np.array([residuals(p, x[0], 0.0).r_xi])

    else:

        def fun(x):
            return np.asarray(residuals(p, x[0], x[1]))

    return fun


def _build_solution(p, xi, zeta, residual_norm):
    x_norm, z_arg = _transform_scales(p, xi, zeta)
    ren = renormalize(p, xi, zeta)
    ratio = ren.epsilon_tilde / ren.xi_big_tilde
    u = math.sqrt(max(0.0, 0.5 - 0.5 * ratio))
    v = math.sqrt(max(0.0, 0.5 + 0.5 * ratio))
    detuning = ren.xi_big_tilde - p.omega
    return ChrwSolution(
        xi=xi,
        zeta=zeta,
        x_norm=x_norm,
        z_arg=z_arg,
        delta_tilde=ren.delta_tilde,
        epsilon_tilde=ren.epsilon_tilde,
        j_c=ren.j_c,
        xi_big_tilde=ren.xi_big_tilde,
        a_tilde=ren.a_tilde,
        u=u,
        v=v,
        detuning_tilde=detuning,
        rabi_freq=math.hypot(detuning, ren.a_tilde),
        residual_norm=residual_norm,
    )


def solve_self_consistent(p, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """
    Solve the two self-consistency conditions for (xi, zeta).

    The solve starts at the weak-drive limit and follows the branch connected
    to it. For A/w > 1 the amplitude is ramped in stages of
    min(0.1 w, A/10); a stage that fails or jumps is retried at half size.
    At zero bias only xi is solved and zeta = 0 exactly.

    Raises:
        InvalidArgumentsError: if tol is not positive
        NonConvergenceError: if a stage cannot be completed
    """
    if not tol > 0:
        raise InvalidArgumentsError("tol must be positive")

    guess = weak_drive_limit(p)
    unbiased = p.epsilon == 0.0
    if unbiased:
        guess = (guess[0], 0.0)
    if p.amplitude == 0.0:
        # Both conditions are degenerate at zero drive; keep the analytic limit.
        return _build_solution(p, guess[0], guess[1], 0.0)

    nominal = p.amplitude
    if p.amplitude / p.omega > 1.0:
        nominal = min(0.1 * p.omega, p.amplitude / 10.0)
    min_stage = MIN_STAGE_FRACTION * p.amplitude

    current = np.array(guess[:1] if unbiased else guess, dtype=float)
    reached = 0.0
    stage = nominal
    residual_norm = math.inf
    while reached < p.amplitude:
        target = min(reached + stage, p.amplitude)
        staged = p.replace(amplitude=target)
        try:
            x, residual_norm = _newton(
                _stage_solver(staged, unbiased), current, tol, max_iter
            )
            jump = float(np.max(np.abs(x - current)))
            if jump > MAX_JUMP:
                raise NonConvergenceError(
                    "Continuation jumped branches", residual=residual_norm
                )
        except NonConvergenceError as exc:
            stage /= 2
            logger.warning(
                "Stage to A=%.6g failed (%s); halving step to %.3g",
                target,
                exc.message,
                stage,
            )
            if stage < min_stage:
                raise NonConvergenceError(
                    f"Continuation stalled at A={reached:.6g}",
                    residual=exc.residual,
                    iterations=exc.iterations,
                ) from exc
            continue

        logger.debug("Stage A=%.6g converged, residual %.3e", target, residual_norm)
        current = x
        reached = target
        stage = min(2.0 * stage, nominal)

    xi = float(current[0])
    zeta = 0.0 if unbiased else float(current[1])
    return _build_solution(p, xi, zeta, residual_norm)


def solve_unbiased(p, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """Single-parameter solution with zeta = 0 (exact at zero bias)."""
    if p.epsilon != 0.0:
        raise InvalidArgumentsError("The single-parameter branch needs epsilon = 0")
    return solve_self_consistent(p, tol, max_iter)


# ---------------------------------------------------------------------------
# Closed-form dynamics
# ---------------------------------------------------------------------------


def _as_output(values):
    return values.item() if values.ndim == 0 else values


def theta(s, p, t):
    """Rotation angle Theta(t) = Z sin(w t) of the CHRW transformation."""
    return s.z_arg * np.sin(p.omega * np.asarray(t, dtype=float))


def _amplitudes(s, p, t):
    t = np.asarray(t, dtype=float)
    cos_half = np.cos(0.5 * s.rabi_freq * t)
    # sin(W t/2) / W, finite as W -> 0
    sin_over = 0.5 * t * np.sinc(s.rabi_freq * t / (2.0 * math.pi))
    phase = np.exp(0.5j * p.omega * t)
    c1 = phase * (
        -s.u * (cos_half + 1j * s.detuning_tilde * sin_over)
        + 1j * s.v * s.a_tilde * sin_over
    )
    c2 = np.conj(phase) * (
        -s.v * (cos_half - 1j * s.detuning_tilde * sin_over)
        + 1j * s.u * s.a_tilde * sin_over
    )
    return c1, c2


def chrw_amplitudes(s, p, t):
    """
    Energy-basis amplitudes (c1, c2) of the rotating-wave CHRW Hamiltonian.

    The initial state is spin-down in sigma_z, i.e. c1(0) = -u, c2(0) = -v.
    """
    c1, c2 = _amplitudes(s, p, t)
    return _as_output(c1), _as_output(c2)


def _rotated_frame_state(s, c1, c2):
    # |Psi'> = U |Psi~>, U = u sigma_z - v sigma_x, |Psi~> = (c2, c1)
    return s.u * c2 - s.v * c1, -s.v * c2 - s.u * c1


def population_up(s, p, t):
    """
    Spin-up population of the CHRW solution.

    <sigma_z(t)> = [1 - (zeta/X)^2 (1 - cos Theta)] <sigma_z>'
                 + (xi zeta / X^2) (1 - cos Theta) <sigma_x>'
                 - (zeta/X) sin Theta <sigma_y>'

    where primed brackets are taken in the rotated frame, built from c1, c2.
    """
    c1, c2 = _amplitudes(s, p, t)
    up, down = _rotated_frame_state(s, c1, c2)
    norm = np.abs(up) ** 2 + np.abs(down) ** 2
    coherence = np.conj(up) * down
    sz = np.abs(up) ** 2 - np.abs(down) ** 2
    sx = 2.0 * coherence.real
    sy = 2.0 * coherence.imag

    angle = theta(s, p, t)
    one_minus_cos = 1.0 - np.cos(angle)
    x2 = s.x_norm**2
    sigma_z = (
        (1.0 - s.zeta**2 / x2 * one_minus_cos) * sz
        + s.xi * s.zeta / x2 * one_minus_cos * sx
        - s.zeta / s.x_norm * np.sin(angle) * sy
    )
    return _as_output(np.clip(0.5 * (norm + sigma_z), 0.0, 1.0))


def chrw_state(s, p, t):
    """Lab-frame state exp(-S) U |Psi~> at a single time t."""
    c1, c2 = _amplitudes(s, p, t)
    up, down = _rotated_frame_state(s, complex(c1), complex(c2))
    half = 0.5 * float(theta(s, p, t))
    n_x = s.zeta / s.x_norm
    n_z = s.xi / s.x_norm
    c, sn = math.cos(half), math.sin(half)
    return SpinState(
        c * up + 1j * sn * (n_z * up + n_x * down),
        c * down + 1j * sn * (n_x * up - n_z * down),
    )


def chrw_population_series(p, t_max, samples, tol=DEFAULT_TOL):
    s = solve_self_consistent(p, tol=tol)
    times = time_grid(t_max, samples)
    return TimeSeries.from_grid(times, population_up(s, p, times))


# ---------------------------------------------------------------------------
# Rabi frequency and Bloch-Siegert shift
# ---------------------------------------------------------------------------


def generalized_rabi_frequency(p, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER):
    """Omega_R = sqrt((w - Xi~)^2 + A~^2) at the self-consistent point."""
    return solve_self_consistent(p, tol, max_iter).rabi_freq


def rabi_frequency_2nd(p):
    """Rabi frequency expanded to second order in the drive amplitude."""
    xi0 = bare_splitting(p)
    return math.sqrt(
        (p.omega - xi0) ** 2
        + p.amplitude**2 * p.delta**2 / (2.0 * xi0 * (p.omega + xi0))
    )


def bloch_siegert_shift_2nd(p):
    """Second-order bias-modulated Bloch-Siegert shift."""
    xi0 = bare_splitting(p)
    return p.amplitude**2 / (4.0 * xi0) * (1.0 - 0.75 * (p.delta / xi0) ** 2)


def bare_rabi_frequency(p):
    """Omega_R0 = (delta/2)(A/Xi_0), the resonant Rabi frequency without shifts."""
    return 0.5 * p.delta * p.amplitude / bare_splitting(p)


def second_order_bs_reference(p):
    """Textbook second-order shift Omega_R0^2 / (4 Xi_0)."""
    return 0.25 * bare_rabi_frequency(p) ** 2 / bare_splitting(p)


def default_scan(p):
    xi0 = bare_splitting(p)
    return (0.75 * xi0, 1.25 * xi0)


def resonance_shift_numeric(p, scan=None, points=SCAN_POINTS, rel_tol=1e-6):
    """
    Locate the drive frequency that minimizes the full Omega_R.

    p.omega is ignored; the scan interval is sampled on a coarse grid and the
    best interior point seeds a golden-section search.

    Returns:
        ResonanceShift: (delta_omega = omega_res - Xi_0, omega_res)

    Raises:
        NoMinimumError: if the coarse minimum sits on the scan boundary
    """
    lo, hi = scan if scan is not None else default_scan(p)
    if not 0 < lo < hi:
        raise InvalidArgumentsError("Scan interval must satisfy 0 < lo < hi")

    def rabi_at(omega):
        return generalized_rabi_frequency(p.replace(omega=float(omega)))

    grid = np.linspace(lo, hi, points)
    values = np.array([rabi_at(w) for w in grid])
    best = int(np.argmin(values))
    if best in (0, points - 1):
        raise NoMinimumError(
            "Scan interval does not bracket a minimum of the Rabi frequency",
            details={"scan": [lo, hi], "argmin": float(grid[best])},
        )

    result = minimize_scalar(
        rabi_at,
        bracket=(grid[best - 1], grid[best], grid[best + 1]),
        method="golden",
        tol=rel_tol,
    )
    omega_res = float(result.x)
    logger.debug("Resonance at %.9g after %d evaluations", omega_res, result.nfev)
    return ResonanceShift(omega_res - bare_splitting(p), omega_res)

"""
Direct integration of i d|psi>/dt = H(t)|psi> for the driven two-level system.

The adaptive path uses scipy's embedded Runge-Kutta pairs on the two complex
amplitudes with output interpolated onto the requested grid. The norm is
never renormalized; its drift is the accuracy diagnostic.
"""

import logging
import math

import numpy as np
from scipy.integrate import solve_ivp

from driven_tls.core import drive_period
from driven_tls.errors import (
    IntegratorError,
    InvalidArgumentsError,
    StepSizeUnderflowError,
    ToleranceUnachievableError,
)
from driven_tls.models.params import SpinState, TimeSeries
from driven_tls.models.run_config import IntegratorConfig

logger = logging.getLogger(__name__)

MIN_REL_TOL = 100 * np.finfo(float).eps


def schrodinger_rhs(p):
    """Return f(t, y) = -i H(t) y for the amplitude vector y = (up, down)."""
    half_delta = 0.5 * p.delta

    def rhs(t, y):
        half_bias = 0.5 * (p.epsilon + p.amplitude * math.cos(p.omega * t))
        return np.array(
            [
                1j * (half_bias * y[0] + half_delta * y[1]),
                1j * (half_delta * y[0] - half_bias * y[1]),
            ]
        )

    return rhs


def _grid_array(t_grid):
    if isinstance(t_grid, TimeSeries):
        return t_grid.times
    times = np.asarray(t_grid, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise InvalidArgumentsError("Time grid must be a non-empty 1-D sequence")
    return times


def _check_tolerances(cfg):
    if cfg.rel_tol < MIN_REL_TOL:
        raise ToleranceUnachievableError(
            f"rel_tol below {MIN_REL_TOL:.1e} cannot be met in double precision",
            details={"rel_tol": cfg.rel_tol},
        )


def _integrate(p, y0, t_span, t_eval, cfg):
    result = solve_ivp(
        schrodinger_rhs(p),
        t_span,
        y0,
        method=cfg.method,
        t_eval=t_eval,
        rtol=cfg.rel_tol,
        atol=cfg.abs_tol,
        max_step=cfg.max_step * drive_period(p),
    )
    if result.status == -1:
        if "step size" in result.message.lower():
            raise StepSizeUnderflowError(result.message, details={"t": float(result.t[-1])})
        raise IntegratorError(result.message)
    logger.debug("%s: %d right-hand-side evaluations", cfg.method, result.nfev)
    return result


def evolve_exact(p, initial, t_grid, cfg=None):
    """
    Integrate from initial at t_grid[0] and return the state at every grid time.

    Args:
        p: DriveParams
        initial: SpinState at the first grid time
        t_grid: strictly increasing times, or a TimeSeries whose times are used
        cfg: IntegratorConfig (defaults when omitted)

    Returns:
        list[SpinState]: unnormalized states, one per grid time

    Raises:
        StepSizeUnderflowError: if the adaptive step collapses
        ToleranceUnachievableError: if rel_tol is below double precision
    """
    cfg = cfg or IntegratorConfig()
    _check_tolerances(cfg)
    times = _grid_array(t_grid)
    if times.size > 1 and np.any(np.diff(times) <= 0):
        raise InvalidArgumentsError("Time grid must be strictly increasing")
    if times.size == 1:
        return [initial]

    result = _integrate(p, initial.as_array(), (times[0], times[-1]), times, cfg)
    return [SpinState.from_array(column, check_norm=False) for column in result.y.T]


def population_up_exact(p, t_grid, cfg=None):
    """P_up on the grid for an initial spin-down state."""
    times = _grid_array(t_grid)
    states = evolve_exact(p, SpinState.spin_down(), times, cfg)
    return TimeSeries.from_grid(times, [s.population_up for s in states])


def propagate(p, initial, t_start, t_end, cfg=None):
    """Evolve a single state from t_start to t_end; t_end may precede t_start."""
    cfg = cfg or IntegratorConfig()
    _check_tolerances(cfg)
    if t_end == t_start:
        return initial
    result = _integrate(p, initial.as_array(), (t_start, t_end), None, cfg)
    return SpinState.from_array(result.y[:, -1], check_norm=False)


def rk4_step(y, fun, t, dt):
    """Single classical fourth-order Runge-Kutta step."""
    dt2 = dt / 2.0
    k1 = fun(t, y)
    k2 = fun(t + dt2, y + k1 * dt2)
    k3 = fun(t + dt2, y + k2 * dt2)
    k4 = fun(t + dt, y + k3 * dt)
    return y + (k1 + 2 * k2 + 2 * k3 + k4) / 6.0 * dt


def evolve_fixed_step(p, initial, times, step):
    """
    Fixed-step RK4 onto the grid; each interval is split into equal substeps
    no longer than step.
    """
    if not step > 0:
        raise InvalidArgumentsError("step must be positive")
    times = _grid_array(times)
    fun = schrodinger_rhs(p)

    y = initial.as_array()
    states = [initial]
    for t_left, t_right in zip(times[:-1], times[1:]):
        n_sub = max(1, math.ceil((t_right - t_left) / step - 1e-9))
        dt = (t_right - t_left) / n_sub
        for k in range(n_sub):
            y = rk4_step(y, fun, t_left + k * dt, dt)
        states.append(SpinState.from_array(y, check_norm=False))
    return states

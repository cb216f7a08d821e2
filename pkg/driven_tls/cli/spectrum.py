"""
`spectrum`: |F(nu)| of a population series and its comb-labelled peaks.
"""

import math

from driven_tls.chrw import chrw_population_series, solve_self_consistent
from driven_tls.core import time_grid
from driven_tls.errors import EXIT_OK
from driven_tls.exact import population_up_exact
from driven_tls.schemas.run_config import SPECTRUM_METHODS
from driven_tls.schemas.spectrum import comb_labels_schema
from driven_tls.spectrum import MIN_SAMPLES, default_window, population_spectrum
from driven_tls.utils.util import from_angular, write_columns

from .common import (
    add_drive_arguments,
    add_solver_arguments,
    drive_params,
    integrator_config,
    solver_options,
)

NAME = "spectrum"
SAMPLES_PER_PERIOD = 8


def register(subparsers):
    parser = subparsers.add_parser(NAME, help="Fourier spectrum of P_up(t)")
    add_drive_arguments(parser)
    add_solver_arguments(parser)
    parser.add_argument("--source", choices=SPECTRUM_METHODS, help="default exact")
    parser.add_argument("--t-max", dest="t_max", type=float, help="window length")
    parser.add_argument("--samples", type=int)
    parser.add_argument("--pad-factor", dest="pad_factor", type=int)
    parser.add_argument("--threshold", type=float, help="relative peak threshold")
    parser.set_defaults(handler=run)
    return parser


def default_samples(p, omega_r, t_max):
    """Resolve lines up to a few times 2*omega + omega_r."""
    dt = 2.0 * math.pi / (SAMPLES_PER_PERIOD * (2.0 * p.omega + omega_r))
    return max(MIN_SAMPLES, math.ceil(t_max / dt) + 1)


def run(app, cfg, out):
    p = drive_params(cfg)
    tol, max_iter = solver_options(app, cfg)
    omega_r = solve_self_consistent(p, tol, max_iter).rabi_freq

    t_max = cfg.get("t_max") or default_window(p, omega_r)
    samples = cfg.get("samples") or default_samples(p, omega_r, t_max)
    if cfg["source"] == "chrw":
        series = chrw_population_series(p, t_max, samples, tol=tol)
    else:
        times = time_grid(t_max, samples)
        series = population_up_exact(p, times, integrator_config(app))

    spec, labels = population_spectrum(
        series,
        p.omega,
        omega_r,
        pad_factor=cfg.get("pad_factor") or app.config["SPECTRUM_PAD_FACTOR"],
        threshold=cfg.get("threshold") or app.config["SPECTRUM_THRESHOLD"],
    )

    units = cfg["units"]
    peaks = comb_labels_schema.dump(labels)
    for peak in peaks:
        peak["frequency"] = from_angular(peak["frequency"], units)
        peak["residual"] = from_angular(peak["residual"], units)
    summary = {
        "omega": from_angular(p.omega, units),
        "omega_r": from_angular(omega_r, units),
        "peaks": peaks,
    }
    columns = {
        "nu": from_angular(spec.frequencies, units),
        "magnitude": spec.magnitudes,
    }
    write_columns(out, columns, cfg.get("format") or "csv", footer=summary)
    return EXIT_OK

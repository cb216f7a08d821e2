"""
Arguments and evaluation shared by the command modules.
"""

import warnings

import numpy as np

from driven_tls.baselines import rabi_rwa_population, rwa_rf_population
from driven_tls.chrw import population_up, solve_self_consistent
from driven_tls.core import time_grid
from driven_tls.errors import InvalidArgumentsError, ResonanceMismatchWarning
from driven_tls.exact import population_up_exact
from driven_tls.models.run_config import RunConfig
from driven_tls.schemas.params import drive_params_schema, integrator_config_schema

DRIVE_KEYS = ("delta", "epsilon", "amplitude", "omega")
ALL_METHODS = ("chrw", "rabi-rwa", "rwa-rf", "exact")


def add_drive_arguments(parser):
    group = parser.add_argument_group("drive parameters")
    group.add_argument("--delta", type=float, help="tunneling strength")
    group.add_argument("--epsilon", type=float, help="static bias")
    group.add_argument("--amplitude", type=float, help="drive amplitude A")
    group.add_argument("--omega", type=float, help="drive frequency")
    return group


def add_solver_arguments(parser):
    parser.add_argument("--tol", type=float, help="self-consistency tolerance")


def add_grid_arguments(parser):
    parser.add_argument("--t-max", dest="t_max", type=float, help="duration")
    parser.add_argument("--samples", type=int, help="number of time points")
    parser.add_argument(
        "--photon-n",
        dest="photon_n",
        type=int,
        help="RWA-RF resonance order n (default -round(epsilon/omega))",
    )


def drive_params(cfg, **overrides):
    values = {key: cfg.get(key) for key in DRIVE_KEYS}
    values.update(overrides)
    missing = [key for key, value in values.items() if value is None]
    if missing:
        raise InvalidArgumentsError(
            "Missing drive parameters", details={"missing": missing}
        )
    return drive_params_schema.load(values)


def integrator_config(app):
    """IntegratorConfig from the INTEGRATOR_* application settings."""
    return integrator_config_schema.load(
        {
            "rel_tol": app.config["INTEGRATOR_RTOL"],
            "abs_tol": app.config["INTEGRATOR_ATOL"],
            "max_step": app.config["INTEGRATOR_MAX_STEP"],
            "method": app.config["INTEGRATOR_METHOD"],
        }
    )


def solver_options(app, cfg):
    return cfg.get("tol", app.config["SOLVER_TOL"]), app.config["SOLVER_MAX_ITER"]


def run_config(cfg, method):
    for key in ("t_max", "samples"):
        if cfg.get(key) is None:
            raise InvalidArgumentsError(f"Missing {key}")
    return RunConfig(
        method=method,
        params=drive_params(cfg),
        t_max=cfg["t_max"],
        samples=cfg["samples"],
        output=cfg.get("output"),
        format=cfg.get("format") or "csv",
        photon_n=cfg.get("photon_n"),
    )


def column_name(method):
    return method.replace("-", "_")


def method_columns(app, cfg, run):
    """Time column plus one P_up column per requested method."""
    methods = ALL_METHODS if run.method == "all" else (run.method,)
    p = run.params
    times = time_grid(run.t_max, run.samples)
    columns = {"t": times}

    for method in methods:
        if method == "chrw":
            tol, max_iter = solver_options(app, cfg)
            solution = solve_self_consistent(p, tol, max_iter)
            values = population_up(solution, p, times)
        elif method == "rabi-rwa":
            values = rabi_rwa_population(p, times)
        elif method == "rwa-rf":
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", ResonanceMismatchWarning)
                values = rwa_rf_population(p, run.photon_n, times)
        else:
            values = population_up_exact(p, times, integrator_config(app)).as_array()
        columns[column_name(method)] = np.asarray(values, dtype=float)
    return columns

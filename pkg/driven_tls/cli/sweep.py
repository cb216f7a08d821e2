"""
`sweep`: one scalar quantity along a parameter axis.

Rows are independent and may run in a process pool; output keeps axis
order. A row that fails is written as an empty cell.
"""

import logging
import math

import numpy as np

from driven_tls.baselines import rabi_rwa_frequency
from driven_tls.chrw import (
    bloch_siegert_shift_2nd,
    generalized_rabi_frequency,
    rabi_frequency_2nd,
    resonance_shift_numeric,
    second_order_bs_reference,
)
from driven_tls.errors import EXIT_OK, DomainError, DrivenTlsError, InvalidArgumentsError
from driven_tls.extensions import map_ordered
from driven_tls.models.params import DriveParams
from driven_tls.schemas.run_config import SWEEP_AXES, SWEEP_QUANTITIES
from driven_tls.utils.util import from_angular, write_columns

from .common import DRIVE_KEYS, add_drive_arguments, add_solver_arguments, solver_options

logger = logging.getLogger(__name__)

NAME = "sweep"

AXIS_FIELDS = {
    "amplitude": "amplitude",
    "bias": "epsilon",
    "tunneling": "delta",
    "omega": "omega",
}


def register(subparsers):
    parser = subparsers.add_parser(NAME, help="sweep a quantity along one parameter")
    add_drive_arguments(parser)
    add_solver_arguments(parser)
    parser.add_argument("--axis", choices=SWEEP_AXES)
    parser.add_argument("--start", type=float)
    parser.add_argument("--stop", type=float)
    parser.add_argument("--points", type=int)
    parser.add_argument("--quantity", choices=SWEEP_QUANTITIES)
    parser.add_argument(
        "--resonant",
        action="store_true",
        default=None,
        help="set omega to the bare splitting of every row",
    )
    parser.add_argument("--workers", type=int, help="worker processes")
    parser.set_defaults(handler=run)
    return parser


def row_params(axis, value, base, resonant):
    """
    Parameters of one sweep row. The `splitting` axis fixes Xi_0 at the row
    value and sets epsilon = sqrt(Xi_0^2 - delta^2). Without omega, or with
    `resonant`, omega is the row's bare splitting.
    """
    values = dict(base)
    if axis == "splitting":
        if value < values["delta"]:
            raise DomainError("Splitting below tunneling", details={"splitting": value})
        values["epsilon"] = math.sqrt(value**2 - values["delta"] ** 2)
    else:
        values[AXIS_FIELDS[axis]] = value
    if resonant or values.get("omega") is None:
        values["omega"] = math.hypot(values["delta"], values["epsilon"])
    return DriveParams(**values)


def quantity_value(quantity, p, tol, max_iter):
    if quantity == "rabi":
        return generalized_rabi_frequency(p, tol, max_iter)
    if quantity == "rabi2nd":
        return rabi_frequency_2nd(p)
    if quantity == "rabi_rwa_freq":
        return rabi_rwa_frequency(p)
    if quantity == "bs_shift":
        return bloch_siegert_shift_2nd(p)
    if quantity == "bs_numeric":
        return resonance_shift_numeric(p).delta_omega
    return second_order_bs_reference(p)


def evaluate_row(task):
    """Worker entry point; returns (value or None, error message or None)."""
    axis, value, base, quantity, resonant, tol, max_iter = task
    try:
        p = row_params(axis, value, base, resonant)
        return quantity_value(quantity, p, tol, max_iter), None
    except DrivenTlsError as exc:
        return None, exc.message


def run(app, cfg, out):
    for key in ("axis", "start", "stop", "points", "quantity"):
        if cfg.get(key) is None:
            raise InvalidArgumentsError(f"Missing {key}")
    axis, quantity = cfg["axis"], cfg["quantity"]

    free = {"omega", AXIS_FIELDS.get(axis, "epsilon")}
    base = {key: cfg.get(key) for key in DRIVE_KEYS}
    missing = [key for key in DRIVE_KEYS if base[key] is None and key not in free]
    if missing:
        raise InvalidArgumentsError(
            "Missing drive parameters", details={"missing": missing}
        )

    tol, max_iter = solver_options(app, cfg)
    grid = np.linspace(cfg["start"], cfg["stop"], cfg["points"])
    tasks = [
        (axis, float(v), base, quantity, cfg["resonant"], tol, max_iter) for v in grid
    ]
    workers = cfg.get("workers") or app.config["SWEEP_WORKERS"]
    results = map_ordered(evaluate_row, tasks, workers)

    values = []
    for v, (result, error) in zip(grid, results):
        if error is not None:
            logger.warning("Row %s=%.9g failed: %s", axis, v, error)
        values.append(result)

    units = cfg["units"]
    columns = {
        axis: from_angular(grid, units),
        quantity: [None if r is None else from_angular(r, units) for r in values],
    }
    write_columns(out, columns, cfg.get("format") or "csv")
    return EXIT_OK

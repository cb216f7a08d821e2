"""
`evolve`: P_up(t) for one method, or every method side by side.
"""

from driven_tls.errors import EXIT_OK
from driven_tls.models.run_config import METHODS
from driven_tls.utils.util import write_columns

from .common import (
    add_drive_arguments,
    add_grid_arguments,
    add_solver_arguments,
    method_columns,
    run_config,
)

NAME = "evolve"


def register(subparsers):
    parser = subparsers.add_parser(NAME, help="spin-up population versus time")
    add_drive_arguments(parser)
    add_grid_arguments(parser)
    add_solver_arguments(parser)
    parser.add_argument("--method", choices=METHODS, help="default chrw")
    parser.set_defaults(handler=run)
    return parser


def run(app, cfg, out):
    run_cfg = run_config(cfg, cfg.get("method") or "chrw")
    columns = method_columns(app, cfg, run_cfg)
    write_columns(out, columns, run_cfg.format)
    return EXIT_OK

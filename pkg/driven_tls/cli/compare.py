"""
`compare`: every method against the exact integration.

The summary reports max_t |P_method - P_exact| per method; in CSV it is
the trailing `# {...}` line.
"""

import numpy as np

from driven_tls.errors import EXIT_OK
from driven_tls.utils.util import write_columns

from .common import (
    ALL_METHODS,
    add_drive_arguments,
    add_grid_arguments,
    add_solver_arguments,
    column_name,
    method_columns,
    run_config,
)

NAME = "compare"


def register(subparsers):
    parser = subparsers.add_parser(NAME, help="overlay all methods with the exact result")
    add_drive_arguments(parser)
    add_grid_arguments(parser)
    add_solver_arguments(parser)
    parser.set_defaults(handler=run)
    return parser


def deviation_summary(columns):
    exact = columns["exact"]
    return {
        f"max_dev_{column_name(m)}": float(np.max(np.abs(columns[column_name(m)] - exact)))
        for m in ALL_METHODS
        if m != "exact"
    }


def run(app, cfg, out):
    run_cfg = run_config(cfg, "all")
    columns = method_columns(app, cfg, run_cfg)
    write_columns(out, columns, run_cfg.format, footer=deviation_summary(columns))
    return EXIT_OK

"""
`solve`: self-consistent (xi, zeta) and the renormalized quantities.
"""

from driven_tls.chrw import solve_self_consistent
from driven_tls.errors import EXIT_OK
from driven_tls.schemas.solution import FREQUENCY_FIELDS, chrw_solution_schema
from driven_tls.utils.util import from_angular, write_csv, write_json

from .common import add_drive_arguments, add_solver_arguments, drive_params, solver_options

NAME = "solve"


def register(subparsers):
    parser = subparsers.add_parser(
        NAME, help="solve the self-consistency conditions and report the solution"
    )
    add_drive_arguments(parser)
    add_solver_arguments(parser)
    parser.set_defaults(handler=run)
    return parser


def run(app, cfg, out):
    p = drive_params(cfg)
    tol, max_iter = solver_options(app, cfg)
    solution = solve_self_consistent(p, tol, max_iter)

    report = chrw_solution_schema.dump(solution)
    for key in FREQUENCY_FIELDS:
        report[key] = from_angular(report[key], cfg["units"])

    if cfg.get("format") == "csv":
        write_csv(out, list(report), [list(report.values())])
    else:
        write_json(out, report)
    return EXIT_OK

"""
Command-line front end.

Each command lives in its own module exposing NAME, register(subparsers)
and run(app, cfg, out); the app factory registers them like blueprints.
"""

import argparse
import json
import logging
import sys

from marshmallow import ValidationError

from driven_tls.errors import EXIT_INVALID_ARGUMENTS, DrivenTlsError, InvalidArgumentsError
from driven_tls.schemas.run_config import FORMATS, UNITS, run_config_schema
from driven_tls.utils.util import (
    create_error_response,
    open_output,
    parse_recipe,
    to_angular,
)

logger = logging.getLogger(__name__)

GLOBAL_ONLY = ("config", "handler")


def register_commands(app):
    from . import compare, evolve, solve, spectrum, sweep

    for module in (solve, evolve, compare, sweep, spectrum):
        app.register_command(module.NAME, module)


def build_parser(app):
    parser = argparse.ArgumentParser(
        prog="driven-tls",
        description="Dynamics of a biased, sinusoidally driven two-level system.",
    )
    parser.add_argument(
        "--units",
        choices=UNITS,
        help="frequency units of inputs and outputs: angular (default) or hz "
        "(values are f = omega / 2pi, times in the inverse unit)",
    )
    parser.add_argument("--output", help="write data to this file instead of stdout")
    parser.add_argument("--format", choices=FORMATS, help="csv or json")
    parser.add_argument("--config", help="recipe file of key = value lines")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    for module in app.commands.values():
        module.register(subparsers)
    return parser


def _recipe_path(argv):
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    return known.config


def _write_error(stderr, message, exit_code, details=None):
    response = create_error_response(message, exit_code, details)
    stderr.write(json.dumps(response, sort_keys=True) + "\n")
    return exit_code


def load_run_config(args, recipe):
    """Merge recipe values with explicit flags, validate and convert units."""
    if recipe.get("command") not in (None, args.command):
        raise InvalidArgumentsError(
            f"Recipe is for '{recipe['command']}', not '{args.command}'"
        )
    raw = dict(recipe)
    raw.update(
        {
            key: value
            for key, value in vars(args).items()
            if value is not None and key not in GLOBAL_ONLY
        }
    )
    cfg = run_config_schema.load(raw)
    return to_angular(cfg, cfg["units"])


def main(app, argv=None, stdout=None, stderr=None):
    """Parse argv, run one command and return the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)

    try:
        path = _recipe_path(argv)
        recipe = parse_recipe(path) if path else {}
        parser = build_parser(app)
        if recipe.get("command"):
            known, _ = parser.parse_known_args(argv)
            if known.command is None:
                argv.append(recipe["command"])
        args = parser.parse_args(argv)
        if args.command is None:
            parser.error("a command is required")

        cfg = load_run_config(args, recipe)
        logger.debug("Running %s with %s", args.command, cfg)
        with open_output(cfg.get("output"), stdout) as out:
            return args.handler(app, cfg, out)
    except ValidationError as exc:
        return _write_error(
            stderr, "Invalid arguments", EXIT_INVALID_ARGUMENTS, exc.messages
        )
    except DrivenTlsError as exc:
        logger.debug("Command failed", exc_info=True)
        return _write_error(stderr, exc.message, exc.exit_code, exc.details)
    except SystemExit as exc:
        # argparse: 0 after --help, 2 on usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID_ARGUMENTS

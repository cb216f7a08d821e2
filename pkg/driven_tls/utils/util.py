"""
General utility functions: unit conversion, recipe files and data emission.
"""

import csv
import json
import math
import sys
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Dict

import numpy as np

from driven_tls.errors import InvalidArgumentsError

TWO_PI = 2.0 * math.pi
FREQUENCY_KEYS = ("delta", "epsilon", "amplitude", "omega", "start", "stop")
SIGNIFICANT_DIGITS = 15


def unit_scale(units: str) -> float:
    """Factor taking a value in `units` to angular frequency."""
    if units == "angular":
        return 1.0
    if units == "hz":
        return TWO_PI
    raise InvalidArgumentsError(f"Unknown units: {units}")


def to_angular(values: Dict, units: str) -> Dict:
    """
    Scale the frequency-valued entries of a config mapping to angular units.

    Times are left untouched; with `hz` they are read in the inverse of the
    frequency unit (GHz -> ns).
    """
    scale = unit_scale(units)
    return {
        key: value * scale if key in FREQUENCY_KEYS and value is not None else value
        for key, value in values.items()
    }


def from_angular(value, units: str):
    """Convert an angular frequency (scalar or array) back to `units`."""
    scale = unit_scale(units)
    if value is None:
        return None
    return value / scale


def parse_recipe(path: str) -> Dict[str, str]:
    """
    Read a recipe file of `key = value` lines.

    Blank lines and text after `#` are ignored. Keys are case-sensitive
    snake_case; a repeated key is an error.

    Returns:
        dict: raw string values, validated later by RunConfigSchema
    """
    values = {}
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise InvalidArgumentsError(f"Cannot read recipe {path}: {exc.strerror}") from exc

    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise InvalidArgumentsError(
                f"{path}:{number}: expected 'key = value'", details={"line": raw.rstrip()}
            )
        if key in values:
            raise InvalidArgumentsError(f"{path}:{number}: duplicate key '{key}'")
        values[key] = value
    return values


def format_number(value) -> str:
    """15 significant digits; empty cell for missing or non-finite values."""
    if value is None:
        return ""
    value = float(value)
    if not math.isfinite(value):
        return ""
    return f"{value:.{SIGNIFICANT_DIGITS}g}"


def _json_ready(value):
    if isinstance(value, np.ndarray):
        return [_json_ready(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_json_ready(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_ready(v) for k, v in value.items()}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, np.integer):
        return int(value)
    return value


def write_csv(stream, header, rows, footer=None):
    """
    Write a header row and data rows; an optional footer mapping is appended
    as a single `# {json}` line.
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(cell) for cell in row])
    if footer is not None:
        stream.write("# " + json.dumps(_json_ready(footer), sort_keys=True) + "\n")


def write_json(stream, payload):
    stream.write(json.dumps(_json_ready(payload), indent=2, sort_keys=True) + "\n")


def write_columns(stream, columns, fmt, footer=None):
    """Emit equal-length named columns as CSV rows or a JSON object."""
    if fmt == "json":
        payload = dict(columns)
        if footer:
            payload.update(footer)
        write_json(stream, payload)
        return
    names = list(columns)
    write_csv(stream, names, zip(*(columns[name] for name in names)), footer)


@contextmanager
def open_output(path=None, stdout=None):
    """Yield a text stream for `path`, or stdout when no path is given."""
    if path is None:
        yield stdout or sys.stdout
        return
    try:
        handle = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise InvalidArgumentsError(f"Cannot write {path}: {exc.strerror}") from exc
    with handle:
        yield handle


def create_error_response(message: str, exit_code: int = 2, details: Dict = None):
    """
    Create standardized error response.

    Args:
        message: Error message
        exit_code: Process exit code
        details: Additional error details

    Returns:
        dict: flat error object written to stderr
    """
    error_response = {
        "error": message,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "exit_code": exit_code,
    }

    if details:
        error_response["details"] = _json_ready(details)

    return error_response

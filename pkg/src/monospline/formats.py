"""Deterministic JSON / CSV serialisation.

Files use ``%.17g`` floats (exact binary64 round-trip, so re-parsing an
emitted spline and re-sampling reproduces sample CSVs bit-identically);
stdout reports use Python's shortest round-trip representation.  JSON
objects are emitted with sorted keys.  The infinite curvature value
serialises as the string ``"inf"``.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .assembly import HermiteDataset
from .errors import DomainError
from .twopoint import CurvatureValue

__all__ = [
    "format_float_file",
    "format_number_report",
    "dumps_file_json",
    "dumps_report_json",
    "samples_csv_text",
    "parse_samples_csv",
    "parse_dataset_json",
    "jsonable",
]

SAMPLES_HEADER = "x,value,d1,d2"


def format_float_file(x):
    return f"{float(x):.17g}"


def format_number_report(x):
    """Shortest round-trip rendering, with integral floats shown bare."""
    x = float(x)
    if math.isinf(x):
        return "inf"
    if x == int(x) and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def jsonable(obj):
    """Recursively convert package types to plain JSON-ready values."""
    if isinstance(obj, CurvatureValue):
        return "inf" if obj.is_infinite else obj.value
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [jsonable(v) for v in obj.tolist()]
    return obj


def _render(obj, out):
    if isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(", ")
            out.append(json.dumps(str(key)))
            out.append(": ")
            _render(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(", ")
            _render(value, out)
        out.append("]")
    elif isinstance(obj, bool) or obj is None:
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        if math.isinf(obj):
            out.append('"inf"')
        else:
            out.append(format_float_file(obj))
    else:
        out.append(json.dumps(obj))


def dumps_file_json(obj):
    """Deterministic JSON for files: sorted keys, %.17g floats."""
    out = []
    _render(jsonable(obj), out)
    return "".join(out) + "\n"


def dumps_report_json(obj):
    """Deterministic JSON for stdout reports: sorted keys, shortest
    round-trip floats (the json module's default float rendering)."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)


def samples_csv_text(table):
    """CSV with header ``x,value,d1,d2`` and %.17g rows from an (n, 4)
    sample table."""
    lines = [SAMPLES_HEADER]
    for row in np.asarray(table, dtype=float):
        lines.append(",".join(format_float_file(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_samples_csv(text):
    lines = [ln for ln in text.strip().splitlines() if ln]
    if not lines or lines[0] != SAMPLES_HEADER:
        raise DomainError(f"sample CSV must start with header {SAMPLES_HEADER!r}")
    rows = []
    for k, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 4:
            raise DomainError(f"line {k}: expected 4 columns, got {len(parts)}")
        try:
            rows.append([float(p) for p in parts])
        except ValueError as exc:
            raise DomainError(f"line {k}: {exc}") from exc
    return np.array(rows, dtype=float)


def parse_dataset_json(text):
    """Parse a dataset document ``{"nodes": [...], "values": [...],
    "slopes": [...]?}`` with line/field-addressed errors."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"dataset JSON parse error at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(obj, dict):
        raise DomainError("dataset JSON must be an object")
    for key in ("nodes", "values"):
        if key not in obj:
            raise DomainError(f"dataset JSON missing required field {key!r}")
    extra = set(obj) - {"nodes", "values", "slopes"}
    if extra:
        raise DomainError(f"dataset JSON has unknown field(s): {sorted(extra)}")
    def field(name):
        seq = obj.get(name)
        if seq is None:
            return None
        if not isinstance(seq, list) or not all(
            isinstance(v, (int, float)) and not isinstance(v, bool) for v in seq
        ):
            raise DomainError(f"field {name!r} must be an array of numbers")
        return tuple(float(v) for v in seq)

    return HermiteDataset(field("nodes"), field("values"), field("slopes"))

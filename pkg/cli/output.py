"""Deterministic JSON and CSV rendering of command results.

Floats are written with 17 significant digits so repeated runs are
byte-identical and every double round-trips; non-finite values become null.
"""

import csv
import io
import json
import math
import sys
from enum import Enum
from typing import Any, List, TextIO, Tuple

import numpy as np

from spectral.exceptions import QexpError


def format_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    text = f"{x:.17g}"
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def _normalize(obj: Any) -> Any:
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, tuple):
        return list(obj)
    return obj


def dumps(obj: Any) -> str:
    """Compact JSON with fixed-precision floats, keys in insertion order."""
    obj = _normalize(obj)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, list):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def flatten(obj: Any, prefix: str = "") -> List[Tuple[str, str]]:
    """Dotted-key rows of a nested payload; scalars rendered as in dumps."""
    obj = _normalize(obj)
    if isinstance(obj, dict):
        rows: List[Tuple[str, str]] = []
        for k, v in obj.items():
            rows.extend(flatten(v, f"{prefix}.{k}" if prefix else str(k)))
        return rows
    if isinstance(obj, list):
        rows = []
        for i, v in enumerate(obj):
            rows.extend(flatten(v, f"{prefix}.{i}" if prefix else str(i)))
        return rows
    if isinstance(obj, str):
        return [(prefix, obj)]
    return [(prefix, dumps(obj))]


def render(payload: Any, fmt: str) -> str:
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(flatten(payload))
        return buffer.getvalue()
    return dumps(payload) + "\n"


def write_json_file(path: str, payload: Any) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(payload) + "\n")


def write_error(error: QexpError, stream: TextIO = None) -> None:
    stream = stream or sys.stderr
    stream.write(dumps(error.to_dict()) + "\n")
    stream.flush()

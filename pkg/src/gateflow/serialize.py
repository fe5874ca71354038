"""
JSON and CSV encodings shared by the library and the CLI.

Floats are always written with 17 significant digits so that files
round-trip exactly and are byte-stable across runs.
"""

from __future__ import annotations

import json
import math

import numpy as np


def fmt_float(x: float) -> str:
    x = float(x) + 0.0  # folds -0.0 into 0.0
    if not math.isfinite(x):
        raise ValueError(f"cannot serialise non-finite value {x!r}")
    return format(x, ".17g")


def dumps(obj, indent: int | None = None) -> str:
    """``json.dumps`` work-alike that writes floats as 17 significant digits."""
    return _encode(obj, indent, 0)


def _encode(obj, indent, level) -> str:
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        items = [(json.dumps(str(k)), v) for k, v in obj.items()]
        if not items:
            return "{}"
        if indent is None:
            return "{" + ", ".join(f"{k}: {_encode(v, None, 0)}" for k, v in items) + "}"
        pad = " " * (indent * (level + 1))
        body = ",\n".join(f"{pad}{k}: {_encode(v, indent, level + 1)}" for k, v in items)
        return "{\n" + body + "\n" + " " * (indent * level) + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # leaf lists stay on one line
        if indent is None or all(not isinstance(v, (list, tuple, dict, np.ndarray)) for v in obj):
            return "[" + ", ".join(_encode(v, None, 0) for v in obj) + "]"
        pad = " " * (indent * (level + 1))
        body = ",\n".join(pad + _encode(v, indent, level + 1) for v in obj)
        return "[\n" + body + "\n" + " " * (indent * level) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def matrix_to_dict(m) -> dict:
    """``{"rows", "cols", "entries": [[re, im], ...]}`` in row-major order."""
    m = np.asarray(m)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    flat = m.astype(complex).ravel()
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "entries": [[float(z.real), float(z.imag)] for z in flat],
    }


def matrix_from_dict(d: dict) -> np.ndarray:
    rows, cols = int(d["rows"]), int(d["cols"])
    entries = d["entries"]
    if len(entries) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries])
    return flat.reshape(rows, cols)


def real_matrix_from_dict(d: dict) -> np.ndarray:
    m = matrix_from_dict(d)
    if np.any(m.imag != 0):
        raise ValueError("real matrix encoding carries non-zero imaginary parts")
    return m.real


def csv_text(header: list[str], rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt_float(x) for x in row))
    return "\n".join(lines) + "\n"

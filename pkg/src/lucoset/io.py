"""Matrix file format and report serialization for the command line.

A matrix file is a JSON document with two fields: ``dims``, the list of
tensor-factor dimensions, and ``matrix``, n rows of n entries where each
entry is a two-element array ``[real, imaginary]``.  Floats are written
with shortest round-trip precision, so write-then-read reproduces every
entry exactly.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import MatrixFileError


def format_matrix_document(matrix: np.ndarray, dims) -> str:
    """Render the JSON document, one matrix row per line."""
    m = np.asarray(matrix, dtype=np.complex128)
    dims_text = ", ".join(str(int(d)) for d in dims)
    rows = []
    for row in m:
        cells = ", ".join(
            f"[{float(entry.real)!r}, {float(entry.imag)!r}]" for entry in row
        )
        rows.append(f"    [{cells}]")
    body = ",\n".join(rows)
    return '{\n  "dims": [' + dims_text + '],\n  "matrix": [\n' + body + "\n  ]\n}\n"


def write_matrix_file(path, matrix: np.ndarray, dims) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_matrix_document(matrix, dims))


def _entry(value, row, col):
    if (
        not isinstance(value, list)
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
        or not all(math.isfinite(float(x)) for x in value)
    ):
        raise MatrixFileError(
            f"malformed entry at matrix row {row}, column {col}: "
            "expected [real, imaginary] with finite numbers"
        )
    return complex(float(value[0]), float(value[1]))


def parse_matrix_document(text: str) -> tuple[np.ndarray, tuple[int, ...]]:
    """Parse a matrix document; raises ``MatrixFileError`` with position info."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(
            f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict) or "dims" not in doc or "matrix" not in doc:
        raise MatrixFileError("document must be an object with 'dims' and 'matrix'")
    dims_raw = doc["dims"]
    if (
        not isinstance(dims_raw, list)
        or not dims_raw
        or not all(isinstance(d, int) and not isinstance(d, bool) and d >= 1 for d in dims_raw)
    ):
        raise MatrixFileError("'dims' must be a nonempty list of positive integers")
    dims = tuple(int(d) for d in dims_raw)
    n = math.prod(dims)
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != n:
        raise MatrixFileError(
            f"'matrix' must have {n} rows to match dims {list(dims)}, "
            f"got {len(rows) if isinstance(rows, list) else type(rows).__name__}"
        )
    out = np.zeros((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise MatrixFileError(f"matrix row {i} must be a list of {n} entries")
        for j, cell in enumerate(row):
            out[i, j] = _entry(cell, i, j)
    return out, dims


def read_matrix_file(path) -> tuple[np.ndarray, tuple[int, ...]]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_matrix_document(handle.read())


def matrix_to_json(matrix: np.ndarray):
    """Nested-list [real, imaginary] form used inside reports."""
    m = np.asarray(matrix, dtype=np.complex128)
    return [[[float(x.real), float(x.imag)] for x in row] for row in m]


def render_report(report: dict) -> str:
    """Deterministic JSON rendering (sorted keys, stable float repr)."""
    return json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"

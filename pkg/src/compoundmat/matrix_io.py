"""Matrix files: JSON and headerless CSV, entries in ``p/q`` text form.

JSON layout::

    {"n": 2, "m": 3, "entries": [["1", "-1/2", "0"], ["3", "4", "5/3"]]}

``n`` is the row count and ``m`` the column count.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .errors import ParseError
from .exact_core import RMatrix, format_rational, parse_rational

FORMATS = ("json", "csv")


def detect_format(path: str | Path) -> str:
    suffix = Path(path).suffix.lower().lstrip(".")
    if suffix not in FORMATS:
        raise ParseError(f"cannot tell the matrix format of {str(path)!r} (use .json or .csv)")
    return suffix


def _entry(x):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"matrix entries must be rational strings, got {x!r}")
    return parse_rational(str(x))


def parse_matrix(text: str, fmt: str) -> RMatrix:
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ParseError('JSON matrix needs an "entries" field')
        rows = obj["entries"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError('"entries" must be a list of rows')
        parsed = [[_entry(x) for x in r] for r in rows]
        n = obj.get("n", len(parsed))
        m = obj.get("m", len(parsed[0]) if parsed else 0)
        if n != len(parsed) or any(len(r) != m for r in parsed):
            raise ParseError(f"declared shape {n}x{m} does not match the entries")
        return RMatrix(n, m, (x for r in parsed for x in r))
    if fmt == "csv":
        rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
        parsed = [[parse_rational(c) for c in r] for r in rows]
        if parsed and any(len(r) != len(parsed[0]) for r in parsed):
            raise ParseError("ragged CSV rows")
        return RMatrix.from_rows(parsed) if parsed else RMatrix(0, 0, ())
    raise ParseError(f"unknown matrix format {fmt!r}")


def format_matrix(a: RMatrix, fmt: str) -> str:
    cells = [[format_rational(x) for x in row] for row in a.to_rows()]
    if fmt == "json":
        body = ",\n".join("  " + json.dumps(r) for r in cells)
        return f'{{"n": {a.rows}, "m": {a.cols}, "entries": [\n{body}\n]}}\n'
    if fmt == "csv":
        return "".join(",".join(r) + "\n" for r in cells)
    raise ParseError(f"unknown matrix format {fmt!r}")


def read_matrix(path: str | Path) -> tuple[RMatrix, str]:
    fmt = detect_format(path)
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {str(path)!r}: {exc.strerror}") from None
    return parse_matrix(text, fmt), fmt


def write_matrix(a: RMatrix, path: str | Path) -> None:
    Path(path).write_text(format_matrix(a, detect_format(path)))

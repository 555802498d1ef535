"""
Table and JSON emission.

Floats are written with repr, the shortest text that parses back to the
same 64-bit value. Lines end in "\\n" on every platform.
"""

from __future__ import annotations

import json
import sys
from collections.abc import Mapping, Sequence
from enum import Enum
from pathlib import Path
from typing import Any

import pandas as pd


class OutputFormat(str, Enum):
    """Serialization of command output."""

    CSV = "csv"
    JSON = "json"


def format_value(value: Any) -> str:
    """Render one cell: floats via repr, None as empty."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(float(value))
    return str(value)


def to_csv(rows: Sequence[Mapping[str, Any]], columns: Sequence[str]) -> str:
    """Render rows under a fixed header."""
    frame = pd.DataFrame(list(rows), columns=list(columns)).astype(object)
    text = frame.map(format_value)
    return text.to_csv(index=False, lineterminator="\n")


def to_json(data: Any) -> str:
    """Render a JSON document; NaN and infinities are rejected."""
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def render(
    fmt: OutputFormat,
    *,
    rows: Sequence[Mapping[str, Any]],
    columns: Sequence[str],
    document: Any,
) -> str:
    """Return ``rows`` as CSV or ``document`` as JSON."""
    if OutputFormat(fmt) is OutputFormat.CSV:
        return to_csv(rows, columns)
    return to_json(document)


def write_output(text: str, path: str | None = None) -> None:
    """Write to ``path``, or to standard output when no path is given."""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(path).write_text(text, encoding="utf-8", newline="\n")

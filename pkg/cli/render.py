"""
Deterministic rendering of command results.

JSON uses sorted keys and compact separators. CSV and text flatten a list of
rows (a single mapping counts as one row); nested values are embedded as
compact JSON so every cell is a plain string.
"""

import csv
import io
import json

from algebra.exceptions import UsageError


def to_json(result):
    return json.dumps(result, sort_keys=True, separators=(",", ":"))


def _rows(result):
    if isinstance(result, dict):
        return [result]
    return list(result)


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list, tuple)):
        return to_json(value)
    return str(value)


def _table(result):
    rows = _rows(result)
    columns = sorted({key for row in rows for key in row})
    return columns, [[_cell(row.get(key)) for key in columns] for row in rows]


def to_csv(result):
    columns, cells = _table(result)
    if not columns:
        return ""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(cells)
    return buffer.getvalue()


def to_text(result):
    columns, cells = _table(result)
    if not columns:
        return ""
    widths = [
        max(len(column), *(len(row[i]) for row in cells)) if cells else len(column)
        for i, column in enumerate(columns)
    ]
    lines = [
        "  ".join(value.ljust(width) for value, width in zip(line, widths)).rstrip()
        for line in [columns, *cells]
    ]
    return "\n".join(lines) + "\n"


RENDERERS = {"json": to_json, "csv": to_csv, "text": to_text}


def render(result, output_format="json"):
    """
    Render a serializable result.

    Raises:
        UsageError: For an unknown format.
    """
    if output_format not in RENDERERS:
        raise UsageError(f"Unknown output format {output_format!r}.")
    return RENDERERS[output_format](result)

"""Deterministic CSV and JSON emission with fixed-precision numbers."""

from __future__ import annotations

import csv
import io
import json
import math


def format_number(value, precision: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"refusing to emit non-finite value {value}")
    text = f"{value:.{precision}f}"
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def _cells(record: dict, columns, precision):
    out = []
    for col in columns:
        value = record[col]
        out.append(value if isinstance(value, str) else format_number(value, precision))
    return out


def to_csv(records: list[dict], columns, precision: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(columns)
    for record in records:
        writer.writerow(_cells(record, columns, precision))
    return buf.getvalue()


def to_json(records: list[dict], columns, precision: int) -> str:
    # numbers are written as fixed-precision literals, so json.dumps is only used for strings
    lines = []
    for record in records:
        fields = []
        for col in columns:
            value = record[col]
            literal = json.dumps(value) if isinstance(value, str) else format_number(value, precision)
            fields.append(f"{json.dumps(col)}: {literal}")
        lines.append("  {" + ", ".join(fields) + "}")
    if not lines:
        return "[]\n"
    return "[\n" + ",\n".join(lines) + "\n]\n"


def render(records: list[dict], columns, fmt: str, precision: int) -> str:
    if fmt == "csv":
        return to_csv(records, columns, precision)
    if fmt == "json":
        return to_json(records, columns, precision)
    raise ValueError(f"unknown output format {fmt!r}")


def render_metadata(metadata: dict, precision: int) -> str:
    fields = []
    for key in sorted(metadata):
        value = metadata[key]
        literal = json.dumps(value) if isinstance(value, str) else format_number(value, precision)
        fields.append(f"  {json.dumps(key)}: {literal}")
    return "{\n" + ",\n".join(fields) + "\n}\n"

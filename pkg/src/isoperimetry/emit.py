"""Deterministic CSV / JSON / plain-table rendering of flat records.

Floats are written with ``repr``, the shortest string that round-trips to
the same double.  Booleans become ``true``/``false`` and ``None`` an empty
field.  JSON objects keep the column order of the CSV header.
"""

from __future__ import annotations

import csv
import io
import json

__all__ = ["FORMATS", "format_value", "to_csv", "to_json", "to_table", "render"]

FORMATS = ("csv", "json", "table")


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _columns(records):
    cols = []
    for rec in records:
        for key in rec:
            if key not in cols:
                cols.append(key)
    return cols


def to_csv(records, meta=()) -> str:
    buf = io.StringIO()
    for line in meta:
        buf.write(f"# {line}\n")
    cols = _columns(records)
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for rec in records:
        writer.writerow([format_value(rec.get(c)) for c in cols])
    return buf.getvalue()


def to_json(records, meta=()) -> str:
    payload = [dict(rec) for rec in records]
    if meta:
        payload = {"meta": list(meta), "records": payload}
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def to_table(records, meta=()) -> str:
    cols = _columns(records)
    rows = [[format_value(rec.get(c)) for c in cols] for rec in records]
    widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(cols)]
    lines = [f"# {line}" for line in meta]
    lines.append("  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for r in rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render(records, fmt, meta=()) -> str:
    if fmt == "csv":
        return to_csv(records, meta)
    if fmt == "json":
        return to_json(records, meta)
    if fmt == "table":
        return to_table(records, meta)
    raise ValueError(f"unknown format {fmt!r}")

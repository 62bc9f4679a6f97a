"""Deterministic tabular output for the experiment runner.

One table = ordered metadata pairs + named columns + rows.  CSV carries a
``# key=value`` metadata block and 12-significant-digit floats (meant for
plotting); JSON carries the same content at 17 significant digits, enough
to round-trip doubles exactly (meant for testing).  Nothing time- or
locale-dependent is ever written, so equal tables serialize to equal bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

__all__ = ["Table", "write_csv", "write_json", "read_csv", "read_json"]

CSV_DIGITS = 12
JSON_DIGITS = 17


@dataclass
class Table:
    meta: dict
    columns: list[str]
    rows: list[tuple] = field(default_factory=list)


def _format_float(x: float, digits: int) -> str:
    if not math.isfinite(x):
        raise ValueError(f"refusing to serialize non-finite value {x!r}")
    return format(x, f".{digits}g")


def _format_cell(v, digits: int) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return _format_float(v, digits)
    return str(v)


def write_csv(table: Table) -> str:
    lines = [f"# {k}={_format_cell(v, CSV_DIGITS)}" for k, v in table.meta.items()]
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(_format_cell(v, CSV_DIGITS) for v in row))
    return "\n".join(lines) + "\n"


def _json_value(v, digits: int) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return _format_float(v, digits)
    return json.dumps(str(v))


def write_json(table: Table) -> str:
    meta_items = ",".join(
        f"{json.dumps(k)}:{_json_value(v, JSON_DIGITS)}" for k, v in table.meta.items()
    )
    cols = ",".join(json.dumps(c) for c in table.columns)
    rows = ",".join(
        "[" + ",".join(_json_value(v, JSON_DIGITS) for v in row) + "]"
        for row in table.rows
    )
    return (
        "{"
        + f'"meta":{{{meta_items}}},"columns":[{cols}],"data":[{rows}]'
        + "}\n"
    )


def _parse_scalar(text: str):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def read_csv(text: str) -> Table:
    meta: dict = {}
    columns: list[str] = []
    rows: list[tuple] = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key.strip()] = _parse_scalar(value.strip())
        elif not columns:
            columns = [c.strip() for c in line.split(",")]
        else:
            rows.append(tuple(_parse_scalar(c.strip()) for c in line.split(",")))
    return Table(meta=meta, columns=columns, rows=rows)


def read_json(text: str) -> Table:
    obj = json.loads(text)
    return Table(
        meta=dict(obj["meta"]),
        columns=list(obj["columns"]),
        rows=[tuple(row) for row in obj["data"]],
    )

"""Serialization of experiment reports: the CSV and JSON file contract.

CSV layout:

    # key=value key=value ...          parameter header
    col1,col2,...                      column names
    <cell>,<cell>,...                  one line per row
    # verdict key=value                zero or more verdict footers

Floats are written with 17 significant digits, so every cell parses back to
the identical double.  The JSON variant is one object with the same
information: ``{"params": ..., "columns": ..., "rows": ..., "verdicts": ...}``.
Both forms of the same report carry bit-identical numbers.
"""

from __future__ import annotations

import json
import sys
from contextlib import nullcontext
from datetime import datetime, timezone
from typing import IO

from .analysis import ConvergenceReport

FORMATS = ("csv", "json")


def format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def write_report_csv(report: ConvergenceReport, stream: IO[str]) -> None:
    header = " ".join(f"{k}={v}" for k, v in report.params.items())
    stream.write(f"# {header}\n")
    stream.write(",".join(report.columns) + "\n")
    for row in report.rows:
        stream.write(",".join(format_cell(c) for c in row) + "\n")
    for key, value in report.verdicts.items():
        stream.write(f"# verdict {key}={value}\n")


def write_report_json(report: ConvergenceReport, stream: IO[str]) -> None:
    obj = {
        "params": report.params,
        "columns": report.columns,
        "rows": report.rows,
        "verdicts": report.verdicts,
    }
    json.dump(obj, stream, indent=1)
    stream.write("\n")


def write_report(
    report: ConvergenceReport,
    output: str | None,
    fmt: str = "csv",
    reproducible: bool = False,
) -> None:
    """Write to ``output`` (or stdout when None/"-") in the requested format.

    Unless ``reproducible`` is set, a ``timestamp`` parameter is stamped into
    the header; suppressing it makes identical runs byte-identical.
    """
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; known formats: {', '.join(FORMATS)}")
    if not reproducible:
        report = ConvergenceReport(
            params={**report.params, "timestamp": datetime.now(timezone.utc).isoformat()},
            columns=report.columns,
            rows=report.rows,
            verdicts=report.verdicts,
        )
    ctx = (
        nullcontext(sys.stdout)
        if output in (None, "-")
        else open(output, "w", encoding="utf-8", newline="\n")
    )
    with ctx as stream:
        if fmt == "csv":
            write_report_csv(report, stream)
        else:
            write_report_json(report, stream)


def _parse_cell(text: str):
    try:
        return float(text)
    except ValueError:
        return text


def read_report_csv(stream: IO[str]) -> ConvergenceReport:
    """Parse the CSV contract back; numeric cells come back as floats."""
    params: dict[str, str] = {}
    verdicts: dict[str, str] = {}
    columns: list[str] = []
    rows: list[list] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        if not line:
            continue
        if line.startswith("# verdict "):
            key, _, value = line[len("# verdict "):].partition("=")
            verdicts[key] = value
            continue
        if line.startswith("#"):
            for pair in line[1:].split():
                key, _, value = pair.partition("=")
                params[key] = value
            continue
        if not columns:
            columns = line.split(",")
            continue
        cells = line.split(",")
        if len(cells) != len(columns):
            raise ValueError(
                f"line {lineno}: expected {len(columns)} cells, got {len(cells)}"
            )
        rows.append([_parse_cell(c) for c in cells])
    if not columns:
        raise ValueError("no column line found")
    return ConvergenceReport(params=params, columns=columns, rows=rows, verdicts=verdicts)


def read_report_json(stream: IO[str]) -> ConvergenceReport:
    obj = json.load(stream)
    return ConvergenceReport(
        params=obj["params"],
        columns=obj["columns"],
        rows=obj["rows"],
        verdicts=obj.get("verdicts", {}),
    )

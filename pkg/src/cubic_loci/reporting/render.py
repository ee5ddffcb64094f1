"""Serialize reports as JSON, Markdown or CSV.

All three renderings are deterministic: fixed column order, sorted JSON keys,
``\\n`` line endings and no timestamps.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Callable, Sequence
from typing import Literal, cast, get_args

from cubic_loci.exceptions import UnsupportedFormatError
from cubic_loci.reporting.schemas import IntersectionReport, ReportRow
from cubic_loci.tools.canonicalize import jsonable

ReportFormat = Literal["json", "markdown", "csv"]
REPORT_FORMATS: tuple[str, ...] = get_args(ReportFormat)
CSV_COLUMNS: tuple[str, ...] = tuple(ReportRow.model_fields)

__all__ = [
    "CSV_COLUMNS",
    "REPORT_FORMATS",
    "ReportFormat",
    "check_format",
    "dumps_json",
    "markdown_fields",
    "render",
    "render_csv",
    "render_json",
    "render_markdown",
]


def check_format(fmt: str) -> ReportFormat:
    """Return ``fmt`` as a :data:`ReportFormat`.

    Raises:
        UnsupportedFormatError: If ``fmt`` is not json, markdown or csv.
    """

    if fmt not in REPORT_FORMATS:
        raise UnsupportedFormatError(
            f"Unsupported report format: {fmt}", {"supported": list(REPORT_FORMATS)}
        )
    return cast(ReportFormat, fmt)


def dumps_json(payload: object) -> str:
    """Pretty, key-sorted JSON with a trailing newline."""

    return json.dumps(jsonable(payload), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def render_json(report: IntersectionReport) -> str:
    return dumps_json(report.model_dump())


def _vector(vector: Sequence[int] | None) -> str:
    if vector is None:
        return "-"
    return "(" + ",".join(str(x) for x in vector) + ")"


def _vectors(vectors: Sequence[Sequence[int]]) -> str:
    if not vectors:
        return "-"
    return " ".join(_vector(vector) for vector in vectors)


def _cycle(vector: Sequence[int] | None) -> str:
    if vector is None:
        return "-"
    return "W_{" + ",".join(str(x) for x in vector) + "}"


def _flag(value: bool | None) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


def _text(value: object) -> str:
    return "-" if value is None else str(value)


# (ReportRow field, header, cell)
Column = tuple[str, str, Callable[[ReportRow], str]]

_BASE_COLUMNS: tuple[Column, ...] = (
    ("tau", "tau", lambda row: str(row.tau)),
    ("discriminant", "d(A_tau)", lambda row: str(row.discriminant)),
    ("status", "status", lambda row: row.status),
    ("witness", "witness", lambda row: _vector(row.witness)),
    ("irreducible", "irreducible", lambda row: _flag(row.irreducible)),
)

_KIND_COLUMNS: dict[str, tuple[Column, ...]] = {
    "del-pezzo-6": (
        ("b2_witness", "<W,F>=2 witness", lambda row: _cycle(row.b2_witness)),
        ("b3_witness", "<W,F>=3 witness", lambda row: _cycle(row.b3_witness)),
        ("b2", "b2", lambda row: _text(row.b2)),
        ("b3", "b3", lambda row: _text(row.b3)),
    ),
    "quadric-surface": (
        ("beta", "beta", lambda row: _text(row.beta)),
        ("beta_witness", "beta witness", lambda row: _cycle(row.beta_witness)),
        (
            "canonical_witness",
            "canonical witness",
            lambda row: _cycle(row.canonical_witness),
        ),
        ("justification", "justification", lambda row: _text(row.justification)),
    ),
    "none": (),
}

_TRAILING_COLUMNS: tuple[Column, ...] = (
    ("located_in", "located in", lambda row: _text(row.located_in)),
    ("candidates_checked", "candidates", lambda row: _text(row.candidates_checked)),
    ("shortcut", "shortcut", lambda row: _text(row.shortcut)),
    ("survivors", "survivors", lambda row: _vectors(row.survivors)),
    (
        "rational_via_divisor",
        "rational (divisor)",
        lambda row: _flag(row.rational_via_divisor),
    ),
    (
        "rational_via_fibration",
        "rational (fibration)",
        lambda row: _flag(row.rational_via_fibration),
    ),
)


def _markdown_columns(kind: str) -> tuple[Column, ...]:
    return _BASE_COLUMNS + _KIND_COLUMNS[kind] + _TRAILING_COLUMNS


def markdown_fields(kind: str) -> tuple[str, ...]:
    """Row fields shown in the Markdown table of a ``kind`` report.

    The fields left out belong to another fibration kind and are null in every row.
    """

    return tuple(field for field, _, _ in _markdown_columns(kind))


def render_markdown(report: IntersectionReport) -> str:
    """Render the report as a Markdown table with ASCII-only cells."""

    columns = _markdown_columns(report.kind)
    lines = [
        f"# {report.family}",
        "",
        f"- kind: {report.kind}",
        f"- basis: {', '.join(report.basis_labels)}",
        f"- generated by: {report.generated_by}",
    ]
    lines.extend(f"- assumption: {assumption}" for assumption in report.assumptions)
    lines.extend(
        [
            f"- rows digest: {report.rows_digest}",
            "",
            "| " + " | ".join(header for _, header, _ in columns) + " |",
            "| " + " | ".join("---" for _ in columns) + " |",
        ]
    )
    for row in report.rows:
        lines.append("| " + " | ".join(cell(row) for _, _, cell in columns) + " |")
    return "\n".join(lines) + "\n"


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        if value and isinstance(value[0], list):
            return ";".join(" ".join(str(x) for x in item) for item in value)
        return " ".join(str(x) for x in value)
    return str(value)


def render_csv(report: IntersectionReport) -> str:
    """Render one CSV record per row; vectors are space separated."""

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        dumped = row.model_dump()
        writer.writerow([_csv_cell(dumped[column]) for column in CSV_COLUMNS])
    return buffer.getvalue()


_RENDERERS: dict[str, Callable[[IntersectionReport], str]] = {
    "json": render_json,
    "markdown": render_markdown,
    "csv": render_csv,
}


def render(report: IntersectionReport, fmt: str) -> str:
    """Serialize ``report`` in ``fmt``.

    Raises:
        UnsupportedFormatError: If ``fmt`` is not json, markdown or csv.
    """

    return _RENDERERS[check_format(fmt)](report)

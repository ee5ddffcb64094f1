"""Tests for report assembly and the three renderings."""

from __future__ import annotations

import csv
import io
import json
import re

import pytest

from cubic_loci.exceptions import UnknownFamilyError, UnsupportedFormatError
from cubic_loci.families import BUILTIN_NAMES, FamilyRegistry, FamilySpec
from cubic_loci.reporting import (
    CURRENT_REPORT_SCHEMA_VERSION,
    GENERATED_BY,
    IntersectionReport,
    build_report,
    build_row,
    render,
    render_markdown,
    run_report,
)
from cubic_loci.reporting.render import CSV_COLUMNS, markdown_fields
from cubic_loci.tools.canonicalize import hash_canonical, jsonable


def test_empty_row(c18_c14: FamilySpec) -> None:
    row = build_row(c18_c14, 3)
    assert row.status == "empty"
    assert row.discriminant == 9
    assert row.witness == [4, -1, -1]
    assert row.located_in == "full-lattice"
    assert row.irreducible is None
    assert row.b2 is None


def test_dp6_row_with_survivor(c18_c14: FamilySpec) -> None:
    row = build_row(c18_c14, 8)
    assert row.status == "nonempty"
    assert row.discriminant == 84
    assert row.irreducible is False
    assert row.survivors == [[2, 0, 1]]
    assert row.b2 == "triv"
    assert row.b2_witness == [0, 1, -1]
    assert row.b3 == "nontriv"
    assert row.rational_via_fibration is False


def test_quadric_row(c8_c26: FamilySpec) -> None:
    row = build_row(c8_c26, 4)
    assert row.beta == "triv"
    assert row.canonical_witness == [0, 3, 1]
    assert row.justification is None
    assert row.rational_via_fibration is True
    odd = build_row(c8_c26, 3)
    assert odd.beta == "nontriv"
    assert odd.justification == "even-discriminant-rank-3"


def test_report_covers_every_admissible_tau(c18_c14: FamilySpec) -> None:
    report = build_report(c18_c14)
    assert [row.tau for row in report.rows] == list(range(3, 14))
    assert report.schema_version == CURRENT_REPORT_SCHEMA_VERSION
    assert report.generated_by == GENERATED_BY
    assert report.kind == "del-pezzo-6"
    assert report.assumptions[0] == "good del Pezzo fibration"
    assert report.rows_digest == hash_canonical(jsonable([r.model_dump() for r in report.rows]))


def test_json_report_round_trip() -> None:
    text = run_report("c18-c38", "json")
    payload = json.loads(text)
    assert len(payload["rows"]) == 17
    assert all(row["status"] == "nonempty" for row in payload["rows"])
    assert IntersectionReport.model_validate_json(text) == build_report(
        FamilyRegistry().get("c18-c38")
    )


def test_csv_report_discriminants() -> None:
    text = run_report("c8-c26", "csv")
    records = list(csv.DictReader(io.StringIO(text)))
    assert tuple(records[0]) == CSV_COLUMNS
    nonempty = [r for r in records if r["status"] == "nonempty"]
    assert len(nonempty) == 8
    assert [int(r["discriminant"]) for r in nonempty] == [36, 53, 64, 69, 68, 61, 48, 29]
    first = records[0]
    assert first["tau"] == "-2"
    assert first["witness"] == "3 -2 -1"
    assert first["irreducible"] == ""
    assert "\r" not in text


def test_markdown_row(c18_c14: FamilySpec) -> None:
    report = build_report(c18_c14)
    text = render_markdown(report)
    assert "| tau | d(A_tau) | status | witness | irreducible | <W,F>=2 witness |" in text
    assert text.isascii()
    row = next(r for r in report.rows if r.tau == 7)
    assert (
        "| 7 | 81 | nonempty | - | yes | - | W_{0,1,-1} | nontriv | triv "
        f"| - | {row.candidates_checked} | full-sieve | - | yes | no |"
    ) in text
    assert "| 3 | 9 | empty | (4,-1,-1) | - | - | - | - | - | full-lattice | - | - | - | - | - |" in text


def test_markdown_shows_survivors_and_rationality_flags(c18_c14: FamilySpec) -> None:
    text = render_markdown(build_report(c18_c14))
    header = "| located in | candidates | shortcut | survivors | rational (divisor) | rational (fibration) |"
    assert header in text
    tau8 = next(line for line in text.splitlines() if line.startswith("| 8 |"))
    assert "| (2,0,1) |" in tau8


def test_markdown_quadric_columns(c8_c38: FamilySpec) -> None:
    text = render(build_report(c8_c38), "markdown")
    assert "| beta | beta witness | canonical witness | justification |" in text
    assert "- assumption: good plane (quadric bundle with simple degeneration)" in text


_TOKEN = re.compile(r"-?\d+|[a-z][a-z0-9-]*")
_BOOLEAN_WORDS = {"yes": "true", "no": "false"}


def _cell_tokens(cell: str) -> list[str]:
    return [_BOOLEAN_WORDS.get(token, token) for token in _TOKEN.findall(cell)]


def _value_tokens(value: object) -> list[str]:
    if value is None:
        return []
    if isinstance(value, bool):
        return ["true" if value else "false"]
    if isinstance(value, list):
        return [token for item in value for token in _value_tokens(item)]
    return _TOKEN.findall(str(value))


def _markdown_records(text: str) -> list[list[str]]:
    table = [line for line in text.splitlines() if line.startswith("| ")]
    return [line.strip("|").split(" | ") for line in table[2:]]


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_all_formats_carry_identical_data(name: str) -> None:
    payload = json.loads(run_report(name, "json"))
    rows = payload["rows"]
    fields = markdown_fields(payload["kind"])
    csv_records = list(csv.DictReader(io.StringIO(run_report(name, "csv"))))
    md_records = _markdown_records(run_report(name, "markdown"))

    assert set(fields) <= set(CSV_COLUMNS) == set(rows[0])
    assert len(csv_records) == len(md_records) == len(rows)
    for row, csv_record, md_record in zip(rows, csv_records, md_records):
        for field in CSV_COLUMNS:
            if field not in fields:
                assert row[field] in (None, []), (name, row["tau"], field)
            assert _cell_tokens(csv_record[field]) == _value_tokens(row[field])
        assert len(md_record) == len(fields)
        for field, cell in zip(fields, md_record):
            assert _cell_tokens(cell.strip()) == _value_tokens(row[field]), (field, cell)


@pytest.mark.parametrize("fmt", ["json", "markdown", "csv"])
def test_rendering_is_deterministic(fmt: str) -> None:
    assert run_report("c8-c38", fmt) == run_report("c8-c38", fmt)


def test_run_report_errors() -> None:
    with pytest.raises(UnsupportedFormatError):
        run_report("c18-c14", "xml")
    with pytest.raises(UnknownFamilyError):
        run_report("c99-c1", "json")

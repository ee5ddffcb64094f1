"""Tests for the verification run against the published values."""

from __future__ import annotations

from dataclasses import replace

import pytest

from cubic_loci.exceptions import UnknownFamilyError
from cubic_loci.families import BUILTIN_FAMILIES
from cubic_loci.reporting import CheckResult, run_verify


def test_all_families_pass() -> None:
    summary = run_verify()
    assert summary.passed, [check.line for check in summary.failures]
    assert summary.headline == (
        "5 families, 5 discriminant polynomials, 65 component rows verified"
    )
    names = {check.name for check in summary.checks}
    assert {"emptiness", "irreducibility", "theorem-rows", "overlattice-example"} <= names


def test_single_family() -> None:
    summary = run_verify(["c8-c38"])
    assert summary.passed
    assert summary.families == 1
    assert summary.rows_verified == 12
    assert {check.family for check in summary.checks} == {"c8-c38"}


def test_corrupted_family_fails() -> None:
    corrupted = replace(BUILTIN_FAMILIES["c18-c14"], g22=11)
    summary = run_verify(overrides={"c18-c14": corrupted})
    assert not summary.passed
    assert {check.family for check in summary.failures} == {"c18-c14"}
    assert summary.polynomials == 4
    assert any(check.line.startswith("FAIL c18-c14 ") for check in summary.failures)


def test_unknown_family() -> None:
    with pytest.raises(UnknownFamilyError):
        run_verify(["c99-c1"])


def test_check_line_format() -> None:
    assert CheckResult(family="c8-c26", name="emptiness", passed=True).line == (
        "PASS c8-c26 emptiness"
    )
    failed = CheckResult(family="c8-c26", name="emptiness", passed=False, detail="boom")
    assert failed.line == "FAIL c8-c26 emptiness: boom"

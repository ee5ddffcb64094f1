"""Pytest configuration and fixtures."""

from __future__ import annotations

import os
import sys

import pytest

# Ensure src/ is on sys.path for tests so the src layout is used during test runs
ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
SRC = os.path.join(ROOT, "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

from cubic_loci.families import BUILTIN_FAMILIES, FamilySpec  # noqa: E402


@pytest.fixture
def c18_c14() -> FamilySpec:
    return BUILTIN_FAMILIES["c18-c14"]


@pytest.fixture
def c8_c26() -> FamilySpec:
    return BUILTIN_FAMILIES["c8-c26"]


@pytest.fixture
def c8_c38() -> FamilySpec:
    return BUILTIN_FAMILIES["c8-c38"]


@pytest.fixture(autouse=True)
def _isolated_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Keep developer environment variables out of the CLI and loader tests."""

    for name in ("CUBIC_LOCI_CONFIG", "CUBIC_LOCI_LOG_LEVEL", "CUBIC_LOCI_TRACE_ID"):
        monkeypatch.delenv(name, raising=False)

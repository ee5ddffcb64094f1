"""Tests enforcing the packaging policy for the distribution."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Any

import pytest

tomllib = pytest.importorskip("tomllib")

PYPROJECT = Path(__file__).resolve().parents[1] / "pyproject.toml"


def _project() -> dict[str, Any]:
    data: dict[str, Any] = tomllib.loads(PYPROJECT.read_text(encoding="utf-8"))
    return data["project"]


def _name(requirement: str) -> str:
    return re.split(r"[=<>!~\[ ]", requirement, maxsplit=1)[0].lower()


def test_all_dependencies_are_pinned() -> None:
    project = _project()
    for requirement in project["dependencies"]:
        assert "==" in requirement, f"Core dependency not pinned: {requirement}"
    for group, requirements in project.get("optional-dependencies", {}).items():
        for requirement in requirements:
            message = f"Optional dependency '{group}' not pinned: {requirement}"
            assert "==" in requirement, message


def test_runtime_dependencies_stay_minimal() -> None:
    project = _project()
    assert {_name(req) for req in project["dependencies"]} == {"pydantic", "pydantic-settings"}
    # YAML family files are optional; the loader imports yaml lazily.
    assert {_name(req) for req in project["optional-dependencies"]["config"]} == {"pyyaml"}


def test_console_script_targets_cli_main() -> None:
    assert _project()["scripts"] == {"cubic-loci": "cubic_loci.cli:main"}

"""Tests for environment-backed settings."""

from __future__ import annotations

import logging

import pytest

from cubic_loci.settings import CubicLociSettings, get_settings


def test_defaults() -> None:
    settings = get_settings()
    assert settings.config_path is None
    assert settings.trace_id is None
    assert settings.log_level == "WARNING"
    assert settings.log_level_number == logging.WARNING


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("CUBIC_LOCI_CONFIG", "families.yml")
    monkeypatch.setenv("CUBIC_LOCI_LOG_LEVEL", " debug ")
    monkeypatch.setenv("CUBIC_LOCI_TRACE_ID", "run-7")
    settings = CubicLociSettings()
    assert settings.config_path == "families.yml"
    assert settings.log_level_number == logging.DEBUG
    assert settings.trace_id == "run-7"


def test_invalid_level_falls_back(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("CUBIC_LOCI_LOG_LEVEL", "chatty")
    assert CubicLociSettings().log_level == "WARNING"


def test_blank_values_are_none(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("CUBIC_LOCI_CONFIG", "   ")
    monkeypatch.setenv("CUBIC_LOCI_TRACE_ID", "")
    settings = CubicLociSettings()
    assert settings.config_path is None
    assert settings.trace_id is None

"""Tests for loading user-defined families from configuration files."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from cubic_loci.config_loader import load_config, parse_families
from cubic_loci.exceptions import ConfigurationError
from cubic_loci.families import admissible_tau_range
from cubic_loci.settings import CubicLociSettings

TOY_BLOCK = {"g12": 1, "g22": 3, "g13": 1, "g33": 3, "basis_labels": ["h2", "A", "B"]}


def _write_json(path: Path, payload: object) -> Path:
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def test_no_file_yields_builtins_only(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.chdir(tmp_path)
    config = load_config()
    assert config.families == ()
    assert config.source is None
    assert len(config.registry().names()) == 5


def test_explicit_json_file(tmp_path: Path) -> None:
    path = _write_json(tmp_path / "families.json", {"families": {"toy": TOY_BLOCK}})
    config = load_config(str(path))
    assert config.names == ("toy",)
    assert config.source == path
    toy = config.registry().get("toy")
    assert toy.basis_labels == ("h2", "A", "B")
    assert admissible_tau_range(toy) == [-2, -1, 0, 1, 2]


def test_environment_path(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    path = _write_json(tmp_path / "env.json", {"families": {"toy": TOY_BLOCK}})
    monkeypatch.setenv("CUBIC_LOCI_CONFIG", str(path))
    assert load_config().names == ("toy",)


def test_default_location(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    (tmp_path / "config").mkdir()
    _write_json(tmp_path / "config" / "families.json", {"families": {"toy": TOY_BLOCK}})
    monkeypatch.chdir(tmp_path)
    config = load_config(settings=CubicLociSettings())
    assert config.source == Path("config/families.json")


def test_yaml_file(tmp_path: Path) -> None:
    pytest.importorskip("yaml")
    path = tmp_path / "families.yml"
    path.write_text(
        "families:\n"
        "  toy-dp:\n"
        "    g12: 4\n"
        "    g22: 10\n"
        "    g13: 6\n"
        "    g33: 18\n"
        "    fiber:\n"
        "      kind: del-pezzo-6\n"
        "      coefficients: [4, 0, -1]\n"
        "    rational_divisor: true\n",
        encoding="utf-8",
    )
    (toy,) = load_config(str(path)).families
    assert toy.fiber is not None
    assert toy.fiber.kind == "del-pezzo-6"
    assert toy.rational_divisor


def test_missing_explicit_file(tmp_path: Path) -> None:
    with pytest.raises(ConfigurationError):
        load_config(str(tmp_path / "absent.json"))


@pytest.mark.parametrize(
    "text", ["{not json", "[1, 2]"], ids=["malformed", "non-mapping-root"]
)
def test_bad_json(tmp_path: Path, text: str) -> None:
    path = tmp_path / "bad.json"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_config(str(path))


def test_unsupported_suffix(tmp_path: Path) -> None:
    path = tmp_path / "families.toml"
    path.write_text("", encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_config(str(path))


@pytest.mark.parametrize(
    "block",
    [
        {**TOY_BLOCK, "colour": "red"},
        {**TOY_BLOCK, "g22": "three"},
        {**TOY_BLOCK, "g22": True},
        {**TOY_BLOCK, "g11": 2},
        {**TOY_BLOCK, "basis_labels": ["h2", "A"]},
        {**TOY_BLOCK, "rational_divisor": "maybe"},
        {**TOY_BLOCK, "fiber": {"kind": "conic", "coefficients": [1, 0, 0]}},
        {**TOY_BLOCK, "fiber": {"kind": "quadric-surface", "coefficients": [1, 0]}},
        {**TOY_BLOCK, "fiber": {"kind": "quadric-surface", "coefficients": [1, 0, 0]}},
        {**TOY_BLOCK, "fiber": {"kind": "quadric-surface", "coefficients": [0, 2, 0]}},
    ],
    ids=[
        "unknown-key",
        "non-integer",
        "boolean-pairing",
        "wrong-g11",
        "two-labels",
        "bad-flag",
        "unknown-fiber",
        "short-fiber",
        "wrong-fiber-degree",
        "even-quadric-class",
    ],
)
def test_malformed_family_blocks(block: dict[str, object]) -> None:
    with pytest.raises(ConfigurationError):
        parse_families({"families": {"toy": block}})


def test_builtin_names_cannot_be_shadowed() -> None:
    with pytest.raises(ConfigurationError):
        parse_families({"families": {"c18-c14": TOY_BLOCK}})


def test_string_integers_are_accepted() -> None:
    (toy,) = parse_families({"families": {"toy": {**TOY_BLOCK, "g33": "3"}}})
    assert toy.g33 == 3
    assert parse_families({}) == []

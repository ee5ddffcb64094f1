"""Configuration source utilities for :mod:`cubic_loci.config_loader`."""

from __future__ import annotations

import json
from collections.abc import Iterable
from pathlib import Path
from typing import Protocol, TextIO, cast

from cubic_loci.exceptions import ConfigurationError
from cubic_loci.settings import CubicLociSettings

_DEFAULT_CANDIDATES: tuple[Path, ...] = (
    Path("config/families.yml"),
    Path("config/families.yaml"),
    Path("config/families.json"),
)


class YamlModule(Protocol):
    """Protocol describing the subset of PyYAML used by the loader."""

    def safe_load(self, stream: TextIO | str) -> object:
        """Parse YAML content from a text stream or string."""


def load_structured_config(
    path: str | None, settings: CubicLociSettings
) -> tuple[dict[str, object], Path] | None:
    """Locate and parse a family configuration file.

    Discovery order: ``path``, then ``CUBIC_LOCI_CONFIG``, then the default
    locations under ``config/``. A file named explicitly must exist; the
    defaults are optional.

    Returns:
        The parsed mapping and the file it came from, or ``None`` when no
        default file exists.

    Raises:
        ConfigurationError: If a named file is missing or any file is malformed.
    """

    explicit = path or settings.config_path
    candidates: Iterable[Path]
    if explicit:
        candidate = Path(explicit)
        if not candidate.exists():
            raise ConfigurationError(
                f"Configuration file not found: {candidate}", {"path": str(candidate)}
            )
        candidates = (candidate,)
    else:
        candidates = _DEFAULT_CANDIDATES

    for candidate in candidates:
        if candidate.exists():
            return _load_config_file(candidate), candidate
    return None


def _load_config_file(path: Path) -> dict[str, object]:
    suffix = path.suffix.lower()
    if suffix == ".json":
        return _load_json(path)
    if suffix in {".yml", ".yaml"}:
        return _load_yaml(path)
    raise ConfigurationError(
        f"Unsupported configuration suffix: {suffix or '<none>'}", {"path": str(path)}
    )


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigurationError(
            f"Cannot read configuration file: {path}", {"path": str(path)}
        ) from exc


def _load_json(path: Path) -> dict[str, object]:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(
            f"Invalid JSON in {path}: {exc.msg}", {"path": str(path), "line": exc.lineno}
        ) from exc
    return _normalize_mapping(data, path)


def _load_yaml(path: Path) -> dict[str, object]:
    module = _import_yaml_module()
    if module is None:
        raise ConfigurationError(
            "YAML configuration requires PyYAML (install the 'config' extra)",
            {"path": str(path)},
        )
    text = _read_text(path)
    try:
        data = module.safe_load(text)
    except Exception as exc:  # yaml.YAMLError without importing yaml eagerly
        raise ConfigurationError(
            f"Invalid YAML in {path}", {"path": str(path), "error": str(exc)}
        ) from exc
    return _normalize_mapping(data, path)


def _import_yaml_module() -> YamlModule | None:
    """Import PyYAML lazily so JSON-only installs do not need it."""

    try:
        import yaml
    except ModuleNotFoundError:
        return None
    return cast(YamlModule, yaml)


def _normalize_mapping(value: object, path: Path) -> dict[str, object]:
    if not isinstance(value, dict):
        raise ConfigurationError(
            "Configuration root must be a mapping", {"path": str(path)}
        )
    value_dict = cast(dict[object, object], value)
    return {key: item for key, item in value_dict.items() if isinstance(key, str)}

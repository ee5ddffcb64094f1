"""Public entry points for the :mod:`cubic_loci` family configuration loader."""

from __future__ import annotations

from cubic_loci.config_loader.models import LociConfig
from cubic_loci.config_loader.parsing import parse_families
from cubic_loci.config_loader.sources import load_structured_config
from cubic_loci.settings import CubicLociSettings, get_settings

__all__ = ["LociConfig", "load_config", "parse_families"]


def load_config(
    path: str | None = None, *, settings: CubicLociSettings | None = None
) -> LociConfig:
    """Load user-defined families from an optional configuration file.

    Args:
        path: Optional explicit path to a configuration file. When omitted the
            loader inspects ``CUBIC_LOCI_CONFIG`` and the default locations.
        settings: Optional pre-instantiated environment settings. When omitted
            :func:`cubic_loci.settings.get_settings` is used.

    Returns:
        The configured families; empty when no file was found.

    Raises:
        ConfigurationError: If the file is missing, unreadable or malformed.
    """

    env_settings = settings or get_settings()
    loaded = load_structured_config(path, env_settings)
    if loaded is None:
        return LociConfig()
    data, source = loaded
    return LociConfig(tuple(parse_families(data)), source)

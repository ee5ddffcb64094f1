"""Environment-backed settings primitives for :mod:`cubic_loci`."""

from __future__ import annotations

import logging

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

__all__ = ["CubicLociSettings", "get_settings"]

_LEVELS: dict[str, int] = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


class CubicLociSettings(BaseSettings):
    """Expose environment-derived knobs for the command-line front end.

    None of these settings changes a computed result; they only decide where
    extra families are read from and how much is logged.

    Attributes:
        config_path: Explicit path to a family configuration file.
        log_level: Logging level name for the ``cubic_loci`` logger.
        trace_id: Static trace identifier stamped on structured log records.
    """

    config_path: str | None = Field(default=None, alias="CUBIC_LOCI_CONFIG")
    log_level: str = Field(default="WARNING", alias="CUBIC_LOCI_LOG_LEVEL")
    trace_id: str | None = Field(default=None, alias="CUBIC_LOCI_TRACE_ID")

    model_config = SettingsConfigDict(env_file=None, extra="ignore")

    @field_validator("log_level", mode="before")
    @classmethod
    def _parse_level(cls, value: object) -> str:
        """Normalise the level name, falling back to ``WARNING`` on bad input."""

        if isinstance(value, str) and value.strip().upper() in _LEVELS:
            return value.strip().upper()
        return "WARNING"

    @field_validator("config_path", "trace_id", mode="before")
    @classmethod
    def _blank_is_none(cls, value: object) -> str | None:
        if value is None:
            return None
        text = str(value).strip()
        return text or None

    @property
    def log_level_number(self) -> int:
        return _LEVELS[self.log_level]


def get_settings() -> CubicLociSettings:
    """Return settings parsed from environment variables."""

    return CubicLociSettings()

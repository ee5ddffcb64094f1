"""Typed configuration dataclasses for :mod:`cubic_loci.config_loader`."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from cubic_loci.families import FamilyRegistry, FamilySpec


@dataclass(slots=True)
class LociConfig:
    """User-defined families read from a configuration file.

    Attributes:
        families: Families in file order.
        source: File the families were read from, ``None`` when no file was found.
    """

    families: tuple[FamilySpec, ...] = ()
    source: Path | None = None
    names: tuple[str, ...] = field(init=False, default=())

    def __post_init__(self) -> None:
        self.names = tuple(spec.name for spec in self.families)

    def registry(self) -> FamilyRegistry:
        """Return the built-in families merged with the configured ones."""

        return FamilyRegistry(self.families)

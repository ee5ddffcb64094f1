"""Built-in intersection families and the family registry."""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from cubic_loci.exceptions import ConfigurationError, UnknownFamilyError
from cubic_loci.families.models import FamilySpec, FiberSpec

__all__ = [
    "BUILTIN_FAMILIES",
    "BUILTIN_NAMES",
    "DISCRIMINANT_POLYNOMIALS",
    "FamilyRegistry",
    "builtin_family",
]

_DEL_PEZZO_FIBER_T_LAST = FiberSpec("del-pezzo-6", (4, 0, -1))
_DEL_PEZZO_FIBER_T_MIDDLE = FiberSpec("del-pezzo-6", (4, -1, 0))

BUILTIN_FAMILIES: dict[str, FamilySpec] = {
    "c18-c14": FamilySpec(
        "c18-c14",
        ("h2", "S14", "T"),
        g12=4,
        g22=10,
        g13=6,
        g33=18,
        fiber=_DEL_PEZZO_FIBER_T_LAST,
        rational_divisor=True,
    ),
    "c18-c26": FamilySpec(
        "c18-c26",
        ("h2", "T", "S26"),
        g12=6,
        g22=18,
        g13=7,
        g33=25,
        fiber=_DEL_PEZZO_FIBER_T_MIDDLE,
        rational_divisor=True,
    ),
    "c18-c38": FamilySpec(
        "c18-c38",
        ("h2", "T", "S38"),
        g12=6,
        g22=18,
        g13=10,
        g33=46,
        fiber=_DEL_PEZZO_FIBER_T_MIDDLE,
        rational_divisor=True,
    ),
    "c8-c26": FamilySpec(
        "c8-c26",
        ("h2", "P", "S26"),
        g12=1,
        g22=3,
        g13=7,
        g33=25,
        fiber=FiberSpec("quadric-surface", (1, -1, 0), section_witness=(0, 3, 1)),
        rational_divisor=True,
    ),
    "c8-c38": FamilySpec(
        "c8-c38",
        ("h2", "P", "S38"),
        g12=1,
        g22=3,
        g13=10,
        g33=46,
        fiber=FiberSpec("quadric-surface", (1, -1, 0), section_witness=(0, 5, 1)),
        rational_divisor=True,
    ),
}

BUILTIN_NAMES: tuple[str, ...] = tuple(BUILTIN_FAMILIES)

# Closed forms d(A_τ) = a·τ² + b·τ + c, keyed by family.
DISCRIMINANT_POLYNOMIALS: dict[str, tuple[int, int, int]] = {
    "c18-c14": (-3, 48, -108),
    "c18-c26": (-3, 84, -432),
    "c18-c38": (-3, 120, -972),
    "c8-c26": (-3, 14, 53),
    "c8-c38": (-3, 20, 68),
}


def builtin_family(name: str) -> FamilySpec:
    """Return a built-in family by name.

    Raises:
        UnknownFamilyError: If ``name`` is not built in.
    """

    try:
        return BUILTIN_FAMILIES[name]
    except KeyError:
        raise UnknownFamilyError(
            f"Unknown family: {name}", {"known": list(BUILTIN_NAMES)}
        ) from None


class FamilyRegistry:
    """Built-in families plus families loaded from configuration."""

    def __init__(self, extra: Iterable[FamilySpec] = ()) -> None:
        self._families: dict[str, FamilySpec] = dict(BUILTIN_FAMILIES)
        for spec in extra:
            self.register(spec)

    def register(self, spec: FamilySpec) -> None:
        """Add a user-defined family.

        Raises:
            ConfigurationError: If the name is already taken.
        """

        if spec.name in self._families:
            raise ConfigurationError(
                f"Family name already registered: {spec.name}", {"family": spec.name}
            )
        self._families[spec.name] = spec

    def get(self, name: str) -> FamilySpec:
        try:
            return self._families[name]
        except KeyError:
            raise UnknownFamilyError(
                f"Unknown family: {name}", {"known": self.names()}
            ) from None

    def names(self) -> list[str]:
        extra = sorted(name for name in self._families if name not in BUILTIN_FAMILIES)
        return list(BUILTIN_NAMES) + extra

    def __iter__(self) -> Iterator[FamilySpec]:
        return iter([self._families[name] for name in self.names()])

    def __contains__(self, name: object) -> bool:
        return name in self._families

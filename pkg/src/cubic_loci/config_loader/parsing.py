"""Conversion of parsed configuration mappings into :class:`FamilySpec` objects."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import cast, get_args

from cubic_loci.exceptions import ConfigurationError, CubicLociError
from cubic_loci.families import BUILTIN_FAMILIES, FamilySpec, FiberSpec
from cubic_loci.families.models import FiberKind

_PAIRING_KEYS: tuple[str, ...] = ("g12", "g22", "g13", "g33")
_FAMILY_KEYS: frozenset[str] = frozenset(
    (*_PAIRING_KEYS, "basis_labels", "fiber", "rational_divisor", "g11")
)


def parse_families(data: Mapping[str, object]) -> list[FamilySpec]:
    """Build family specs from the ``families`` section of a configuration file.

    Args:
        data: Mapping parsed from the configuration file.

    Returns:
        Families in file order; an absent section yields an empty list.

    Raises:
        ConfigurationError: If a block is malformed or shadows a built-in name.
    """

    section = data.get("families")
    if section is None:
        return []
    blocks = _expect_mapping(section, "families")
    families: list[FamilySpec] = []
    for name, raw in blocks.items():
        if name in BUILTIN_FAMILIES:
            raise ConfigurationError(
                f"Family {name} shadows a built-in family", {"family": name}
            )
        families.append(_parse_family(name, _expect_mapping(raw, name)))
    return families


def _parse_family(name: str, block: Mapping[str, object]) -> FamilySpec:
    unknown = sorted(set(block) - _FAMILY_KEYS)
    if unknown:
        raise ConfigurationError(
            f"Unknown keys in family {name}", {"family": name, "keys": unknown}
        )
    pairings = {key: _require_int(block.get(key), name, key) for key in _PAIRING_KEYS}
    g11 = block.get("g11", 3)
    if _coerce_int(g11) != 3:
        raise ConfigurationError(
            f"Family {name}: g11 is fixed at 3", {"family": name, "g11": g11}
        )

    labels = _coerce_str_sequence(block.get("basis_labels", ("h2", "S", "T")))
    if labels is None or len(labels) != 3:
        raise ConfigurationError(
            f"Family {name}: basis_labels must list three names", {"family": name}
        )

    rational = _coerce_bool(block.get("rational_divisor", False))
    if rational is None:
        raise ConfigurationError(
            f"Family {name}: rational_divisor must be a boolean", {"family": name}
        )

    fiber = None
    if block.get("fiber") is not None:
        fiber = _parse_fiber(name, _expect_mapping(block["fiber"], f"{name}.fiber"))

    try:
        return FamilySpec(
            name,
            (labels[0], labels[1], labels[2]),
            fiber=fiber,
            rational_divisor=rational,
            **pairings,
        )
    except CubicLociError as exc:
        raise ConfigurationError(
            f"Family {name}: {exc.message}", {"family": name, **exc.details}
        ) from exc


def _parse_fiber(name: str, block: Mapping[str, object]) -> FiberSpec:
    kind = _coerce_str(block.get("kind"))
    if kind not in get_args(FiberKind):
        raise ConfigurationError(
            f"Family {name}: unknown fiber kind {kind!r}",
            {"family": name, "kinds": list(get_args(FiberKind))},
        )
    coefficients = _coerce_int_triple(block.get("coefficients"))
    if coefficients is None:
        raise ConfigurationError(
            f"Family {name}: fiber coefficients must be three integers",
            {"family": name},
        )
    section = block.get("section_witness")
    witness = None
    if section is not None:
        witness = _coerce_int_triple(section)
        if witness is None:
            raise ConfigurationError(
                f"Family {name}: section_witness must be three integers",
                {"family": name},
            )
    return FiberSpec(cast(FiberKind, kind), coefficients, section_witness=witness)


def _require_int(value: object, name: str, key: str) -> int:
    parsed = _coerce_int(value)
    if parsed is None:
        raise ConfigurationError(
            f"Family {name}: {key} must be an integer", {"family": name, "key": key}
        )
    return parsed


def _coerce_int(value: object) -> int | None:
    """Parse an integer, rejecting booleans and non-integral floats."""

    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return value
    if isinstance(value, float) and value.is_integer():
        return int(value)
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            return None
    return None


def _coerce_int_triple(value: object) -> tuple[int, int, int] | None:
    if not isinstance(value, Sequence) or isinstance(value, (str, bytes)):
        return None
    items = [_coerce_int(item) for item in value]
    if len(items) != 3 or any(item is None for item in items):
        return None
    a, b, c = cast(list[int], items)
    return (a, b, c)


def _coerce_bool(value: object) -> bool | None:
    if isinstance(value, bool):
        return value
    if isinstance(value, str):
        lowered = value.strip().lower()
        if lowered in {"true", "1", "yes"}:
            return True
        if lowered in {"false", "0", "no"}:
            return False
    return None


def _coerce_str(value: object) -> str | None:
    if isinstance(value, str):
        stripped = value.strip()
        return stripped or None
    return None


def _coerce_str_sequence(value: object) -> tuple[str, ...] | None:
    if not isinstance(value, Sequence) or isinstance(value, (str, bytes)):
        return None
    items: list[str] = []
    for element in value:
        if not isinstance(element, str):
            return None
        items.append(element)
    return tuple(items)


def _expect_mapping(value: object, where: str) -> Mapping[str, object]:
    if not isinstance(value, Mapping) or not all(isinstance(key, str) for key in value):
        raise ConfigurationError(f"{where} must be a mapping", {"section": where})
    return cast(Mapping[str, object], value)

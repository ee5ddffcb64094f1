"""Tests for the intersection families and component classification."""

from __future__ import annotations

import logging
from dataclasses import replace

import pytest

from cubic_loci.exceptions import (
    ConfigurationError,
    ContractError,
    NotApplicableError,
    UnknownFamilyError,
)
from cubic_loci.families import (
    BUILTIN_FAMILIES,
    BUILTIN_NAMES,
    DISCRIMINANT_POLYNOMIALS,
    EmptyVerdict,
    FamilyRegistry,
    FamilySpec,
    FiberSpec,
    PrimitiveRoot,
    admissible_tau_range,
    builtin_family,
    classify_component,
    discriminant_polynomial,
    discriminant_polynomial_check,
    family_labellings,
    has_associated_k3,
    is_hassett_admissible,
    labelling_discriminant,
    labelling_uniqueness_note,
    primitive_short_roots,
)

RANGES = {
    "c18-c14": (3, 13),
    "c18-c26": (7, 21),
    "c18-c38": (12, 28),
    "c8-c26": (-2, 7),
    "c8-c38": (-2, 9),
}

EMPTY = {
    "c18-c14": [3, 13],
    "c18-c26": [7, 21],
    "c18-c38": [],
    "c8-c26": [-2, 7],
    "c8-c38": [-2, 9],
}


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_discriminant_polynomials(name: str) -> None:
    family = BUILTIN_FAMILIES[name]
    assert discriminant_polynomial(family) == DISCRIMINANT_POLYNOMIALS[name]
    assert discriminant_polynomial_check(family)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_admissible_ranges(name: str) -> None:
    low, high = RANGES[name]
    assert admissible_tau_range(BUILTIN_FAMILIES[name]) == list(range(low, high + 1))


@pytest.mark.parametrize("name", BUILTIN_NAMES)
def test_empty_components(name: str) -> None:
    family = BUILTIN_FAMILIES[name]
    empty = [tau for tau in admissible_tau_range(family) if classify_component(family, tau).is_empty]
    assert empty == EMPTY[name]


def test_nonempty_component_reports_discriminant(c18_c14: FamilySpec) -> None:
    component = classify_component(c18_c14, 10)
    assert not component.is_empty
    assert component.discriminant == 72
    assert component.witness is None
    assert component.verdict.status == "nonempty"


@pytest.mark.parametrize(
    ("name", "tau", "witness", "located_in"),
    [
        ("c18-c14", 3, (4, -1, -1), "full-lattice"),
        ("c18-c14", 13, (0, 1, -1), "full-lattice"),
        ("c18-c26", 7, (5, -1, -1), "full-lattice"),
        ("c18-c26", 21, (1, 1, -1), "full-lattice"),
        ("c8-c26", -2, (3, -2, -1), "primitive-part"),
        ("c8-c26", 7, (2, 1, -1), "primitive-part"),
        ("c8-c38", -2, (4, -2, -1), "primitive-part"),
        ("c8-c38", 9, (2, 2, -1), "full-lattice"),
    ],
)
def test_emptiness_witnesses(name: str, tau: int, witness: tuple[int, ...], located_in: str) -> None:
    family = BUILTIN_FAMILIES[name]
    component = classify_component(family, tau)
    assert component.is_empty
    assert component.witness == witness
    assert isinstance(component.verdict, EmptyVerdict)
    assert component.verdict.located_in == located_in
    assert family.norm_form(*witness, tau) == 2


def test_witness_prefers_orthogonal_roots(c8_c26: FamilySpec) -> None:
    # Both (1,2,-1) and (2,1,-1) have norm 2 at tau=7; only the second is orthogonal to h².
    assert c8_c26.norm_form(1, 2, -1, 7) == 2
    assert classify_component(c8_c26, 7).witness == (2, 1, -1)


def test_classify_outside_range(c18_c14: FamilySpec) -> None:
    with pytest.raises(ContractError):
        classify_component(c18_c14, 2)


def test_primitive_short_roots(c8_c26: FamilySpec) -> None:
    roots = primitive_short_roots(c8_c26, -2)
    assert PrimitiveRoot((3, -2, -1), (3, 1)) in roots
    assert primitive_short_roots(c8_c26, 3) == []


def test_family_spec_validation() -> None:
    with pytest.raises(ContractError):
        FamilySpec("bad", ("h2", "S", "T"), g12=1, g22=3, g13=1, g33=3, g11=2)
    with pytest.raises(ContractError):
        FamilySpec(
            "bad-fiber",
            ("h2", "S", "T"),
            g12=4,
            g22=10,
            g13=6,
            g33=18,
            fiber=FiberSpec("del-pezzo-6", (1, 0, 0)),
        )


def test_fiber_degrees() -> None:
    for family in BUILTIN_FAMILIES.values():
        assert family.fiber is not None
        expected = 6 if family.fiber.kind == "del-pezzo-6" else 2
        assert family.norm_form(1, 0, 0, 0) == 3
        gram = family.gram(0)
        degree = sum(gram[0][j] * family.fiber.coefficients[j] for j in range(3))
        assert degree == expected


def test_surface_degrees(c18_c14: FamilySpec) -> None:
    assert c18_c14.surface_degrees == {"S14": 4, "T": 6}


def test_polynomial_check_without_closed_form() -> None:
    toy = FamilySpec("toy", ("h2", "S", "T"), g12=1, g22=3, g13=1, g33=3)
    with pytest.raises(NotApplicableError):
        discriminant_polynomial_check(toy)


def test_polynomial_check_detects_corruption(
    c18_c14: FamilySpec, caplog: pytest.LogCaptureFixture
) -> None:
    corrupted = replace(c18_c14, g22=11)
    with caplog.at_level(logging.WARNING, logger="cubic_loci"):
        assert not discriminant_polynomial_check(corrupted)
    assert "Discriminant polynomial mismatch" in caplog.text


def test_registry() -> None:
    toy = FamilySpec("toy", ("h2", "S", "T"), g12=1, g22=3, g13=1, g33=3)
    registry = FamilyRegistry([toy])
    assert registry.names() == [*BUILTIN_NAMES, "toy"]
    assert registry.get("toy") is toy
    assert "c8-c26" in registry
    assert [family.name for family in registry][-1] == "toy"
    with pytest.raises(ConfigurationError):
        registry.register(toy)
    with pytest.raises(UnknownFamilyError):
        registry.get("c99-c1")
    with pytest.raises(UnknownFamilyError):
        builtin_family("toy")


@pytest.mark.parametrize(
    ("name", "expected"),
    [
        ("c18-c14", [14, 18]),
        ("c18-c26", [18, 26]),
        ("c18-c38", [18, 38]),
        ("c8-c26", [8, 26]),
        ("c8-c38", [8, 38]),
    ],
)
def test_labelling_discriminants(name: str, expected: list[int]) -> None:
    facts = family_labellings(BUILTIN_FAMILIES[name])
    assert sorted(f.discriminant for f in facts) == expected
    assert all(f.admissible for f in facts)


def test_labelling_arithmetic() -> None:
    assert labelling_discriminant(4, 10) == 14
    assert is_hassett_admissible(8)
    assert not is_hassett_admissible(6)
    assert not is_hassett_admissible(10)
    assert [has_associated_k3(d) for d in (14, 26, 38, 8, 18)] == [True, True, True, False, False]
    assert labelling_uniqueness_note(18) is not None
    assert labelling_uniqueness_note(14) is None

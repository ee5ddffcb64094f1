"""Intersection families ``C_a ∩ C_b`` parameterized by the free pairing τ."""

from cubic_loci.families.classification import (
    HYPERPLANE_SQUARE,
    PrimitiveRoot,
    admissible_tau_range,
    classify_component,
    discriminant_polynomial,
    discriminant_polynomial_check,
    gram_at_tau,
    primitive_short_roots,
)
from cubic_loci.families.labelling import (
    LabellingFacts,
    family_labellings,
    has_associated_k3,
    is_hassett_admissible,
    labelling_discriminant,
    labelling_uniqueness_note,
)
from cubic_loci.families.models import (
    ComponentClass,
    EmptyVerdict,
    FamilySpec,
    FiberSpec,
    NonemptyVerdict,
)
from cubic_loci.families.registry import (
    BUILTIN_FAMILIES,
    BUILTIN_NAMES,
    DISCRIMINANT_POLYNOMIALS,
    FamilyRegistry,
    builtin_family,
)

__all__ = [
    "BUILTIN_FAMILIES",
    "BUILTIN_NAMES",
    "DISCRIMINANT_POLYNOMIALS",
    "HYPERPLANE_SQUARE",
    "ComponentClass",
    "EmptyVerdict",
    "FamilyRegistry",
    "FamilySpec",
    "FiberSpec",
    "LabellingFacts",
    "NonemptyVerdict",
    "PrimitiveRoot",
    "admissible_tau_range",
    "builtin_family",
    "classify_component",
    "discriminant_polynomial",
    "discriminant_polynomial_check",
    "family_labellings",
    "gram_at_tau",
    "has_associated_k3",
    "is_hassett_admissible",
    "labelling_discriminant",
    "labelling_uniqueness_note",
    "primitive_short_roots",
]

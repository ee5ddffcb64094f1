"""JSON-ready payloads for the single-question CLI subcommands."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from cubic_loci.brauer import (
    BrauerStatus,
    CycleWitness,
    dp6_report,
    multisection_witness,
    quadric_report,
)
from cubic_loci.exact_linalg import Rational
from cubic_loci.exceptions import NotApplicableError
from cubic_loci.families import (
    FamilyRegistry,
    FamilySpec,
    admissible_tau_range,
    classify_component,
    discriminant_polynomial,
    family_labellings,
    gram_at_tau,
    primitive_short_roots,
)
from cubic_loci.families.models import EmptyVerdict
from cubic_loci.lattice import norm, short_vectors
from cubic_loci.overlattice import OverlatticeCandidate, sieve

__all__ = [
    "brauer_payload",
    "classify_payload",
    "families_payload",
    "overlattices_payload",
    "shortvec_payload",
]

Payload = dict[str, object]


def _number(value: Rational) -> int | str:
    # Exact rationals print as "p/q"; integral values stay integers.
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return int(value)


def _matrix(matrix: Sequence[Sequence[Rational]]) -> list[list[int | str]]:
    return [[_number(value) for value in row] for row in matrix]


def _cycle(witness: CycleWitness | None) -> Payload | None:
    if witness is None:
        return None
    return {"coefficients": list(witness.coefficients), "pairing": witness.pairing_value}


def _status(status: BrauerStatus) -> Payload:
    return {"class": status.label, "witness": _cycle(status.witness)}


def classify_payload(family: FamilySpec, tau: int) -> Payload:
    component = classify_component(family, tau)
    payload: Payload = {
        "family": family.name,
        "tau": tau,
        "status": component.verdict.status,
        "discriminant": component.discriminant,
        "gram": _matrix(family.gram(tau)),
        "primitive_roots": [
            {"vector": list(root.vector), "coordinates": list(root.coordinates)}
            for root in primitive_short_roots(family, tau)
        ],
    }
    if isinstance(component.verdict, EmptyVerdict):
        payload["witness"] = list(component.verdict.witness)
        payload["located_in"] = component.verdict.located_in
    return payload


def shortvec_payload(family: FamilySpec, tau: int, bound: int) -> Payload:
    lattice = gram_at_tau(family, tau).lattice
    vectors = short_vectors(lattice, bound)
    return {
        "family": family.name,
        "tau": tau,
        "bound": bound,
        "vectors": [{"vector": list(v), "norm": norm(lattice, v)} for v in vectors],
    }


def _candidate(candidate: OverlatticeCandidate) -> Payload:
    return {
        "n": candidate.n,
        "xprime": candidate.xprime,
        "yprime": candidate.yprime,
        "gram_B": _matrix(candidate.gram_B),
        "d_B": _number(candidate.discriminant_B),
        "b0_basis": [list(v) for v in candidate.b0_basis],
        "gram_B0": _matrix(candidate.gram_B0),
        "rejection_reason": candidate.rejection_reason,
        "root": list(candidate.root) if candidate.root is not None else None,
    }


def overlattices_payload(family: FamilySpec, tau: int) -> Payload:
    """Full candidate ledger with the rejection reason of every candidate."""

    verdict = sieve(family, tau)
    return {
        "family": family.name,
        "tau": tau,
        "discriminant": verdict.discriminant,
        "indices": list(verdict.indices),
        "shortcut": verdict.shortcut,
        "candidates_checked": verdict.candidates_checked,
        "candidates": [_candidate(c) for c in verdict.candidates],
        "survivors": [[c.n, c.xprime, c.yprime] for c in verdict.survivors],
        "irreducible": verdict.irreducible,
        "relies_on_normal_form": verdict.relies_on_normal_form,
    }


def brauer_payload(family: FamilySpec, tau: int, k: int | None = None) -> Payload:
    """Brauer report for the family's fibration; ``k`` adds one multisection search."""

    if family.fiber is None:
        raise NotApplicableError(
            f"Family {family.name} has no fibration", {"family": family.name}
        )
    payload: Payload
    if family.fiber.kind == "del-pezzo-6":
        dp6 = dp6_report(family, tau)
        payload = {
            "kind": "del-pezzo-6",
            "pairing_form": list(dp6.pairing_form),
            "fiber_degree": dp6.fiber_degree,
            "b2": _status(dp6.b2),
            "b3": _status(dp6.b3),
            "both_trivial": dp6.both_trivial,
            "rational_via_fibration": dp6.rational_via_fibration,
            "rational_via_divisor": dp6.rational_via_divisor,
            "assumptions": list(dp6.assumptions),
        }
    else:
        quadric = quadric_report(family, tau)
        payload = {
            "kind": "quadric-surface",
            "pairing_form": list(quadric.pairing_form),
            "fiber_degree": quadric.fiber_degree,
            "discriminant": quadric.discriminant,
            "beta": _status(quadric.beta),
            "canonical_witness": _cycle(quadric.canonical_witness),
            "justification": quadric.justification,
            "rational_via_section": quadric.rational_via_section,
            "rational_via_divisor": quadric.rational_via_divisor,
            "assumptions": list(quadric.assumptions),
        }
    payload.update(family=family.name, tau=tau)
    if k is not None:
        witness = multisection_witness(family, tau, k)
        payload["multisection"] = {"k": k, "witness": _cycle(witness)}
    return payload


def _family_entry(family: FamilySpec) -> Payload:
    taus = admissible_tau_range(family)
    return {
        "name": family.name,
        "basis_labels": list(family.basis_labels),
        "pairings": {
            "g11": family.g11,
            "g12": family.g12,
            "g22": family.g22,
            "g13": family.g13,
            "g33": family.g33,
        },
        "fiber": None
        if family.fiber is None
        else {"kind": family.fiber.kind, "coefficients": list(family.fiber.coefficients)},
        "rational_divisor": family.rational_divisor,
        "discriminant_polynomial": list(discriminant_polynomial(family)),
        "tau_range": [taus[0], taus[-1]] if taus else None,
        "labellings": [
            {
                "label": facts.label,
                "degree": facts.degree,
                "discriminant": facts.discriminant,
                "hassett_admissible": facts.admissible,
                "associated_k3": facts.associated_k3,
                "note": facts.note,
            }
            for facts in family_labellings(family)
        ],
    }


def families_payload(registry: FamilyRegistry) -> Payload:
    return {"families": [_family_entry(family) for family in registry]}

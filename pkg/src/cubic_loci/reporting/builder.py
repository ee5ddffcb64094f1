"""Assemble :class:`IntersectionReport` objects from the classification pipeline."""

from __future__ import annotations

import logging

from cubic_loci import __version__
from cubic_loci.brauer import (
    GOOD_FIBRATION_ASSUMPTION,
    GOOD_PLANE_ASSUMPTION,
    CycleWitness,
    dp6_report,
    quadric_report,
)
from cubic_loci.families import (
    FamilyRegistry,
    FamilySpec,
    admissible_tau_range,
    classify_component,
)
from cubic_loci.families.models import EmptyVerdict
from cubic_loci.overlattice import sieve
from cubic_loci.reporting.render import ReportFormat, check_format, render
from cubic_loci.reporting.schemas import FamilyKind, IntersectionReport, ReportRow
from cubic_loci.tools.canonicalize import hash_canonical, jsonable

LOGGER = logging.getLogger(__name__)

GENERATED_BY = f"cubic-loci {__version__}"

__all__ = ["GENERATED_BY", "build_report", "build_row", "run_report"]


def _coefficients(witness: CycleWitness | None) -> list[int] | None:
    return list(witness.coefficients) if witness is not None else None


def _kind(family: FamilySpec) -> FamilyKind:
    return family.fiber.kind if family.fiber is not None else "none"


def build_row(family: FamilySpec, tau: int) -> ReportRow:
    """Classify, sieve and (when fibered) decide the Brauer classes at one τ."""

    component = classify_component(family, tau)
    if isinstance(component.verdict, EmptyVerdict):
        return ReportRow(
            tau=tau,
            status="empty",
            discriminant=component.discriminant,
            witness=list(component.verdict.witness),
            located_in=component.verdict.located_in,
        )

    verdict = sieve(family, tau)
    fields: dict[str, object] = {
        "tau": tau,
        "status": "nonempty",
        "discriminant": component.discriminant,
        "irreducible": verdict.irreducible,
        "candidates_checked": verdict.candidates_checked,
        "shortcut": verdict.shortcut,
        "survivors": [[c.n, c.xprime, c.yprime] for c in verdict.survivors],
    }
    kind = _kind(family)
    if kind == "del-pezzo-6":
        dp6 = dp6_report(family, tau)
        fields.update(
            b2=dp6.b2.label,
            b2_witness=_coefficients(dp6.b2.witness),
            b3=dp6.b3.label,
            b3_witness=_coefficients(dp6.b3.witness),
            rational_via_divisor=dp6.rational_via_divisor,
            rational_via_fibration=dp6.rational_via_fibration,
        )
    elif kind == "quadric-surface":
        quadric = quadric_report(family, tau)
        fields.update(
            beta=quadric.beta.label,
            beta_witness=_coefficients(quadric.beta.witness),
            canonical_witness=_coefficients(quadric.canonical_witness),
            justification=quadric.justification,
            rational_via_divisor=quadric.rational_via_divisor,
            rational_via_fibration=quadric.rational_via_section,
        )
    return ReportRow.model_validate(fields)


def build_report(family: FamilySpec) -> IntersectionReport:
    """Build the report with one row per admissible τ, in ascending order."""

    rows = [build_row(family, tau) for tau in admissible_tau_range(family)]
    kind = _kind(family)
    assumptions: list[str] = []
    if kind == "del-pezzo-6":
        assumptions.append(GOOD_FIBRATION_ASSUMPTION)
    elif kind == "quadric-surface":
        assumptions.append(GOOD_PLANE_ASSUMPTION)
    assumptions.append("irreducibility relies on the (e1, e2, V) overlattice normal form")

    digest = hash_canonical(jsonable([row.model_dump() for row in rows]))
    LOGGER.info(
        "Report built",
        extra={"family": family.name, "rows": len(rows), "rows_digest": digest},
    )
    return IntersectionReport(
        family=family.name,
        kind=kind,
        basis_labels=list(family.basis_labels),
        generated_by=GENERATED_BY,
        assumptions=assumptions,
        rows=rows,
        rows_digest=digest,
    )


def run_report(
    family: str, fmt: ReportFormat | str, registry: FamilyRegistry | None = None
) -> str:
    """Build and serialize the report of a registered family.

    Raises:
        UnknownFamilyError: If ``family`` is not registered.
        UnsupportedFormatError: If ``fmt`` is not json, markdown or csv.
    """

    checked = check_format(fmt)
    registry = registry or FamilyRegistry()
    spec = registry.get(family)
    return render(build_report(spec), checked)

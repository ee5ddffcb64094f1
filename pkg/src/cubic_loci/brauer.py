"""Triviality of the Brauer classes attached to del Pezzo and quadric fibrations.

For a good sextic del Pezzo fibration with fiber class ``F`` the class ``b2``
is trivial iff some cycle ``W`` has ``<W, F> = 2``, and ``b3`` iff some cycle
has ``<W, F> = 3``. For a quadric surface bundle with quadric class ``Q`` the
class ``β`` is trivial iff some cycle pairs oddly with ``Q``. All cycles are
taken in ``A_τ``, so each question is a linear Diophantine equation in the
coefficients of ``W``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Literal

from cubic_loci.exact_linalg import IntVector, quadratic_product
from cubic_loci.exceptions import ContractError, NotApplicableError
from cubic_loci.families import (
    FamilySpec,
    admissible_tau_range,
    classify_component,
    gram_at_tau,
)
from cubic_loci.lattice import inner

LOGGER = logging.getLogger(__name__)

Justification = Literal["even-discriminant-rank-3"]
GOOD_FIBRATION_ASSUMPTION = "good del Pezzo fibration"
GOOD_PLANE_ASSUMPTION = "good plane (quadric bundle with simple degeneration)"
_UNITS: tuple[IntVector, ...] = ((1, 0, 0), (0, 1, 0), (0, 0, 1))

__all__ = [
    "BrauerStatus",
    "CycleWitness",
    "DP6Report",
    "QuadricReport",
    "dp6_report",
    "fiber_pairing_form",
    "multisection_witness",
    "quadric_report",
    "theorem_rows",
]


@dataclass(frozen=True, slots=True)
class CycleWitness:
    """Cycle ``W = a·e1 + b·e2 + c·e3`` with ``<W, fiber> = pairing_value``."""

    a: int
    b: int
    c: int
    pairing_value: int

    @property
    def coefficients(self) -> IntVector:
        return (self.a, self.b, self.c)

    @property
    def label(self) -> str:
        return f"W_{{{self.a},{self.b},{self.c}}}"


@dataclass(frozen=True, slots=True)
class BrauerStatus:
    trivial: bool
    witness: CycleWitness | None = None

    @property
    def label(self) -> str:
        return "triv" if self.trivial else "nontriv"


@dataclass(frozen=True, slots=True)
class DP6Report:
    """Brauer classes ``b2`` and ``b3`` of a sextic del Pezzo fibration."""

    family: str
    tau: int
    fiber_degree: int
    pairing_form: IntVector
    b2: BrauerStatus
    b3: BrauerStatus
    rational_via_divisor: bool
    assumptions: tuple[str, ...] = (GOOD_FIBRATION_ASSUMPTION,)

    @property
    def both_trivial(self) -> bool:
        return self.b2.trivial and self.b3.trivial

    @property
    def rational_via_fibration(self) -> bool:
        return self.both_trivial


@dataclass(frozen=True, slots=True)
class QuadricReport:
    """Clifford invariant ``β`` of a quadric surface bundle."""

    family: str
    tau: int
    discriminant: int
    fiber_degree: int
    pairing_form: IntVector
    beta: BrauerStatus
    canonical_witness: CycleWitness | None
    justification: Justification | None
    rational_via_divisor: bool
    assumptions: tuple[str, ...] = (GOOD_PLANE_ASSUMPTION,)

    @property
    def rational_via_section(self) -> bool:
        return self.beta.trivial


def fiber_pairing_form(family: FamilySpec, tau: int) -> IntVector:
    """Return ``(c_a, c_b, c_c)`` with ``<W_{a,b,c}, F> = c_a·a + c_b·b + c_c·c``.

    Raises:
        NotApplicableError: If the family has no fiber class.
    """

    if family.fiber is None:
        raise NotApplicableError(
            f"Family {family.name} has no fibration", {"family": family.name}
        )
    gram = family.gram(tau)
    fiber = family.fiber.coefficients
    ca, cb, cc = (int(quadratic_product(unit, gram, fiber)) for unit in _UNITS)
    return (ca, cb, cc)


def _solve_pair(cb: int, cc: int, k: int) -> tuple[int, int] | None:
    # Normal form: smallest positive b with c_b·b ≡ k (mod |c_c|).
    if cc != 0:
        for b in range(1, abs(cc) + 1):
            if (k - cb * b) % cc == 0:
                return b, (k - cb * b) // cc
        return None
    if cb != 0:
        return (k // cb, 0) if k % cb == 0 else None
    return (0, 0) if k == 0 else None


def _solve_linear(form: IntVector, k: int) -> IntVector | None:
    ca, cb, cc = form
    content = reduce(gcd, form, 0)
    if content == 0:
        return (0, 0, 0) if k == 0 else None
    if k % content:
        return None
    if cb == 0 and cc == 0:
        return (k // ca, 0, 0)
    pair = _solve_pair(cb, cc, k)
    if pair is not None:
        return (0, *pair)
    # Smallest |a| (positive first) leaving a solvable (b, c) equation.
    for step in range(1, gcd(cb, cc) + 1):
        for a in (step, -step):
            pair = _solve_pair(cb, cc, k - ca * a)
            if pair is not None:
                return (a, *pair)
    return None


def _witness(family: FamilySpec, tau: int, form: IntVector, k: int) -> CycleWitness | None:
    solution = _solve_linear(form, k)
    if solution is None:
        return None
    assert family.fiber is not None
    lattice = gram_at_tau(family, tau).lattice
    pairing = inner(lattice, solution, family.fiber.coefficients)
    if pairing != k:
        raise ContractError(
            "Witness does not realise the requested pairing",
            {"family": family.name, "tau": tau, "witness": solution, "pairing": pairing},
        )
    return CycleWitness(*solution, pairing_value=pairing)


def multisection_witness(family: FamilySpec, tau: int, k: int) -> CycleWitness | None:
    """Return a cycle with ``<W, F> = k`` in normal form, or ``None``.

    The normal form takes ``a = 0`` and the smallest positive ``b`` with
    ``c_b·b ≡ k (mod |c_c|)``; when no ``a = 0`` solution exists the smallest
    ``|a|`` is used instead.

    Raises:
        ContractError: If ``k`` is not 1, 2 or 3.
        NotApplicableError: If the family has no fiber class.
    """

    if k not in (1, 2, 3):
        raise ContractError("Multisection degree must be 1, 2 or 3", {"k": k})
    return _witness(family, tau, fiber_pairing_form(family, tau), k)


def _require_kind(family: FamilySpec, kind: str) -> None:
    if family.fiber is None or family.fiber.kind != kind:
        raise NotApplicableError(
            f"Family {family.name} is not fibered in {kind}",
            {"family": family.name, "kind": kind},
        )


def _require_nonempty(family: FamilySpec, tau: int) -> int:
    component = classify_component(family, tau)
    if component.is_empty:
        raise ContractError(
            f"C_tau is empty for {family.name} at tau={tau}",
            {"family": family.name, "tau": tau},
        )
    return component.discriminant


def _status(witness: CycleWitness | None) -> BrauerStatus:
    return BrauerStatus(trivial=witness is not None, witness=witness)


def dp6_report(family: FamilySpec, tau: int) -> DP6Report:
    """Decide ``b2`` and ``b3`` for a nonempty component of a C18 family.

    Raises:
        NotApplicableError: If the family is not a del Pezzo family.
        ContractError: If ``C_τ`` is empty or τ is not admissible.
    """

    _require_kind(family, "del-pezzo-6")
    _require_nonempty(family, tau)
    form = fiber_pairing_form(family, tau)
    report = DP6Report(
        family=family.name,
        tau=tau,
        fiber_degree=form[0],
        pairing_form=form,
        b2=_status(multisection_witness(family, tau, 2)),
        b3=_status(multisection_witness(family, tau, 3)),
        rational_via_divisor=family.rational_divisor,
    )
    LOGGER.debug(
        "Del Pezzo Brauer classes decided",
        extra={"family": family.name, "tau": tau, "b2": report.b2.label, "b3": report.b3.label},
    )
    return report


def quadric_report(family: FamilySpec, tau: int) -> QuadricReport:
    """Decide the Clifford invariant ``β`` for a nonempty component of a C8 family.

    Raises:
        NotApplicableError: If the family is not a quadric family.
        ContractError: If ``C_τ`` is empty or τ is not admissible.
    """

    _require_kind(family, "quadric-surface")
    d = _require_nonempty(family, tau)
    assert family.fiber is not None
    form = fiber_pairing_form(family, tau)
    content = reduce(gcd, form, 0)
    trivial = content % 2 == 1

    canonical: CycleWitness | None = None
    section = family.fiber.section_witness
    if trivial and section is not None:
        lattice = gram_at_tau(family, tau).lattice
        pairing = inner(lattice, section, family.fiber.coefficients)
        if pairing % 2 == 1:
            canonical = CycleWitness(*section, pairing_value=pairing)

    justification: Justification | None = None
    if not trivial:
        # Every pairing with Q is even, so Q is in the kernel of the form mod 2.
        if d % 2 != 0:
            raise ContractError(
                "Nontrivial Clifford invariant with odd discriminant",
                {"family": family.name, "tau": tau, "d": d},
            )
        justification = "even-discriminant-rank-3"

    return QuadricReport(
        family=family.name,
        tau=tau,
        discriminant=d,
        fiber_degree=form[0],
        pairing_form=form,
        beta=_status(_witness(family, tau, form, content) if trivial else None),
        canonical_witness=canonical,
        justification=justification,
        rational_via_divisor=family.rational_divisor,
    )


def theorem_rows(family: FamilySpec) -> list[int]:
    """Return the τ of rational components whose fibration is obstructed.

    For del Pezzo families these are the rows with ``rational_via_divisor``
    and not both classes trivial; for quadric families the rows with
    ``rational_via_divisor`` and ``β`` nontrivial.
    """

    if family.fiber is None:
        raise NotApplicableError(
            f"Family {family.name} has no fibration", {"family": family.name}
        )
    rows: list[int] = []
    for tau in admissible_tau_range(family):
        if classify_component(family, tau).is_empty:
            continue
        if family.fiber.kind == "del-pezzo-6":
            dp6 = dp6_report(family, tau)
            obstructed = dp6.rational_via_divisor and not dp6.both_trivial
        else:
            quadric = quadric_report(family, tau)
            obstructed = quadric.rational_via_divisor and not quadric.rational_via_section
        if obstructed:
            rows.append(tau)
    return rows

"""Admissible τ ranges and emptiness classification of the components ``C_τ``."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from cubic_loci.exact_linalg import IntVector
from cubic_loci.exceptions import ContractError, NotApplicableError
from cubic_loci.families.models import (
    ComponentClass,
    EmptyVerdict,
    FamilySpec,
    LocatedIn,
    NonemptyVerdict,
)
from cubic_loci.families.registry import DISCRIMINANT_POLYNOMIALS
from cubic_loci.lattice import (
    Lattice,
    MarkedLattice,
    discriminant,
    inner,
    is_positive_definite,
    orthogonal_complement,
    vectors_of_norm,
)

LOGGER = logging.getLogger(__name__)

HYPERPLANE_SQUARE: IntVector = (1, 0, 0)
ROOT_NORM = 2

__all__ = [
    "HYPERPLANE_SQUARE",
    "PrimitiveRoot",
    "admissible_tau_range",
    "classify_component",
    "discriminant_polynomial",
    "discriminant_polynomial_check",
    "gram_at_tau",
    "primitive_short_roots",
]


@dataclass(frozen=True, slots=True)
class PrimitiveRoot:
    """Norm-2 vector of ``A_{τ,0}`` with its coordinates ``(a, b)`` there."""

    vector: IntVector
    coordinates: tuple[int, int]


def gram_at_tau(family: FamilySpec, tau: int) -> MarkedLattice:
    """Return ``A_τ`` marked by ``h² = (1, 0, 0)``."""

    return MarkedLattice(Lattice(family.gram(tau)), HYPERPLANE_SQUARE)


def discriminant_polynomial(family: FamilySpec) -> tuple[int, int, int]:
    """Return ``(a, b, c)`` with ``d(A_τ) = a·τ² + b·τ + c``.

    The determinant is quadratic in τ, so three evaluations fix it.
    """

    at_zero = discriminant(gram_at_tau(family, 0).lattice)
    at_one = discriminant(gram_at_tau(family, 1).lattice)
    at_minus_one = discriminant(gram_at_tau(family, -1).lattice)
    a = (at_one + at_minus_one) // 2 - at_zero
    b = (at_one - at_minus_one) // 2
    return a, b, at_zero


def _positive_definite_at(family: FamilySpec, tau: int) -> bool:
    return is_positive_definite(gram_at_tau(family, tau).lattice)


def admissible_tau_range(family: FamilySpec) -> list[int]:
    """Return every τ for which ``A_τ`` is positive definite.

    The discriminant is a concave quadratic in τ, so the admissible set is an
    interval around the vertex; the scan walks outwards until it fails on
    both sides.
    """

    a, b, _ = discriminant_polynomial(family)
    if a >= 0:
        raise ContractError(
            "Discriminant is not concave in tau", {"family": family.name, "a": a}
        )
    vertex = Fraction(b, -2 * a)
    start = next(
        (t for t in (floor(vertex), ceil(vertex)) if _positive_definite_at(family, t)),
        None,
    )
    if start is None:
        return []
    low = start
    while _positive_definite_at(family, low - 1):
        low -= 1
    high = start
    while _positive_definite_at(family, high + 1):
        high += 1
    return list(range(low, high + 1))


def _witness_key(marked: MarkedLattice, vector: IntVector) -> tuple[int, IntVector]:
    return abs(inner(marked.lattice, marked.marked, vector)), vector


def classify_component(family: FamilySpec, tau: int) -> ComponentClass:
    """Decide whether ``C_τ`` is empty.

    ``C_τ`` is empty exactly when ``A_τ`` contains a vector of norm 2. The
    witness prefers roots orthogonal to ``h²`` (short roots of the primitive
    part), then lexicographic order.

    Raises:
        ContractError: If τ is outside the admissible range.
    """

    admissible = admissible_tau_range(family)
    if tau not in admissible:
        raise ContractError(
            f"tau={tau} is outside the admissible range of {family.name}",
            {"family": family.name, "tau": tau, "range": admissible},
        )
    marked = gram_at_tau(family, tau)
    d = discriminant(marked.lattice)
    roots = vectors_of_norm(marked.lattice, ROOT_NORM)
    if not roots:
        LOGGER.debug(
            "Component is nonempty", extra={"family": family.name, "tau": tau, "d": d}
        )
        return ComponentClass(family.name, tau, d, NonemptyVerdict(d))

    witness = min(roots, key=lambda v: _witness_key(marked, v))
    pairing = inner(marked.lattice, marked.marked, witness)
    located_in: LocatedIn = "primitive-part" if pairing == 0 else "full-lattice"
    LOGGER.debug(
        "Component is empty",
        extra={"family": family.name, "tau": tau, "witness": witness, "roots": len(roots)},
    )
    return ComponentClass(family.name, tau, d, EmptyVerdict(witness, located_in))


def primitive_short_roots(family: FamilySpec, tau: int) -> list[PrimitiveRoot]:
    """Return the norm-2 vectors of ``A_{τ,0} = <h²>^⊥``.

    Coordinates are taken in the basis returned by
    :func:`cubic_loci.lattice.orthogonal_complement`.
    """

    complement = orthogonal_complement(gram_at_tau(family, tau))
    first, second = complement.basis
    roots: list[PrimitiveRoot] = []
    for a, b in vectors_of_norm(complement.as_lattice(), ROOT_NORM):
        vector = tuple(a * u + b * v for u, v in zip(first, second))
        roots.append(PrimitiveRoot(vector, (a, b)))
    return roots


def discriminant_polynomial_check(family: FamilySpec, window: int = 50) -> bool:
    """Compare ``det(A_τ)`` with the published closed form on ``[-window, window]``.

    Raises:
        NotApplicableError: If the family has no published closed form.
    """

    try:
        a, b, c = DISCRIMINANT_POLYNOMIALS[family.name]
    except KeyError:
        raise NotApplicableError(
            f"No closed-form discriminant for {family.name}", {"family": family.name}
        ) from None
    for tau in range(-window, window + 1):
        actual = discriminant(gram_at_tau(family, tau).lattice)
        if actual != a * tau * tau + b * tau + c:
            LOGGER.warning(
                "Discriminant polynomial mismatch",
                extra={"family": family.name, "tau": tau, "actual": actual},
            )
            return False
    return True

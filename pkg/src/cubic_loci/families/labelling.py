"""Arithmetic of rank-2 labellings ``K = <h², S>``."""

from __future__ import annotations

from dataclasses import dataclass

from cubic_loci.families.models import FamilySpec

__all__ = [
    "LabellingFacts",
    "family_labellings",
    "has_associated_k3",
    "is_hassett_admissible",
    "labelling_discriminant",
    "labelling_uniqueness_note",
]


@dataclass(frozen=True, slots=True)
class LabellingFacts:
    """Discriminant of one labelling plus the facts derived from it."""

    label: str
    degree: int
    discriminant: int
    admissible: bool
    associated_k3: bool
    note: str | None


def labelling_discriminant(degree: int, self_intersection: int) -> int:
    """Return ``det [[3, degree], [degree, self_intersection]]``."""

    return 3 * self_intersection - degree * degree


def is_hassett_admissible(d: int) -> bool:
    """``C_d`` is a nonempty irreducible divisor iff ``d > 6`` and ``d ≡ 0, 2 (mod 6)``."""

    return d > 6 and d % 6 in (0, 2)


def _odd_prime_factors(d: int) -> set[int]:
    factors: set[int] = set()
    remaining = abs(d)
    while remaining % 2 == 0 and remaining:
        remaining //= 2
    p = 3
    while p * p <= remaining:
        while remaining % p == 0:
            factors.add(p)
            remaining //= p
        p += 2
    if remaining > 1:
        factors.add(remaining)
    return factors


def has_associated_k3(d: int) -> bool:
    """Return ``True`` when ``d`` is divisible by neither 4, 9 nor an odd prime ``p ≡ 2 (mod 3)``."""

    if d <= 0 or d % 4 == 0 or d % 9 == 0:
        return False
    return all(p % 3 != 2 for p in _odd_prime_factors(d))


def labelling_uniqueness_note(d: int) -> str | None:
    if d > 0 and d % 9 == 0:
        return f"d={d} is divisible by 9: rank-2 labellings of this discriminant need not be unique"
    return None


def family_labellings(family: FamilySpec) -> list[LabellingFacts]:
    """Return the facts for both labellings ``<h², e2>`` and ``<h², e3>``."""

    facts = []
    for label, degree, square in (
        (family.basis_labels[1], family.g12, family.g22),
        (family.basis_labels[2], family.g13, family.g33),
    ):
        d = labelling_discriminant(degree, square)
        facts.append(
            LabellingFacts(
                label=label,
                degree=degree,
                discriminant=d,
                admissible=is_hassett_admissible(d),
                associated_k3=has_associated_k3(d),
                note=labelling_uniqueness_note(d),
            )
        )
    return facts

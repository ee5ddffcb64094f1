"""Basic invariants of integral lattices."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction

from cubic_loci.exact_linalg import (
    Rational,
    det_exact,
    identity,
    kernel_of_functional,
    leading_principal_minors,
    quadratic_product,
    rational_coordinates,
)
from cubic_loci.exceptions import ContractError, DimensionError
from cubic_loci.lattice.models import Lattice, MarkedLattice, Sublattice

LOGGER = logging.getLogger(__name__)

__all__ = [
    "discriminant",
    "inner",
    "is_even",
    "is_even_gram",
    "is_positive_definite",
    "norm",
    "orthogonal_complement",
    "same_sublattice",
]


def inner(lattice: Lattice, u: Sequence[int], v: Sequence[int]) -> int:
    """Return ``<u, v>`` in ``lattice``.

    Raises:
        DimensionError: If either vector has the wrong length.
    """

    if len(u) != lattice.rank or len(v) != lattice.rank:
        raise DimensionError(
            "Vector dimension differs from lattice rank",
            {"u": len(u), "v": len(v), "rank": lattice.rank},
        )
    value = quadratic_product(u, lattice.gram, v)
    return int(value)


def norm(lattice: Lattice, v: Sequence[int]) -> int:
    return inner(lattice, v, v)


def is_positive_definite(lattice: Lattice) -> bool:
    """Sylvester's criterion: every leading principal minor is positive."""

    if lattice.rank == 0:
        return True
    return all(minor > 0 for minor in leading_principal_minors(lattice.gram))


def discriminant(lattice: Lattice) -> int:
    return det_exact(lattice.gram)


def orthogonal_complement(marked: MarkedLattice) -> Sublattice:
    """Return the saturated sublattice of vectors orthogonal to the marked one."""

    lattice = marked.lattice
    functional = [inner(lattice, marked.marked, e) for e in identity(lattice.rank)]
    if not any(functional):
        raise ContractError("Marked vector pairs to zero with the whole lattice")
    basis = kernel_of_functional(functional)
    LOGGER.debug(
        "Computed orthogonal complement",
        extra={"functional": functional, "basis": basis},
    )
    return Sublattice.spanned_by(lattice, basis)


def is_even_gram(gram: Sequence[Sequence[Rational]]) -> bool:
    """Return ``True`` when ``gram`` is integral with even diagonal."""

    for row in gram:
        for value in row:
            if Fraction(value).denominator != 1:
                return False
    return all(Fraction(gram[i][i]).numerator % 2 == 0 for i in range(len(gram)))


def is_even(lattice: Lattice | Sublattice) -> bool:
    """Return ``True`` when every self-pairing is even.

    Only the diagonal matters: ``<v,v> ≡ Σ gram[i][i]·v[i]² (mod 2)``.
    """

    return is_even_gram(lattice.gram)


def same_sublattice(
    first: Sequence[Sequence[int]], second: Sequence[Sequence[int]]
) -> bool:
    """Return ``True`` when both bases span the same subgroup of ``Z^n``."""

    return _expressible(first, second) and _expressible(second, first)


def _expressible(basis: Sequence[Sequence[int]], vectors: Sequence[Sequence[int]]) -> bool:
    for vector in vectors:
        coords = rational_coordinates(basis, vector)
        if coords is None or any(c.denominator != 1 for c in coords):
            return False
    return True

"""Immutable lattice containers."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from cubic_loci.exact_linalg import (
    IntMatrix,
    IntVector,
    as_int_matrix,
    induced_gram,
    is_symmetric,
    quadratic_product,
    to_int_matrix,
)
from cubic_loci.exceptions import ContractError, DimensionError

__all__ = ["Lattice", "MarkedLattice", "Sublattice", "MARKED_NORM"]

MARKED_NORM = 3


@dataclass(frozen=True, slots=True)
class Lattice:
    """Free abelian group with an integral symmetric bilinear form.

    Attributes:
        gram: Gram matrix of the form in the chosen basis.
    """

    gram: IntMatrix

    def __post_init__(self) -> None:
        if not is_symmetric(self.gram):
            raise ContractError("Gram matrix must be square and symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> Lattice:
        return cls(as_int_matrix(rows))

    @property
    def rank(self) -> int:
        return len(self.gram)


@dataclass(frozen=True, slots=True)
class MarkedLattice:
    """Lattice with a distinguished vector of norm 3 (the class ``h²``)."""

    lattice: Lattice
    marked: IntVector

    def __post_init__(self) -> None:
        if len(self.marked) != self.lattice.rank:
            raise DimensionError(
                "Marked vector dimension differs from lattice rank",
                {"marked": len(self.marked), "rank": self.lattice.rank},
            )
        norm = quadratic_product(self.marked, self.lattice.gram, self.marked)
        if norm != MARKED_NORM:
            raise ContractError(
                "Marked vector must have norm 3", {"norm": norm, "marked": self.marked}
            )


@dataclass(frozen=True, slots=True)
class Sublattice:
    """Sublattice spanned by integer vectors of a parent lattice.

    Attributes:
        parent: Ambient lattice.
        basis: Basis vectors in parent coordinates.
        gram: Induced Gram matrix, ``gram[i][j] = <basis[i], basis[j]>``.
    """

    parent: Lattice
    basis: tuple[IntVector, ...]
    gram: IntMatrix

    @classmethod
    def spanned_by(cls, parent: Lattice, basis: Sequence[IntVector]) -> Sublattice:
        frozen = tuple(tuple(v) for v in basis)
        if any(len(v) != parent.rank for v in frozen):
            raise DimensionError("Basis vectors must live in the parent lattice")
        return cls(parent, frozen, to_int_matrix(induced_gram(frozen, parent.gram)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def as_lattice(self) -> Lattice:
        return Lattice(self.gram)

"""Integral lattices: containers, invariants and short-vector enumeration."""

from cubic_loci.lattice.core import (
    discriminant,
    inner,
    is_even,
    is_even_gram,
    is_positive_definite,
    norm,
    orthogonal_complement,
    same_sublattice,
)
from cubic_loci.lattice.enumeration import (
    is_primitive,
    short_vectors,
    short_vectors_bruteforce,
    vectors_of_norm,
)
from cubic_loci.lattice.models import Lattice, MarkedLattice, Sublattice

__all__ = [
    "Lattice",
    "MarkedLattice",
    "Sublattice",
    "discriminant",
    "inner",
    "is_even",
    "is_even_gram",
    "is_positive_definite",
    "is_primitive",
    "norm",
    "orthogonal_complement",
    "same_sublattice",
    "short_vectors",
    "short_vectors_bruteforce",
    "vectors_of_norm",
]

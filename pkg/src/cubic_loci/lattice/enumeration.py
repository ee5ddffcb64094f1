"""Short-vector enumeration for positive-definite lattices.

Two implementations share one contract: every nonzero ``v`` with
``<v,v> <= bound``, one representative per ``±v`` pair (first nonzero
coordinate positive), sorted lexicographically. :func:`short_vectors` runs
Fincke–Pohst over the exact LDL decomposition; :func:`short_vectors_bruteforce`
scans the coordinate box and serves as an oracle.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from fractions import Fraction
from functools import reduce
from itertools import product
from math import ceil, floor, gcd, isqrt

from cubic_loci.exact_linalg import IntVector, canonical_sign, invert_rational, ldl_decompose
from cubic_loci.exceptions import ContractError
from cubic_loci.lattice.core import is_positive_definite, norm
from cubic_loci.lattice.models import Lattice

LOGGER = logging.getLogger(__name__)

__all__ = [
    "is_primitive",
    "short_vectors",
    "short_vectors_bruteforce",
    "vectors_of_norm",
]


def _check_inputs(lattice: Lattice, bound: int) -> None:
    if bound < 0:
        raise ContractError("Bound must be non-negative", {"bound": bound})
    if not is_positive_definite(lattice):
        raise ContractError(
            "Short-vector enumeration requires a positive-definite lattice",
            {"gram": lattice.gram},
        )


def _integer_window(center: Fraction, radius_sq: Fraction) -> range:
    # Over-approximates [center - r, center + r]; callers filter exactly.
    reach = isqrt(floor(radius_sq)) + 1
    return range(floor(center) - reach, ceil(center) + reach + 1)


def _keep(vector: IntVector) -> bool:
    return any(vector) and canonical_sign(vector) == vector


def short_vectors(lattice: Lattice, bound: int) -> list[IntVector]:
    """Enumerate short vectors with Fincke–Pohst.

    Args:
        lattice: Positive-definite lattice.
        bound: Inclusive norm bound.

    Returns:
        Sign-canonical vectors with ``0 < <v,v> <= bound`` in lexicographic
        order.

    Raises:
        ContractError: If ``bound`` is negative or the lattice is not
            positive definite.
    """

    _check_inputs(lattice, bound)
    rank = lattice.rank
    if bound == 0 or rank == 0:
        return []

    diag, upper = ldl_decompose(lattice.gram)
    coords = [0] * rank
    found: list[IntVector] = []

    def search(level: int, remaining: Fraction) -> None:
        center = -sum(
            (upper[level][j] * coords[j] for j in range(level + 1, rank)), Fraction(0)
        )
        for value in _integer_window(center, remaining / diag[level]):
            offset = value - center
            used = diag[level] * offset * offset
            if used > remaining:
                continue
            coords[level] = value
            if level == 0:
                candidate = tuple(coords)
                if _keep(candidate):
                    found.append(candidate)
            else:
                search(level - 1, remaining - used)
        coords[level] = 0

    search(rank - 1, Fraction(bound))
    found.sort()
    LOGGER.debug(
        "Fincke-Pohst enumeration finished",
        extra={"rank": rank, "bound": bound, "count": len(found)},
    )
    return found


def _box(lattice: Lattice, bound: int) -> Iterator[IntVector]:
    inverse = invert_rational(lattice.gram)
    limits = [isqrt(floor(bound * inverse[i][i])) for i in range(lattice.rank)]
    for vector in product(*(range(-m, m + 1) for m in limits)):
        yield tuple(vector)


def short_vectors_bruteforce(lattice: Lattice, bound: int) -> list[IntVector]:
    """Enumerate short vectors by scanning ``v_i² <= bound·(G⁻¹)_ii``.

    Same contract as :func:`short_vectors`.
    """

    _check_inputs(lattice, bound)
    if bound == 0 or lattice.rank == 0:
        return []
    found = [
        vector
        for vector in _box(lattice, bound)
        if _keep(vector) and norm(lattice, vector) <= bound
    ]
    found.sort()
    return found


def vectors_of_norm(lattice: Lattice, value: int) -> list[IntVector]:
    """Return the sign-canonical vectors of norm exactly ``value``."""

    return [v for v in short_vectors(lattice, value) if norm(lattice, v) == value]


def is_primitive(vector: IntVector) -> bool:
    return reduce(gcd, vector, 0) == 1

"""Finite-index overlattices of ``A_τ`` and the irreducibility sieve.

An irreducible component of ``C_τ`` other than the expected one would come
from a proper overlattice ``B ⊃ A_τ`` with ``d(B)·[B:A_τ]² = d(A_τ)``. Every
such ``B`` considered here has the normal form ``B = <e1, e2, V>`` with
``V = (x'·e1 + y'·e2 + e3)/n`` and ``0 <= x', y' < n``. A candidate survives
only if ``B`` is integral, its primitive part ``B0 = <h²>^⊥`` is even, and
``B`` carries no vector of norm 2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Literal

from cubic_loci.exact_linalg import (
    IntVector,
    RatMatrix,
    as_rat_matrix,
    det_rational,
    induced_gram,
    is_integral_matrix,
    kernel_of_functional,
    to_int_matrix,
)
from cubic_loci.exceptions import ContractError, ParameterRangeError
from cubic_loci.families import FamilySpec, classify_component
from cubic_loci.lattice import Lattice, is_even_gram, vectors_of_norm

LOGGER = logging.getLogger(__name__)

RejectionReason = Literal["B-not-integral", "B0-not-integral", "B0-not-even", "B-has-root"]
Shortcut = Literal["squarefree-discriminant", "full-sieve"]

__all__ = [
    "IrreducibilityVerdict",
    "OverlatticeCandidate",
    "RejectionReason",
    "candidate_indices",
    "complement_basis",
    "complement_gram",
    "evaluate_candidate",
    "overlattice_gram",
    "sieve",
]


@dataclass(frozen=True, slots=True)
class OverlatticeCandidate:
    """One normal-form candidate ``(n, x', y')`` and its verdict.

    Attributes:
        gram_B: Gram matrix of ``(e1, e2, V)``.
        b0_basis: Basis of ``B0`` in the coordinates ``(e1, e2, V)``.
        gram_B0: Gram matrix of ``b0_basis``.
        root: A norm-2 vector of ``B`` when the reason is ``B-has-root``.
    """

    n: int
    xprime: int
    yprime: int
    gram_B: RatMatrix
    b0_basis: tuple[IntVector, ...]
    gram_B0: RatMatrix
    rejection_reason: RejectionReason | None
    root: IntVector | None = None

    @property
    def accepted(self) -> bool:
        return self.rejection_reason is None

    @property
    def integral(self) -> bool:
        return is_integral_matrix(self.gram_B)

    @property
    def discriminant_B(self) -> Fraction:
        return det_rational(self.gram_B)


@dataclass(frozen=True, slots=True)
class IrreducibilityVerdict:
    """Outcome of the sieve for one nonempty ``C_τ``.

    ``relies_on_normal_form`` records that completeness rests on every
    overlattice admitting the ``(e1, e2, V)`` normal form.
    """

    family: str
    tau: int
    discriminant: int
    indices: tuple[int, ...]
    candidates: tuple[OverlatticeCandidate, ...]
    shortcut: Shortcut
    relies_on_normal_form: bool = True

    @property
    def candidates_checked(self) -> int:
        return len(self.candidates)

    @property
    def survivors(self) -> tuple[OverlatticeCandidate, ...]:
        return tuple(c for c in self.candidates if c.accepted)

    @property
    def irreducible(self) -> bool:
        return not self.survivors


def candidate_indices(d: int) -> list[int]:
    """Return every ``n >= 2`` with ``n² | d``.

    Raises:
        ContractError: If ``d`` is not positive.
    """

    if d <= 0:
        raise ContractError("Discriminant must be positive", {"d": d})
    return [n for n in range(2, isqrt(d) + 1) if d % (n * n) == 0]


def _check_parameters(n: int, xprime: int, yprime: int) -> None:
    if n < 1 or not (0 <= xprime < n and 0 <= yprime < n):
        raise ParameterRangeError(
            "Overlattice parameters must satisfy n >= 1 and 0 <= x', y' < n",
            {"n": n, "xprime": xprime, "yprime": yprime},
        )


def overlattice_gram(
    family: FamilySpec, tau: int, n: int, xprime: int, yprime: int
) -> RatMatrix:
    """Return the Gram matrix of ``(e1, e2, V)``.

    Entry ``(1,3)`` is ``α = (3x' + g12·y' + g13)/n``, entry ``(2,3)`` is
    ``β = (g12·x' + g22·y' + τ)/n`` and entry ``(3,3)`` is
    ``γ = Q(x', y', 1)/n²``.

    Raises:
        ParameterRangeError: If the parameters are out of range.
    """

    _check_parameters(n, xprime, yprime)
    v = (Fraction(xprime, n), Fraction(yprime, n), Fraction(1, n))
    basis = ((1, 0, 0), (0, 1, 0), v)
    return as_rat_matrix(induced_gram(basis, family.gram(tau)))


def _h2_functional(gram_b: RatMatrix) -> list[int]:
    # Pairing with h² = e1 on the basis (e1, e2, V), cleared of denominators.
    row = gram_b[0]
    scale = lcm(*(value.denominator for value in row))
    return [int(value * scale) for value in row]


def complement_basis(
    family: FamilySpec, tau: int, n: int, xprime: int, yprime: int
) -> tuple[tuple[IntVector, ...], RatMatrix]:
    """Return a basis of ``B0`` (in ``B`` coordinates) and its Gram matrix."""

    gram_b = overlattice_gram(family, tau, n, xprime, yprime)
    basis = tuple(kernel_of_functional(_h2_functional(gram_b)))
    return basis, as_rat_matrix(induced_gram(basis, gram_b))


def complement_gram(
    family: FamilySpec, tau: int, n: int, xprime: int, yprime: int
) -> RatMatrix:
    """Return the Gram matrix of ``B0``, the primitive part of the overlattice."""

    return complement_basis(family, tau, n, xprime, yprime)[1]


def evaluate_candidate(
    family: FamilySpec, tau: int, n: int, xprime: int, yprime: int
) -> OverlatticeCandidate:
    """Run the rejection chain on one candidate.

    Checks, in order: ``B`` integral, ``B0`` integral, ``B0`` even, ``B``
    free of norm-2 vectors.
    """

    gram_b = overlattice_gram(family, tau, n, xprime, yprime)
    b0_basis, gram_b0 = complement_basis(family, tau, n, xprime, yprime)
    reason: RejectionReason | None = None
    root: IntVector | None = None
    if not is_integral_matrix(gram_b):
        reason = "B-not-integral"
    elif not is_integral_matrix(gram_b0):
        reason = "B0-not-integral"
    elif not is_even_gram(gram_b0):
        reason = "B0-not-even"
    else:
        roots = vectors_of_norm(Lattice(to_int_matrix(gram_b)), 2)
        if roots:
            reason = "B-has-root"
            root = roots[0]
    return OverlatticeCandidate(
        n=n,
        xprime=xprime,
        yprime=yprime,
        gram_B=gram_b,
        b0_basis=b0_basis,
        gram_B0=gram_b0,
        rejection_reason=reason,
        root=root,
    )


def sieve(family: FamilySpec, tau: int) -> IrreducibilityVerdict:
    """Sweep every normal-form candidate overlattice of ``A_τ``.

    Raises:
        ContractError: If ``C_τ`` is empty or τ is not admissible.
    """

    component = classify_component(family, tau)
    if component.is_empty:
        raise ContractError(
            f"C_tau is empty for {family.name} at tau={tau}",
            {"family": family.name, "tau": tau},
        )
    d = component.discriminant
    indices = candidate_indices(d)
    candidates = tuple(
        evaluate_candidate(family, tau, n, xprime, yprime)
        for n in indices
        for xprime in range(n)
        for yprime in range(n)
    )
    verdict = IrreducibilityVerdict(
        family=family.name,
        tau=tau,
        discriminant=d,
        indices=tuple(indices),
        candidates=candidates,
        shortcut="full-sieve" if indices else "squarefree-discriminant",
    )
    level = logging.INFO if verdict.irreducible else logging.WARNING
    LOGGER.log(
        level,
        "Overlattice sieve finished",
        extra={
            "family": family.name,
            "tau": tau,
            "checked": verdict.candidates_checked,
            "survivors": [(c.n, c.xprime, c.yprime) for c in verdict.survivors],
        },
    )
    return verdict

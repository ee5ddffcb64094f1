"""Tests for lattice containers, invariants and short-vector enumeration."""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from cubic_loci.exceptions import ContractError, DimensionError
from cubic_loci.families import BUILTIN_FAMILIES, admissible_tau_range, gram_at_tau
from cubic_loci.lattice import (
    Lattice,
    MarkedLattice,
    discriminant,
    inner,
    is_even,
    is_positive_definite,
    is_primitive,
    norm,
    orthogonal_complement,
    same_sublattice,
    short_vectors,
    short_vectors_bruteforce,
    vectors_of_norm,
)


def test_lattice_requires_symmetric_gram() -> None:
    with pytest.raises(ContractError):
        Lattice.from_rows([[3, 1], [2, 3]])


def test_marked_vector_must_have_norm_three() -> None:
    lattice = Lattice.from_rows([[3, 4], [4, 10]])
    MarkedLattice(lattice, (1, 0))
    with pytest.raises(ContractError):
        MarkedLattice(lattice, (0, 1))
    with pytest.raises(DimensionError):
        MarkedLattice(lattice, (1, 0, 0))


def test_inner_and_norm() -> None:
    lattice = gram_at_tau(BUILTIN_FAMILIES["c18-c14"], 13).lattice
    assert norm(lattice, (0, 1, -1)) == 10 - 26 + 18
    assert inner(lattice, (1, 0, 0), (0, 1, -1)) == 4 - 6
    with pytest.raises(DimensionError):
        inner(lattice, (1, 0), (0, 1))


def test_positive_definite_and_discriminant() -> None:
    family = BUILTIN_FAMILIES["c18-c14"]
    assert is_positive_definite(gram_at_tau(family, 8).lattice)
    assert discriminant(gram_at_tau(family, 8).lattice) == 84
    assert not is_positive_definite(gram_at_tau(family, 14).lattice)


def test_orthogonal_complement_is_saturated_and_orthogonal() -> None:
    marked = gram_at_tau(BUILTIN_FAMILIES["c8-c26"], 3)
    complement = orthogonal_complement(marked)
    assert complement.rank == 2
    for vector in complement.basis:
        assert inner(marked.lattice, marked.marked, vector) == 0
    # 3·d(A_0) = d(A)·[A : <h²> ⊕ A_0]² with index 3 when h² pairs primitively.
    assert 3 * discriminant(complement.as_lattice()) == discriminant(marked.lattice) * 9


def test_is_even() -> None:
    assert is_even(Lattice.from_rows([[2, 1], [1, 2]]))
    assert not is_even(Lattice.from_rows([[3, 1], [1, 2]]))


def test_same_sublattice() -> None:
    assert same_sublattice([(1, -3, 0), (0, 7, -1)], [(1, 4, -1), (0, 7, -1)])
    assert not same_sublattice([(1, 0, 0)], [(2, 0, 0)])


def test_short_vectors_contract() -> None:
    lattice = Lattice.from_rows([[2, 1], [1, 2]])
    assert short_vectors(lattice, 0) == []
    with pytest.raises(ContractError):
        short_vectors(lattice, -1)
    with pytest.raises(ContractError):
        short_vectors(Lattice.from_rows([[1, 2], [2, 1]]), 2)


def test_a2_roots() -> None:
    lattice = Lattice.from_rows([[2, 1], [1, 2]])
    assert short_vectors(lattice, 2) == [(0, 1), (1, -1), (1, 0)]


def test_known_norm_two_vector() -> None:
    lattice = gram_at_tau(BUILTIN_FAMILIES["c18-c26"], 21).lattice
    assert (1, 1, -1) in short_vectors(lattice, 2)


def _family_cases() -> list[tuple[str, int]]:
    return [
        (name, tau)
        for name, family in BUILTIN_FAMILIES.items()
        for tau in admissible_tau_range(family)
    ]


@pytest.mark.parametrize(("name", "tau"), _family_cases())
@pytest.mark.parametrize("bound", [2, 3, 4])
def test_fincke_pohst_matches_bruteforce_on_families(name: str, tau: int, bound: int) -> None:
    lattice = gram_at_tau(BUILTIN_FAMILIES[name], tau).lattice
    assert short_vectors(lattice, bound) == short_vectors_bruteforce(lattice, bound)


@st.composite
def _positive_definite_grams(draw: st.DrawFn) -> Lattice:
    size = draw(st.integers(min_value=1, max_value=3))
    rows = [
        draw(st.lists(st.integers(-3, 3), min_size=size, max_size=size))
        for _ in range(size)
    ]
    # B·Bᵀ + I is positive definite for any integer B.
    gram = [
        [
            sum(rows[i][k] * rows[j][k] for k in range(size)) + (1 if i == j else 0)
            for j in range(size)
        ]
        for i in range(size)
    ]
    return Lattice.from_rows(gram)


@settings(max_examples=100, deadline=None)
@given(lattice=_positive_definite_grams(), bound=st.integers(0, 6))
def test_fincke_pohst_matches_bruteforce_random(lattice: Lattice, bound: int) -> None:
    fast = short_vectors(lattice, bound)
    assert fast == short_vectors_bruteforce(lattice, bound)
    assert fast == sorted(fast)
    assert all(0 < norm(lattice, v) <= bound for v in fast)


def test_vectors_of_norm_and_primitivity() -> None:
    lattice = Lattice.from_rows([[2, 0], [0, 8]])
    assert vectors_of_norm(lattice, 8) == [(0, 1), (2, 0)]
    assert is_primitive((0, 1))
    assert not is_primitive((2, 0))

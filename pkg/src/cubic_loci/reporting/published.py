"""Published values for the built-in families, and recorded divergences.

Witness vectors are compared up to sign. Where an exact computation
contradicts a printed value, the computed value is recorded in
:data:`DIVERGENCES` and the verification suite checks against it instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from cubic_loci.exact_linalg import IntVector

Witness = IntVector | None


@dataclass(frozen=True, slots=True)
class PublishedFamily:
    """Claims made for one family.

    Attributes:
        polynomial: ``(a, b, c)`` with ``d(A_τ) = a·τ² + b·τ + c``.
        tau_range: Inclusive admissible range.
        empty: Printed emptiness witness per empty τ (``None`` when only the
            emptiness, not the vector, is printed).
        discriminants: ``d(A_τ)`` for the nonempty τ, ascending.
        squarefree: τ values settled by a squarefree discriminant.
        indices: Candidate overlattice indices per τ, where printed.
        checked: Number of normal-form candidates per τ, where printed.
        dp6_table: ``τ -> (<W,F>=2 witness, <W,F>=3 witness)``.
        beta_trivial_parity: Parity of τ at which ``β`` is trivial.
        obstructed: τ of rational components whose fibration is obstructed.
    """

    polynomial: tuple[int, int, int]
    tau_range: tuple[int, int]
    empty: dict[int, Witness]
    discriminants: tuple[int, ...]
    squarefree: frozenset[int]
    indices: dict[int, tuple[int, ...]] = field(default_factory=dict)
    checked: dict[int, int] = field(default_factory=dict)
    dp6_table: dict[int, tuple[Witness, Witness]] = field(default_factory=dict)
    beta_trivial_parity: int | None = None
    obstructed: frozenset[int] | None = None


def _dp6_obstructed(table: dict[int, tuple[Witness, Witness]]) -> frozenset[int]:
    return frozenset(tau for tau, (b2, b3) in table.items() if b2 is None or b3 is None)


_C18_C14_TABLE: dict[int, tuple[Witness, Witness]] = {
    4: (None, None),
    5: ((0, 4, -7), (0, 3, -5)),
    6: ((0, 2, -3), None),
    7: (None, (0, 1, -1)),
    8: ((0, 1, -1), None),
    9: ((0, 2, -2), (0, 3, -3)),
    10: (None, None),
    11: ((0, 4, -3), (0, 3, -2)),
    12: ((0, 2, -1), None),
}

_C18_C26_TABLE: dict[int, tuple[Witness, Witness]] = {
    8: ((0, 7, -2), None),
    9: ((0, 13, -4), (0, 10, -3)),
    10: (None, None),
    11: ((0, 6, -2), (0, 9, -3)),
    12: ((0, 3, -1), None),
    13: (None, (0, 3, -1)),
    14: ((0, 5, -2), None),
    15: ((0, 9, -4), (0, 7, -3)),
    16: (None, None),
    17: ((0, 4, -2), (0, 6, -3)),
    18: ((0, 2, -1), None),
    19: (None, (0, 2, -1)),
    20: ((0, 3, -2), None),
}

_C18_C38_TABLE: dict[int, tuple[Witness, Witness]] = {
    12: ((0, 5, -1), None),
    13: (None, (0, 5, -1)),
    14: ((0, 9, -2), None),
    15: ((0, 17, -4), (0, 13, -3)),
    16: (None, None),
    17: ((0, 8, -2), (0, 12, -3)),
    18: ((0, 4, -1), None),
    19: (None, (0, 4, -1)),
    20: ((0, 7, -2), None),
    21: ((0, 13, -4), (0, 10, -3)),
    22: (None, None),
    23: ((0, 6, -2), (0, 9, -3)),
    24: ((0, 3, -1), None),
    25: (None, (0, 3, -1)),
    26: ((0, 5, -2), None),
    27: ((0, 9, -4), (0, 7, -3)),
    28: (None, None),
}

PUBLISHED: dict[str, PublishedFamily] = {
    "c18-c14": PublishedFamily(
        polynomial=(-3, 48, -108),
        tau_range=(3, 13),
        empty={3: (-4, 1, 1), 13: (0, -1, 1)},
        discriminants=(36, 57, 72, 81, 84, 81, 72, 57, 36),
        squarefree=frozenset({5, 11}),
        checked={4: 49, 8: 4},
        dp6_table=_C18_C14_TABLE,
        obstructed=frozenset({4, 6, 7, 8, 10, 12}),
    ),
    "c18-c26": PublishedFamily(
        polynomial=(-3, 84, -432),
        tau_range=(7, 21),
        empty={7: (-5, 1, 1), 21: (1, 1, -1)},
        discriminants=(48, 81, 108, 129, 144, 153, 156, 153, 144, 129, 108, 81, 48),
        squarefree=frozenset({11, 17}),
        dp6_table=_C18_C26_TABLE,
        obstructed=_dp6_obstructed(_C18_C26_TABLE),
    ),
    "c18-c38": PublishedFamily(
        polynomial=(-3, 120, -972),
        tau_range=(12, 28),
        empty={},
        discriminants=(
            36, 81, 120, 153, 180, 201, 216, 225, 228,
            225, 216, 201, 180, 153, 120, 81, 36,
        ),
        squarefree=frozenset({17, 23}),
        dp6_table=_C18_C38_TABLE,
        obstructed=_dp6_obstructed(_C18_C38_TABLE),
    ),
    "c8-c26": PublishedFamily(
        polynomial=(-3, 14, 53),
        tau_range=(-2, 7),
        empty={-2: (-3, 2, 1), 7: (-2, -1, 1)},
        discriminants=(36, 53, 64, 69, 68, 61, 48, 29),
        squarefree=frozenset({0, 2, 4, 6}),
        indices={-1: (2, 3, 6), 1: (2, 4, 8), 3: (2,), 5: (2, 4)},
        checked={1: 84},
        beta_trivial_parity=0,
        obstructed=frozenset({-1, 1, 3, 5}),
    ),
    "c8-c38": PublishedFamily(
        polynomial=(-3, 20, 68),
        tau_range=(-2, 9),
        empty={-2: (-4, 2, 1), 9: (-2, -2, 1)},
        discriminants=(45, 68, 85, 96, 101, 100, 93, 80, 61, 36),
        squarefree=frozenset({1, 3, 7}),
        beta_trivial_parity=1,
        obstructed=frozenset({0, 2, 4, 6, 8}),
    ),
}


@dataclass(frozen=True, slots=True)
class OverlatticeExample:
    """A printed candidate overlattice and what exact computation gives."""

    family: str
    tau: int
    n: int
    xprime: int
    yprime: int
    gram_B: tuple[tuple[int, ...], ...]
    det_B0: int
    printed_gram_B0: tuple[tuple[int, ...], ...]
    printed_reason: str
    computed_reason: str


@dataclass(frozen=True, slots=True)
class Divergences:
    """Exact results that differ from the printed claims.

    Attributes:
        survivors: Candidate indices ``n`` that pass every necessary
            condition, per ``(family, τ)``. The printed claim is that every
            nonempty component is irreducible.
        squarefree_extra: τ values with squarefree discriminant missing from
            the printed list.
        overlattice_example: The printed ``B0`` matrix that cannot occur.
    """

    survivors: dict[tuple[str, int], tuple[int, ...]]
    squarefree_extra: dict[str, frozenset[int]]
    overlattice_example: OverlatticeExample


DIVERGENCES = Divergences(
    survivors={
        ("c18-c14", 8): (2,),
        ("c18-c26", 12): (2,),
        ("c18-c26", 16): (2,),
        ("c18-c38", 16): (2,),
        ("c18-c38", 20): (2,),
        ("c18-c38", 24): (2,),
    },
    squarefree_extra={"c8-c38": frozenset({5})},
    overlattice_example=OverlatticeExample(
        family="c8-c38",
        tau=-1,
        n=3,
        xprime=1,
        yprime=2,
        gram_B=((3, 1, 5), (1, 3, 2), (5, 2, 9)),
        det_B0=15,
        printed_gram_B0=((24, 32), (32, 51)),
        printed_reason="B0-not-even",
        computed_reason="B-has-root",
    ),
)


@dataclass(frozen=True, slots=True)
class WorkedExample:
    """An explicit cubic recorded with its lattice data."""

    family: str
    tau: int
    description: str
    b2_trivial: bool | None = None
    b3_trivial: bool | None = None
    beta_trivial: bool | None = None
    discriminant: int | None = None


WORKED_EXAMPLES: tuple[WorkedExample, ...] = (
    WorkedExample(
        family="c18-c14",
        tau=6,
        description="<T,S14> = <T,3h^2-S> = 18 - 12 = 6",
        b2_trivial=True,
        b3_trivial=False,
    ),
    WorkedExample(
        family="c8-c38",
        tau=2,
        description="<P,S38> = 2",
        beta_trivial=False,
        discriminant=96,
    ),
)

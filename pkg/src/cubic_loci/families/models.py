"""Typed records describing intersection families and component verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from cubic_loci.exact_linalg import IntMatrix, IntVector, quadratic_product
from cubic_loci.exceptions import ContractError

__all__ = [
    "ComponentClass",
    "EmptyVerdict",
    "FamilySpec",
    "FiberKind",
    "FiberSpec",
    "LocatedIn",
    "NonemptyVerdict",
    "FIBER_DEGREES",
]

FiberKind = Literal["del-pezzo-6", "quadric-surface"]
LocatedIn = Literal["full-lattice", "primitive-part"]

# <fiber, h²> for each fibration kind.
FIBER_DEGREES: dict[str, int] = {"del-pezzo-6": 6, "quadric-surface": 2}


@dataclass(frozen=True, slots=True)
class FiberSpec:
    """Fiber class of the fibration attached to a family.

    Attributes:
        kind: ``del-pezzo-6`` for the sextic del Pezzo fibration of C18,
            ``quadric-surface`` for the quadric bundle of C8.
        coefficients: Fiber class in the family basis.
        section_witness: Optional fixed cycle known to pair oddly with the
            quadric class at some τ (for example ``S26 + 3P``).
    """

    kind: FiberKind
    coefficients: IntVector
    section_witness: IntVector | None = None


@dataclass(frozen=True, slots=True)
class FamilySpec:
    """Family of rank-3 lattices ``A_τ = <h², S, T>`` with free pairing τ.

    The Gram matrix is ``[[g11, g12, g13], [g12, g22, τ], [g13, τ, g33]]``.

    Attributes:
        name: Registry key such as ``c18-c14``.
        basis_labels: Names of the three basis classes.
        g12: ``<h², second class>``.
        g22: Norm of the second class.
        g13: ``<h², third class>``.
        g33: Norm of the third class.
        fiber: Optional fibration data used by the Brauer checks.
        rational_divisor: Whether members of the non-fibered divisor are
            known to be rational.
        g11: Norm of ``h²``; always 3.
    """

    name: str
    basis_labels: tuple[str, str, str]
    g12: int
    g22: int
    g13: int
    g33: int
    fiber: FiberSpec | None = None
    rational_divisor: bool = False
    g11: int = 3

    def __post_init__(self) -> None:
        if self.g11 != 3:
            raise ContractError(
                "The square of the hyperplane class must have norm 3",
                {"family": self.name, "g11": self.g11},
            )
        if self.fiber is not None:
            degree = quadratic_product((1, 0, 0), self.gram(0), self.fiber.coefficients)
            expected = FIBER_DEGREES[self.fiber.kind]
            if degree != expected:
                raise ContractError(
                    "Fiber class has the wrong degree",
                    {"family": self.name, "degree": degree, "expected": expected},
                )
            # β is read off the pairing form mod 2, which needs Q nonzero mod 2.
            if self.fiber.kind == "quadric-surface" and all(
                c % 2 == 0 for c in self.fiber.coefficients
            ):
                raise ContractError(
                    "Quadric class must be nonzero modulo 2",
                    {"family": self.name, "coefficients": list(self.fiber.coefficients)},
                )

    def gram(self, tau: int) -> IntMatrix:
        return (
            (self.g11, self.g12, self.g13),
            (self.g12, self.g22, tau),
            (self.g13, tau, self.g33),
        )

    def norm_form(self, x: int, y: int, z: int, tau: int) -> int:
        """Evaluate ``<v, v>`` for ``v = x·e1 + y·e2 + z·e3``."""

        return int(quadratic_product((x, y, z), self.gram(tau), (x, y, z)))

    @property
    def surface_degrees(self) -> dict[str, int]:
        """Degrees ``<h², S>`` of the two surface classes, keyed by label."""

        return {self.basis_labels[1]: self.g12, self.basis_labels[2]: self.g13}


@dataclass(frozen=True, slots=True)
class EmptyVerdict:
    """``C_τ`` is empty: ``A_τ`` contains a vector of norm 2."""

    witness: IntVector
    located_in: LocatedIn
    status: Literal["empty"] = field(default="empty", init=False)


@dataclass(frozen=True, slots=True)
class NonemptyVerdict:
    """``C_τ`` is nonempty of codimension two."""

    discriminant: int
    status: Literal["nonempty"] = field(default="nonempty", init=False)


@dataclass(frozen=True, slots=True)
class ComponentClass:
    """Classification of a single ``C_τ``."""

    family: str
    tau: int
    discriminant: int
    verdict: EmptyVerdict | NonemptyVerdict

    @property
    def is_empty(self) -> bool:
        return isinstance(self.verdict, EmptyVerdict)

    @property
    def witness(self) -> IntVector | None:
        if isinstance(self.verdict, EmptyVerdict):
            return self.verdict.witness
        return None

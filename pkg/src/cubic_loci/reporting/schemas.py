"""Pydantic models describing the public report schemas."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

SchemaVersionLiteral = Literal["1.0.0"]
CURRENT_REPORT_SCHEMA_VERSION: SchemaVersionLiteral = "1.0.0"

# Integers that do not fit in 64 bits are emitted as decimal strings.
BigInt = int | str
Vector = list[int]
FamilyKind = Literal["del-pezzo-6", "quadric-surface", "none"]
ClassLabel = Literal["triv", "nontriv"]


class ReportRow(BaseModel):
    """One admissible τ of an intersection family."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    tau: int = Field(..., description="Free pairing between the two surface classes.")
    status: Literal["empty", "nonempty"] = Field(
        ..., description="Whether the component C_tau is empty."
    )
    discriminant: BigInt = Field(..., description="Discriminant d(A_tau).")
    witness: Vector | None = Field(
        default=None, description="Norm-2 vector proving emptiness (empty rows)."
    )
    located_in: Literal["full-lattice", "primitive-part"] | None = Field(
        default=None,
        description="Whether the witness is orthogonal to the hyperplane square.",
    )
    irreducible: bool | None = Field(
        default=None, description="Sieve verdict for nonempty rows."
    )
    candidates_checked: int | None = Field(
        default=None, description="Number of normal-form overlattices examined."
    )
    shortcut: Literal["squarefree-discriminant", "full-sieve"] | None = Field(
        default=None, description="How irreducibility was decided."
    )
    survivors: list[Vector] = Field(
        default_factory=list,
        description="Accepted overlattice candidates as [n, x', y'].",
    )
    b2: ClassLabel | None = Field(default=None, description="Brauer class b2.")
    b2_witness: Vector | None = Field(
        default=None, description="Cycle with pairing 2 against the fiber."
    )
    b3: ClassLabel | None = Field(default=None, description="Brauer class b3.")
    b3_witness: Vector | None = Field(
        default=None, description="Cycle with pairing 3 against the fiber."
    )
    beta: ClassLabel | None = Field(
        default=None, description="Clifford invariant of the quadric bundle."
    )
    beta_witness: Vector | None = Field(
        default=None, description="Normal-form cycle pairing oddly with the quadric."
    )
    canonical_witness: Vector | None = Field(
        default=None, description="Family's fixed odd-pairing cycle, when odd at tau."
    )
    justification: Literal["even-discriminant-rank-3"] | None = Field(
        default=None, description="Reason recorded for a nontrivial beta."
    )
    rational_via_divisor: bool | None = Field(
        default=None, description="Members lie in a divisor known to be rational."
    )
    rational_via_fibration: bool | None = Field(
        default=None,
        description="Both b2 and b3 trivial, or beta trivial for quadric bundles.",
    )


class IntersectionReport(BaseModel):
    """Immutable, versioned report over every admissible τ of one family."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    schema_version: SchemaVersionLiteral = Field(
        default=CURRENT_REPORT_SCHEMA_VERSION,
        description="Semantic version of the report schema.",
    )
    family: str = Field(..., min_length=1, description="Registry name of the family.")
    kind: FamilyKind = Field(..., description="Fibration attached to the family.")
    basis_labels: list[str] = Field(..., description="Names of the three basis classes.")
    generated_by: str = Field(..., description="Producing tool and version.")
    assumptions: list[str] = Field(
        default_factory=list, description="Hypotheses the Brauer columns rest on."
    )
    rows: list[ReportRow] = Field(..., description="Rows ordered by tau ascending.")
    rows_digest: str = Field(
        ..., description="SHA-256 over the canonical JSON of the rows."
    )


class CheckResult(BaseModel):
    """Outcome of one verification check."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    family: str
    name: str
    passed: bool
    detail: str = ""

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        suffix = f": {self.detail}" if self.detail else ""
        return f"{status} {self.family} {self.name}{suffix}"


class VerificationSummary(BaseModel):
    """All checks of a verification run plus the aggregate counts."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    checks: list[CheckResult]
    families: int
    polynomials: int
    rows_verified: int

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    @property
    def headline(self) -> str:
        return (
            f"{self.families} families, {self.polynomials} discriminant polynomials, "
            f"{self.rows_verified} component rows verified"
        )

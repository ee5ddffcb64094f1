"""Cross-check the built-in families against their published values."""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping, Sequence

from cubic_loci.brauer import dp6_report, fiber_pairing_form, quadric_report, theorem_rows
from cubic_loci.exact_linalg import canonical_sign, det_rational
from cubic_loci.exceptions import CubicLociError, UnknownFamilyError
from cubic_loci.families import (
    BUILTIN_FAMILIES,
    DISCRIMINANT_POLYNOMIALS,
    FamilySpec,
    admissible_tau_range,
    classify_component,
    discriminant_polynomial,
    discriminant_polynomial_check,
)
from cubic_loci.families.models import FIBER_DEGREES
from cubic_loci.lattice import is_even_gram
from cubic_loci.overlattice import IrreducibilityVerdict, evaluate_candidate, sieve
from cubic_loci.reporting.published import (
    DIVERGENCES,
    PUBLISHED,
    WORKED_EXAMPLES,
    PublishedFamily,
    Witness,
    WorkedExample,
)
from cubic_loci.reporting.schemas import CheckResult, VerificationSummary

LOGGER = logging.getLogger(__name__)

__all__ = ["run_verify", "verify_family"]


class _Checks:
    """Collects results, turning library errors into failed checks."""

    def __init__(self, family: str) -> None:
        self.family = family
        self.results: list[CheckResult] = []

    def run(self, name: str, check: Callable[[], str | None]) -> bool:
        try:
            problem = check()
        except CubicLociError as exc:
            problem = f"{type(exc).__name__}: {exc.message}"
        self.results.append(
            CheckResult(
                family=self.family, name=name, passed=problem is None, detail=problem or ""
            )
        )
        return problem is None


def _same_up_to_sign(computed: Witness, printed: Witness) -> bool:
    if computed is None or printed is None:
        return computed is printed
    return canonical_sign(computed) == canonical_sign(printed)


def _expect(label: str, computed: object, expected: object) -> str | None:
    if computed == expected:
        return None
    return f"{label}: computed {computed}, expected {expected}"


def _polynomial(spec: FamilySpec, claims: PublishedFamily) -> str | None:
    problem = _expect("coefficients", discriminant_polynomial(spec), claims.polynomial)
    if problem is None and not discriminant_polynomial_check(spec):
        problem = "closed form disagrees with det(A_tau) on [-50, 50]"
    return problem


def _range(spec: FamilySpec, claims: PublishedFamily) -> str | None:
    taus = admissible_tau_range(spec)
    computed = (taus[0], taus[-1]) if taus else None
    return _expect("admissible range", computed, claims.tau_range)


def _emptiness(spec: FamilySpec, claims: PublishedFamily, taus: Sequence[int]) -> str | None:
    empty = {tau for tau in taus if classify_component(spec, tau).is_empty}
    problem = _expect("empty tau", sorted(empty), sorted(claims.empty))
    if problem is not None:
        return problem
    for tau, printed in claims.empty.items():
        witness = classify_component(spec, tau).witness
        if printed is not None and not _same_up_to_sign(witness, printed):
            return f"witness at tau={tau}: computed {witness}, printed {printed}"
    return None


def _discriminants(
    spec: FamilySpec, claims: PublishedFamily, nonempty: Sequence[int]
) -> str | None:
    computed = tuple(classify_component(spec, tau).discriminant for tau in nonempty)
    return _expect("discriminants", computed, claims.discriminants)


def _irreducibility(
    name: str, claims: PublishedFamily, verdicts: Mapping[int, IrreducibilityVerdict]
) -> str | None:
    squarefree = {tau for tau, v in verdicts.items() if v.shortcut == "squarefree-discriminant"}
    expected_squarefree = claims.squarefree | DIVERGENCES.squarefree_extra.get(name, frozenset())
    problem = _expect("squarefree tau", sorted(squarefree), sorted(expected_squarefree))
    if problem is not None:
        return problem
    for tau, indices in claims.indices.items():
        problem = _expect(f"indices at tau={tau}", verdicts[tau].indices, indices)
        if problem is not None:
            return problem
    for tau, count in claims.checked.items():
        problem = _expect(f"candidates at tau={tau}", verdicts[tau].candidates_checked, count)
        if problem is not None:
            return problem
    survivors = {
        tau: tuple(sorted({c.n for c in v.survivors}))
        for tau, v in verdicts.items()
        if not v.irreducible
    }
    expected = {tau: ns for (family, tau), ns in DIVERGENCES.survivors.items() if family == name}
    return _expect("sieve survivors", survivors, expected)


def _dp6(spec: FamilySpec, claims: PublishedFamily) -> str | None:
    for tau, (b2, b3) in sorted(claims.dp6_table.items()):
        report = dp6_report(spec, tau)
        computed = (
            report.b2.witness.coefficients if report.b2.witness else None,
            report.b3.witness.coefficients if report.b3.witness else None,
        )
        if computed != (b2, b3):
            return f"tau={tau}: computed witnesses {computed}, printed {(b2, b3)}"
    return None


def _quadric(spec: FamilySpec, claims: PublishedFamily, nonempty: Sequence[int]) -> str | None:
    for tau in nonempty:
        report = quadric_report(spec, tau)
        expected = tau % 2 == claims.beta_trivial_parity
        if report.beta.trivial != expected:
            return f"tau={tau}: beta trivial={report.beta.trivial}, expected {expected}"
        if not report.beta.trivial and report.discriminant % 2:
            return f"tau={tau}: nontrivial beta with odd discriminant"
    return None


def _fiber_degree(spec: FamilySpec, taus: Sequence[int]) -> str | None:
    assert spec.fiber is not None
    expected = FIBER_DEGREES[spec.fiber.kind]
    degrees = {fiber_pairing_form(spec, tau)[0] for tau in taus}
    return _expect("<F, h2>", degrees, {expected})


def _overlattice_example() -> str | None:
    example = DIVERGENCES.overlattice_example
    spec = BUILTIN_FAMILIES[example.family]
    candidate = evaluate_candidate(spec, example.tau, example.n, example.xprime, example.yprime)
    problem = _expect("gram_B", candidate.gram_B, example.gram_B)
    if problem is None:
        problem = _expect("det B0", det_rational(candidate.gram_B0), example.det_B0)
    if problem is None and not is_even_gram(candidate.gram_B0):
        problem = "B0 is not even"
    if problem is None:
        problem = _expect("rejection", candidate.rejection_reason, example.computed_reason)
    if problem is None and det_rational(example.printed_gram_B0) == example.det_B0:
        problem = "printed B0 matrix has the computed determinant"
    return problem


def verify_family(name: str, spec: FamilySpec) -> tuple[list[CheckResult], int]:
    """Run every check for one built-in family name against ``spec``.

    Returns:
        The check results and the number of component rows verified.
    """

    claims = PUBLISHED.get(name)
    if claims is None:
        raise UnknownFamilyError(
            f"No published values for {name}", {"known": sorted(PUBLISHED)}
        )
    checks = _Checks(name)
    checks.run("discriminant-polynomial", lambda: _polynomial(spec, claims))
    if not checks.run("admissible-range", lambda: _range(spec, claims)):
        return checks.results, 0

    taus = admissible_tau_range(spec)
    rows_ok = checks.run("emptiness", lambda: _emptiness(spec, claims, taus))
    nonempty = [tau for tau in taus if not classify_component(spec, tau).is_empty]
    rows_ok &= checks.run("discriminants", lambda: _discriminants(spec, claims, nonempty))

    verdicts: dict[int, IrreducibilityVerdict] = {}

    def _sieve_all() -> str | None:
        verdicts.update({tau: sieve(spec, tau) for tau in nonempty})
        return _irreducibility(name, claims, verdicts)

    rows_ok &= checks.run("irreducibility", _sieve_all)

    if spec.fiber is not None:
        checks.run("fiber-degree", lambda: _fiber_degree(spec, nonempty))
        if spec.fiber.kind == "del-pezzo-6":
            rows_ok &= checks.run("brauer-dp6-table", lambda: _dp6(spec, claims))
        else:
            rows_ok &= checks.run(
                "brauer-quadric-parity", lambda: _quadric(spec, claims, nonempty)
            )
        if claims.obstructed is not None:
            expected_rows = sorted(claims.obstructed)
            checks.run(
                "theorem-rows",
                lambda: _expect("obstructed tau", theorem_rows(spec), expected_rows),
            )

    verified = len(taus) if rows_ok else 0
    return checks.results, verified


def _worked_example(example: WorkedExample, spec: FamilySpec) -> str | None:
    if example.beta_trivial is not None:
        quadric = quadric_report(spec, example.tau)
        return _expect(
            example.description,
            (quadric.beta.trivial, quadric.discriminant),
            (example.beta_trivial, example.discriminant),
        )
    dp6 = dp6_report(spec, example.tau)
    return _expect(
        example.description,
        (dp6.b2.trivial, dp6.b3.trivial),
        (example.b2_trivial, example.b3_trivial),
    )


def _worked_examples(specs: Mapping[str, FamilySpec]) -> list[CheckResult]:
    results: list[CheckResult] = []
    for example in WORKED_EXAMPLES:
        spec = specs.get(example.family)
        if spec is None:
            continue
        checks = _Checks(example.family)
        checks.run(
            f"worked-example-tau={example.tau}",
            lambda: _worked_example(example, spec),  # noqa: B023 - called immediately
        )
        results.extend(checks.results)
    return results


def run_verify(
    families: Sequence[str] | None = None,
    *,
    overrides: Mapping[str, FamilySpec] | None = None,
) -> VerificationSummary:
    """Verify the built-in families against the published values.

    Args:
        families: Names to verify; all built-in families when omitted.
        overrides: Replacement specs keyed by built-in name, used to verify
            a modified family against the original claims.

    Raises:
        UnknownFamilyError: If a name has no published values.
    """

    names = list(families) if families else list(PUBLISHED)
    for name in names:
        if name not in PUBLISHED:
            raise UnknownFamilyError(
                f"No published values for {name}", {"known": sorted(PUBLISHED)}
            )
    specs = {name: (overrides or {}).get(name, BUILTIN_FAMILIES[name]) for name in names}

    checks: list[CheckResult] = []
    rows = 0
    for name in names:
        results, verified = verify_family(name, specs[name])
        checks.extend(results)
        rows += verified
    checks.extend(_worked_examples(specs))
    if "c8-c38" in specs and specs["c8-c38"] is BUILTIN_FAMILIES["c8-c38"]:
        overlattice = _Checks("c8-c38")
        overlattice.run("overlattice-example", _overlattice_example)
        checks.extend(overlattice.results)

    polynomials = sum(
        1
        for check in checks
        if check.name == "discriminant-polynomial"
        and check.passed
        and check.family in DISCRIMINANT_POLYNOMIALS
    )
    summary = VerificationSummary(
        checks=checks, families=len(names), polynomials=polynomials, rows_verified=rows
    )
    LOGGER.log(
        logging.INFO if summary.passed else logging.WARNING,
        "Verification finished",
        extra={"failures": [c.line for c in summary.failures], "rows": rows},
    )
    return summary

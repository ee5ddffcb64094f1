"""Exact integer and rational linear algebra primitives.

Matrices are tuples of row tuples holding Python ``int`` or
:class:`fractions.Fraction` entries. Integers are arbitrary precision and no
routine in this module falls back to floating point, so every determinant,
inverse and decomposition is exact.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from itertools import combinations
from math import gcd

from cubic_loci.exceptions import (
    ContractError,
    DecompositionError,
    DimensionError,
    SingularMatrixError,
)

__all__ = [
    "IntMatrix",
    "IntVector",
    "RatMatrix",
    "RatVector",
    "Rational",
    "as_int_matrix",
    "as_rat_matrix",
    "canonical_sign",
    "det_exact",
    "det_rational",
    "identity",
    "induced_gram",
    "invert_rational",
    "is_integral_matrix",
    "is_symmetric",
    "kernel_of_functional",
    "ldl_decompose",
    "leading_principal_minors",
    "mat_mul",
    "maximal_minors_gcd",
    "quadratic_product",
    "rational_coordinates",
    "to_int_matrix",
    "xgcd",
]

Rational = int | Fraction
IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]
RatVector = tuple[Fraction, ...]
RatMatrix = tuple[RatVector, ...]


def _as_int(value: object) -> int:
    """Return ``value`` as an ``int`` when it is integral, else raise."""

    if isinstance(value, bool):
        raise ContractError("Booleans are not matrix entries", {"value": value})
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    raise ContractError("Entry is not an integer", {"value": str(value)})


def _check_rectangular(rows: Sequence[Sequence[object]]) -> None:
    if not rows:
        return
    width = len(rows[0])
    widths = [len(row) for row in rows]
    if any(w != width for w in widths):
        raise DimensionError("Matrix rows have unequal length", {"widths": widths})


def as_int_matrix(rows: Sequence[Sequence[object]]) -> IntMatrix:
    """Freeze ``rows`` into an :data:`IntMatrix`.

    Raises:
        DimensionError: If the rows do not all have the same length.
        ContractError: If an entry is not integral.
    """

    _check_rectangular(rows)
    return tuple(tuple(_as_int(value) for value in row) for row in rows)


def as_rat_matrix(rows: Sequence[Sequence[Rational]]) -> RatMatrix:
    """Freeze ``rows`` into a :data:`RatMatrix` of reduced fractions."""

    _check_rectangular(rows)
    return tuple(tuple(Fraction(value) for value in row) for row in rows)


def identity(size: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(size)) for i in range(size))


def _require_square(matrix: Sequence[Sequence[Rational]], operation: str) -> int:
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise DimensionError(
            f"{operation} requires a square matrix",
            {"rows": size, "cols": [len(row) for row in matrix]},
        )
    return size


def is_symmetric(matrix: Sequence[Sequence[Rational]]) -> bool:
    """Return ``True`` when ``matrix`` is square and equals its transpose."""

    size = len(matrix)
    if any(len(row) != size for row in matrix):
        return False
    return all(
        matrix[i][j] == matrix[j][i] for i in range(size) for j in range(i + 1, size)
    )


def _require_symmetric(matrix: Sequence[Sequence[Rational]], operation: str) -> int:
    size = _require_square(matrix, operation)
    if not is_symmetric(matrix):
        raise ContractError(f"{operation} requires a symmetric matrix")
    return size


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Return the determinant of an integer matrix by Bareiss elimination.

    Every intermediate division is exact, so entries stay integral and bounded
    by minors of the input.

    Raises:
        DimensionError: If ``matrix`` is not square.
    """

    size = _require_square(matrix, "det_exact")
    if size == 0:
        return 1
    work = [[_as_int(value) for value in row] for row in matrix]
    sign = 1
    previous = 1
    for k in range(size - 1):
        if work[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if work[i][k] != 0), None)
            if swap is None:
                return 0
            work[k], work[swap] = work[swap], work[k]
            sign = -sign
        pivot = work[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) // previous
        previous = pivot
    return sign * work[size - 1][size - 1]


def det_rational(matrix: Sequence[Sequence[Rational]]) -> Fraction:
    """Return the determinant of a rational matrix by fraction Gaussian elimination."""

    size = _require_square(matrix, "det_rational")
    work = [[Fraction(value) for value in row] for row in matrix]
    result = Fraction(1)
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            result = -result
        pivot = work[col][col]
        result *= pivot
        for r in range(col + 1, size):
            factor = work[r][col] / pivot
            if factor:
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return result


def leading_principal_minors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Return the leading principal minors of orders ``1..n``.

    Raises:
        ContractError: If ``matrix`` is not symmetric.
    """

    size = _require_symmetric(matrix, "leading_principal_minors")
    return [
        det_exact([row[:order] for row in matrix[:order]])
        for order in range(1, size + 1)
    ]


def invert_rational(matrix: Sequence[Sequence[Rational]]) -> RatMatrix:
    """Return the exact inverse of a nonsingular square matrix.

    Raises:
        DimensionError: If ``matrix`` is not square.
        SingularMatrixError: If ``matrix`` has determinant zero.
    """

    size = _require_square(matrix, "invert_rational")
    work = [
        [Fraction(value) for value in row] + [Fraction(value) for value in unit]
        for row, unit in zip(matrix, identity(size))
    ]
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if work[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("Matrix is singular", {"column": col})
        work[col], work[pivot_row] = work[pivot_row], work[col]
        pivot = work[col][col]
        work[col] = [value / pivot for value in work[col]]
        for r in range(size):
            if r == col or work[r][col] == 0:
                continue
            factor = work[r][col]
            work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
    return tuple(tuple(row[size:]) for row in work)


def ldl_decompose(matrix: Sequence[Sequence[Rational]]) -> tuple[RatVector, RatMatrix]:
    """Decompose a positive-definite matrix as ``Uᵀ·D·U``.

    Returns:
        ``(diag, upper)`` with ``upper`` unit upper triangular and
        ``matrix[i][j] == sum(diag[k] * upper[k][i] * upper[k][j])``.

    Raises:
        ContractError: If ``matrix`` is not symmetric.
        DecompositionError: If a pivot is not strictly positive.
    """

    size = _require_symmetric(matrix, "ldl_decompose")
    diag: list[Fraction] = []
    upper = [[Fraction(value) for value in unit] for unit in identity(size)]
    for k in range(size):
        pivot = Fraction(matrix[k][k]) - sum(
            (diag[l] * upper[l][k] * upper[l][k] for l in range(k)), Fraction(0)
        )
        if pivot <= 0:
            raise DecompositionError(
                "Matrix is not positive definite", {"pivot_index": k, "pivot": str(pivot)}
            )
        diag.append(pivot)
        for j in range(k + 1, size):
            partial = Fraction(matrix[k][j]) - sum(
                (diag[l] * upper[l][k] * upper[l][j] for l in range(k)), Fraction(0)
            )
            upper[k][j] = partial / pivot
    return tuple(diag), tuple(tuple(row) for row in upper)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(x, y, g)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""

    # Euclid on (g, next_g), carrying both Bezout rows along.
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def canonical_sign(vector: Sequence[int]) -> IntVector:
    """Return ``±vector`` with its first nonzero coordinate positive."""

    for value in vector:
        if value != 0:
            return tuple(vector) if value > 0 else tuple(-v for v in vector)
    return tuple(vector)


def kernel_of_functional(coeffs: Sequence[int]) -> list[IntVector]:
    """Return a basis of the saturated kernel of ``v ↦ Σ coeffs[i]·v[i]``.

    The basis comes from an extended-gcd column reduction: the kernel vectors
    together with the final Bezout column form a unimodular matrix, so the
    returned vectors span every integer vector annihilated by the functional.

    Raises:
        ContractError: If the functional is zero.
    """

    coefficients = [_as_int(value) for value in coeffs]
    dim = len(coefficients)
    if not any(coefficients):
        raise ContractError("kernel_of_functional requires a nonzero functional")

    def unit(index: int) -> list[int]:
        return [1 if i == index else 0 for i in range(dim)]

    basis: list[IntVector] = []
    accumulated = coefficients[0]
    column = unit(0)
    for j in range(1, dim):
        a, b = accumulated, coefficients[j]
        if b == 0:
            basis.append(canonical_sign(unit(j)))
            continue
        if a == 0:
            basis.append(canonical_sign(column))
            accumulated, column = b, unit(j)
            continue
        x, y, g = xgcd(a, b)
        kernel = [(-b // g) * c for c in column]
        kernel[j] += a // g
        basis.append(canonical_sign(kernel))
        column = [x * c for c in column]
        column[j] += y
        accumulated = g
    return basis


def quadratic_product(
    u: Sequence[Rational], gram: Sequence[Sequence[Rational]], v: Sequence[Rational]
) -> Rational:
    """Return ``uᵀ·gram·v``."""

    if len(u) != len(gram) or len(v) != len(gram):
        raise DimensionError(
            "Vector and Gram dimensions differ",
            {"u": len(u), "v": len(v), "gram": len(gram)},
        )
    total: Rational = 0
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = gram[i]
        total += ui * sum((row[j] * vj for j, vj in enumerate(v)), start=0)
    return total


def induced_gram(
    basis: Sequence[Sequence[Rational]], gram: Sequence[Sequence[Rational]]
) -> tuple[tuple[Rational, ...], ...]:
    """Return the Gram matrix of ``basis`` (rows) under ``gram``."""

    return tuple(
        tuple(quadratic_product(u, gram, v) for v in basis) for u in basis
    )


def mat_mul(
    left: Sequence[Sequence[Rational]], right: Sequence[Sequence[Rational]]
) -> tuple[tuple[Rational, ...], ...]:
    if any(len(row) != len(right) for row in left):
        raise DimensionError("Inner matrix dimensions differ")
    cols = len(right[0]) if right else 0
    return tuple(
        tuple(
            sum((row[k] * right[k][j] for k in range(len(right))), start=0)
            for j in range(cols)
        )
        for row in left
    )


def is_integral_matrix(matrix: Sequence[Sequence[Rational]]) -> bool:
    return all(Fraction(value).denominator == 1 for row in matrix for value in row)


def to_int_matrix(matrix: Sequence[Sequence[Rational]]) -> IntMatrix:
    """Convert an integral rational matrix to an :data:`IntMatrix`.

    Raises:
        ContractError: If some entry has a nontrivial denominator.
    """

    return as_int_matrix(matrix)


def rational_coordinates(
    basis: Sequence[Sequence[Rational]], vector: Sequence[Rational]
) -> RatVector | None:
    """Solve ``vector = Σ c_i·basis[i]`` over ``Q``.

    Returns:
        The coefficient tuple, or ``None`` when ``vector`` is not in the
        rational span of ``basis``.
    """

    dim = len(vector)
    if any(len(row) != dim for row in basis):
        raise DimensionError("Basis and vector dimensions differ")
    if not basis:
        return () if not any(vector) else None
    euclid = identity(dim)
    normal = induced_gram(basis, euclid)
    rhs = [(quadratic_product(row, euclid, vector),) for row in basis]
    coords = tuple(Fraction(row[0]) for row in mat_mul(invert_rational(normal), rhs))
    (rebuilt,) = mat_mul((coords,), basis)
    if any(rebuilt[k] != vector[k] for k in range(dim)):
        return None
    return coords


def maximal_minors_gcd(rows: Sequence[Sequence[int]]) -> int:
    """Return the gcd of all maximal minors of the ``k × n`` matrix ``rows``.

    A basis of a saturated rank-``k`` sublattice of ``Z^n`` has value 1.
    """

    k = len(rows)
    if k == 0:
        return 1
    n = len(rows[0])
    result = 0
    for cols in combinations(range(n), k):
        result = gcd(result, det_exact([[row[c] for c in cols] for row in rows]))
    return abs(result)

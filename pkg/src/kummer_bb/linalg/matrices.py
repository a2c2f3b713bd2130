"""Exact integer and rational matrices.

Matrices are sympy ``ImmutableMatrix`` values with ``Integer`` or
``Rational`` entries. Helpers here convert to and from plain Python rows,
which the hot paths of the other packages work with directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import TypeAlias

from sympy import ImmutableMatrix, Rational, diag, eye

from ..errors import InvalidArgumentError, NonIntegralError

IntMatrix: TypeAlias = ImmutableMatrix
RatMatrix: TypeAlias = ImmutableMatrix
IntRows: TypeAlias = tuple[tuple[int, ...], ...]
FracRows: TypeAlias = tuple[tuple[Fraction, ...], ...]


def int_matrix(rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
    """Build an integer matrix from row sequences.

    ``cols`` is only needed for matrices without rows.
    """
    data = [[int(x) for x in row] for row in rows]
    if not data:
        return ImmutableMatrix.zeros(0, cols or 0)
    width = len(data[0])
    if any(len(row) != width for row in data):
        raise InvalidArgumentError("Matrix rows have different lengths")
    return ImmutableMatrix(data)


def rat_matrix(rows: Iterable[Sequence[Fraction | int]]) -> RatMatrix:
    data = [[_to_rational(x) for x in row] for row in rows]
    return ImmutableMatrix(data)


def from_columns(columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
    """Integer matrix whose columns are the given vectors."""
    if not columns:
        return ImmutableMatrix.zeros(rows, 0)
    return int_matrix([[col[i] for col in columns] for i in range(rows)])


def identity(n: int) -> IntMatrix:
    return ImmutableMatrix(eye(n))


def block_diag(*blocks: IntMatrix) -> IntMatrix:
    return ImmutableMatrix(diag(*blocks))


def int_rows(m: IntMatrix) -> IntRows:
    """Entries as plain ints; raises if any entry is not integral."""
    out: list[tuple[int, ...]] = []
    for i in range(m.rows):
        row: list[int] = []
        for j in range(m.cols):
            entry = m[i, j]
            if not entry.is_integer:
                raise NonIntegralError(f"Entry ({i},{j}) = {entry} is not an integer")
            row.append(int(entry))
        out.append(tuple(row))
    return tuple(out)


def frac_rows(m: RatMatrix) -> FracRows:
    return tuple(
        tuple(Fraction(int(m[i, j].p), int(m[i, j].q)) for j in range(m.cols))
        for i in range(m.rows)
    )


def columns(m: IntMatrix) -> tuple[tuple[int, ...], ...]:
    rows = int_rows(m)
    return tuple(tuple(row[j] for row in rows) for j in range(m.cols))


def is_integral(m: RatMatrix) -> bool:
    return all(entry.is_integer for entry in m)


def det_exact(m: IntMatrix) -> int:
    """Exact determinant (fraction-free Bareiss elimination)."""
    if m.rows != m.cols:
        raise InvalidArgumentError("Determinant of a non-square matrix")
    if m.rows == 0:
        return 1
    return int(m.det(method="bareiss"))


def is_unimodular(m: IntMatrix) -> bool:
    return m.rows == m.cols and det_exact(m) in (1, -1)


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    if not is_unimodular(m):
        raise InvalidArgumentError("Matrix is not unimodular")
    return ImmutableMatrix(m.inv())


def _to_rational(x: Fraction | int) -> Rational:
    if isinstance(x, Fraction):
        return Rational(x.numerator, x.denominator)
    return Rational(int(x))

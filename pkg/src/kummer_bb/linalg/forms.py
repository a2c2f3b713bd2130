"""Congruence diagonalization of symmetric forms over ℚ."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegenerateError, InvalidArgumentError
from .matrices import FracRows, IntMatrix, int_rows


@dataclass(frozen=True)
class Diagonalization:
    """``basisᵀ · q · basis = diag(diagonal)``; basis vectors are the columns."""

    diagonal: tuple[Fraction, ...]
    basis: FracRows

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.basis)


def diagonalize(q: IntMatrix) -> Diagonalization:
    """Diagonalize a nondegenerate symmetric integer matrix by congruence."""
    rows = int_rows(q)
    n = len(rows)
    if q.rows != q.cols or any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
        raise InvalidArgumentError("Form must be a symmetric square matrix")
    a = [[Fraction(x) for x in row] for row in rows]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    for k in range(n):
        if a[k][k] == 0:
            i = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if i is not None:
                _swap(a, p, k, i)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise DegenerateError("Form is degenerate", {"index": k})
                # e_k + e_j has norm 2·a[k][j] ≠ 0
                _add(a, p, k, j, Fraction(1))
        pivot = a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                _add(a, p, i, k, -a[i][k] / pivot)

    return Diagonalization(
        diagonal=tuple(a[i][i] for i in range(n)),
        basis=tuple(tuple(row) for row in p),
    )


def signature(q: IntMatrix) -> tuple[int, int]:
    """(positive, negative) inertia indices of a nondegenerate form."""
    diag = diagonalize(q).diagonal
    return sum(1 for x in diag if x > 0), sum(1 for x in diag if x < 0)


def _swap(a: list[list[Fraction]], p: list[list[Fraction]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]
    for row in p:
        row[i], row[j] = row[j], row[i]


def _add(a: list[list[Fraction]], p: list[list[Fraction]], target: int, source: int, k: Fraction) -> None:
    """Replace basis vector ``target`` by ``target + k·source``."""
    a[target] = [x + k * y for x, y in zip(a[target], a[source])]
    for row in a:
        row[target] += k * row[source]
    for row in p:
        row[target] += k * row[source]

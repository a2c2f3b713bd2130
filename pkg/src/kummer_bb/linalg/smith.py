"""Smith normal form with transforms, integer kernels and basis completion."""

from __future__ import annotations

from typing import NamedTuple

from sympy import ImmutableMatrix

from ..errors import NotPrimitiveError
from .matrices import IntMatrix, int_matrix, int_rows, unimodular_inverse


class SmithForm(NamedTuple):
    """``u * m * v == d`` with ``u``, ``v`` unimodular."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    @property
    def invariants(self) -> tuple[int, ...]:
        """Diagonal entries d_1 | d_2 | ..., zeros included."""
        return tuple(int(self.d[i, i]) for i in range(min(self.d.shape)))

    @property
    def rank(self) -> int:
        return sum(1 for x in self.invariants if x != 0)


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form by smallest-pivot elimination.

    The pivot is the nonzero entry of least absolute value in the remaining
    block, first in row-major order. Transforms are therefore reproducible.
    """
    a = [list(row) for row in int_rows(m)]
    r, c = m.rows, m.cols
    u = [[int(i == j) for j in range(r)] for i in range(r)]
    v = [[int(i == j) for j in range(c)] for i in range(c)]

    for t in range(min(r, c)):
        while True:
            pivot = _find_pivot(a, t, r, c)
            if pivot is None:
                return _pack(a, u, v, r, c)
            pi, pj = pivot
            _swap_rows(a, t, pi)
            _swap_rows(u, t, pi)
            _swap_cols(a, t, pj)
            _swap_cols(v, t, pj)

            clean = True
            for i in range(t + 1, r):
                q = a[i][t] // a[t][t]
                if q:
                    _add_row(a, i, t, -q)
                    _add_row(u, i, t, -q)
                clean = clean and a[i][t] == 0
            for j in range(t + 1, c):
                q = a[t][j] // a[t][t]
                if q:
                    _add_col(a, j, t, -q)
                    _add_col(v, j, t, -q)
                clean = clean and a[t][j] == 0
            if not clean:
                continue

            bad_row = _non_divisible_row(a, t, r, c)
            if bad_row is None:
                break
            _add_row(a, t, bad_row, 1)
            _add_row(u, t, bad_row, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return _pack(a, u, v, r, c)


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero Smith invariants."""
    return tuple(x for x in smith_normal_form(m).invariants if x != 0)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the saturated integer kernel of ``m``.

    Each column is normalised so its first nonzero entry is positive.
    """
    snf = smith_normal_form(m)
    rank = snf.rank
    vcols = [[int(snf.v[i, j]) for i in range(m.cols)] for j in range(rank, m.cols)]
    for col in vcols:
        lead = next(x for x in col if x != 0)
        if lead < 0:
            col[:] = [-x for x in col]
    if not vcols:
        return ImmutableMatrix.zeros(m.cols, 0)
    return int_matrix([[col[i] for col in vcols] for i in range(m.cols)])


def is_saturated(basis: IntMatrix) -> bool:
    """True if the columns span a primitive sublattice of ℤⁿ."""
    if basis.cols == 0:
        return True
    invs = smith_normal_form(basis).invariants
    return len(invs) == basis.cols and all(x == 1 for x in invs)


def extend_to_basis(basis: IntMatrix) -> IntMatrix:
    """Complete primitive columns to a unimodular matrix.

    The first columns of the result are exactly the given columns.
    """
    if not is_saturated(basis):
        raise NotPrimitiveError("Columns do not span a primitive sublattice")
    n, k = basis.shape
    snf = smith_normal_form(basis)
    completion = unimodular_inverse(snf.u)
    if k == n:
        return basis
    return ImmutableMatrix(basis.row_join(completion[:, k:]))


# -- Elementary operations --------------------------------------------


def _find_pivot(a: list[list[int]], t: int, r: int, c: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_abs = 0
    for i in range(t, r):
        row = a[i]
        for j in range(t, c):
            x = abs(row[j])
            if x and (best is None or x < best_abs):
                best, best_abs = (i, j), x
    return best


def _non_divisible_row(a: list[list[int]], t: int, r: int, c: int) -> int | None:
    p = a[t][t]
    for i in range(t + 1, r):
        for j in range(t + 1, c):
            if a[i][j] % p:
                return i
    return None


def _swap_rows(a: list[list[int]], i: int, j: int) -> None:
    if i != j:
        a[i], a[j] = a[j], a[i]


def _swap_cols(a: list[list[int]], i: int, j: int) -> None:
    if i != j:
        for row in a:
            row[i], row[j] = row[j], row[i]


def _add_row(a: list[list[int]], target: int, source: int, k: int) -> None:
    src = a[source]
    a[target] = [x + k * y for x, y in zip(a[target], src)]


def _add_col(a: list[list[int]], target: int, source: int, k: int) -> None:
    for row in a:
        row[target] += k * row[source]


def _pack(a: list[list[int]], u: list[list[int]], v: list[list[int]], r: int, c: int) -> SmithForm:
    return SmithForm(int_matrix(u, r), int_matrix(a, c), int_matrix(v, c))

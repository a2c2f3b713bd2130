"""Eichler transvections, the SL₂ × SL₂ action on 2U and the Eichler invariant."""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from sympy import ImmutableMatrix

from ..config import Presentation
from ..errors import InvalidArgumentError, NotIsotropicError
from ..finite import DiscElement
from ..linalg import det_exact, int_matrix, unimodular_inverse
from ..lattice import Lattice, LatticeVector, require_primitive, star
from .isometry import Isometry

Matrix2 = Sequence[Sequence[int]]

# Hyperbolic pairs (e, f) of the two U summands of L₂d and M.
HYPERBOLIC_MARKS = (("e1", "f1"), ("e2", "f2"))


def eichler_transvection(e: LatticeVector, a: LatticeVector) -> Isometry:
    """t(e, a): x ↦ x − (a,x)e + (e,x)a − ½(a,a)(e,x)e."""
    if e.parent != a.parent:
        raise InvalidArgumentError("Vectors from different lattices")
    if e.norm != 0:
        raise NotIsotropicError("Transvection needs an isotropic e", e.coords)
    if e.pair(a) != 0:
        raise InvalidArgumentError("Transvection needs a ⊥ e", (e.coords, a.coords))
    lattice = e.parent
    ga = lattice.pairing_vector(a.coords)
    ge = lattice.pairing_vector(e.coords)
    half = a.norm // 2
    n = lattice.rank
    rows = [
        [
            int(i == j) - ga[j] * e.coords[i] + ge[j] * a.coords[i] - half * ge[j] * e.coords[i]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return Isometry(int_matrix(rows), lattice)


def sl2_to_2u(a: Matrix2, b: Matrix2) -> list[list[int]]:
    """4×4 action of (A, B) on (w, x, y, z) ↔ [[w, −y], [z, x]], M ↦ A·M·B⁻¹."""
    am = int_matrix(a)
    bm = int_matrix(b)
    if am.shape != (2, 2) or bm.shape != (2, 2) or det_exact(am) != 1 or det_exact(bm) != 1:
        raise InvalidArgumentError("SL₂ pair needs two 2×2 matrices of determinant 1")
    binv = unimodular_inverse(bm)
    columns = []
    for k in range(4):
        w, x, y, z = (int(k == j) for j in range(4))
        m = am * ImmutableMatrix([[w, -y], [z, x]]) * binv
        columns.append([int(m[0, 0]), int(m[1, 1]), int(-m[0, 1]), int(m[1, 0])])
    return [[columns[j][i] for j in range(4)] for i in range(4)]


def o2u_from_sl2_pair(a: Matrix2, b: Matrix2, lattice: Lattice) -> Isometry:
    """(A, B) acting on the 2U spanned by e₁, f₁, e₂, f₂, identity elsewhere."""
    index = [lattice.mark(name).coords.index(1) for pair in HYPERBOLIC_MARKS for name in pair]
    block = sl2_to_2u(a, b)
    n = lattice.rank
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for r, i in enumerate(index):
        for c, j in enumerate(index):
            rows[i][j] = block[r][c]
    return Isometry(int_matrix(rows), lattice)


# ── Eichler invariant ───────────────────────────────────────────────


def eichler_invariant(
    v: LatticeVector, presentation: Presentation | None = None
) -> tuple[int, DiscElement]:
    """(v², v*) for a primitive v."""
    require_primitive(v)
    return v.norm, star(v, presentation)


def same_orbit_invariant(v1: LatticeVector, v2: LatticeVector) -> bool:
    return eichler_invariant(v1) == eichler_invariant(v2)


# ── Random generators ───────────────────────────────────────────────


def random_transvection_data(
    lattice: Lattice, rng: np.random.Generator, bound: int = 3, moves: int = 2
) -> tuple[LatticeVector, LatticeVector]:
    """(e, a) with e isotropic and a a random vector ⊥ e.

    e starts as a random U-basis vector; with probability ½ the pair is then
    moved by a word of up to ``moves`` standard transvections.
    """
    e, a = _standard_transvection_data(lattice, rng, bound)
    if moves and int(rng.integers(2)):
        for _ in range(int(rng.integers(1, moves, endpoint=True))):
            g = eichler_transvection(*_standard_transvection_data(lattice, rng, 1))
            e, a = g(e), g(a)
    return e, a


def _standard_transvection_data(
    lattice: Lattice, rng: np.random.Generator, bound: int
) -> tuple[LatticeVector, LatticeVector]:
    pair = HYPERBOLIC_MARKS[int(rng.integers(len(HYPERBOLIC_MARKS)))]
    flip = int(rng.integers(2))
    e = lattice.mark(pair[flip])
    partner = lattice.mark(pair[1 - flip]).coords.index(1)
    coeffs = [int(c) for c in rng.integers(-bound, bound, size=lattice.rank, endpoint=True)]
    coeffs[partner] = 0
    return e, lattice.vector(*coeffs)


def random_transvection(lattice: Lattice, rng: np.random.Generator, bound: int = 3) -> Isometry:
    return eichler_transvection(*random_transvection_data(lattice, rng, bound))


def random_transvection_word(
    lattice: Lattice, rng: np.random.Generator, length: int = 5, bound: int = 3
) -> Isometry:
    g = Isometry.identity(lattice)
    for _ in range(length):
        g = random_transvection(lattice, rng, bound) @ g
    return g


def random_primitive_vector(lattice: Lattice, rng: np.random.Generator, bound: int = 20) -> LatticeVector:
    while True:
        coords = [int(c) for c in rng.integers(-bound, bound, size=lattice.rank, endpoint=True)]
        v = lattice.vector(*coords)
        if not v.is_zero and np.gcd.reduce(np.array(coords)) == 1:
            return v

"""Named lattices: U, ⟨d⟩, A₂, L₂d, M and the split polarisation complement."""

from __future__ import annotations

from typing import NamedTuple

from sympy import ImmutableMatrix

from ..config import logger
from ..errors import InvalidArgumentError, InvariantViolationError
from ..linalg import IntMatrix, block_diag, det_exact, from_columns, int_matrix
from .lattice import Lattice, LatticeVector, Marks, Sublattice, orthogonal_complement

L2D_BASIS = ("e1", "f1", "e2", "f2", "w", "v")
M_BASIS = ("e1", "f1", "e2", "f2", "e3", "f3", "k")


def make_U() -> Lattice:
    """The hyperbolic plane."""
    return Lattice(int_matrix([[0, 1], [1, 0]]), name="U")


def make_rank_one(d: int) -> Lattice:
    if d == 0 or d % 2:
        raise InvalidArgumentError(f"Rank one even lattice needs an even nonzero d, got {d}")
    return Lattice(int_matrix([[d]]), name=f"<{d}>")


def make_A2() -> Lattice:
    """A₂ with Gram [[2,1],[1,2]], the reduced binary form with b ≥ 0."""
    return Lattice(int_matrix([[2, 1], [1, 2]]), name="A2")


def rescale(lattice: Lattice, m: int) -> Lattice:
    if m == 0:
        raise InvalidArgumentError("Rescaling by zero")
    return Lattice(
        ImmutableMatrix(lattice.gram * m), lattice.marks, name=f"{lattice.name}({m})"
    )


def direct_sum(*lattices: Lattice) -> Lattice:
    """Orthogonal sum; marks keep their names and are padded with zeros."""
    if not lattices:
        raise InvalidArgumentError("Direct sum of no lattices")
    total = sum(lattice.rank for lattice in lattices)
    marks: list[tuple[str, tuple[int, ...]]] = []
    offset = 0
    for lattice in lattices:
        for name, coords in lattice.marks:
            if any(name == seen for seen, _ in marks):
                raise InvalidArgumentError(f"Mark {name!r} appears in more than one summand")
            padded = (0,) * offset + coords + (0,) * (total - offset - lattice.rank)
            marks.append((name, padded))
        offset += lattice.rank
    return Lattice(
        block_diag(*(lattice.gram for lattice in lattices)),
        tuple(marks),
        name=" + ".join(lattice.name for lattice in lattices),
    )


def _unit_marks(names: tuple[str, ...]) -> Marks:
    n = len(names)
    return tuple((name, tuple(int(i == j) for j in range(n))) for i, name in enumerate(names))


def make_L2d(d: int) -> Lattice:
    """L₂d = 2U ⊕ ⟨−6⟩ ⊕ ⟨−2d⟩ on the basis (e₁, f₁, e₂, f₂, w̲, v̲)."""
    if d < 1:
        raise InvalidArgumentError(f"d must be positive, got {d}")
    u = make_U().gram
    gram = block_diag(u, u, int_matrix([[-6]]), int_matrix([[-2 * d]]))
    return Lattice(gram, _unit_marks(L2D_BASIS), name=f"L_{2 * d}")


def make_M(n: int) -> Lattice:
    """M = 3U ⊕ ⟨−2(n+1)⟩ on the basis (e₁, f₁, e₂, f₂, e₃, f₃, k)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    u = make_U().gram
    gram = block_diag(u, u, u, int_matrix([[-2 * (n + 1)]]))
    return Lattice(gram, _unit_marks(M_BASIS), name=f"M_{n}")


class SplitComplement(NamedTuple):
    """⟨h⟩^⊥ ⊂ M for h = e₃ + d·f₃, together with an explicit witness.

    ``witness`` holds, as columns in M coordinates, the basis
    (e₁, f₁, e₂, f₂, k, e₃ − d·f₃) on which ``lattice`` has the Gram
    matrix 2U ⊕ ⟨−2(n+1)⟩ ⊕ ⟨−2d⟩.
    """

    ambient: Lattice
    h: LatticeVector
    lattice: Lattice
    complement: Sublattice
    witness: IntMatrix


def split_polarisation_complement(n: int, d: int) -> SplitComplement:
    if d < 1:
        raise InvalidArgumentError(f"d must be positive, got {d}")
    m = make_M(n)
    h = m.mark("e3") + d * m.mark("f3")
    complement = orthogonal_complement(Sublattice.spanned_by(h))

    e1, f1, e2, f2 = (m.mark(name) for name in ("e1", "f1", "e2", "f2"))
    k1 = m.mark("e3") - d * m.mark("f3")
    basis = (e1, f1, e2, f2, m.mark("k"), k1)
    witness = from_columns([v.coords for v in basis], m.rank)

    solution, params = complement.basis.gauss_jordan_solve(witness)
    if params.shape[0] or not all(x.is_integer for x in solution) or abs(det_exact(solution)) != 1:
        raise InvariantViolationError("Witness basis does not span the complement of h")

    gram = ImmutableMatrix(witness.T * m.gram * witness)
    names = ("e1", "f1", "e2", "f2", "w", "v")
    name = f"L_{2 * d}" if n == 2 else f"<h>^perp in {m.name}"
    lattice = Lattice(gram, _unit_marks(names), name=name)
    logger.debug("Split complement n=%d d=%d: det %d", n, d, lattice.det)
    return SplitComplement(m, h, lattice, complement, witness)

"""Even integral lattices, their vectors and sublattices."""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any

from sympy import ImmutableMatrix

from ..errors import (
    DegenerateError,
    InvalidArgumentError,
    MissingMarkError,
    NotIsotropicError,
    NotPrimitiveError,
)
from ..linalg import (
    IntMatrix,
    IntRows,
    det_exact,
    from_columns,
    int_rows,
    is_saturated,
    kernel_basis,
    signature,
)

Marks = tuple[tuple[str, tuple[int, ...]], ...]


@dataclass(frozen=True)
class Lattice:
    """Free ℤ-module with an even symmetric Gram matrix on a fixed basis.

    ``marks`` names distinguished vectors (``e1``, ``f1``, …, ``v``, ``w``)
    by their coordinates.
    """

    gram: IntMatrix
    marks: Marks = ()
    name: str = ""
    allow_degenerate: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        rows = int_rows(self.gram)
        n = self.gram.rows
        if self.gram.cols != n:
            raise InvalidArgumentError("Gram matrix must be square")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(i)):
            raise InvalidArgumentError("Gram matrix must be symmetric")
        if any(rows[i][i] % 2 for i in range(n)):
            raise InvalidArgumentError("Gram matrix has an odd diagonal entry")
        for mark, coords in self.marks:
            if len(coords) != n:
                raise InvalidArgumentError(f"Mark {mark!r} has wrong length")
        if not self.allow_degenerate and n and det_exact(self.gram) == 0:
            raise DegenerateError("Gram matrix is degenerate")

    # ── Basic data ──────────────────────────────────────────────────

    @property
    def rank(self) -> int:
        return int(self.gram.rows)

    @cached_property
    def rows(self) -> IntRows:
        return int_rows(self.gram)

    @cached_property
    def det(self) -> int:
        return det_exact(self.gram)

    @cached_property
    def signature(self) -> tuple[int, int]:
        return signature(self.gram)

    # ── Vectors ─────────────────────────────────────────────────────

    def vector(self, *coords: int) -> LatticeVector:
        return LatticeVector(tuple(int(c) for c in coords), self)

    def basis_vector(self, i: int) -> LatticeVector:
        return self.vector(*(int(i == j) for j in range(self.rank)))

    def zero(self) -> LatticeVector:
        return self.vector(*([0] * self.rank))

    def has_mark(self, name: str) -> bool:
        return any(mark == name for mark, _ in self.marks)

    def mark(self, name: str) -> LatticeVector:
        for mark, coords in self.marks:
            if mark == name:
                return self.vector(*coords)
        raise MissingMarkError(name)

    def pair(self, x: Sequence[Any], y: Sequence[Any]) -> Any:
        """(x, y) for integer or rational coordinate sequences."""
        total: Any = 0
        for i, row in enumerate(self.rows):
            xi = x[i]
            if xi:
                total += xi * sum(a * b for a, b in zip(row, y) if a)
        return total

    def pairing_vector(self, x: Sequence[Any]) -> tuple[Any, ...]:
        """G·x, the pairings of x with the basis vectors."""
        return tuple(sum(a * b for a, b in zip(row, x) if a) for row in self.rows)

    def is_dual(self, x: Sequence[Fraction]) -> bool:
        return all(Fraction(c).denominator == 1 for c in self.pairing_vector(x))

    def to_dict(self) -> dict[str, object]:
        return {
            "rank": self.rank,
            "gram": [[str(x) for x in row] for row in self.rows],
            "marks": {mark: [str(c) for c in coords] for mark, coords in self.marks},
        }


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple[int, ...]
    parent: Lattice = field(repr=False)

    def __post_init__(self) -> None:
        if len(self.coords) != self.parent.rank:
            raise InvalidArgumentError(
                f"Vector of length {len(self.coords)} in a rank {self.parent.rank} lattice"
            )

    def __add__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.parent)

    def __sub__(self, other: LatticeVector) -> LatticeVector:
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.parent)

    def __neg__(self) -> LatticeVector:
        return LatticeVector(tuple(-a for a in self.coords), self.parent)

    def __rmul__(self, k: int) -> LatticeVector:
        return LatticeVector(tuple(k * a for a in self.coords), self.parent)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    @property
    def norm(self) -> int:
        """(v, v)."""
        return int(self.parent.pair(self.coords, self.coords))

    def pair(self, other: LatticeVector) -> int:
        return int(self.parent.pair(self.coords, other.coords))

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class Sublattice:
    """Sublattice spanned by the columns of ``basis`` (parent coordinates)."""

    basis: IntMatrix
    parent: Lattice = field(repr=False)

    def __post_init__(self) -> None:
        if self.basis.rows != self.parent.rank:
            raise InvalidArgumentError("Basis vectors have the wrong length")
        if self.basis.cols and self.basis.rank() != self.basis.cols:
            raise InvalidArgumentError("Basis vectors are linearly dependent")

    @classmethod
    def spanned_by(cls, *vectors: LatticeVector) -> Sublattice:
        if not vectors:
            raise InvalidArgumentError("Sublattice needs at least one vector")
        parent = vectors[0].parent
        return cls(from_columns([v.coords for v in vectors], parent.rank), parent)

    @property
    def rank(self) -> int:
        return int(self.basis.cols)

    @cached_property
    def vectors(self) -> tuple[LatticeVector, ...]:
        rows = int_rows(self.basis)
        return tuple(
            self.parent.vector(*(row[j] for row in rows)) for j in range(self.rank)
        )

    @cached_property
    def gram(self) -> IntMatrix:
        return ImmutableMatrix(self.basis.T * self.parent.gram * self.basis)

    @property
    def is_primitive(self) -> bool:
        return is_saturated(self.basis)

    def contains(self, v: LatticeVector) -> bool:
        """True if v is an integral combination of the basis vectors."""
        target = ImmutableMatrix([[c] for c in v.coords])
        try:
            solution, params = self.basis.gauss_jordan_solve(target)
        except ValueError:
            return False
        if params.shape[0]:
            raise InvalidArgumentError("Sublattice basis is not independent")
        return all(x.is_integer for x in solution)


# ── Operations ──────────────────────────────────────────────────────


def divisor(v: LatticeVector) -> int:
    """Positive generator of the ideal (v, L)."""
    if v.is_zero:
        raise InvalidArgumentError("Divisor of the zero vector")
    return math.gcd(*v.parent.pairing_vector(v.coords))


def is_primitive(v: LatticeVector) -> bool:
    return not v.is_zero and math.gcd(*v.coords) == 1


def is_isotropic(v: LatticeVector) -> bool:
    return v.norm == 0


def is_totally_isotropic(s: Sublattice) -> bool:
    return all(x == 0 for x in s.gram)


def orthogonal_complement(s: Sublattice) -> Sublattice:
    """S^⊥ as the saturated kernel of the pairing with S."""
    pairing = ImmutableMatrix(s.basis.T * s.parent.gram)
    return Sublattice(kernel_basis(pairing), s.parent)


def require_primitive(v: LatticeVector) -> None:
    if not is_primitive(v):
        raise NotPrimitiveError(f"Vector {v.coords} is not primitive", v.coords)


def require_isotropic_plane(e: Sublattice, rank: int | None = None) -> None:
    """Primitive, totally isotropic and (optionally) of the given rank."""
    if rank is not None and e.rank != rank:
        raise InvalidArgumentError(f"Expected a rank {rank} sublattice, got rank {e.rank}")
    if not is_totally_isotropic(e):
        raise NotIsotropicError("Sublattice is not totally isotropic")
    if not e.is_primitive:
        raise NotPrimitiveError("Sublattice is not primitive")

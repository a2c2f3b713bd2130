"""Discriminant groups D(L) = L^∨/L with their quadratic forms.

Elements are read off in one of three presentations:

* ``snf``: invariant factors from the Smith form ``u·G·v = diag(dᵢ)``;
  the class of a dual vector x has coordinates ``(u·G·x)ᵢ mod dᵢ``.
* ``marked``: generators w̲/div(w̲) and v̲/div(v̲), i.e. C₆ ⊕ C₂d on L₂d.
* ``primary``: prime-power parts of the marked generators, ordered by
  prime with v̲ before w̲ (C₂ ⊕ C₂ ⊕ C₃ on L₂).

Non-SNF presentations are matched to SNF coordinates by enumerating the
presentation once and keeping the inverse table.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from sympy import ImmutableMatrix, factorint

from ..config import Presentation, logger
from ..errors import InvalidArgumentError, InvariantViolationError, MissingMarkError
from ..finite import DiscElement, FiniteQuadraticModule, generated_subgroup
from ..linalg import frac_rows, int_rows, smith_normal_form
from .lattice import (
    Lattice,
    LatticeVector,
    Sublattice,
    divisor,
    require_isotropic_plane,
    require_primitive,
)

DualVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class Discriminant:
    """D(L) in a fixed presentation, with the maps to and from L^∨."""

    lattice: Lattice
    presentation: Presentation
    module: FiniteQuadraticModule
    generators: tuple[DualVector, ...]
    _u_rows: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    _snf_orders: tuple[int, ...] = field(repr=False, compare=False)
    _snf_index: tuple[int, ...] = field(repr=False, compare=False)
    _table: dict[tuple[int, ...], tuple[int, ...]] | None = field(repr=False, compare=False)

    def snf_coords(self, x: Sequence[Fraction]) -> tuple[int, ...]:
        y = self.lattice.pairing_vector(x)
        if any(Fraction(c).denominator != 1 for c in y):
            raise InvalidArgumentError("Vector is not in the dual lattice", tuple(str(c) for c in x))
        ints = [int(c) for c in y]
        return tuple(
            sum(a * b for a, b in zip(self._u_rows[i], ints)) % d
            for i, d in zip(self._snf_index, self._snf_orders)
        )

    def element_of(self, x: Sequence[Fraction]) -> DiscElement:
        """Class of a dual vector x (parent coordinates) in D(L)."""
        coords = self.snf_coords(x)
        if self._table is not None:
            coords = self._table[coords]
        return self.module.element(*coords)

    def lift(self, element: DiscElement) -> DualVector:
        """A dual vector representing ``element``."""
        n = self.lattice.rank
        total = [Fraction(0)] * n
        for c, g in zip(element.coords, self.generators):
            if c:
                for i in range(n):
                    total[i] += c * g[i]
        return tuple(total)


@lru_cache(maxsize=64)
def discriminant(lattice: Lattice, presentation: Presentation | None = None) -> Discriminant:
    """Build D(L). The default presentation is ``marked`` when the lattice
    carries both v̲ and w̲, otherwise ``snf``."""
    if presentation is None:
        presentation = "marked" if lattice.has_mark("v") and lattice.has_mark("w") else "snf"
    snf = smith_normal_form(lattice.gram)
    invariants = snf.invariants
    if any(d == 0 for d in invariants):
        raise InvalidArgumentError("Discriminant of a degenerate lattice")
    index = tuple(i for i, d in enumerate(invariants) if d > 1)
    snf_orders = tuple(invariants[i] for i in index)
    v_cols = frac_rows(ImmutableMatrix(snf.v.T))
    snf_generators = tuple(
        tuple(c / invariants[i] for c in v_cols[i]) for i in index
    )
    u_rows = int_rows(snf.u)

    if presentation == "snf":
        generators = snf_generators
        orders = snf_orders
    elif presentation in ("marked", "primary"):
        generators, orders = _marked_generators(lattice, primary=presentation == "primary")
    else:
        raise InvalidArgumentError(f"Unknown presentation {presentation!r}")

    module = FiniteQuadraticModule(orders, _gram_of(lattice, generators))
    disc = Discriminant(lattice, presentation, module, generators, u_rows, snf_orders, index, None)
    if presentation != "snf":
        table = _match_presentation(disc)
        object.__setattr__(disc, "_table", table)
    logger.debug(
        "D(L) for %s: presentation=%s orders=%s", lattice.name or "lattice", presentation, orders
    )
    return disc


def discriminant_module(
    lattice: Lattice, presentation: Presentation | None = None
) -> FiniteQuadraticModule:
    return discriminant(lattice, presentation).module


def star(v: LatticeVector, presentation: Presentation | None = None) -> DiscElement:
    """Class of v/div(v) in D(L)."""
    require_primitive(v)
    div = divisor(v)
    x = tuple(Fraction(c, div) for c in v.coords)
    return discriminant(v.parent, presentation).element_of(x)


def h_group(e: Sublattice, presentation: Presentation | None = None) -> list[DiscElement]:
    """H_E = (E ⊗ ℚ ∩ L^∨)/E as a subgroup of D(L), sorted by coordinates."""
    require_isotropic_plane(e)
    lattice = e.parent
    disc = discriminant(lattice, presentation)
    snf = smith_normal_form(ImmutableMatrix(lattice.gram * e.basis))
    basis = int_rows(e.basis)
    generators = []
    for j, d in enumerate(snf.invariants):
        t = [Fraction(int(snf.v[i, j]), d) for i in range(e.rank)]
        x = tuple(sum((row[i] * t[i] for i in range(e.rank)), Fraction(0)) for row in basis)
        generators.append(disc.element_of(x))
    return generated_subgroup(generators, disc.module)


# ── Internals ───────────────────────────────────────────────────────


def _gram_of(lattice: Lattice, generators: Sequence[DualVector]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(lattice.pair(g, h)) for h in generators) for g in generators
    )


def _marked_generators(
    lattice: Lattice, *, primary: bool
) -> tuple[tuple[DualVector, ...], tuple[int, ...]]:
    for mark in ("w", "v"):
        if not lattice.has_mark(mark):
            raise MissingMarkError(mark)
    marked: list[tuple[str, DualVector, int]] = []
    for mark in ("w", "v"):
        vec = lattice.mark(mark)
        div = divisor(vec)
        if div > 1:
            marked.append((mark, tuple(Fraction(c, div) for c in vec.coords), div))
    if not primary:
        return tuple(g for _, g, _ in marked), tuple(n for _, _, n in marked)

    parts: list[tuple[int, int, DualVector, int]] = []
    for mark, g, n in marked:
        for prime, k in factorint(n).items():
            power = int(prime) ** int(k)
            scale = n // power
            parts.append((int(prime), 0 if mark == "v" else 1, tuple(scale * c for c in g), power))
    parts.sort(key=lambda part: (part[0], part[1]))
    return tuple(g for _, _, g, _ in parts), tuple(n for _, _, _, n in parts)


def _match_presentation(disc: Discriminant) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Inverse table SNF coordinates → presentation coordinates."""
    images = [disc.snf_coords(g) for g in disc.generators]
    orders = disc._snf_orders
    size = math.prod(orders)
    if disc.module.size != size:
        raise InvariantViolationError(
            "Presentation has the wrong order", {"expected": size, "got": disc.module.size}
        )
    table: dict[tuple[int, ...], tuple[int, ...]] = {}
    for coeffs in itertools.product(*(range(n) for n in disc.module.orders)):
        key = tuple(
            sum(c * img[i] for c, img in zip(coeffs, images)) % d for i, d in enumerate(orders)
        )
        table[key] = coeffs
    if len(table) != size:
        raise InvariantViolationError("Presentation generators do not generate D(L)")
    return table

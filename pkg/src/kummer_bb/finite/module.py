"""Finite quadratic modules: discriminant groups with q mod 2ℤ and b mod ℤ."""

from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from ..config import OracleOptions
from ..errors import InvalidArgumentError
from ..linalg import int_matrix, invariant_factors
from ._parallel import ordered_map

ONE = Fraction(1)
TWO = Fraction(2)


def mod_two(x: Fraction) -> Fraction:
    """Canonical representative in [0, 2)."""
    return x - TWO * math.floor(x / 2)


def mod_one(x: Fraction) -> Fraction:
    """Canonical representative in [0, 1)."""
    return x - math.floor(x)


@dataclass(frozen=True)
class FiniteQuadraticModule:
    """Finite abelian group ⊕ ℤ/nᵢ with a quadratic form on its generators.

    ``gram[i][i]`` is q(gᵢ) mod 2 and ``gram[i][j]`` (i ≠ j) is b(gᵢ, gⱼ)
    mod 1, so q(x) = xᵀ·gram·x mod 2.
    """

    orders: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    _scale: int = field(init=False, repr=False, compare=False)
    _qint: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.orders)
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise InvalidArgumentError("Gram size does not match generator count")
        if any(k < 2 for k in self.orders):
            raise InvalidArgumentError("Generator orders must be at least 2")
        reduced = tuple(
            tuple(
                mod_two(Fraction(self.gram[i][j])) if i == j else mod_one(Fraction(self.gram[i][j]))
                for j in range(n)
            )
            for i in range(n)
        )
        for i in range(n):
            for j in range(n):
                if i != j and reduced[i][j] != reduced[j][i]:
                    raise InvalidArgumentError("Bilinear form is not symmetric")
                if (reduced[i][j] * self.orders[i]).denominator != 1:
                    raise InvalidArgumentError(
                        "Pairing is not well defined on the cyclic factors",
                        {"i": i, "j": j},
                    )
        object.__setattr__(self, "gram", reduced)
        scale = math.lcm(1, *(x.denominator for row in reduced for x in row))
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(
            self, "_qint", tuple(tuple(int(x * scale) for x in row) for row in reduced)
        )

    # ── Construction ────────────────────────────────────────────────

    @classmethod
    def cyclic_sum(cls, *parts: tuple[int, Fraction]) -> FiniteQuadraticModule:
        """Orthogonal sum of cyclic modules given as (order, q(generator))."""
        n = len(parts)
        gram = tuple(
            tuple(parts[i][1] if i == j else Fraction(0) for j in range(n)) for i in range(n)
        )
        return cls(tuple(order for order, _ in parts), gram)

    # ── Group structure ─────────────────────────────────────────────

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors d₁ | d₂ | … (≥ 2) of the underlying group."""
        if not self.orders:
            return ()
        diag = [[self.orders[i] if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]
        return tuple(x for x in invariant_factors(int_matrix(diag)) if x > 1)

    @property
    def zero(self) -> DiscElement:
        return DiscElement((0,) * self.rank, self)

    def element(self, *coords: int) -> DiscElement:
        if len(coords) != self.rank:
            raise InvalidArgumentError(f"Expected {self.rank} coordinates, got {len(coords)}")
        return DiscElement(tuple(c % k for c, k in zip(coords, self.orders)), self)

    def generator(self, i: int) -> DiscElement:
        return self.element(*(int(i == j) for j in range(self.rank)))

    def elements(self) -> Iterator[DiscElement]:
        """All elements in lexicographic coordinate order."""
        for coords in itertools.product(*(range(k) for k in self.orders)):
            yield DiscElement(coords, self)

    # ── Forms ───────────────────────────────────────────────────────

    def q_value(self, x: DiscElement) -> Fraction:
        return Fraction(self._q_scaled(x.coords), self._scale)

    def b_value(self, x: DiscElement, y: DiscElement) -> Fraction:
        total = sum(
            (
                self.gram[i][j] * x.coords[i] * y.coords[j]
                for i in range(self.rank)
                for j in range(self.rank)
            ),
            Fraction(0),
        )
        return mod_one(total)

    def element_order(self, x: DiscElement) -> int:
        order = 1
        for c, k in zip(x.coords, self.orders):
            order = math.lcm(order, k // math.gcd(c, k))
        return order

    def _q_scaled(self, coords: Sequence[int]) -> int:
        """q(x)·scale reduced into [0, 2·scale)."""
        q = self._qint
        n = len(coords)
        total = 0
        for i in range(n):
            ci = coords[i]
            if not ci:
                continue
            row = q[i]
            total += row[i] * ci * ci
            for j in range(i + 1, n):
                if coords[j]:
                    total += 2 * row[j] * ci * coords[j]
        return total % (2 * self._scale)


@dataclass(frozen=True)
class DiscElement:
    """Element of a finite quadratic module, coordinates reduced mod orders."""

    coords: tuple[int, ...]
    module: FiniteQuadraticModule = field(repr=False)

    def __add__(self, other: DiscElement) -> DiscElement:
        return self.module.element(*(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> DiscElement:
        return self.module.element(*(-a for a in self.coords))

    def __sub__(self, other: DiscElement) -> DiscElement:
        return self + (-other)

    def __rmul__(self, k: int) -> DiscElement:
        return self.module.element(*(k * a for a in self.coords))

    @property
    def order(self) -> int:
        return self.module.element_order(self)

    @property
    def q(self) -> Fraction:
        return self.module.q_value(self)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


# ── Operations ──────────────────────────────────────────────────────


def element_order(x: DiscElement) -> int:
    return x.order


def q_value(x: DiscElement) -> Fraction:
    return x.q


def b_value(x: DiscElement, y: DiscElement) -> Fraction:
    return x.module.b_value(x, y)


def isotropic_elements(
    m: FiniteQuadraticModule, options: OracleOptions | None = None
) -> list[DiscElement]:
    """Every x with q(x) ≡ 0 mod 2ℤ, in lexicographic order.

    The scan is split over the first coordinate; chunks may run on
    ``options.threads`` workers and are merged in order.
    """
    options = options or OracleOptions()
    if m.rank == 0:
        return [m.zero]
    rest = [range(k) for k in m.orders[1:]]

    def scan(first: int) -> list[DiscElement]:
        found = []
        for tail in itertools.product(*rest):
            coords = (first, *tail)
            if m._q_scaled(coords) == 0:
                found.append(DiscElement(coords, m))
        return found

    chunks = ordered_map(scan, list(range(m.orders[0])), options.threads)
    return [x for chunk in chunks for x in chunk]


def order_two_profile(m: FiniteQuadraticModule) -> list[tuple[DiscElement, Fraction]]:
    """All elements of order 2 with their q-values."""
    return [(x, x.q) for x in m.elements() if x.order == 2]


def elements_with(
    m: FiniteQuadraticModule, *, order: int | None = None, q: Fraction | None = None
) -> list[DiscElement]:
    """Elements filtered by order and/or q-value mod 2."""
    target = None if q is None else mod_two(q)
    return [
        x
        for x in m.elements()
        if (order is None or x.order == order) and (target is None or x.q == target)
    ]


# ── Isomorphisms ────────────────────────────────────────────────────


Images = tuple[DiscElement, ...]


def find_isomorphism(src: FiniteQuadraticModule, dst: FiniteQuadraticModule) -> Images | None:
    """Images of ``src`` generators defining an isometry onto ``dst``."""
    return next(_isometries(src, dst), None)


def automorphisms(m: FiniteQuadraticModule) -> list[Images]:
    """All isometries of ``m`` onto itself, as generator images."""
    return list(_isometries(m, m))


def apply_map(images: Images, x: DiscElement) -> DiscElement:
    result = images[0].module.zero if images else x
    for c, y in zip(x.coords, images):
        result = result + c * y
    return result


def _isometries(src: FiniteQuadraticModule, dst: FiniteQuadraticModule) -> Iterator[Images]:
    if src.size != dst.size:
        return
    if src.rank == 0:
        yield ()
        return
    candidates = [
        [
            y
            for y in dst.elements()
            if y.order == src.orders[i] and y.q == src.gram[i][i]
        ]
        for i in range(src.rank)
    ]

    def extend(chosen: list[DiscElement]) -> Iterator[Images]:
        i = len(chosen)
        if i == src.rank:
            images = tuple(chosen)
            if _is_injective(src, images):
                yield images
            return
        for y in candidates[i]:
            if all(dst.b_value(chosen[j], y) == src.gram[j][i] for j in range(i)):
                chosen.append(y)
                yield from extend(chosen)
                chosen.pop()

    yield from extend([])


def _is_injective(src: FiniteQuadraticModule, images: Images) -> bool:
    seen = {apply_map(images, x).coords for x in src.elements()}
    return len(seen) == src.size


def generated_subgroup(generators: Sequence[DiscElement], module: FiniteQuadraticModule) -> list[DiscElement]:
    """Elements of the subgroup generated by ``generators``, sorted by coordinates."""
    seen = {module.zero}
    frontier = [module.zero]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x + g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda x: x.coords)

"""Isometries of lattices, reflections and real spinor norms."""

from __future__ import annotations

import hashlib
import itertools
import json
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from sympy import ImmutableMatrix

from ..config import Presentation, logger
from ..errors import (
    InvalidArgumentError,
    InvariantViolationError,
    NonIntegralError,
    NotIsotropicError,
    ReductionError,
)
from ..finite import DiscElement
from ..linalg import (
    FracRows,
    RatMatrix,
    diagonalize,
    frac_rows,
    identity,
    is_integral,
    rat_matrix,
)
from ..lattice import Lattice, LatticeVector, discriminant, divisor

Rational = Fraction | int


@dataclass(frozen=True)
class Isometry:
    """Matrix of an isometry of L ⊗ ℚ acting on the basis of ``parent``.

    Columns are the images of the basis vectors; ᵀg·G·g = G is checked on
    construction.
    """

    matrix: RatMatrix
    parent: Lattice = field(repr=False)

    def __post_init__(self) -> None:
        n = self.parent.rank
        if self.matrix.shape != (n, n):
            raise InvalidArgumentError(f"Expected a {n}×{n} matrix, got {self.matrix.shape}")
        if self.matrix.T * self.parent.gram * self.matrix != self.parent.gram:
            raise InvariantViolationError("Matrix does not preserve the Gram matrix")

    @classmethod
    def identity(cls, lattice: Lattice) -> Isometry:
        return cls(identity(lattice.rank), lattice)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]], lattice: Lattice) -> Isometry:
        return cls(rat_matrix(rows), lattice)

    @cached_property
    def rows(self) -> FracRows:
        return frac_rows(self.matrix)

    @property
    def is_integral(self) -> bool:
        return is_integral(self.matrix)

    def require_integral(self) -> None:
        if not self.is_integral:
            raise NonIntegralError("Isometry does not preserve the lattice")

    def __matmul__(self, other: Isometry) -> Isometry:
        if other.parent != self.parent:
            raise InvalidArgumentError("Isometries of different lattices")
        return Isometry(ImmutableMatrix(self.matrix * other.matrix), self.parent)

    def inverse(self) -> Isometry:
        # g⁻¹ = G⁻¹·ᵀg·G
        gram = self.parent.gram
        return Isometry(ImmutableMatrix(gram.inv() * self.matrix.T * gram), self.parent)

    def apply(self, x: Sequence[Rational]) -> tuple[Fraction, ...]:
        return tuple(sum((a * b for a, b in zip(row, x)), Fraction(0)) for row in self.rows)

    def __call__(self, v: LatticeVector) -> LatticeVector:
        self.require_integral()
        image = self.apply(v.coords)
        return v.parent.vector(*(int(c) for c in image))

    @property
    def is_identity(self) -> bool:
        return bool(self.matrix == identity(self.parent.rank))

    def to_dict(self) -> dict[str, object]:
        return {
            "matrix": [[str(c) for c in row] for row in self.rows],
            "lattice": lattice_digest(self.parent),
        }


@dataclass(frozen=True)
class ReflectionWord:
    """σ_{w₁} ∘ … ∘ σ_{w_m}, vectors in parent coordinates over ℚ."""

    vectors: tuple[tuple[Fraction, ...], ...]
    parent: Lattice = field(repr=False)

    def __len__(self) -> int:
        return len(self.vectors)

    def composite(self) -> Isometry:
        result = Isometry.identity(self.parent)
        for w in self.vectors:
            result = result @ reflection(w, self.parent)
        return result


def lattice_digest(lattice: Lattice) -> str:
    payload = json.dumps(lattice.to_dict(), sort_keys=True).encode()
    return hashlib.sha256(payload).hexdigest()


def negation(lattice: Lattice) -> Isometry:
    return Isometry(ImmutableMatrix(-identity(lattice.rank)), lattice)


# ── Reflections and spinor norm ─────────────────────────────────────


def reflection(w: Sequence[Rational] | LatticeVector, lattice: Lattice | None = None) -> Isometry:
    """σ_w: x ↦ x − 2(x,w)/(w,w)·w. May be non-integral; see ``is_integral``."""
    if isinstance(w, LatticeVector):
        lattice = lattice or w.parent
        w = w.coords
    if lattice is None:
        raise InvalidArgumentError("Reflection needs a lattice")
    return Isometry.from_rows(_reflection_rows(lattice, w), lattice)


def _reflection_rows(lattice: Lattice, w: Sequence[Rational]) -> list[list[Fraction]]:
    norm = Fraction(lattice.pair(w, w))
    if norm == 0:
        raise NotIsotropicError("Reflection in an isotropic vector", tuple(str(c) for c in w))
    gw = lattice.pairing_vector(w)
    n = lattice.rank
    return [
        [Fraction(int(i == j)) - 2 * Fraction(gw[j]) / norm * w[i] for j in range(n)]
        for i in range(n)
    ]


def decompose_reflections(g: Isometry) -> ReflectionWord:
    """Reflection word for g over ℚ, of length at most rank + 2.

    Each greedy step reflects in an anisotropic (h − 1)x, which fixes x and
    everything h already fixes, and picks x so that the image of the
    remainder minus 1 is not totally isotropic. If that image is totally
    isotropic (then det h = 1) one reflection in an anisotropic vector is
    spent first; the remainder has det −1 and the greedy step applies.
    """
    lattice = g.parent
    n = lattice.rank
    h = [list(row) for row in g.rows]
    word: list[tuple[Fraction, ...]] = []

    while not _is_identity(h):
        if len(word) >= n + 2:
            raise ReductionError("Reflection word exceeded its length cap", len(word))
        if _image_is_isotropic(lattice, h):
            w = next(
                tuple(Fraction(c) for c in x)
                for x in _small_vectors(n)
                if lattice.pair(x, x) != 0
            )
        else:
            w = _greedy_vector(lattice, h)
        word.append(w)
        h = _reflect_left(lattice, w, h)

    logger.debug("Reflection word of length %d", len(word))
    return ReflectionWord(tuple(word), lattice)


def spinor_norm(g: Isometry) -> int:
    """Real spinor norm: ∏ sign(−(wᵢ,wᵢ)/2) over a reflection word."""
    word = decompose_reflections(g)
    sign = 1
    for w in word.vectors:
        if g.parent.pair(w, w) > 0:
            sign = -sign
    return sign


def orientation_sign(g: Isometry) -> int:
    """Spinor norm as the orientation change of g on a positive definite subspace."""
    lattice = g.parent
    diag = diagonalize(lattice.gram)
    positive = [(diag.column(j), x) for j, x in enumerate(diag.diagonal) if x > 0]
    if not positive:
        return 1
    images = [g.apply(p) for p, _ in positive]
    proj = [
        [Fraction(lattice.pair(image, p)) / norm for image in images]
        for p, norm in positive
    ]
    det = rat_matrix(proj).det()
    if det == 0:
        raise InvariantViolationError("Projection onto the positive subspace is singular")
    return 1 if det > 0 else -1


def _reflect_left(
    lattice: Lattice, w: Sequence[Fraction], h: list[list[Fraction]]
) -> list[list[Fraction]]:
    s = _reflection_rows(lattice, w)
    n = len(h)
    return [
        [sum((s[i][k] * h[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def _is_identity(h: list[list[Fraction]]) -> bool:
    return all(h[i][j] == int(i == j) for i in range(len(h)) for j in range(len(h)))


def _minus_one_columns(h: list[list[Fraction]]) -> list[tuple[Fraction, ...]]:
    n = len(h)
    return [tuple(h[k][j] - int(k == j) for k in range(n)) for j in range(n)]


def _image_is_isotropic(lattice: Lattice, h: list[list[Fraction]]) -> bool:
    """(h − 1)L ⊗ ℚ is totally isotropic."""
    cols = _minus_one_columns(h)
    return all(
        lattice.pair(cols[i], cols[j]) == 0 for i in range(len(cols)) for j in range(i, len(cols))
    )


def _greedy_vector(lattice: Lattice, h: list[list[Fraction]]) -> tuple[Fraction, ...]:
    """Anisotropic w = (h − 1)x whose reflection leaves a remainder that is
    the identity or has a non-isotropic image of h − 1."""
    cols = _minus_one_columns(h)
    n = len(h)
    fallback: tuple[Fraction, ...] | None = None
    for x in _small_vectors(n):
        w = tuple(
            sum((c * cols[j][k] for j, c in enumerate(x) if c), Fraction(0)) for k in range(n)
        )
        if lattice.pair(w, w) == 0:
            continue
        rest = _reflect_left(lattice, w, h)
        if _is_identity(rest) or not _image_is_isotropic(lattice, rest):
            return w
        fallback = fallback or w
    if fallback is None:
        raise ReductionError("Image of h − 1 has no anisotropic vector")
    logger.debug("No greedy vector keeps the remainder unblocked; using %s", fallback)
    return fallback


@lru_cache(maxsize=16)
def _small_vectors(n: int, bound: int = 2) -> tuple[tuple[int, ...], ...]:
    """Nonzero vectors with entries in [−bound, bound], by ℓ¹ norm; basis vectors first."""
    vectors = [v for v in itertools.product(range(-bound, bound + 1), repeat=n) if any(v)]
    vectors.sort(
        key=lambda v: (sum(map(abs, v)), tuple(-abs(c) for c in v), tuple(c < 0 for c in v))
    )
    return tuple(vectors)


# ── Discriminant action and membership ──────────────────────────────


def discriminant_action(
    g: Isometry, presentation: Presentation | None = None
) -> tuple[DiscElement, ...]:
    """Images of the generators of D(L) under g."""
    g.require_integral()
    disc = discriminant(g.parent, presentation)
    return tuple(disc.element_of(g.apply(gen)) for gen in disc.generators)


def in_stable(g: Isometry) -> bool:
    """g acts trivially on D(L)."""
    disc = discriminant(g.parent, "snf")
    images = discriminant_action(g, "snf")
    return all(img == disc.module.generator(i) for i, img in enumerate(images))


def in_Oplus(g: Isometry) -> bool:
    return spinor_norm(g) == 1


def in_gamma(g: Isometry) -> bool:
    """g ∈ O⁺(L) and g·v̲* ≡ v̲* mod L."""
    lattice = g.parent
    v = lattice.mark("v")
    g.require_integral()
    div = divisor(v)
    vstar = tuple(Fraction(c, div) for c in v.coords)
    disc = discriminant(lattice, "snf")
    if disc.element_of(g.apply(vstar)) != disc.element_of(vstar):
        return False
    return in_Oplus(g)

"""Boundary points of F_L(Γ) for L = L_{2p²}: orbits of primitive isotropic vectors.

The class v* = v/div(v) in D(L) ≅ C₆ ⊕ C_{2p²} is, up to sign, one of

* (0, 0)                  family 1, div 1
* (3, p²)                 family 2, div 2
* (0, 2kp),  k ≢ 0 mod p   family p, div p
* (3, (2k+1)p), p ∤ 2k+1   family 2p, div 2p
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..config import logger
from ..errors import InvalidArgumentError, InvariantViolationError, NotIsotropicError
from ..finite import DiscElement
from ..isometry import check_prime
from ..lattice import Lattice, LatticeVector, divisor, make_L2d, require_primitive, star

FAMILY_LABELS = ("1", "2", "p", "2p")


@dataclass(frozen=True)
class BoundaryPoint:
    """One Γ-orbit of isotropic lines, labelled by family and k."""

    family: str
    k: int | None
    representative: LatticeVector
    star_class: DiscElement
    note: str | None = field(default=None, compare=False)
    name: str | None = field(default=None, compare=False)

    @property
    def divisor(self) -> int:
        return divisor(self.representative)

    @property
    def id(self) -> str:
        if self.name is not None:
            return self.name
        if self.k is None:
            return f"p{self.family}"
        return f"p{self.family}({self.k})"


def family_divisor(family: str, p: int) -> int:
    return {"1": 1, "2": 2, "p": p, "2p": 2 * p}[family]


def lattice_prime(lattice: Lattice) -> int:
    """p for L = L_{2p²}, read from the norm of v̲."""
    d = -lattice.mark("v").norm // 2
    p = math.isqrt(d)
    if p * p != d:
        raise InvalidArgumentError(f"{lattice.name or 'Lattice'} is not of the form L_(2p²)")
    check_prime(p)
    return p


def classify_isotropic_vector(v: LatticeVector) -> BoundaryPoint:
    """Family and canonical k of a primitive isotropic v ∈ L_{2p²}; ±v agree."""
    require_primitive(v)
    if v.norm != 0:
        raise NotIsotropicError("Vector is not isotropic", v.coords)
    p = lattice_prime(v.parent)
    cls = star(v, "marked")
    a, b = cls.coords
    order = cls.order
    if order == 1:
        return BoundaryPoint("1", None, v, cls)
    if order == 2:
        return BoundaryPoint("2", None, v, cls)
    if order == p:
        k = b // (2 * p)
        return BoundaryPoint("p", min(k, p - k), v, cls)
    if order == 2 * p:
        k = (b // p - 1) // 2
        return BoundaryPoint("2p", min(k, p - 1 - k), v, cls)
    raise InvariantViolationError(
        "Star class has an order outside {1, 2, p, 2p}", {"class": (a, b), "order": order}
    )


def boundary_points(p: int) -> list[BoundaryPoint]:
    """All 2 + p + (p−1)/2 points, ordered by family then k."""
    check_prime(p)
    lattice = make_L2d(p * p)
    points: list[BoundaryPoint] = []

    def add(family: str, k: int | None, coords: tuple[int, ...], note: str | None = None) -> None:
        v = lattice.vector(*coords)
        if v.norm != 0:
            raise InvariantViolationError("Representative is not isotropic", coords)
        require_primitive(v)
        point = BoundaryPoint(family, k, v, star(v, "marked"), note)
        expected = 1 if note else family_divisor(family, p)
        if divisor(v) != expected:
            raise InvariantViolationError(
                "Representative has the wrong divisor", {"id": point.id, "divisor": divisor(v)}
            )
        points.append(point)

    add("1", None, (1, 0, 0, 0, 0, 0))
    add("2", None, (2, 0, 2, (3 + p * p) // 2, 1, 1))
    add("p", 0, (0, 0, 1, 0, 0, 0), note="trivial class; same Eichler invariant as p1")
    for k in range(1, p):
        add("p", k, (p, 0, p, p * k * k, 0, k))
    for k in range((p - 1) // 2):
        j = 2 * k + 1
        add("2p", k, (2 * p, 0, 2 * p, 2 * p * ((3 + j * j) // 4), p, j))

    logger.debug("Boundary points for p=%d: %d", p, len(points))
    return points

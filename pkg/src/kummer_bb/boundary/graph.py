"""Incidence graphs of boundary curves and points, and curve count bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

from ..config import Ambient, logger
from ..errors import InvalidArgumentError, InvariantViolationError
from ..finite import class_number, class_number_by_reduction, class_number_from_conductor
from ..isometry import check_prime
from ..lattice import LatticeVector, Sublattice, divisor, h_group, make_L2d, star
from .groups import CurveGroup, curve_group
from .normal_form import NormalForm, rank2_normal_form, rank2_representatives, rank2_type
from .points import FAMILY_LABELS, BoundaryPoint, boundary_points, family_divisor, lattice_prime

OrbitLabel = Literal["trivial", "C2"]


@dataclass(frozen=True)
class BoundaryCurve:
    id: str
    a: int
    representative: Sublattice
    group: CurveGroup
    normal_form: NormalForm
    count_bound: int | None = None

    @property
    def type_label(self) -> str:
        return f"type {self.a} / {self.group.unicode_name}"


@dataclass(frozen=True)
class BoundaryGraph:
    ambient: Ambient
    p: int | None
    points: tuple[BoundaryPoint, ...]
    curves: tuple[BoundaryCurve, ...]
    edges: tuple[tuple[str, str], ...]
    notes: tuple[str, ...] = field(default=(), compare=False)

    def degree(self, curve_id: str) -> int:
        return sum(1 for c, _ in self.edges if c == curve_id)


def incidence(a: int, point: BoundaryPoint, p: int) -> bool:
    """C_a contains the point exactly when its family divides a."""
    return a % family_divisor(point.family, p) == 0


def families_on_curve(e: Sublattice, box: int | None = None) -> set[str]:
    """Families of the star classes of primitive x·v₁ + y·v₂ ∈ E."""
    p = lattice_prime(e.parent)
    v1, v2 = e.vectors
    box = box if box is not None else 2 * rank2_type(e)
    orders: set[int] = set()
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if math.gcd(x, y) != 1:
                continue
            orders.add(star(x * v1 + y * v2, "marked").order)
    names = {1: "1", 2: "2", p: "p", 2 * p: "2p"}
    unknown = orders - names.keys()
    if unknown:
        raise InvariantViolationError("Star class order outside {1, 2, p, 2p}", sorted(unknown))
    return {names[o] for o in orders}


# ── Counting bounds ─────────────────────────────────────────────────


@dataclass(frozen=True)
class CurveBound:
    a: int
    label: str
    literal: int
    alternative: int
    derived: int
    discriminant: int
    class_number: int


def _checked_class_number(d: int) -> int:
    h = class_number(d)
    second = class_number_by_reduction(d)
    third = class_number_from_conductor(d)
    if not h == second == third:
        raise InvariantViolationError(
            "Class number oracles disagree", {"D": d, "reduced": h, "reduction": second, "conductor": third}
        )
    return h


def curve_count_bounds(p: int) -> list[CurveBound]:
    """Per type: the stated bound, the a = p reading of 8a and 4a, and the
    product 4·h(−48p²/a²)·#C·#d over normal-form choices."""
    check_prime(p)
    bounds = []
    for label, a in (("1", 1), ("2", 2), ("p", p), ("2p", 2 * p)):
        disc = -48 * p * p // (a * a)
        h = _checked_class_number(disc)
        c_choices = 16 if a == 2 else 1
        derived = 4 * h * c_choices * a
        literal = {
            "1": 4 * _checked_class_number(-48 * p * p),
            "2": 128 * _checked_class_number(-12 * p * p),
            "p": 8 * p,
            "2p": 4 * (2 * p),
        }[label]
        alternative = {"p": 8 * p, "2p": 4 * p}.get(label, literal)
        bounds.append(CurveBound(a, label, literal, alternative, derived, disc, h))
    return bounds


# ── Graphs ──────────────────────────────────────────────────────────


def build_boundary_graph(p: int) -> BoundaryGraph:
    check_prime(p)
    points = boundary_points(p)
    bounds = {b.a: b.literal for b in curve_count_bounds(p)}
    labels = {1: "1", 2: "2", p: "p", 2 * p: "2p"}
    curves = []
    edges = []
    for a, e in rank2_representatives(p):
        curve = BoundaryCurve(
            f"C{labels[a]}", a, e, curve_group(a), rank2_normal_form(e), bounds[a]
        )
        expected = {family for family in FAMILY_LABELS if a % family_divisor(family, p) == 0}
        if families_on_curve(e) != expected:
            raise InvariantViolationError(
                "Incidence scan disagrees with divisibility", {"a": a, "families": sorted(expected)}
            )
        curves.append(curve)
        edges.extend((curve.id, point.id) for point in points if incidence(a, point, p))
    logger.debug("Boundary graph p=%d: %d points, %d curves, %d edges", p, len(points), len(curves), len(edges))
    return BoundaryGraph(
        "L2p2",
        p,
        tuple(points),
        tuple(curves),
        tuple(edges),
        ("curve nodes stand for every curve of their type; count_bound is an upper bound",),
    )


def _l2_point(pid: str, v: LatticeVector) -> BoundaryPoint:
    family = "1" if divisor(v) == 1 else "2"
    return BoundaryPoint(family, None, v, star(v, "primary"), name=pid)


def build_boundary_graph_L2() -> BoundaryGraph:
    """P₁ - C₁ - P₂ - C₂ - P₃ with incidences by containment."""
    lattice = make_L2d(1)
    e1, e2, f2, v, w = (lattice.mark(name) for name in ("e1", "e2", "f2", "v", "w"))
    l_vec = 2 * e2 + 2 * f2 + v + w
    points = {"P1": e2, "P2": e1, "P3": l_vec}
    planes = {"C1": Sublattice.spanned_by(e1, e2), "C2": Sublattice.spanned_by(e1, l_vec)}

    curves = []
    for cid, e in planes.items():
        a = rank2_type(e)
        curves.append(BoundaryCurve(cid, a, e, curve_group(a), rank2_normal_form(e), 1))
    edges = tuple(
        (cid, pid) for cid, e in planes.items() for pid, x in points.items() if e.contains(x)
    )
    boundary = tuple(_l2_point(pid, x) for pid, x in points.items())
    return BoundaryGraph(
        "L2",
        None,
        boundary,
        tuple(curves),
        edges,
        ("P1 and P2 share the trivial star class",),
    )


def classify_rank2_L2(e: Sublattice) -> tuple[OrbitLabel, NormalForm]:
    """Orbit of E ⊂ L₂ by H_E, with the normal form as witness."""
    if e.parent != make_L2d(1):
        raise InvalidArgumentError("Sublattice is not in L_2")
    h = h_group(e, "primary")
    nf = rank2_normal_form(e)
    reduced = (-int(nf.B[0, 0]), -int(nf.B[0, 1]), -int(nf.B[1, 1]))
    if len(h) == 1:
        if nf.a != 1 or reduced != (2, 0, 6) or nf.d != 0:
            raise InvariantViolationError("Trivial H_E without the type 1 normal form", nf.to_dict())
        return "trivial", nf
    if len(h) != 2 or nf.a != 2 or reduced != (2, 1, 2) or nf.d != 2:
        raise InvariantViolationError("H_E of order 2 without the type 2 normal form", nf.to_dict())
    return "C2", nf

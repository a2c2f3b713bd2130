"""Report models for every command; their JSON schemas ship under ``schemas/``."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, ConfigDict


class Report(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


# ── Boundary graph ──────────────────────────────────────────────────


class GraphPoint(Report):
    id: str
    family: str
    k: int | None
    rep: list[int]


class GroupModel(Report):
    name: str
    level: int
    index: int
    cusps: int


class GraphCurve(Report):
    id: str
    type_a: int
    group: GroupModel
    count_bound: int | None


class GraphEdge(Report):
    curve: str
    point: str


class GraphReport(Report):
    p: int | None
    ambient: Literal["L2", "L2p2"]
    points: list[GraphPoint]
    curves: list[GraphCurve]
    edges: list[GraphEdge]


# ── Points and curves ───────────────────────────────────────────────


class PointDetail(Report):
    id: str
    family: str
    k: int | None
    divisor: int
    rep: list[int]
    star_class: list[int]
    note: str | None = None


class PointsReport(Report):
    p: int
    count: int
    points: list[PointDetail]


class NormalFormModel(Report):
    a: int
    d: int
    A: list[list[int]]
    B: list[list[int]]
    C: list[list[int]]
    D: list[list[int]]
    notes: list[str]


class CurveDetail(Report):
    id: str
    type_a: int
    basis: list[list[int]]
    group: GroupModel
    count_bound: int | None
    normal_form: NormalFormModel


class CurvesReport(Report):
    p: int
    curves: list[CurveDetail]


# ── Numbers ─────────────────────────────────────────────────────────


class BoundModel(Report):
    type: str
    a: int
    literal: int
    alternative: int
    derived: int
    discriminant: int
    class_number: int


class BoundsReport(Report):
    p: int
    bounds: list[BoundModel]


class IndexBoundReport(Report):
    p: int
    bound: int
    refined: int


class ClassNumberReport(Report):
    discriminant: int
    class_number: int
    by_reduction: int
    from_conductor: int
    forms: list[list[int]]


class FqmReport(Report):
    ambient: Literal["L2", "L2p2"]
    p: int | None
    presentation: Literal["snf", "marked", "primary"]
    orders: list[int]
    size: int
    q_generators: list[str]
    isotropic_count: int
    isotropic: list[list[int]]


# ── Verification ────────────────────────────────────────────────────


class CheckResult(Report):
    name: str
    passed: bool
    count: int
    detail: str | None = None


class VerifyReport(Report):
    suite: str
    seed: int
    passed: bool
    checks: list[CheckResult]


SCHEMAS: dict[str, type[Report]] = {
    "graph": GraphReport,
    "points": PointsReport,
    "curves": CurvesReport,
    "bounds": BoundsReport,
    "index_bound": IndexBoundReport,
    "classnum": ClassNumberReport,
    "fqm": FqmReport,
    "verify": VerifyReport,
}

"""Conversion of boundary objects into reports, and JSON / DOT / text rendering."""

from __future__ import annotations

import json
from collections.abc import Iterable

from ..boundary import BoundaryCurve, BoundaryGraph, BoundaryPoint, CurveBound, CurveGroup, NormalForm
from ..config import OutputFormat
from ..errors import InvalidArgumentError
from ..linalg import IntMatrix, int_rows
from .models import (
    BoundModel,
    CurveDetail,
    GraphCurve,
    GraphEdge,
    GraphPoint,
    GraphReport,
    GroupModel,
    NormalFormModel,
    PointDetail,
    Report,
    VerifyReport,
)


def group_model(group: CurveGroup) -> GroupModel:
    return GroupModel(name=group.name, level=group.level, index=group.index, cusps=group.cusps)


def graph_report(graph: BoundaryGraph) -> GraphReport:
    return GraphReport(
        p=graph.p,
        ambient=graph.ambient,
        points=[
            GraphPoint(id=pt.id, family=pt.family, k=pt.k, rep=list(pt.representative.coords))
            for pt in graph.points
        ],
        curves=[
            GraphCurve(id=c.id, type_a=c.a, group=group_model(c.group), count_bound=c.count_bound)
            for c in graph.curves
        ],
        edges=[GraphEdge(curve=c, point=pt) for c, pt in graph.edges],
    )


def point_detail(point: BoundaryPoint) -> PointDetail:
    return PointDetail(
        id=point.id,
        family=point.family,
        k=point.k,
        divisor=point.divisor,
        rep=list(point.representative.coords),
        star_class=list(point.star_class.coords),
        note=point.note,
    )


def _rows(m: IntMatrix) -> list[list[int]]:
    return [list(row) for row in int_rows(m)]


def normal_form_model(nf: NormalForm) -> NormalFormModel:
    return NormalFormModel(
        a=nf.a,
        d=nf.d,
        A=_rows(nf.A),
        B=_rows(nf.B),
        C=_rows(nf.C),
        D=_rows(nf.D),
        notes=list(nf.notes),
    )


def curve_detail(curve: BoundaryCurve) -> CurveDetail:
    return CurveDetail(
        id=curve.id,
        type_a=curve.a,
        basis=[list(v.coords) for v in curve.representative.vectors],
        group=group_model(curve.group),
        count_bound=curve.count_bound,
        normal_form=normal_form_model(curve.normal_form),
    )


def bound_model(bound: CurveBound) -> BoundModel:
    return BoundModel(
        type=bound.label,
        a=bound.a,
        literal=bound.literal,
        alternative=bound.alternative,
        derived=bound.derived,
        discriminant=bound.discriminant,
        class_number=bound.class_number,
    )


# ── Rendering ───────────────────────────────────────────────────────


def to_json(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json"), indent=2) + "\n"


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: BoundaryGraph) -> str:
    """Undirected DOT graph: points as filled circles, curves as boxes."""
    name = graph.ambient if graph.p is None else f"{graph.ambient}_p{graph.p}"
    lines = [f"graph {_quote(name)} {{"]
    for pt in graph.points:
        lines.append(f"  {_quote(pt.id)} [shape=circle, style=filled, label={_quote(pt.id)}];")
    for curve in graph.curves:
        lines.append(f"  {_quote(curve.id)} [shape=box, label={_quote(curve.type_label)}];")
    for c, pt in graph.edges:
        lines.append(f"  {_quote(c)} -- {_quote(pt)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_text(graph: BoundaryGraph) -> str:
    header = "L_2" if graph.p is None else f"L_(2p²), p = {graph.p}"
    lines = [f"Boundary of {header}: {len(graph.points)} points, {len(graph.curves)} curve types"]
    lines.append("points:")
    for pt in graph.points:
        k = "" if pt.k is None else f" k={pt.k}"
        lines.append(f"  {pt.id:<8} family {pt.family}{k} rep {pt.representative.coords}")
    lines.append("curves:")
    for curve in graph.curves:
        bound = "" if curve.count_bound is None else f", at most {curve.count_bound}"
        points = ", ".join(pt for c, pt in graph.edges if c == curve.id)
        lines.append(f"  {curve.id:<4} {curve.type_label}{bound}: {points}")
    lines.extend(f"note: {note}" for note in graph.notes)
    return "\n".join(lines) + "\n"


def verify_text(report: VerifyReport) -> str:
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        detail = f" ({check.detail})" if check.detail else ""
        lines.append(f"{status} {check.name}: {check.count}{detail}")
    lines.append(f"{'PASS' if report.passed else 'FAIL'} {report.suite} seed={report.seed}")
    return "\n".join(lines) + "\n"


def _flatten(value: object, prefix: str) -> Iterable[str]:
    if isinstance(value, dict):
        for key, item in value.items():
            yield from _flatten(item, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, item in enumerate(value):
            yield from _flatten(item, f"{prefix}[{i}]")
    else:
        yield f"{prefix}: {json.dumps(value, ensure_ascii=False)}"


def report_text(report: Report) -> str:
    if isinstance(report, VerifyReport):
        return verify_text(report)
    return "\n".join(_flatten(report.model_dump(mode="json"), "")) + "\n"


def render(report: Report, fmt: OutputFormat, graph: BoundaryGraph | None = None) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "text":
        return graph_text(graph) if graph is not None else report_text(report)
    if graph is None:
        raise InvalidArgumentError("DOT output is only available for boundary graphs")
    return to_dot(graph)

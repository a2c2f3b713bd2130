"""``kbb`` command line: boundary graphs, reports and verification suites.

Exit codes: 0 success, 2 argument error, 3 failed check or internal
invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable
from pathlib import Path

from ..boundary import (
    BoundaryGraph,
    boundary_points,
    build_boundary_graph,
    build_boundary_graph_L2,
    curve_count_bounds,
)
from ..config import DEFAULT_FORMAT, DEFAULT_SEED, OracleOptions, Presentation, RunConfig, logger
from ..errors import InvalidArgumentError, KummerBBError
from ..finite import (
    class_number,
    class_number_by_reduction,
    class_number_from_conductor,
    isotropic_elements,
    reduced_forms,
)
from ..isometry import check_prime, index_bound, index_bound_refined
from ..lattice import discriminant, make_L2d
from .emit import bound_model, curve_detail, graph_report, point_detail, render
from .models import (
    SCHEMAS,
    BoundsReport,
    ClassNumberReport,
    CurvesReport,
    FqmReport,
    IndexBoundReport,
    PointsReport,
    Report,
)
from .verify import SUITES, VerifyParams, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

Result = tuple[Report, BoundaryGraph | None]


def _require_p(config: RunConfig) -> int:
    if config.p is None:
        raise InvalidArgumentError("--p is required")
    check_prime(config.p)
    return config.p


# ── Commands ────────────────────────────────────────────────────────


def cmd_boundary(config: RunConfig) -> Result:
    graph = build_boundary_graph_L2() if config.l2 else build_boundary_graph(_require_p(config))
    return graph_report(graph), graph


def cmd_points(config: RunConfig) -> Result:
    p = _require_p(config)
    points = boundary_points(p)
    return PointsReport(p=p, count=len(points), points=[point_detail(pt) for pt in points]), None


def cmd_curves(config: RunConfig) -> Result:
    p = _require_p(config)
    graph = build_boundary_graph(p)
    return CurvesReport(p=p, curves=[curve_detail(c) for c in graph.curves]), None


def cmd_bounds(config: RunConfig) -> Result:
    p = _require_p(config)
    return BoundsReport(p=p, bounds=[bound_model(b) for b in curve_count_bounds(p)]), None


def cmd_index_bound(config: RunConfig) -> Result:
    p = _require_p(config)
    return IndexBoundReport(p=p, bound=index_bound(p), refined=index_bound_refined(p)), None


def cmd_classnum(config: RunConfig, d: int) -> Result:
    h = class_number(d)
    return (
        ClassNumberReport(
            discriminant=d,
            class_number=h,
            by_reduction=class_number_by_reduction(d),
            from_conductor=class_number_from_conductor(d),
            forms=[[f.a, f.b, f.c] for f in reduced_forms(d)],
        ),
        None,
    )


def cmd_fqm(config: RunConfig, presentation: Presentation | None) -> Result:
    if config.l2:
        lattice, p = make_L2d(1), None
    else:
        p = _require_p(config)
        lattice = make_L2d(p * p)
    disc = discriminant(lattice, presentation)
    module = disc.module
    isotropic = isotropic_elements(module, config.options)
    return (
        FqmReport(
            ambient="L2" if config.l2 else "L2p2",
            p=p,
            presentation=disc.presentation,
            orders=list(module.orders),
            size=module.size,
            q_generators=[str(module.gram[i][i]) for i in range(module.rank)],
            isotropic_count=len(isotropic),
            isotropic=[list(x.coords) for x in isotropic],
        ),
        None,
    )


def cmd_verify(config: RunConfig, suite: str, dim: int, samples: int | None) -> Result:
    params = VerifyParams(p=config.p, seed=config.seed, dim=dim, samples=samples, options=config.options)
    return run_suite(suite, params), None


def cmd_schemas(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    for name, model in SCHEMAS.items():
        schema = json.dumps(model.model_json_schema(), indent=2, sort_keys=True) + "\n"
        (out / f"{name}.schema.json").write_text(schema, encoding="utf-8")
        logger.info("Wrote %s.schema.json", name)


# ── Parsing ─────────────────────────────────────────────────────────


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="prime p > 3 of L_(2p²)")
    common.add_argument("--l2", action="store_true", help="work in L_2 instead of L_(2p²)")
    common.add_argument("--format", choices=("json", "dot", "text"), default=DEFAULT_FORMAT)
    common.add_argument("--out", type=Path, help="write output to this path instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="kbb",
        description="Boundary of the Baily-Borel compactification of F_L(Γ) for L_(2p²) and L_2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("boundary", parents=[common], help="incidence graph of boundary curves and points")
    sub.add_parser("points", parents=[common], help="boundary points with representatives")
    sub.add_parser("curves", parents=[common], help="one curve per type with its normal form")
    sub.add_parser("bounds", parents=[common], help="upper bounds on curve counts per type")
    sub.add_parser("index-bound", parents=[common], help="bound on |Γ_2 : Γ_(2p²)|")
    classnum = sub.add_parser("classnum", parents=[common], help="class number h(D)")
    classnum.add_argument("D", type=int, help="negative discriminant")
    fqm = sub.add_parser("fqm", parents=[common], help="discriminant form of L_(2p²) or L_2")
    fqm.add_argument("--presentation", choices=("snf", "marked", "primary"))
    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=(*SUITES, "all"))
    verify.add_argument("--dim", type=int, default=3, help="largest dimension for the orders suite")
    verify.add_argument("--samples", type=int, help="cap on random samples per check")
    schemas = sub.add_parser("schemas", help="write the JSON schema files")
    schemas.add_argument("--out", type=Path, default=Path("schemas"))
    schemas.add_argument("-v", "--verbose", action="store_true")
    return parser


def _dispatch(args: argparse.Namespace, config: RunConfig) -> Result:
    commands: dict[str, Callable[[], Result]] = {
        "boundary": lambda: cmd_boundary(config),
        "points": lambda: cmd_points(config),
        "curves": lambda: cmd_curves(config),
        "bounds": lambda: cmd_bounds(config),
        "index-bound": lambda: cmd_index_bound(config),
        "classnum": lambda: cmd_classnum(config, args.D),
        "fqm": lambda: cmd_fqm(config, args.presentation),
        "verify": lambda: cmd_verify(config, args.suite, args.dim, args.samples),
    }
    return commands[args.command]()


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s %(name)s: %(message)s")

    if args.command == "schemas":
        cmd_schemas(args.out)
        return EXIT_OK

    config = RunConfig(
        command=args.command,
        p=args.p,
        l2=args.l2,
        out=args.out,
        format=args.format,
        seed=args.seed,
        options=OracleOptions.from_env(),
    )
    try:
        report, graph = _dispatch(args, config)
        text = render(report, config.format, graph)
    except InvalidArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KummerBBError as exc:
        logger.exception("Command %s failed", config.command)
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_FAILURE

    _write(text, config.out)
    if getattr(report, "passed", True) is False:
        return EXIT_FAILURE
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

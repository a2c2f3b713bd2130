"""Seeded verification suites run end to end."""

from __future__ import annotations

import pytest

from kummer_bb.boundary import boundary_points
from kummer_bb.cli import SUITES, VerifyParams, run_suite
from kummer_bb.cli.verify import distinct_up_to_sign
from kummer_bb.config import OracleOptions
from kummer_bb.errors import InvalidArgumentError

QUICK = VerifyParams(p=5, samples=5, dim=2)


@pytest.mark.parametrize(
    "suite",
    ["isotropic", "points", "incidence", "index", "bounds", "l2-graph", "lifts", "extension", "hyperplanes"],
)
def test_quick_suite(suite: str) -> None:
    report = run_suite(suite, QUICK)
    assert report.passed, [c for c in report.checks if not c.passed]
    assert report.seed == 42


def test_transvections_quick() -> None:
    report = run_suite("transvections", VerifyParams(samples=3))
    assert report.passed
    assert [c.name for c in report.checks] == ["transvections L_2", "transvections L_50"]


def test_orders_small() -> None:
    report = run_suite("orders", VerifyParams(p=3, dim=2))
    assert report.passed
    assert [c.name for c in report.checks] == ["O(1, 3)", "O(2, 3) eps=+1", "O(2, 3) eps=-1"]


def test_same_seed_same_report() -> None:
    first = run_suite("lifts", QUICK)
    second = run_suite("lifts", QUICK)
    assert first == second


def test_unknown_suite() -> None:
    with pytest.raises(InvalidArgumentError):
        run_suite("nope", QUICK)


def test_bad_prime() -> None:
    with pytest.raises(InvalidArgumentError):
        run_suite("points", VerifyParams(p=9))


@pytest.mark.slow
@pytest.mark.parametrize("suite", sorted(SUITES))
def test_full_suite(suite: str) -> None:
    report = run_suite(suite, VerifyParams(options=OracleOptions.from_env()))
    assert report.passed, [c for c in report.checks if not c.passed]


def test_points_are_distinct_up_to_sign() -> None:
    classes = [pt.star_class for pt in boundary_points(5) if not pt.note]
    assert distinct_up_to_sign(classes)
    order_above_two = next(c for c in classes if (-c) != c)
    assert not distinct_up_to_sign([*classes, -order_above_two])
    assert len({c.coords for c in [*classes, -order_above_two]}) == len(classes) + 1

"""Unit tests for the modular groups of boundary curves."""

from __future__ import annotations

import math

import numpy as np
import pytest

from kummer_bb.boundary import (
    coset_orbit,
    count_cusps,
    curve_group,
    gamma1_index_formula,
    in_gamma1,
    random_gamma1,
)
from kummer_bb.errors import InvalidArgumentError


class TestCurveGroup:
    @pytest.mark.parametrize(
        ("a", "name", "index", "cusps"),
        [
            (1, "PSL2(Z)", 1, 1),
            (2, "Gamma1(2)", 3, 2),
            (3, "Gamma1(3)", 4, 2),
            (4, "Gamma1(4)", 6, 3),
            (5, "Gamma1(5)", 12, 4),
            (7, "Gamma1(7)", 24, 6),
            (10, "Gamma1(10)", 36, 8),
            (14, "Gamma1(14)", 72, 12),
        ],
    )
    def test_known_groups(self, a: int, name: str, index: int, cusps: int) -> None:
        group = curve_group(a)
        assert (group.name, group.level, group.index, group.cusps) == (name, a, index, cusps)

    def test_unicode_names(self) -> None:
        assert curve_group(1).unicode_name == "PSL₂(ℤ)"
        assert curve_group(2).unicode_name == "Γ₁(2)"

    def test_to_dict(self) -> None:
        assert curve_group(2).to_dict() == {"name": "Gamma1(2)", "level": 2, "index": 3, "cusps": 2}

    @pytest.mark.parametrize("a", range(1, 31))
    def test_index_matches_formula(self, a: int) -> None:
        assert curve_group(a).index == gamma1_index_formula(a)

    def test_rejects_level_zero(self) -> None:
        with pytest.raises(InvalidArgumentError):
            curve_group(0)


class TestCosets:
    @pytest.mark.parametrize(("n", "size"), [(1, 1), (2, 3), (5, 24), (6, 24), (10, 72)])
    def test_orbit_size(self, n: int, size: int) -> None:
        orbit = coset_orbit(n)
        assert len(orbit) == size
        assert orbit[0] == (1 % n, 0)

    def test_orbit_rows_are_primitive(self) -> None:
        for x in coset_orbit(12):
            assert math.gcd(x[0], x[1], 12) == 1

    def test_cusps_of_level_one(self) -> None:
        assert count_cusps(1, coset_orbit(1)) == 1


class TestRandomGamma1:
    @pytest.mark.parametrize("a", [1, 2, 5, 10])
    def test_elements(self, a: int, rng: np.random.Generator) -> None:
        for _ in range(50):
            (alpha, beta), (gamma, delta) = random_gamma1(a, rng, bound=100)
            assert alpha * delta - beta * gamma == 1
            assert in_gamma1(((alpha, beta), (gamma, delta)), a)
            assert max(abs(alpha), abs(beta), abs(gamma), abs(delta)) <= 100

    def test_bound_too_small(self, rng: np.random.Generator) -> None:
        with pytest.raises(InvalidArgumentError):
            random_gamma1(10, rng, bound=5)

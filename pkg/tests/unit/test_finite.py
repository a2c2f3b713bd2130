"""Unit tests for finite quadratic modules, 𝔽_p spaces and class numbers."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kummer_bb.config import OracleOptions
from kummer_bb.errors import BudgetExceededError, DegenerateError, InvalidArgumentError
from kummer_bb.finite import (
    BinaryForm,
    FiniteQuadraticModule,
    automorphisms,
    brute_force_orthogonal_order,
    class_number,
    class_number_by_reduction,
    class_number_from_conductor,
    classify_fp_space,
    elements_with,
    finite_orthogonal_order,
    fundamental_part,
    generated_subgroup,
    isotropic_elements,
    mod_one,
    mod_two,
    order_two_profile,
    reduce_form,
    reduced_forms,
    square_class,
    standard_space,
)
from kummer_bb.lattice import Lattice, discriminant_module


# ── Finite quadratic modules ────────────────────────────────────────


class TestFiniteQuadraticModule:
    def test_reductions(self) -> None:
        assert mod_two(Fraction(-1, 6)) == Fraction(11, 6)
        assert mod_one(Fraction(-1, 3)) == Fraction(2, 3)

    def test_cyclic_sum(self) -> None:
        m = FiniteQuadraticModule.cyclic_sum((2, Fraction(1, 2)), (3, Fraction(4, 3)))
        assert m.size == 6
        assert m.invariant_factors == (6,)
        assert m.element(1, 1).q == Fraction(11, 6)

    def test_ill_defined_pairing_rejected(self) -> None:
        with pytest.raises(InvalidArgumentError):
            FiniteQuadraticModule((2,), ((Fraction(1, 3),),))

    def test_bad_orders_rejected(self) -> None:
        with pytest.raises(InvalidArgumentError):
            FiniteQuadraticModule((1,), ((Fraction(0),),))

    def test_element_arithmetic(self, l2: Lattice) -> None:
        m = discriminant_module(l2)
        x = m.element(5, 1)
        assert (x + m.element(1, 1)).is_zero
        assert (-x).coords == (1, 1)
        assert (3 * x).coords == (3, 1)
        assert x.order == 6

    def test_isotropic_elements_of_l2(self, l2: Lattice) -> None:
        found = isotropic_elements(discriminant_module(l2))
        assert [x.coords for x in found] == [(0, 0), (3, 1)]

    def test_isotropic_scan_is_thread_independent(self, l50: Lattice) -> None:
        m = discriminant_module(l50)
        serial = isotropic_elements(m)
        threaded = isotropic_elements(m, OracleOptions(threads=4))
        assert serial == threaded
        assert all(x.q == 0 for x in serial)

    def test_order_two_profile(self, l2: Lattice) -> None:
        profile = {x.coords: q for x, q in order_two_profile(discriminant_module(l2))}
        assert profile == {
            (3, 0): Fraction(1, 2),
            (0, 1): Fraction(3, 2),
            (3, 1): Fraction(0),
        }

    def test_elements_with(self, l2: Lattice) -> None:
        m = discriminant_module(l2)
        assert [x.coords for x in elements_with(m, order=2, q=Fraction(0))] == [(3, 1)]
        assert len(elements_with(m, order=3)) == 2

    def test_automorphisms_of_l2(self, l2: Lattice) -> None:
        assert len(automorphisms(discriminant_module(l2))) == 2

    def test_generated_subgroup(self, l2: Lattice) -> None:
        m = discriminant_module(l2)
        group = generated_subgroup([m.element(2, 0)], m)
        assert [x.coords for x in group] == [(0, 0), (2, 0), (4, 0)]


# ── Quadratic spaces over 𝔽_p ───────────────────────────────────────


class TestFpSpaces:
    def test_square_class(self) -> None:
        assert square_class(4, 5) == 1
        assert square_class(2, 5) == -1
        with pytest.raises(DegenerateError):
            square_class(10, 5)

    def test_classify(self) -> None:
        space = classify_fp_space([[1, 0], [0, 1]], 5)
        assert space.delta == 1
        assert space.epsilon == 1
        space = classify_fp_space([[1, 0], [0, 1]], 7)
        assert space.epsilon == -1
        assert classify_fp_space([[1, 0, 0], [0, 1, 0], [0, 0, 2]], 5).epsilon is None

    def test_classify_rejects_degenerate(self) -> None:
        with pytest.raises(DegenerateError):
            classify_fp_space([[1, 0], [0, 5]], 5)

    @pytest.mark.parametrize("p", [2, 9])
    def test_non_odd_prime_rejected(self, p: int) -> None:
        with pytest.raises(InvalidArgumentError):
            finite_orthogonal_order(3, p)

    @pytest.mark.parametrize(
        ("dim", "p", "epsilon", "expected"),
        [
            (1, 5, None, 2),
            (2, 5, 1, 8),
            (2, 5, -1, 12),
            (3, 5, None, 240),
            (3, 7, None, 672),
            (4, 3, 1, 1152),
        ],
    )
    def test_orthogonal_order_formula(
        self, dim: int, p: int, epsilon: int | None, expected: int
    ) -> None:
        assert finite_orthogonal_order(dim, p, epsilon) == expected  # type: ignore[arg-type]

    def test_epsilon_required_in_even_dimension(self) -> None:
        with pytest.raises(InvalidArgumentError):
            finite_orthogonal_order(2, 5)
        with pytest.raises(InvalidArgumentError):
            finite_orthogonal_order(3, 5, 1)

    def test_standard_space_realises_epsilon(self) -> None:
        for epsilon in (1, -1):
            assert standard_space(2, 7, epsilon).epsilon == epsilon  # type: ignore[arg-type]

    @pytest.mark.parametrize(
        ("dim", "p", "epsilon"),
        [(1, 5, None), (2, 5, 1), (2, 5, -1), (2, 7, -1), (3, 3, None)],
    )
    def test_brute_force_matches_formula(self, dim: int, p: int, epsilon: int | None) -> None:
        space = standard_space(dim, p, epsilon)  # type: ignore[arg-type]
        assert brute_force_orthogonal_order(space) == finite_orthogonal_order(dim, p, space.epsilon)

    def test_brute_force_budget(self) -> None:
        space = standard_space(3, 5)
        with pytest.raises(BudgetExceededError) as exc_info:
            brute_force_orthogonal_order(space, OracleOptions(brute_force_budget=1000))
        assert exc_info.value.code == "BUDGET_EXCEEDED"


# ── Class numbers ───────────────────────────────────────────────────


class TestClassNumbers:
    @pytest.mark.parametrize(
        ("d", "h"),
        [(-3, 1), (-4, 1), (-12, 1), (-23, 3), (-48, 2), (-300, 6), (-1200, 12)],
    )
    def test_known_values(self, d: int, h: int) -> None:
        assert class_number(d) == h
        assert class_number_by_reduction(d) == h
        assert class_number_from_conductor(d) == h

    @pytest.mark.parametrize("seed", [0, 1, 7, 2024])
    def test_random_forms_reach_every_class(self, seed: int) -> None:
        assert class_number_by_reduction(-1200, seed=seed) == 12
        assert class_number_by_reduction(-300, seed=seed) == 6

    def test_sampling_needs_patience(self) -> None:
        with pytest.raises(InvalidArgumentError):
            class_number_by_reduction(-300, patience=0)
        assert class_number_by_reduction(-300, patience=1) <= 6

    def test_reduced_forms_of_minus_23(self) -> None:
        assert reduced_forms(-23) == [
            BinaryForm(1, 1, 6),
            BinaryForm(2, -1, 3),
            BinaryForm(2, 1, 3),
        ]

    def test_reduce_form(self) -> None:
        assert reduce_form(BinaryForm(6, 5, 2)) == BinaryForm(2, -1, 3)
        with pytest.raises(InvalidArgumentError):
            reduce_form(BinaryForm(-1, 0, -1))

    def test_fundamental_part(self) -> None:
        assert fundamental_part(-300) == (-3, 10)
        assert fundamental_part(-48) == (-3, 4)
        assert fundamental_part(-20) == (-20, 1)

    @pytest.mark.parametrize("d", [0, 5, -2])
    def test_bad_discriminant(self, d: int) -> None:
        with pytest.raises(InvalidArgumentError):
            class_number(d)

    @settings(max_examples=40, derandomize=True, deadline=None)
    @given(st.integers(1, 400).map(lambda n: -4 * n))
    def test_three_routes_agree(self, d: int) -> None:
        h = class_number(d)
        assert class_number_by_reduction(d) == h
        assert class_number_from_conductor(d) == h

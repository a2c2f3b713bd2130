"""Unit tests for isometries, reflections, spinor norms and transvections."""

from __future__ import annotations

import numpy as np
import pytest

from kummer_bb.errors import (
    InvalidArgumentError,
    InvariantViolationError,
    MissingMarkError,
    NonIntegralError,
    NotIsotropicError,
)
from kummer_bb.isometry import (
    HYPERBOLIC_MARKS,
    Isometry,
    decompose_reflections,
    discriminant_action,
    eichler_invariant,
    eichler_transvection,
    in_gamma,
    in_Oplus,
    in_stable,
    lattice_digest,
    negation,
    o2u_from_sl2_pair,
    orientation_sign,
    random_primitive_vector,
    random_transvection,
    random_transvection_data,
    random_transvection_word,
    reflection,
    same_orbit_invariant,
    sl2_to_2u,
    spinor_norm,
)
from kummer_bb.lattice import Lattice, is_primitive, make_L2d, make_U

S = ((0, -1), (1, 0))
T = ((1, 1), (0, 1))
I2 = ((1, 0), (0, 1))


# ── Isometry basics ─────────────────────────────────────────────────


class TestIsometry:
    def test_rejects_non_isometry(self, l2: Lattice) -> None:
        rows = [[int(i == j) for j in range(6)] for i in range(6)]
        rows[0][1] = 1
        with pytest.raises(InvariantViolationError):
            Isometry.from_rows(rows, l2)

    def test_rejects_wrong_shape(self, l2: Lattice) -> None:
        with pytest.raises(InvalidArgumentError):
            Isometry.from_rows([[1, 0], [0, 1]], l2)

    def test_inverse_and_composition(self, l2: Lattice, rng: np.random.Generator) -> None:
        g = random_transvection_word(l2, rng)
        assert (g @ g.inverse()).is_identity
        assert (g.inverse() @ g).is_identity

    def test_compose_across_lattices_rejected(self, l2: Lattice, l50: Lattice) -> None:
        with pytest.raises(InvalidArgumentError):
            Isometry.identity(l2) @ Isometry.identity(l50)

    def test_apply_to_vector(self, l2: Lattice) -> None:
        g = reflection(l2.mark("w"))
        assert g(l2.mark("w")) == -l2.mark("w")
        assert g(l2.mark("e1")) == l2.mark("e1")

    def test_non_integral_reflection(self, l2: Lattice) -> None:
        g = reflection(l2.vector(1, 2, 0, 0, 0, 0))
        assert not g.is_integral
        with pytest.raises(NonIntegralError):
            g(l2.mark("e1"))

    def test_isotropic_reflection_rejected(self, l2: Lattice) -> None:
        with pytest.raises(NotIsotropicError):
            reflection(l2.mark("e1"))

    def test_digest_is_stable(self, l2: Lattice) -> None:
        assert lattice_digest(l2) == lattice_digest(make_L2d(1))
        assert lattice_digest(l2) != lattice_digest(make_L2d(2))
        assert Isometry.identity(l2).to_dict()["lattice"] == lattice_digest(l2)


# ── Spinor norm and membership ──────────────────────────────────────


class TestSpinorNorm:
    @pytest.mark.parametrize(
        ("coords", "expected"),
        [
            ((1, 1, 0, 0, 0, 0), -1),
            ((1, -1, 0, 0, 0, 0), 1),
            ((0, 0, 0, 0, 1, 0), 1),
            ((0, 0, 0, 0, 0, 1), 1),
            ((0, 0, 1, 1, 0, 0), -1),
        ],
    )
    def test_reflections(self, l2: Lattice, coords: tuple[int, ...], expected: int) -> None:
        g = reflection(l2.vector(*coords))
        assert spinor_norm(g) == expected
        assert orientation_sign(g) == expected

    def test_negation_preserves_orientation(self, l2: Lattice) -> None:
        g = negation(l2)
        assert orientation_sign(g) == 1
        assert in_Oplus(reflection(l2.mark("w")) @ reflection(l2.mark("v")))

    def test_decomposition_reproduces_isometry(self, l2: Lattice, rng: np.random.Generator) -> None:
        for _ in range(10):
            g = random_transvection_word(l2, rng, length=3)
            word = decompose_reflections(g)
            assert len(word) <= l2.rank + 2
            assert word.composite() == g
            assert spinor_norm(g) == orientation_sign(g) == 1

    def test_word_for_transvected_reflection(self, l2: Lattice) -> None:
        rows = [
            [0, 16, 3, 1, -6, 0],
            [0, 1, 1, 0, 0, 0],
            [0, -1, 0, 0, 0, 0],
            [-1, 4, 31, 1, -18, 0],
            [0, 2, -1, 0, 1, 0],
            [0, 0, 0, 0, 0, -1],
        ]
        g = Isometry.from_rows(rows, l2)
        word = decompose_reflections(g)
        assert word.composite() == g
        assert len(word) <= l2.rank + 2
        assert spinor_norm(g) == orientation_sign(g)
        assert in_Oplus(g) == (orientation_sign(g) == 1)

    def test_words_for_reflected_transvection_products(self, l2: Lattice) -> None:
        rng = np.random.default_rng(3)
        generators = [reflection(l2.mark("w")), reflection(l2.mark("v")), negation(l2)]
        for i in range(60):
            g = generators[i % 3] @ random_transvection_word(l2, rng, length=2)
            h = g @ random_transvection_word(l2, rng, length=2)
            for x in (g, h):
                word = decompose_reflections(x)
                assert word.composite() == x
                assert len(word) <= l2.rank + 2
                assert spinor_norm(x) == orientation_sign(x)

    def test_identity_has_empty_word(self, l2: Lattice) -> None:
        assert len(decompose_reflections(Isometry.identity(l2))) == 0

    def test_stable_and_gamma(self, l2: Lattice) -> None:
        r_w = reflection(l2.mark("w"))
        r_v = reflection(l2.mark("v"))
        assert not in_stable(r_w)
        assert in_gamma(r_w)
        assert in_stable(r_v)
        assert not in_gamma(reflection(l2.vector(1, 1, 0, 0, 0, 0)))

    def test_discriminant_action(self, l2: Lattice) -> None:
        images = discriminant_action(reflection(l2.mark("w")))
        assert [x.coords for x in images] == [(5, 0), (0, 1)]

    def test_gamma_needs_v_mark(self) -> None:
        with pytest.raises(MissingMarkError):
            in_gamma(Isometry.identity(make_U()))


# ── Eichler transvections ───────────────────────────────────────────


class TestTransvections:
    def test_formula(self, l2: Lattice) -> None:
        e1, f1, a = l2.mark("e1"), l2.mark("f1"), l2.mark("w")
        t = eichler_transvection(e1, a)
        # t(f1) = f1 + a − ½(a,a)e1 = f1 + w + 3e1
        assert t(f1) == f1 + a + 3 * e1
        assert t(e1) == e1

    def test_preconditions(self, l2: Lattice) -> None:
        with pytest.raises(NotIsotropicError):
            eichler_transvection(l2.mark("w"), l2.mark("e1"))
        with pytest.raises(InvalidArgumentError):
            eichler_transvection(l2.mark("e1"), l2.mark("f1"))

    def test_random_transvections_lie_in_gamma(self, l50: Lattice, rng: np.random.Generator) -> None:
        for _ in range(20):
            e, a = random_transvection_data(l50, rng)
            assert e.norm == 0 and e.pair(a) == 0
            g = eichler_transvection(e, a)
            assert g.is_integral
            assert in_stable(g)
            assert in_gamma(g)

    def test_random_isotropic_vectors_leave_the_u_basis(self, l50: Lattice) -> None:
        rng = np.random.default_rng(11)
        standard = {l50.mark(name).coords for pair in HYPERBOLIC_MARKS for name in pair}
        seen = set()
        for _ in range(40):
            e, a = random_transvection_data(l50, rng)
            assert e.norm == 0 and e.pair(a) == 0
            assert is_primitive(e)
            seen.add(e.coords)
        assert seen - standard
        fixed = [random_transvection_data(l50, rng, moves=0)[0].coords for _ in range(20)]
        assert set(fixed) <= standard

    def test_random_transvection_is_seeded(self, l2: Lattice) -> None:
        g1 = random_transvection(l2, np.random.default_rng(7))
        g2 = random_transvection(l2, np.random.default_rng(7))
        assert g1 == g2

    def test_sl2_action(self, l2: Lattice) -> None:
        block = sl2_to_2u(S, T)
        assert len(block) == 4
        g = o2u_from_sl2_pair(S, T, l2)
        assert in_gamma(g)
        with pytest.raises(InvalidArgumentError):
            sl2_to_2u(((2, 0), (0, 1)), I2)

    def test_sl2_action_is_homomorphic(self, l2: Lattice) -> None:
        st_ = ((0, -1), (1, 1))
        left = o2u_from_sl2_pair(S, I2, l2) @ o2u_from_sl2_pair(T, I2, l2)
        assert left == o2u_from_sl2_pair(st_, I2, l2)


# ── Eichler invariant ───────────────────────────────────────────────


class TestEichlerInvariant:
    def test_invariant(self, l2: Lattice) -> None:
        norm, cls = eichler_invariant(l2.vector(0, 0, 2, 2, 1, 1))
        assert norm == 0
        assert cls.coords == (3, 1)

    def test_same_orbit(self, l2: Lattice) -> None:
        assert same_orbit_invariant(l2.mark("e1"), l2.mark("e2"))
        assert not same_orbit_invariant(l2.mark("e1"), l2.vector(0, 0, 2, 2, 1, 1))

    def test_invariant_preserved_by_transvections(
        self, l50: Lattice, rng: np.random.Generator
    ) -> None:
        for _ in range(10):
            v = random_primitive_vector(l50, rng)
            g = random_transvection_word(l50, rng, length=4)
            assert eichler_invariant(g(v)) == eichler_invariant(v)

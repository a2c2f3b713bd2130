"""Unit tests for lattices, named constructions and discriminant groups."""

from __future__ import annotations

from fractions import Fraction

import pytest

from kummer_bb.errors import (
    DegenerateError,
    InvalidArgumentError,
    MissingMarkError,
    NotIsotropicError,
    NotPrimitiveError,
)
from kummer_bb.finite import find_isomorphism
from kummer_bb.lattice import (
    L2D_BASIS,
    Lattice,
    Sublattice,
    direct_sum,
    discriminant,
    discriminant_module,
    divisor,
    h_group,
    is_isotropic,
    is_primitive,
    is_totally_isotropic,
    make_A2,
    make_L2d,
    make_M,
    make_rank_one,
    make_U,
    orthogonal_complement,
    require_isotropic_plane,
    rescale,
    split_polarisation_complement,
    star,
)
from kummer_bb.linalg import int_matrix


# ── Lattice construction ────────────────────────────────────────────


class TestLattice:
    @pytest.mark.parametrize("d", [1, 2, 25, 49])
    def test_l2d_invariants(self, d: int) -> None:
        lattice = make_L2d(d)
        assert lattice.rank == 6
        assert lattice.signature == (2, 4)
        assert lattice.det == 12 * d
        assert lattice.name == f"L_{2 * d}"

    def test_l2d_marks_follow_basis_order(self, l2: Lattice) -> None:
        for i, name in enumerate(L2D_BASIS):
            assert l2.mark(name) == l2.basis_vector(i)
        assert l2.mark("w").norm == -6
        assert l2.mark("v").norm == -2

    def test_l2d_rejects_nonpositive(self) -> None:
        with pytest.raises(InvalidArgumentError):
            make_L2d(0)

    def test_odd_diagonal_rejected(self) -> None:
        with pytest.raises(InvalidArgumentError, match="odd diagonal"):
            Lattice(int_matrix([[1]]))

    def test_asymmetric_rejected(self) -> None:
        with pytest.raises(InvalidArgumentError, match="symmetric"):
            Lattice(int_matrix([[0, 1], [2, 0]]))

    def test_degenerate_rejected(self) -> None:
        with pytest.raises(DegenerateError):
            Lattice(int_matrix([[2, 2], [2, 2]]))

    def test_degenerate_allowed_on_request(self) -> None:
        lattice = Lattice(int_matrix([[2, 2], [2, 2]]), allow_degenerate=True)
        assert lattice.det == 0

    def test_missing_mark(self) -> None:
        with pytest.raises(MissingMarkError) as exc_info:
            make_U().mark("w")
        assert exc_info.value.code == "MISSING_MARK"

    def test_small_named_lattices(self) -> None:
        assert make_U().det == -1
        assert make_A2().det == 3
        assert make_rank_one(-6).det == -6
        with pytest.raises(InvalidArgumentError):
            make_rank_one(3)

    def test_rescale(self) -> None:
        u3 = rescale(make_U(), 3)
        assert u3.gram == int_matrix([[0, 3], [3, 0]])
        assert u3.name == "U(3)"
        with pytest.raises(InvalidArgumentError):
            rescale(make_U(), 0)

    def test_direct_sum_pads_marks(self) -> None:
        total = direct_sum(make_L2d(1), make_A2())
        assert total.rank == 8
        assert total.mark("v").coords == (0, 0, 0, 0, 0, 1, 0, 0)
        with pytest.raises(InvalidArgumentError):
            direct_sum(make_L2d(1), make_L2d(2))

    def test_make_m(self) -> None:
        m = make_M(2)
        assert m.rank == 7
        assert m.signature == (3, 4)
        assert m.mark("k").norm == -6


# ── Vectors and sublattices ─────────────────────────────────────────


class TestVectors:
    def test_divisor(self, l50: Lattice) -> None:
        assert divisor(l50.mark("e1")) == 1
        assert divisor(l50.mark("w")) == 6
        assert divisor(l50.mark("v")) == 50
        assert divisor(l50.vector(0, 0, 0, 0, 5, 5)) == 10

    def test_divisor_of_zero_rejected(self, l2: Lattice) -> None:
        with pytest.raises(InvalidArgumentError):
            divisor(l2.zero())

    def test_primitive_and_isotropic(self, l2: Lattice) -> None:
        x = l2.vector(0, 0, 2, 2, 1, 1)
        assert is_primitive(x)
        assert is_isotropic(x)
        assert not is_primitive(2 * x)
        assert not is_isotropic(l2.mark("w"))

    def test_arithmetic(self, l2: Lattice) -> None:
        e1, f1 = l2.mark("e1"), l2.mark("f1")
        assert (e1 + f1).norm == 2
        assert (e1 - f1).norm == -2
        assert (-e1).coords == (-1, 0, 0, 0, 0, 0)
        assert e1.pair(f1) == 1

    def test_wrong_length_vector(self, l2: Lattice) -> None:
        with pytest.raises(InvalidArgumentError):
            l2.vector(1, 0)

    def test_orthogonal_complement(self, l2: Lattice) -> None:
        e1 = l2.mark("e1")
        perp = orthogonal_complement(Sublattice.spanned_by(e1))
        assert perp.rank == 5
        assert perp.is_primitive
        assert perp.contains(e1)
        assert not perp.contains(l2.mark("f1"))
        for x in perp.vectors:
            assert x.pair(e1) == 0

    def test_isotropic_plane_checks(self, l2: Lattice) -> None:
        plane = Sublattice.spanned_by(l2.mark("e1"), l2.mark("e2"))
        assert is_totally_isotropic(plane)
        require_isotropic_plane(plane, 2)
        with pytest.raises(InvalidArgumentError):
            require_isotropic_plane(plane, 1)
        with pytest.raises(NotIsotropicError):
            require_isotropic_plane(Sublattice.spanned_by(l2.mark("e1"), l2.mark("f1")))
        with pytest.raises(NotPrimitiveError):
            require_isotropic_plane(Sublattice.spanned_by(l2.mark("e1"), 2 * l2.mark("e2")))

    def test_dependent_basis_rejected(self, l2: Lattice) -> None:
        with pytest.raises(InvalidArgumentError):
            Sublattice.spanned_by(l2.mark("e1"), 3 * l2.mark("e1"))


# ── Split polarisation complement ───────────────────────────────────


class TestSplitComplement:
    @pytest.mark.parametrize("d", [1, 25])
    def test_matches_l2d_for_n_equal_two(self, d: int) -> None:
        split = split_polarisation_complement(2, d)
        assert split.h.norm == 2 * d
        assert split.lattice.gram == make_L2d(d).gram
        assert split.lattice.name == f"L_{2 * d}"
        assert split.complement.rank == 6

    def test_other_n(self) -> None:
        split = split_polarisation_complement(3, 1)
        assert split.lattice.det == 16
        assert split.lattice.signature == (2, 4)


# ── Discriminant groups ─────────────────────────────────────────────


class TestDiscriminant:
    def test_marked_presentation_of_l2(self, l2: Lattice) -> None:
        module = discriminant_module(l2)
        assert module.orders == (6, 2)
        assert module.gram[0][0] == Fraction(11, 6)
        assert module.gram[1][1] == Fraction(3, 2)
        assert module.size == 12

    def test_marked_presentation_of_l50(self, l50: Lattice) -> None:
        module = discriminant_module(l50)
        assert module.orders == (6, 50)
        assert module.gram[1][1] == Fraction(99, 50)

    def test_primary_presentation_of_l2(self, l2: Lattice) -> None:
        module = discriminant_module(l2, "primary")
        assert module.orders == (2, 2, 3)
        assert [module.gram[i][i] for i in range(3)] == [
            Fraction(3, 2),
            Fraction(1, 2),
            Fraction(4, 3),
        ]

    def test_snf_presentation_of_l2(self, l2: Lattice) -> None:
        module = discriminant_module(l2, "snf")
        assert module.orders == (2, 6)
        assert module.invariant_factors == (2, 6)

    def test_presentations_are_isometric(self, l2: Lattice) -> None:
        marked = discriminant_module(l2, "marked")
        for other in ("snf", "primary"):
            assert find_isomorphism(marked, discriminant_module(l2, other)) is not None

    def test_element_of_lift_roundtrip(self, l2: Lattice) -> None:
        disc = discriminant(l2)
        for x in disc.module.elements():
            assert disc.element_of(disc.lift(x)) == x

    def test_non_dual_vector_rejected(self, l2: Lattice) -> None:
        disc = discriminant(l2)
        with pytest.raises(InvalidArgumentError):
            disc.element_of((Fraction(1, 2), *[Fraction(0)] * 5))

    def test_missing_marks(self) -> None:
        with pytest.raises(MissingMarkError):
            discriminant(make_M(2), "marked")

    def test_star(self, l2: Lattice) -> None:
        assert star(l2.mark("e1")).is_zero
        assert star(l2.mark("w")).coords == (1, 0)
        assert star(l2.mark("v")).coords == (0, 1)
        assert star(l2.vector(0, 0, 2, 2, 1, 1)).coords == (3, 1)

    def test_star_rejects_imprimitive(self, l2: Lattice) -> None:
        with pytest.raises(NotPrimitiveError):
            star(2 * l2.mark("e1"))

    def test_h_group_of_trivial_plane(self, l2: Lattice) -> None:
        plane = Sublattice.spanned_by(l2.mark("e1"), l2.mark("e2"))
        assert [x.coords for x in h_group(plane)] == [(0, 0)]

    def test_h_group_of_second_plane(self, l2: Lattice) -> None:
        plane = Sublattice.spanned_by(l2.mark("e1"), l2.vector(0, 0, 2, 2, 1, 1))
        group = h_group(plane)
        assert [x.coords for x in group] == [(0, 0), (3, 1)]
        assert all(x.q == 0 for x in group)

"""Tests for tuple bases, boundary matrices and rack/quandle (co)homology."""

from __future__ import annotations

import random

import pytest

from rackhom.algebra import FiniteQuandle, FiniteRack, build_family, make_trivial, relabel
from rackhom.errors import BudgetExceededError, PreconditionError
from rackhom.homology import (
    INTEGERS,
    THEORIES,
    CoefficientSpec,
    build_bundle,
    check_budget,
    cohomology,
    degenerate_boundary_matrix,
    degenerate_cohomology,
    degenerate_homology,
    degenerate_inclusion,
    derivations,
    homology,
    is_degenerate,
    is_degenerate_subcomplex,
    largest_basis,
    nondegenerate_count,
    quandle_boundary_matrix,
    quandle_cohomology,
    quandle_homology,
    quillen_cohomology,
    rack_boundary_matrix,
    rack_homology,
    tuple_basis,
    tuple_index,
)
from rackhom.linalg import AbelianGroupPresentation, ChainComplex, compose_check, homology_at
from tests import snf_oracle

Z = AbelianGroupPresentation(1)
ZERO = AbelianGroupPresentation()


def _ranks(groups: list[AbelianGroupPresentation]) -> list[int]:
    return [g.free_rank for g in groups]


class TestBases:
    def test_tuple_index_is_base_size_number(self) -> None:
        assert tuple_index((1, 2), 3) == 5
        assert tuple_index((), 3) == 0

    def test_full_basis_order(self) -> None:
        basis = tuple_basis(2, 2)
        assert basis.tuples == ((0, 0), (0, 1), (1, 0), (1, 1))
        assert all(basis.index(x) == tuple_index(x, 2) for x in basis.tuples)

    def test_degree_zero_is_empty_tuple(self) -> None:
        assert tuple_basis(4, 0).tuples == ((),)
        assert len(tuple_basis(4, 0, "nondegenerate")) == 1
        assert len(tuple_basis(4, 0, "degenerate")) == 0

    def test_nondegenerate_count(self) -> None:
        for size in range(1, 5):
            for n in range(4):
                assert len(tuple_basis(size, n, "nondegenerate")) == nondegenerate_count(size, n)

    def test_is_degenerate(self) -> None:
        assert is_degenerate((0, 1, 1))
        assert not is_degenerate((0, 1, 0))
        assert not is_degenerate((2,))

    def test_degenerate_inclusion(self) -> None:
        assert degenerate_inclusion(make_trivial(3), 2) == [0, 4, 8]

    def test_degenerate_inclusion_needs_quandle(self, swap_rack: FiniteRack) -> None:
        with pytest.raises(PreconditionError):
            degenerate_inclusion(swap_rack, 2)

    def test_negative_degree(self) -> None:
        with pytest.raises(ValueError):
            tuple_basis(2, -1)


class TestBoundaries:
    def test_degree_two_formula(self, dihedral3: FiniteQuandle) -> None:
        # ∂(0, 1) = 0▷1 - 1 = (2) - (1)
        matrix = rack_boundary_matrix(dihedral3, 2)
        assert matrix.shape == (3, 9)
        assert matrix.get(2, 1) == 1
        assert matrix.get(1, 1) == -1
        assert matrix.get(0, 1) == 0

    def test_degree_one_is_zero(self, dihedral3: FiniteQuandle) -> None:
        matrix = rack_boundary_matrix(dihedral3, 1)
        assert matrix.shape == (1, 3)
        assert matrix.is_zero()

    def test_trivial_rack_boundaries_vanish(self) -> None:
        rack = make_trivial(3)
        for n in range(1, 4):
            assert rack_boundary_matrix(rack, n).is_zero()

    def test_boundary_squares_to_zero(self, conjugation_s3: FiniteRack) -> None:
        for n in range(2, 4):
            product = rack_boundary_matrix(conjugation_s3, n - 1) @ rack_boundary_matrix(
                conjugation_s3, n
            )
            assert product.is_zero()

    def test_quandle_boundary_shapes(self, dihedral3: FiniteQuandle) -> None:
        assert quandle_boundary_matrix(dihedral3, 3).shape == (6, 12)
        assert degenerate_boundary_matrix(dihedral3, 3).shape == (3, 15)

    def test_degenerate_tuples_form_subcomplex(self, dihedral4: FiniteQuandle) -> None:
        for n in range(1, 4):
            assert is_degenerate_subcomplex(dihedral4, n)

    def test_quandle_boundary_needs_quandle(self, swap_rack: FiniteRack) -> None:
        with pytest.raises(PreconditionError, match="0▷0 = 1"):
            quandle_boundary_matrix(swap_rack, 2)

    def test_degree_zero_rejected(self, dihedral3: FiniteQuandle) -> None:
        with pytest.raises(ValueError):
            rack_boundary_matrix(dihedral3, 0)


class TestBundle:
    def test_quandle_bundle_has_all_complexes(self, dihedral3: FiniteQuandle) -> None:
        bundle = build_bundle(dihedral3, 2)
        assert bundle.chain_degree == 3
        for theory in THEORIES:
            complex_ = bundle.complex(theory)
            assert compose_check(complex_)
            assert max(complex_.degrees) == 3

    def test_rack_bundle_has_no_quandle_complex(self, swap_rack: FiniteRack) -> None:
        bundle = build_bundle(swap_rack, 2)
        assert bundle.cq is None
        with pytest.raises(PreconditionError, match="requires a quandle"):
            bundle.complex("quandle")

    def test_dimensions_split(self, dihedral4: FiniteQuandle) -> None:
        bundle = build_bundle(dihedral4, 2)
        cd, cq = bundle.complex("degenerate"), bundle.complex("quandle")
        for n in range(4):
            assert bundle.cr.dim(n) == cd.dim(n) + cq.dim(n)

    def test_budget(self, dihedral3: FiniteQuandle) -> None:
        assert largest_basis(3, 4) == 81
        check_budget(3, 4, 81)
        with pytest.raises(BudgetExceededError, match="81 tuples"):
            build_bundle(dihedral3, 3, budget=50)

    def test_bundle_degree_guard(self, dihedral3: FiniteQuandle) -> None:
        bundle = build_bundle(dihedral3, 1)
        with pytest.raises(PreconditionError, match="exact range"):
            homology(dihedral3, "rack", 2, bundle=bundle)

    def test_negative_degree(self, dihedral3: FiniteQuandle) -> None:
        with pytest.raises(PreconditionError):
            build_bundle(dihedral3, -1)


class TestKnownHomology:
    @pytest.mark.parametrize("h", [1, 2, 3])
    def test_trivial_rack_homology_is_free(self, h: int) -> None:
        groups = rack_homology(make_trivial(h), 3)
        assert groups == [AbelianGroupPresentation(h**n) for n in range(4)]

    @pytest.mark.parametrize("h", [2, 3])
    def test_trivial_quandle_homology_is_free(self, h: int) -> None:
        groups = quandle_homology(make_trivial(h), 3)
        expected = [1] + [h * (h - 1) ** (n - 1) for n in range(1, 4)]
        assert groups == [AbelianGroupPresentation(r) for r in expected]

    def test_dihedral3_quandle_homology(self, dihedral3: FiniteQuandle) -> None:
        groups = quandle_homology(dihedral3, 3)
        assert groups == [Z, Z, ZERO, AbelianGroupPresentation(0, (3,))]

    def test_betti_numbers_follow_orbit_count(self, dihedral4: FiniteQuandle) -> None:
        bundle = build_bundle(dihedral4, 3)
        assert _ranks(rack_homology(dihedral4, 3, bundle=bundle)) == [1, 2, 4, 8]
        assert _ranks(quandle_homology(dihedral4, 3, bundle=bundle)) == [1, 2, 2, 2]

    def test_rack_homology_splits(self, dihedral3: FiniteQuandle) -> None:
        bundle = build_bundle(dihedral3, 3)
        rack = rack_homology(dihedral3, 3, bundle=bundle)
        quandle = quandle_homology(dihedral3, 3, bundle=bundle)
        degenerate = degenerate_homology(dihedral3, 3, bundle=bundle)
        for n in range(4):
            assert rack[n] == quandle[n].direct_sum(degenerate[n])

    def test_swap_rack_homology(self, swap_rack: FiniteRack) -> None:
        groups = rack_homology(swap_rack, 2)
        assert groups[0] == Z
        assert groups[1] == Z

    def test_quandle_theory_needs_quandle(self, swap_rack: FiniteRack) -> None:
        with pytest.raises(PreconditionError, match="0▷0 = 1, expected 0"):
            quandle_homology(swap_rack, 2)

    @pytest.mark.parametrize("family,params", [("dihedral", [3]), ("trivial", [2])])
    def test_agrees_with_dense_oracle(self, family: str, params: list[int]) -> None:
        rack = build_family(family, params)
        bundle = build_bundle(rack, 3)
        kinds = {"rack": "full", "quandle": "nondegenerate", "degenerate": "degenerate"}
        for theory, kind in kinds.items():
            groups = homology(rack, theory, 3, bundle=bundle)  # type: ignore[arg-type]
            for n, group in enumerate(groups):
                free, torsion = snf_oracle.homology(rack.op, n, kind)
                assert group == AbelianGroupPresentation(free, tuple(torsion))


class TestInvariance:
    @pytest.mark.parametrize("perm", [[1, 0, 2, 3], [3, 1, 0, 2]])
    def test_relabeling_preserves_homology(
        self, dihedral4: FiniteQuandle, perm: list[int]
    ) -> None:
        copy = relabel(dihedral4, perm)
        assert copy.op != dihedral4.op
        for theory in THEORIES:
            assert homology(copy, theory, 3) == homology(dihedral4, theory, 3)

    def test_relabeling_preserves_rack_homology(self, conjugation_s3: FiniteRack) -> None:
        perm = [5, 3, 1, 0, 2, 4]
        assert rack_homology(relabel(conjugation_s3, perm), 2) == rack_homology(conjugation_s3, 2)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_basis_order_is_irrelevant(self, dihedral4: FiniteQuandle, seed: int) -> None:
        rng = random.Random(seed)
        original = build_bundle(dihedral4, 3).complex("quandle")
        perms: dict[int, list[int]] = {}
        for n in original.degrees:
            perms[n] = list(range(original.dim(n)))
            rng.shuffle(perms[n])
        shuffled = ChainComplex(
            original.dims,
            {
                n: matrix.permuted(perms[n - 1], perms[n])
                for n, matrix in original.boundaries.items()
            },
        )
        assert compose_check(shuffled)
        for n in range(4):
            assert homology_at(shuffled, n) == homology_at(original, n)


class TestCoefficients:
    def test_parse(self) -> None:
        assert CoefficientSpec.parse("Z") == INTEGERS
        assert CoefficientSpec.parse(" Z/6 ").modulus == 6
        assert str(CoefficientSpec(6)) == "Z/6"

    def test_parse_rejects_unknown(self) -> None:
        with pytest.raises(ValueError, match="'Z' or 'Z/m'"):
            CoefficientSpec.parse("Q")

    def test_modulus_too_small(self) -> None:
        with pytest.raises(PreconditionError):
            CoefficientSpec.parse("Z/1")

    def test_dihedral3_mod3(self, dihedral3: FiniteQuandle) -> None:
        groups = quandle_homology(dihedral3, 3, CoefficientSpec(3))
        # H_3 = Z/3 ⊗ Z/3; H_2 and Tor(H_1) both vanish in degree 2.
        assert groups[0] == AbelianGroupPresentation(0, (3,))
        assert groups[2].is_zero()
        assert groups[3] == AbelianGroupPresentation(0, (3,))

    def test_mod2_kills_three_torsion(self, dihedral3: FiniteQuandle) -> None:
        groups = quandle_homology(dihedral3, 3, CoefficientSpec(2))
        assert groups[3].is_zero()


class TestCohomology:
    def test_dihedral3_quandle_cohomology(self, dihedral3: FiniteQuandle) -> None:
        groups = quandle_cohomology(dihedral3, 3)
        assert groups[:3] == [Z, Z, ZERO]
        assert groups[3].is_zero()

    def test_dihedral3_mod3_cohomology(self, dihedral3: FiniteQuandle) -> None:
        groups = quandle_cohomology(dihedral3, 3, CoefficientSpec(3))
        assert groups[2].is_zero()
        assert groups[3] == AbelianGroupPresentation(0, (3,))

    def test_cohomology_ranks_match_homology(self, dihedral4: FiniteQuandle) -> None:
        bundle = build_bundle(dihedral4, 3)
        for theory in THEORIES:
            lower = homology(dihedral4, theory, 3, bundle=bundle)
            upper = cohomology(dihedral4, theory, 3, bundle=bundle)
            assert _ranks(lower) == _ranks(upper)

    def test_trivial_quandle_degenerate_cohomology(self) -> None:
        groups = degenerate_cohomology(make_trivial(2), 3)
        assert _ranks(groups) == [0, 0, 2, 6]
        assert all(not g.torsion for g in groups)


class TestQuillen:
    def test_degree_shift(self, dihedral3: FiniteQuandle) -> None:
        coeff = CoefficientSpec(3)
        shifted = quandle_cohomology(dihedral3, 3, coeff)
        for n in range(3):
            assert quillen_cohomology(dihedral3, "quandle", n, coeff) == shifted[n + 1]

    def test_single_point(self) -> None:
        group = quillen_cohomology(make_trivial(1), "quandle", 0, CoefficientSpec(2))
        assert group.order == 2

    @pytest.mark.parametrize("m", [2, 3])
    def test_derivations_count_matches_degree_zero(
        self, m: int, dihedral3: FiniteQuandle, dihedral4: FiniteQuandle, swap_rack: FiniteRack
    ) -> None:
        for rack in (dihedral3, dihedral4, swap_rack):
            group = quillen_cohomology(rack, "rack", 0, CoefficientSpec(m))
            assert derivations(rack, m) == group.order

    def test_derivations_size_limit(self) -> None:
        with pytest.raises(PreconditionError, match="at most 6"):
            derivations(build_family("conjugation-q8"), 2)

    def test_rejects_degenerate_theory(self, dihedral3: FiniteQuandle) -> None:
        with pytest.raises(ValueError):
            quillen_cohomology(dihedral3, "degenerate", 0)  # type: ignore[arg-type]

    def test_negative_degree(self, dihedral3: FiniteQuandle) -> None:
        with pytest.raises(PreconditionError):
            quillen_cohomology(dihedral3, "rack", -1)

"""
Tests for witness lattices and elementary divisors.
"""

import random
from fractions import Fraction

import pytest

from weilgroups.arith import ord_ell
from weilgroups.classify import criterion_local_groups
from weilgroups.errors import (
    ConstantTermError,
    InvalidArgumentError,
    MultipleRootsError,
    NotLocalError,
    PolygonConditionError,
    SingularMatrixError,
)
from weilgroups.fixtures import COUNTEREXAMPLE_GROUP, COUNTEREXAMPLE_POLY, counterexample_matrix
from weilgroups.groups import parse_group_label
from weilgroups.lattice import (
    characteristic_polynomial,
    cokernel_integer,
    determinant,
    lattice_cokernel,
    smith_local,
    verify_witness,
    witness_basis,
    witness_matrix,
    witness_transcript,
)
from weilgroups.models import GroupType, LocalGroupType, LocalMatrix
from weilgroups.polynomials import IntPoly, eval_at_one, is_squarefree

T2_PLUS_8 = IntPoly(coeffs=(8, 0, 1))


def as_ints(matrix: LocalMatrix):
    return [[int(x) for x in row] for row in matrix.rows]


class TestWitness:
    def test_two_generator_witness(self):
        assert as_ints(witness_matrix(T2_PLUS_8, (1, 2), 2)) == [[0, -4], [2, 0]]

    def test_cyclic_witness(self):
        assert as_ints(witness_matrix(T2_PLUS_8, (0, 3), 2)) == [[0, -8], [1, 0]]
        assert as_ints(witness_matrix(T2_PLUS_8, LocalGroupType(prime=2, parts=(3,)), 2)) == [
            [0, -8],
            [1, 0],
        ]

    def test_unit_constant_term_gives_trivial_cokernel(self):
        """With no parts the witness is the companion matrix itself."""
        f = IntPoly(coeffs=(3, -1, 2, 1))
        matrix = witness_matrix(f, (), 2)
        assert as_ints(matrix) == [[-2, 1, -3], [1, 0, 0], [0, 1, 0]]
        assert characteristic_polynomial(matrix) == [3, -1, 2, 1]
        assert smith_local(matrix).exponents == (0, 0, 0)

    def test_basis_records_partial_sums(self):
        basis = witness_basis(T2_PLUS_8, (1, 2), 2)
        assert basis.exponents == (1, 2)
        assert basis.partial_sums == (0, 1, 3)
        assert basis.corrections == (Fraction(0), Fraction(1))
        assert basis.to_dict()["corrections"] == ["0/1", "1/1"]

    def test_non_monic_unit_leading_coefficient(self):
        """f(1 - t) of a cubic has leading coefficient -1."""
        f = IntPoly(coeffs=(32, -13, 4, -1))
        basis = witness_basis(f, (5,), 2)
        assert basis.corrections == (Fraction(-4), Fraction(13), Fraction(-1))
        assert verify_witness(f, (5,), 2)
        assert characteristic_polynomial(witness_matrix(f, (5,), 2)) == [-32, 13, -4, 1]
        with pytest.raises(PolygonConditionError):
            witness_basis(f, (1, 4), 2)

    def test_polygon_condition_violated(self):
        with pytest.raises(PolygonConditionError, match="polygon condition violated at s=1") as err:
            verify_witness(IntPoly(coeffs=(8, 1, 1)), (1, 2), 2)
        assert err.value.details["s"] == 1

    def test_precondition_errors(self):
        with pytest.raises(ConstantTermError):
            witness_basis(IntPoly(coeffs=(0, 1, 1)), (), 2)
        with pytest.raises(InvalidArgumentError, match="not an 2-unit"):
            witness_basis(IntPoly(coeffs=(8, 0, 2)), (1, 2), 2)
        with pytest.raises(InvalidArgumentError, match="exponents sum to 2"):
            witness_basis(T2_PLUS_8, (1, 1), 2)
        with pytest.raises(InvalidArgumentError):
            witness_basis(T2_PLUS_8, LocalGroupType(prime=3, parts=(1,)), 2)
        with pytest.raises(MultipleRootsError):
            verify_witness(IntPoly(coeffs=(4, 4, 1)), (2,), 2)

    def test_transcript(self):
        record = witness_transcript(T2_PLUS_8, (1, 2), 2)
        assert record["verified"]
        assert record["charpoly_matches"]
        assert record["elementary_divisors"] == [1, 2]
        assert record["matrix"]["rows"] == [["0/1", "-4/1"], ["2/1", "0/1"]]
        assert record["basis"]["partial_sums"] == [0, 1, 3]

    @pytest.mark.slow
    def test_witness_soundness(self):
        """Every group passing the polygon test is the cokernel of its witness lattice."""
        rng = random.Random(20240601)
        polynomials = 0
        groups = 0
        while polynomials < 500:
            d = rng.choice([2, 3, 4])
            ell = rng.choice([2, 3, 5])
            v = rng.randint(0, 6)
            unit = rng.choice([u for u in range(-30, 31) if u % ell])
            middle = [rng.randint(-50, 50) * ell ** rng.randint(0, 4) for _ in range(d - 1)]
            lead = rng.choice([1, -1, 1 + ell])
            f = IntPoly(coeffs=tuple([unit * ell ** v] + middle + [lead]))
            if not is_squarefree(f):
                continue
            polynomials += 1
            for group in criterion_local_groups(f, ell):
                assert verify_witness(f, group, ell), f"{f} at {ell}: {group.parts}"
                matrix = witness_matrix(f, group, ell)
                charpoly = characteristic_polynomial(matrix)
                assert charpoly == [Fraction(c, lead) for c in f.coeffs]
                assert ord_ell(charpoly[0], ell) == group.exponent_sum == v
                groups += 1
        print(f"  {groups} witness lattices verified over {polynomials} polynomials")
        assert groups >= polynomials


class TestSmithLocal:
    def test_examples(self):
        assert smith_local(LocalMatrix(prime=2, rows=[[0, -4], [2, 0]])).exponents == (1, 2)
        assert smith_local(LocalMatrix(prime=2, rows=[[0, -8], [1, 0]])).exponents == (0, 3)
        identity = LocalMatrix(prime=3, rows=[[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert smith_local(identity).exponents == (0, 0, 0)

    def test_rational_entries_with_unit_denominators(self):
        """Denominators prime to ell are units and do not change the cokernel."""
        matrix = LocalMatrix(prime=2, rows=[[Fraction(4, 3), 2], [Fraction(2, 5), 6]])
        divisors = smith_local(matrix)
        assert divisors.exponents == (1, 1)
        assert divisors.cokernel() == LocalGroupType(prime=2, parts=(1, 1))

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            smith_local(LocalMatrix(prime=2, rows=[[1, 2], [2, 4]]))

    def test_denominator_divisible_by_prime(self):
        with pytest.raises(ValueError, match="denominator divisible by 2"):
            LocalMatrix(prime=2, rows=[[Fraction(1, 2), 0], [0, 1]])

    def test_agrees_with_integer_smith_form(self):
        """Local exponents match ell-adic valuations of the integer Smith form."""
        rng = random.Random(7)
        checked = 0
        while checked < 200:
            d = rng.choice([2, 3, 4])
            rows = [[rng.randint(-12, 12) for _ in range(d)] for _ in range(d)]
            det = determinant(rows)
            if det == 0:
                continue
            group = cokernel_integer(rows)
            assert group.order == abs(det)
            for ell in (2, 3, 5):
                local = smith_local(LocalMatrix(prime=ell, rows=rows))
                assert sum(local.exponents) == ord_ell(det, ell)
                assert local.cokernel() == group.local(ell), f"{rows} at {ell}"
            checked += 1


class TestCokernelInteger:
    def test_counterexample(self):
        matrix = counterexample_matrix()
        assert abs(determinant(matrix)) == 128
        group = cokernel_integer(matrix)
        assert group == parse_group_label(COUNTEREXAMPLE_GROUP)
        assert group.order == eval_at_one(COUNTEREXAMPLE_POLY)

    def test_diagonal(self):
        assert cokernel_integer([[2, 0], [0, 6]]) == parse_group_label("Z/2 + Z/6")
        assert cokernel_integer([[1, 0], [0, 1]]) == GroupType.trivial()

    def test_errors(self):
        with pytest.raises(SingularMatrixError):
            cokernel_integer([[1, 2], [2, 4]])
        with pytest.raises(InvalidArgumentError):
            cokernel_integer([[1, 2, 3], [4, 5, 6]])


class TestLatticeCokernel:
    companion = [[0, -8], [1, 0]]

    def test_standard_lattice(self):
        assert lattice_cokernel(self.companion, [[1, 0], [0, 1]], 2).parts == (3,)

    def test_witness_lattice_scaled_into_standard_lattice(self):
        """2T for the witness T = <1, x/2> is spanned by 2 and x."""
        assert lattice_cokernel(self.companion, [[2, 0], [0, 1]], 2).parts == (1, 2)

    def test_not_invariant(self):
        with pytest.raises(NotLocalError):
            lattice_cokernel(self.companion, [[1, 1], [0, 2]], 2)

    def test_singular_basis(self):
        with pytest.raises(SingularMatrixError):
            lattice_cokernel(self.companion, [[1, 2], [2, 4]], 2)

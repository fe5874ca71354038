import itertools
import json

import numpy as np
import pytest

from gateflow import numerics as nx
from gateflow.endomorphism import (
    E,
    SymmetryClass,
    antisymmetric_commutant,
    antisymmetric_indices,
    basis,
    basis_element,
    basis_report,
    classify,
    commutes,
    commuting_j_positions,
    convention_j_position,
    digits_to_index,
    expand,
    image_coefficients,
    image_generators,
    image_support,
    index_to_digits,
    mapping_image_dimension,
    reconstruct,
    row_reduce_rank,
    single_j,
    verify_basis,
)
from gateflow.errors import DimensionMismatchError, IndexOutOfRangeError
from gateflow.gates import MATRICES
from gateflow.realspace import Convention, j_matrix
from gateflow.serialize import dumps

I, X, J, Z = E

# e_a^T e_b as (sign, index of result)
PRODUCT_TABLE = {
    0: [(1, 0), (1, 1), (1, 2), (1, 3)],
    1: [(1, 1), (1, 0), (1, 3), (1, 2)],
    2: [(-1, 2), (1, 3), (1, 0), (-1, 1)],
    3: [(1, 3), (-1, 2), (-1, 1), (1, 0)],
}


class TestBasisElement:
    def test_identity(self):
        b = basis_element(1, 0)
        np.testing.assert_allclose(b.matrix, I / np.sqrt(2))
        assert b.digits == (0,)

    def test_j(self):
        np.testing.assert_allclose(basis_element(1, 2).matrix, J / np.sqrt(2))

    def test_index_9(self):
        b = basis_element(2, 9)
        assert b.digits == (2, 1)
        np.testing.assert_allclose(b.matrix, np.kron(J, X) / 2)
        assert b.label == "J(x)X"

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            basis_element(2, 16)
        with pytest.raises(IndexOutOfRangeError):
            basis_element(1, -1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_digits_round_trip(self, n):
        for i in range(4**n):
            assert digits_to_index(index_to_digits(n, i)) == i

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_unit_norm(self, n):
        for b in basis(n):
            assert abs(nx.frobenius(b.matrix, b.matrix) - 1) < 1e-12

    def test_digit_positions_count_from_right(self):
        b = basis_element(3, digits_to_index((3, 1, 2)))
        assert b.digit_at(1) == 2 and b.digit_at(2) == 1 and b.digit_at(3) == 3


def test_multiplication_table():
    for a, row in PRODUCT_TABLE.items():
        for b, (sign, k) in enumerate(row):
            np.testing.assert_array_equal(E[a].T @ E[b], sign * E[k])


def test_jt_z_sign():
    # J^T Z and Z^T J are both -X; every off-diagonal product is traceless either way
    np.testing.assert_array_equal(J.T @ Z, -X)
    np.testing.assert_array_equal(Z.T @ J, -X)
    for a, b in itertools.product(range(4), repeat=2):
        assert np.trace(E[a].T @ E[b]) == (2 if a == b else 0)


class TestVerifyBasis:
    @pytest.mark.parametrize("n, count", [(1, 4), (2, 16), (3, 64)])
    def test_orthonormal(self, n, count):
        rep = verify_basis(n)
        assert rep.count == count
        assert rep.max_off_diagonal < 1e-12 and rep.max_diagonal_error < 1e-12
        assert rep.passed(1e-12)

    def test_pairwise_scan_agrees(self):
        # explicit pairwise frobenius scan for n = 2
        els = basis(2)
        worst = max(
            abs(nx.frobenius(a.matrix, b.matrix) - (a.index == b.index)) for a in els for b in els
        )
        assert worst < 1e-12


class TestClassify:
    def test_j(self):
        assert classify(basis_element(1, 2)) is SymmetryClass.ANTISYMMETRIC

    def test_jj(self):
        assert classify(basis_element(2, digits_to_index((2, 2)))) is SymmetryClass.SYMMETRIC

    def test_jx(self):
        assert classify(basis_element(2, digits_to_index((2, 1)))) is SymmetryClass.ANTISYMMETRIC

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 6), (3, 28)])
    def test_census_matches_transpose_scan(self, n, expected):
        by_transpose = [b.index for b in basis(n) if np.array_equal(b.matrix.T, -b.matrix)]
        assert len(by_transpose) == expected == (2**n) * (2**n - 1) // 2
        assert antisymmetric_indices(n) == by_transpose


class TestExpand:
    def test_identity(self):
        c = expand(np.eye(4), 2)
        assert abs(c[0] - 2) < 1e-15
        assert np.max(np.abs(c[1:])) == 0

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_basis_vectors(self, n):
        for b in basis(n):
            c = expand(b.matrix, n)
            e = np.zeros(4**n)
            e[b.index] = 1
            assert nx.max_abs(c - e) < 1e-12

    def test_cnot(self):
        cnot = MATRICES["CNOT"].real
        # brute-force trace over all 16 elements
        oracle = {
            (a, b): np.trace((np.kron(E[a], E[b]) / 2).T @ cnot)
            for a, b in itertools.product(range(4), repeat=2)
        }
        c = expand(cnot, 2)
        support = {index_to_digits(2, i): c[i] for i in np.flatnonzero(np.abs(c) > 1e-12)}
        assert set(support) == {(0, 0), (0, 1), (3, 0), (3, 1)}
        assert sorted(round(v, 12) for v in support.values()) == [-1, 1, 1, 1]
        for d, v in support.items():
            assert abs(v - oracle[d]) < 1e-12

    def test_reconstruct_random(self, rng):
        for _ in range(100):
            n = int(rng.choice([1, 2, 3]))
            m = rng.normal(size=(2**n, 2**n))
            assert nx.max_abs(reconstruct(expand(m, n), n) - m) < 1e-10

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            expand(np.eye(3), 1)


class TestCommutingPositions:
    def test_j_i(self):
        assert commuting_j_positions(basis_element(2, digits_to_index((2, 0)))) == {1, 2}

    def test_j_x(self):
        assert commuting_j_positions(basis_element(2, digits_to_index((2, 1)))) == {2}

    def test_x_z(self):
        assert commuting_j_positions(basis_element(2, digits_to_index((1, 3)))) == set()

    def test_single_j_positions(self):
        np.testing.assert_array_equal(single_j(2, 1), np.kron(I, J))
        np.testing.assert_array_equal(single_j(2, 2), np.kron(J, I))
        np.testing.assert_array_equal(single_j(3, 1), j_matrix(4, Convention.A_FIRST))
        np.testing.assert_array_equal(single_j(3, 3), j_matrix(4, Convention.J_FIRST))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_antisymmetric_always_commute_somewhere(self, n):
        for i in antisymmetric_indices(n):
            assert commuting_j_positions(basis_element(n, i))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_xz_only_never_commute(self, n):
        for b in basis(n):
            if set(b.digits) <= {1, 3}:
                assert commuting_j_positions(b) == frozenset()
                assert classify(b) is SymmetryClass.SYMMETRIC

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_union_is_all_antisymmetric(self, n):
        union = frozenset().union(*(antisymmetric_commutant(n, k) for k in range(1, n + 1)))
        assert union == frozenset(antisymmetric_indices(n))

    def test_mixed_antisymmetric_witness(self):
        # J(x)X + X(x)J is antisymmetric yet commutes with neither single-J structure
        m = np.kron(J, X) + np.kron(X, J)
        np.testing.assert_array_equal(m.T, -m)
        assert not commutes(single_j(2, 1), m) and not commutes(single_j(2, 2), m)


class TestMappingImage:
    @pytest.mark.parametrize("conv", list(Convention))
    def test_dimension(self, conv):
        assert mapping_image_dimension(2, conv) == 8
        assert mapping_image_dimension(3, conv) == 32

    @pytest.mark.parametrize("n", [2, 3])
    def test_rank_oracle(self, n):
        assert np.linalg.matrix_rank(image_coefficients(n)) == 4**n // 2

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("conv", list(Convention))
    def test_unused_directions(self, n, conv):
        k = convention_j_position(n, conv)
        unused = set(range(4**n)) - image_support(n, conv)
        assert len(unused) == 4**n // 2
        assert unused == {b.index for b in basis(n) if b.digit_at(k) in (1, 3)}

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("conv", list(Convention))
    def test_single_j_commutes_with_image(self, n, conv):
        j = single_j(n, convention_j_position(n, conv))
        for g in image_generators(n, conv):
            assert commutes(j, g)

    def test_row_reduce(self):
        assert row_reduce_rank(np.eye(3)) == 3
        assert row_reduce_rank([[1, 2], [2, 4]]) == 1
        assert row_reduce_rank(np.zeros((2, 5))) == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            mapping_image_dimension(1)


class TestReport:
    def test_n2(self):
        rep = json.loads(dumps(basis_report(2)))
        assert rep["count"] == 16 and rep["antisymmetric_count"] == 6
        assert rep["image_dimension"] == {"A_FIRST": 8, "J_FIRST": 8}
        assert rep["commuting_positions"]["9"] == [2]
        assert rep["verify"]["passed"] is True

    def test_n1(self):
        rep = basis_report(1)
        assert rep["antisymmetric_indices"] == [2]
        assert rep["image_dimension"] is None

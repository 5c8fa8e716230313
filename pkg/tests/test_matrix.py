import json

import pytest
from hypothesis import given, strategies as st

from src.errors import IndexOutOfRangeError, MatrixFormatError, PreconditionError, ShapeError
from src.matrix import (
    IndexTuple,
    Matrix,
    Permutation,
    block_upper_triangular,
    dumps_matrix,
    identity_matrix,
    load_matrix,
    loads_matrix,
    mat_add,
    mat_leq,
    mat_mul,
    mat_pow,
    minor,
    omega,
    permutation_matrix,
    row_replace,
    save_matrix,
    scalar_mul,
    submatrix_delete,
    submatrix_select,
    transpose,
    zero_matrix,
)
from src.semiring import Element, get_semiring
from tests.strategies import semiring_and_matrix, semiring_and_pair, square_matrices


def m(name, rows):
    return Matrix.from_values(get_semiring(name), rows)


class TestArithmetic:
    def test_add_max_plus(self):
        A = m("max_plus", [[1, "-inf"], [0, 2]])
        B = m("max_plus", [[0, 0], [0, 0]])
        assert mat_add(A, B) == m("max_plus", [[1, 0], [0, 2]])

    def test_add_fuzzy(self):
        assert mat_add(m("fuzzy_maxmin", [["1/5"]]), m("fuzzy_maxmin", [["7/10"]])) == m("fuzzy_maxmin", [["7/10"]])

    def test_mul_worked_pair(self, remark24_pair):
        A, B = remark24_pair
        assert mat_mul(A, B) == m("max_times", [[2, 1], [4, 2]])

    def test_identity_is_neutral(self, remark36_matrix):
        I = identity_matrix(remark36_matrix.semiring, 3)
        assert mat_mul(I, remark36_matrix) == remark36_matrix
        assert mat_mul(remark36_matrix, I) == remark36_matrix

    def test_boolean_three_cycle_squared(self):
        C = m("boolean", [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        assert mat_mul(C, C) == m("boolean", [[0, 0, 1], [1, 0, 0], [0, 1, 0]])

    def test_scalar_mul(self, remark24_pair, max_times):
        A, _ = remark24_pair
        assert scalar_mul(Element.rational(2), A) == m("max_times", [[2, 1], [4, 4]])
        assert scalar_mul(max_times.one, A) == A
        assert scalar_mul(max_times.zero, A) == zero_matrix(max_times, 2)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            mat_mul(m("boolean", [[1, 0]]), m("boolean", [[1, 0]]))

    def test_semiring_mismatch(self):
        with pytest.raises(ShapeError):
            mat_add(m("boolean", [[1]]), m("max_times", [[1]]))

    def test_unit_matrix_transpose(self):
        e12 = m("boolean", [[0, 1], [0, 0]])
        assert transpose(e12) == m("boolean", [[0, 0], [1, 0]])


class TestPower:
    def test_first_power(self):
        A = m("fuzzy_maxmin", [["1/2", "1/5"], ["3/10", "1/2"]])
        assert mat_pow(A, 1) == A

    def test_two_cycle_squares_to_identity(self):
        s = get_semiring("boolean")
        P = permutation_matrix(Permutation.from_cycles(2, [(1, 2)]), s)
        assert mat_pow(P, 2) == identity_matrix(s, 2)

    def test_zeroth_power_is_identity(self, remark36_matrix):
        assert mat_pow(remark36_matrix, 0) == identity_matrix(remark36_matrix.semiring, 3)

    def test_square_matches_product(self, remark36_matrix):
        assert mat_pow(remark36_matrix, 2) == mat_mul(remark36_matrix, remark36_matrix)

    def test_negative_power(self, remark36_matrix):
        with pytest.raises(PreconditionError):
            mat_pow(remark36_matrix, -1)


class TestSubmatrices:
    def test_full_selection(self, remark36_matrix):
        assert submatrix_select(remark36_matrix, (1, 2, 3), (1, 2, 3)) == remark36_matrix

    def test_single_entry(self, remark36_matrix):
        assert submatrix_select(remark36_matrix, (1,), (2,)) == m("max_times", [[0]])

    def test_minor_of_worked_matrix(self, remark36_matrix):
        assert minor(remark36_matrix, 1, 1) == m("max_times", [["1/5", "3/10"], [0, "3/10"]])

    def test_minor_is_delete_of_singletons(self, remark36_matrix):
        assert minor(remark36_matrix, 2, 3) == submatrix_delete(remark36_matrix, (2,), (3,))

    def test_delete_down_to_one_entry(self, remark36_matrix):
        assert submatrix_delete(remark36_matrix, (1, 2), (2, 3)) == m("max_times", [[0]])

    def test_minor_needs_two_rows(self):
        with pytest.raises(PreconditionError):
            minor(m("boolean", [[1]]), 1, 1)

    def test_bad_index_tuple(self, remark36_matrix):
        with pytest.raises(IndexOutOfRangeError):
            submatrix_select(remark36_matrix, (2, 1), (1, 2))
        with pytest.raises(IndexOutOfRangeError):
            submatrix_select(remark36_matrix, (1,), (1, 2))
        with pytest.raises(IndexOutOfRangeError):
            IndexTuple(3, (4,))

    @given(st.data())
    def test_select_complement_is_delete(self, data):
        s, A = data.draw(semiring_and_matrix(min_n=2))
        n = A.rows
        k = data.draw(st.integers(min_value=1, max_value=n - 1))
        alpha = data.draw(st.sampled_from(omega(k, n)))
        beta = data.draw(st.sampled_from(omega(k, n)))
        assert submatrix_delete(A, alpha, beta) == submatrix_select(A, alpha.complement(), beta.complement())

    @given(st.data())
    def test_selection_matches_indexing(self, data):
        s, A = data.draw(semiring_and_matrix(min_n=2))
        n = A.rows
        alpha = data.draw(st.sampled_from(omega(1, n) + omega(n - 1, n)))
        beta = data.draw(st.sampled_from(omega(len(alpha), n)))
        selected = submatrix_select(A, alpha, beta)
        for u, i in enumerate(alpha, start=1):
            for v, j in enumerate(beta, start=1):
                assert selected.entry(u, v) == A.entry(i, j)


class TestRowReplace:
    def test_same_row_is_identity(self, remark36_matrix):
        assert row_replace(remark36_matrix, 2, 2) == remark36_matrix

    def test_two_by_two(self, remark24_pair):
        A, _ = remark24_pair
        assert row_replace(A, 1, 2) == m("max_times", [[1, "1/2"], [1, "1/2"]])

    def test_out_of_range(self, remark36_matrix):
        with pytest.raises(IndexOutOfRangeError):
            row_replace(remark36_matrix, 1, 4)

    @given(st.data())
    def test_only_row_q_changes(self, data):
        s, A = data.draw(semiring_and_matrix(min_n=2))
        n = A.rows
        p = data.draw(st.integers(min_value=1, max_value=n))
        q = data.draw(st.integers(min_value=1, max_value=n))
        replaced = row_replace(A, p, q)
        for i in range(1, n + 1):
            assert replaced.row(i) == (A.row(p) if i == q else A.row(i))


class TestPermutations:
    def test_identity_matrix(self):
        s = get_semiring("max_plus")
        assert permutation_matrix(Permutation.identity(3), s) == identity_matrix(s, 3)

    def test_transposition(self):
        P = permutation_matrix(Permutation.from_cycles(2, [(1, 2)]), get_semiring("boolean"))
        assert P == m("boolean", [[0, 1], [1, 0]])

    @pytest.mark.parametrize("sigma", list(Permutation.all(3)), ids=str)
    def test_inverse_is_transpose(self, sigma):
        s = get_semiring("boolean")
        P = permutation_matrix(sigma, s)
        assert mat_mul(P, transpose(P)) == identity_matrix(s, 3)
        assert transpose(P) == permutation_matrix(sigma.inverse(), s)

    def test_products_follow_composition(self):
        s = get_semiring("fuzzy_maxmin")
        for sigma in Permutation.all(3):
            for tau in Permutation.all(3):
                product = mat_mul(permutation_matrix(sigma, s), permutation_matrix(tau, s))
                assert product == permutation_matrix(tau.compose(sigma), s)

    def test_cycles_and_text(self):
        sigma = Permutation((2, 3, 1, 4))
        assert sigma.cycles() == [(1, 2, 3), (4,)]
        assert str(sigma) == "[2 3 1 4]"
        assert sigma.power(3) == Permutation.identity(4)
        assert sigma.compose(sigma.inverse()) == Permutation.identity(4)

    def test_not_a_bijection(self):
        with pytest.raises(IndexOutOfRangeError):
            Permutation((1, 1, 2))


class TestOmega:
    def test_singletons(self):
        assert [t.indices for t in omega(1, 3)] == [(1,), (2,), (3,)]

    def test_pairs(self):
        assert [t.indices for t in omega(2, 3)] == [(1, 2), (1, 3), (2, 3)]

    def test_count(self):
        assert len(omega(3, 6)) == 20

    @pytest.mark.parametrize("k", [0, 3])
    def test_k_out_of_range(self, k):
        with pytest.raises(IndexOutOfRangeError):
            omega(k, 3)


class TestOrder:
    def test_reflexive_and_zero_is_least(self, remark36_matrix):
        assert mat_leq(remark36_matrix, remark36_matrix)
        assert mat_leq(zero_matrix(remark36_matrix.semiring, 3), remark36_matrix)

    @given(semiring_and_matrix())
    def test_add_idempotent(self, pair):
        s, A = pair
        assert mat_add(A, A) == A

    @given(semiring_and_matrix())
    def test_transpose_involution(self, pair):
        s, A = pair
        assert transpose(transpose(A)) == A

    @given(semiring_and_pair())
    def test_below_sum(self, triple):
        s, A, B = triple
        assert mat_leq(A, mat_add(A, B))
        assert mat_leq(A, B) == (mat_add(A, B) == B)

    @given(semiring_and_pair())
    def test_antisymmetric(self, triple):
        s, A, B = triple
        if mat_leq(A, B) and mat_leq(B, A):
            assert A == B

    @given(st.data())
    def test_products_are_monotone(self, data):
        s, A, C = data.draw(semiring_and_pair(max_n=3))
        n = A.rows
        B = mat_add(A, data.draw(square_matrices(s, n)))
        D = mat_add(C, data.draw(square_matrices(s, n)))
        assert mat_leq(mat_add(A, C), mat_add(B, D))
        assert mat_leq(mat_mul(A, C), mat_mul(B, D))


class TestBlocks:
    def test_block_layout(self, remark24_pair):
        A, B = remark24_pair
        M = block_upper_triangular(A, B, B)
        assert M.rows == 4
        assert M.row(1) == A.row(1) + B.row(1)
        assert M.row(3) == (A.semiring.zero, A.semiring.zero) + B.row(1)


class TestDocuments:
    def test_round_trip_is_byte_identical(self, remark36_matrix):
        text = dumps_matrix(remark36_matrix)
        assert loads_matrix(text) == remark36_matrix
        assert dumps_matrix(loads_matrix(text)) == text

    def test_divisor_lattice_carries_its_parameter(self):
        A = m("divisor_lattice(12)", [[4, 6], [1, 12]])
        document = json.loads(dumps_matrix(A))
        assert document["semiring"] == "divisor_lattice"
        assert document["N"] == 12
        assert loads_matrix(dumps_matrix(A)) == A

    def test_entries_are_canonical(self):
        A = m("max_plus", [["2/4", "-inf"]])
        assert json.loads(dumps_matrix(A))["entries"] == [["1/2", "-inf"]]

    def test_save_and_load(self, tmp_path, remark24_pair):
        A, _ = remark24_pair
        path = tmp_path / "A.json"
        save_matrix(A, path)
        assert load_matrix(path) == A

    @pytest.mark.parametrize("text", [
        "not json",
        "[]",
        '{"semiring": "nope", "rows": 1, "cols": 1, "entries": [["1"]]}',
        '{"semiring": "divisor_lattice", "rows": 1, "cols": 1, "entries": [["1"]]}',
        '{"semiring": "boolean", "rows": 2, "cols": 1, "entries": [["1"]]}',
        '{"semiring": "boolean", "rows": 1, "cols": 1, "entries": [[1]]}',
        '{"semiring": "boolean", "rows": 1, "cols": 1, "entries": [["2"]]}',
        '{"semiring": "max_times", "rows": 1, "cols": 1, "entries": [["0.1e3"]]}',
        '{"semiring": "max_times", "rows": 1, "cols": 1, "entries": [["1/0"]]}',
        '{"semiring": "boolean", "rows": true, "cols": 1, "entries": [["1"]]}',
        '{"semiring": "boolean", "rows": 1, "cols": false, "entries": [[]]}',
    ])
    def test_malformed_documents(self, text):
        with pytest.raises(MatrixFormatError):
            loads_matrix(text)

    def test_file_that_is_not_utf8(self, tmp_path):
        path = tmp_path / "A.json"
        path.write_bytes(b'{"semiring": "boolean", "rows": 1, "cols": 1, "entries": [["\xff"]]}')
        with pytest.raises(MatrixFormatError):
            load_matrix(path)

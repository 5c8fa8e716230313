import time

import pytest
from hypothesis import given, strategies as st

from src.errors import CapExceededError, IndexOutOfRangeError, PreconditionError, ShapeError
from src.generators import GenSpec, gen_matrix
from src.matrix import Matrix, identity_matrix, mat_mul, minor, omega, transpose
from src.permanent import (
    PermanentAlgorithm,
    compute_permanent,
    per,
    per_diag_dominant,
    per_enumerate,
    per_laplace,
    per_minor_table,
    per_row_expansion,
    per_subset_dp,
)
from src.semiring import builtin_semirings, get_semiring
from tests.strategies import semiring_and_matrix


def m(name, rows):
    return Matrix.from_values(get_semiring(name), rows)


class TestWorkedValues:
    def test_worked_pair(self, remark24_pair, max_times):
        A, B = remark24_pair
        assert per_enumerate(A) == max_times.parse("2")
        assert per_subset_dp(B) == max_times.parse("1")
        assert per_row_expansion(mat_mul(A, B), 1) == max_times.parse("4")

    def test_worked_three_by_three(self, remark36_matrix, max_times):
        assert per_enumerate(remark36_matrix) == max_times.parse("6/1000")
        assert per_laplace(remark36_matrix, (1, 2)) == max_times.parse("6/1000")

    def test_fuzzy_maxmin(self):
        A = m("fuzzy_maxmin", [["9/10", "3/10"], ["1/2", "4/5"]])
        assert per(A) == A.semiring.parse("4/5")

    @pytest.mark.parametrize("s", builtin_semirings(), ids=lambda s: s.name)
    def test_identity(self, s):
        I = identity_matrix(s, 4)
        assert per_enumerate(I) == s.one
        assert per_subset_dp(I) == s.one

    def test_zero_row(self):
        A = m("max_plus", [[1, 2, 3], ["-inf", "-inf", "-inf"], [0, 0, 0]])
        assert per_subset_dp(A).is_bottom

    def test_two_by_two_row_expansion(self):
        A = m("divisor_lattice(30)", [[6, 10], [15, 2]])
        s = A.semiring
        expected = s.add(s.mul(A.entry(1, 1), A.entry(2, 2)), s.mul(A.entry(1, 2), A.entry(2, 1)))
        assert per_row_expansion(A, 1) == expected
        assert per_row_expansion(A, 2) == expected


class TestHamacher:
    def test_two_by_two(self):
        A = m("fuzzy_hamacher", [["1/2", "1/2"], ["1/2", "1/2"]])
        assert per_subset_dp(A) == A.semiring.parse("1/3")

    def test_zero_entries(self):
        # T(0, 0) = 0 and T(1/2, 1/3) = 1/4
        A = m("fuzzy_hamacher", [[0, "1/2"], ["1/3", 0]])
        assert per_subset_dp(A) == per_enumerate(A) == A.semiring.parse("1/4")

    def test_all_zero(self):
        A = m("fuzzy_hamacher", [[0, 0], [0, 0]])
        assert per_subset_dp(A) == A.semiring.zero

    def test_expansions_at_six(self):
        A = gen_matrix(GenSpec(get_semiring("fuzzy_hamacher"), 6, 3))
        reference = per_enumerate(A)
        assert per_subset_dp(A) == reference
        assert per_laplace(A, (2, 5)) == reference
        assert per_row_expansion(A, 4) == reference


class TestMinorTable:
    def test_three_by_three(self, remark36_matrix, max_times):
        table = per_minor_table(remark36_matrix)
        assert table[0][0] == max_times.parse("3/50")
        assert table[2][2] == max_times.parse("1/50")

    @given(semiring_and_matrix(min_n=2, max_n=4))
    def test_matches_minors(self, pair):
        s, A = pair
        table = per_minor_table(A)
        for i in range(1, A.rows + 1):
            for j in range(1, A.rows + 1):
                assert table[i - 1][j - 1] == per_enumerate(minor(A, i, j))

    def test_needs_two_rows(self):
        with pytest.raises(PreconditionError):
            per_minor_table(m("boolean", [[1]]))


class TestDiagonal:
    def test_dominant_diagonal(self):
        A = m("max_times", [[3, 1, 2], [0, 2, 2], [1, "1/2", 1]])
        assert per_diag_dominant(A) == per_enumerate(A) == A.semiring.parse("6")

    def test_violation_names_the_entry(self):
        A = m("max_times", [[1, 2], [0, 1]])
        with pytest.raises(PreconditionError) as info:
            per_diag_dominant(A)
        assert info.value.witness == (1, 2)


class TestErrors:
    def test_non_square(self):
        with pytest.raises(ShapeError):
            per_subset_dp(m("boolean", [[1, 0]]))

    def test_enumeration_cap(self):
        I = identity_matrix(get_semiring("boolean"), 11)
        with pytest.raises(CapExceededError) as info:
            per_enumerate(I)
        assert info.value.cap == 10
        assert info.value.cap_name == "SEMIPERM_ENUM_CAP"

    def test_cap_from_environment(self, monkeypatch, remark36_matrix):
        monkeypatch.setenv("SEMIPERM_DP_CAP", "2")
        with pytest.raises(CapExceededError):
            per_subset_dp(remark36_matrix)

    def test_laplace_alpha_out_of_range(self, remark36_matrix):
        with pytest.raises(IndexOutOfRangeError):
            per_laplace(remark36_matrix, (1, 2, 3))
        with pytest.raises(IndexOutOfRangeError):
            per_laplace(remark36_matrix, (4,))

    def test_row_out_of_range(self, remark36_matrix):
        with pytest.raises(IndexOutOfRangeError):
            per_row_expansion(remark36_matrix, 0)

    def test_expansions_need_two_rows(self):
        with pytest.raises(PreconditionError):
            per_row_expansion(m("boolean", [[1]]), 1)


class TestDispatch:
    @pytest.mark.parametrize("algorithm", [a for a in PermanentAlgorithm if a is not PermanentAlgorithm.FAST])
    def test_every_algorithm_on_the_dominant_example(self, algorithm):
        A = m("max_times", [[3, 1, 2], [0, 2, 2], [1, "1/2", 1]])
        result = compute_permanent(A, algorithm, alpha=(2, 3), row=3)
        assert result.value == A.semiring.parse("6")
        assert result.algorithm is algorithm
        assert result.n == 3

    def test_fast_path(self):
        A = m("max_plus", [[1, 5], [4, 1]])
        assert compute_permanent(A, PermanentAlgorithm.FAST).value == A.semiring.parse("9")

    def test_fast_path_is_refused_for_max_times(self, remark36_matrix):
        with pytest.raises(PreconditionError):
            compute_permanent(remark36_matrix, PermanentAlgorithm.FAST)


class TestAgreement:
    @given(semiring_and_matrix(max_n=5))
    def test_subset_dp_matches_enumeration(self, pair):
        s, A = pair
        assert per_subset_dp(A) == per_enumerate(A)

    @given(semiring_and_matrix(min_n=2, max_n=4))
    def test_laplace_is_independent_of_alpha(self, pair):
        s, A = pair
        reference = per_enumerate(A)
        for k in range(1, A.rows):
            for alpha in omega(k, A.rows):
                assert per_laplace(A, alpha) == reference

    @given(semiring_and_matrix(min_n=2, max_n=4), st.data())
    def test_row_expansion_is_independent_of_row(self, pair, data):
        s, A = pair
        i = data.draw(st.integers(min_value=1, max_value=A.rows))
        assert per_row_expansion(A, i) == per_subset_dp(A)

    @given(semiring_and_matrix())
    def test_transpose_invariance(self, pair):
        s, A = pair
        assert per_subset_dp(transpose(A)) == per_subset_dp(A)


@pytest.mark.slow
@pytest.mark.parametrize("s", builtin_semirings(), ids=lambda s: s.name)
def test_subset_dp_at_eighteen(s):
    A = gen_matrix(GenSpec(s, 18, 1))
    start = time.perf_counter()
    per_subset_dp(A)
    assert time.perf_counter() - start < 5

import time

import pytest

from src.errors import IndexOutOfRangeError, UsageError
from src.matrix import Matrix, Permutation
from src.semiring import Element, builtin_semirings, get_semiring
from src.verify import (
    FAST_PATH_SEMIRINGS,
    CheckReport,
    Suite,
    aggregate,
    check_cor25,
    check_cycle_bound,
    check_eq41,
    check_lemma43,
    check_prop21,
    check_prop23,
    check_remark24,
    check_remark36,
    check_thm33,
    check_thm35,
    run_suite,
    run_trials,
    worked_examples,
)

GENERAL_SUITES = [
    s for s in Suite
    if s not in (Suite.LEMMA42, Suite.REMARK24, Suite.REMARK36, Suite.FAST_PATHS)
]


def m(name, rows):
    return Matrix.from_values(get_semiring(name), rows)


class TestWorkedExamples:
    def test_product_inequality_is_strict(self):
        report = check_remark24()
        assert report.ok
        assert report.trials == 1

    def test_adjoint_product_differs_from_per(self):
        report = check_remark36()
        assert report.ok

    def test_examples_are_max_times(self):
        assert {A.semiring.name for A in worked_examples().values()} == {"max_times"}


class TestSingleChecks:
    def test_prop21_on_the_worked_pair(self, remark24_pair):
        A, B = remark24_pair
        sigma = Permutation((2, 1))
        report = check_prop21(A, B, Element.rational(3), sigma, Permutation.identity(2))
        assert report.ok, report.counterexample

    def test_product_inequality(self, remark24_pair):
        assert check_prop23(*remark24_pair).ok

    def test_star_suites_skip_the_worked_matrix(self, remark36_matrix):
        report = check_thm33(remark36_matrix)
        assert report.skipped == 1
        assert report.trials == 0
        assert report.ok

    def test_cor25_skips_non_idempotent(self, remark24_pair):
        assert check_cor25(remark24_pair[0]).skipped == 1

    def test_cor25_on_idempotent(self):
        report = check_cor25(m("max_times", [[1, "1/2"], ["1/3", 1]]))
        assert report.trials == 1
        assert report.ok

    def test_chain_and_cycle_bounds(self, remark36_matrix):
        assert check_lemma43(remark36_matrix, (1, 3, 1)).ok
        assert check_eq41(remark36_matrix, 1, 2, 3).ok
        assert check_cycle_bound(remark36_matrix, Permutation((2, 3, 1))).ok

    @pytest.mark.parametrize("indices", [(), (1, 2, 3, 1), (0,), (4,)])
    def test_chain_indices_are_validated(self, remark36_matrix, indices):
        with pytest.raises(IndexOutOfRangeError):
            check_lemma43(remark36_matrix, indices)

    def test_failure_carries_a_counterexample(self):
        # Ordinary + breaks the product identity: per(A adj(A)) = 8 but per(A)^2 = 4
        A = m("plus_times_control", [[1, 1], [1, 1]])
        report = check_thm35(A)
        assert not report.ok
        counterexample = report.counterexample
        assert counterexample.clause == "per(A adj(A)) = per(A)^n"
        assert counterexample.left == Element.rational(8)
        assert counterexample.right == Element.rational(4)
        assert counterexample.matrices == (("A", A),)


class TestSuites:
    @pytest.mark.parametrize("suite", GENERAL_SUITES, ids=lambda s: s.value)
    @pytest.mark.parametrize("s", builtin_semirings(), ids=lambda s: s.name)
    def test_suite_passes(self, suite, s):
        report = run_suite(suite.value, s, 3, 4, 11)
        assert report.ok, report.counterexample
        assert report.trials + report.skipped == 4

    @pytest.mark.parametrize("s", [get_semiring(i.value) for i in FAST_PATH_SEMIRINGS], ids=lambda s: s.name)
    def test_fast_paths(self, s):
        assert run_suite("fast_paths", s, 4, 10, 0).ok

    def test_fast_paths_refuse_other_semirings(self, max_times):
        with pytest.raises(UsageError):
            run_suite("fast_paths", max_times, 3, 1, 0)

    def test_combiner_suite(self, max_times):
        report = run_suite("lemma42", max_times, 3, 1, 0)
        assert report.trials == report.passed == 648
        assert report.semiring == "none"

    def test_worked_example_suites(self, max_times):
        assert run_suite("remark24", max_times, 3, 1, 7).seed == 7
        assert run_suite("remark36", max_times, 3, 1, 7).ok

    @pytest.mark.parametrize("args", [("thm99", 3, 1), ("thm35", 1, 1), ("thm35", 3, 0)])
    def test_bad_arguments(self, max_times, args):
        name, n, trials = args
        with pytest.raises(UsageError):
            run_suite(name, max_times, n, trials, 0)

    def test_reports_are_reproducible(self):
        s = get_semiring("max_plus")
        assert run_suite("lemma44", s, 3, 6, 42) == run_suite("lemma44", s, 3, 6, 42)

    def test_thread_pool_gives_the_same_report(self):
        s = get_semiring("fuzzy_maxprod")
        assert run_suite("row_replacement", s, 3, 8, 5, workers=4) == run_suite("row_replacement", s, 3, 8, 5, workers=1)

    def test_failing_trial_is_tagged_with_its_seed(self):
        report = run_suite("thm35", get_semiring("plus_times_control"), 3, 5, 100)
        assert not report.ok
        assert report.counterexample.seed in range(100, 105)
        assert report.trials == 5


class TestAggregation:
    def test_run_trials_orders_results(self):
        results = run_trials(lambda t, seed: (t, seed), 5, 10, workers=3)
        assert results == [(t, 10 + t) for t in range(5)]

    def test_first_counterexample_wins(self):
        first = CheckReport("x", "boolean", 1, 0, counterexample="first")
        second = CheckReport("x", "boolean", 1, 0, counterexample="second")
        clean = CheckReport("x", "boolean", 1, 1)
        skipped = CheckReport("x", "boolean", 0, 0, skipped=1)
        report = aggregate("x", "boolean", [clean, first, skipped, second], seed=3)
        assert (report.trials, report.passed, report.skipped) == (3, 1, 1)
        assert report.counterexample == "first"
        assert report.failed == 2


def run_sizes(suite, s, sizes, trials, seed=0):
    """Run ``suite`` once per size and return the failing reports."""
    reports = [run_suite(suite, s, n, trials, seed) for n in sizes]
    return [r for r in reports if not r.ok]


@pytest.mark.slow
class TestAcceptanceSizes:
    def test_cross_algorithms(self):
        start = time.perf_counter()
        for s in builtin_semirings():
            assert run_sizes("cross_algorithms", s, range(2, 7), 200) == []
        assert time.perf_counter() - start < 60

    def test_thm35(self):
        start = time.perf_counter()
        for s in builtin_semirings():
            assert run_sizes("thm35", s, range(2, 6), 500) == []
        assert time.perf_counter() - start < 120

    @pytest.mark.parametrize("suite", ["thm33", "lemma32"])
    @pytest.mark.parametrize("s", builtin_semirings(), ids=lambda s: s.name)
    def test_star_profile_suites(self, suite, s):
        assert run_sizes(suite, s, range(2, 6), 200) == []

    @pytest.mark.parametrize("suite", ["lemma43", "lemma44", "prop21", "prop23", "prop31", "cor25"])
    @pytest.mark.parametrize("s", builtin_semirings(), ids=lambda s: s.name)
    def test_property_suites(self, suite, s):
        assert run_sizes(suite, s, range(2, 6), 200) == []

    @pytest.mark.parametrize("s", [get_semiring(i.value) for i in FAST_PATH_SEMIRINGS], ids=lambda s: s.name)
    def test_fast_paths(self, s):
        assert run_sizes("fast_paths", s, range(2, 9), 500) == []

    def test_combiner_exhaustive(self, max_times):
        start = time.perf_counter()
        assert run_suite("lemma42", max_times, 3, 1, 0).ok
        assert run_suite("lemma42", max_times, 4, 1, 0).ok
        assert time.perf_counter() - start < 60

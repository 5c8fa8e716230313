import pytest

pytest.importorskip("mcp")

from src import server  # noqa: E402
from src.matrix import dumps_matrix, loads_matrix  # noqa: E402


def test_permanent_tool(remark36_matrix):
    assert server.compute_permanent(dumps_matrix(remark36_matrix)) == "3/500"
    assert server.compute_permanent(dumps_matrix(remark36_matrix), "laplace", "2") == "3/500"


def test_adjoint_tool(remark36_matrix):
    adjoint = loads_matrix(server.compute_adjoint(dumps_matrix(remark36_matrix)))
    assert str(adjoint.entry(1, 1)) == "3/50"


def test_power_tool(remark24_pair):
    A, _ = remark24_pair
    assert loads_matrix(server.compute_power(dumps_matrix(A), 0)).entry(1, 2).value == 0


def test_suite_tool():
    assert "result: PASS" in server.run_check_suite("thm33", "fuzzy_maxmin", 3, 3, 0)


def test_search_tool():
    assert "counterexample:" in server.search_counterexamples("strict_2_3", n=2, trials=1)


def test_axioms_tool():
    assert "result: PASS" in server.check_semiring_axioms("subset_lattice(3)")


def test_errors_come_back_as_text():
    assert server.compute_permanent("not json").startswith("Error computing permanent:")
    assert server.run_check_suite("thm99").startswith("Error running suite:")
    assert server.check_semiring_axioms("nope").startswith("Error checking axioms:")

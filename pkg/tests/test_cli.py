import io
import json

import pytest

from main import run
from src.matrix import dumps_matrix, load_matrix, mat_pow, save_matrix


@pytest.fixture
def matrix_files(tmp_path, remark24_pair, remark36_matrix):
    A, B = remark24_pair
    paths = {}
    for name, matrix in (("A24", A), ("B24", B), ("A36", remark36_matrix)):
        paths[name] = tmp_path / f"{name}.json"
        save_matrix(matrix, paths[name])
    return paths


def cli(*argv):
    out = io.StringIO()
    status = run([str(a) for a in argv], out=out)
    return status, out.getvalue()


class TestPer:
    def test_default_algorithm(self, matrix_files):
        assert cli("per", matrix_files["A24"]) == (0, "2\n")

    @pytest.mark.parametrize("flags", [["--alg", "enum"], ["--alg", "laplace", "--alpha", "1,3"],
                                       ["--alg", "row", "--row", "2"]])
    def test_other_algorithms(self, matrix_files, flags):
        assert cli("per", matrix_files["A36"], *flags) == (0, "3/500\n")

    def test_json_output(self, matrix_files, tmp_path):
        out = tmp_path / "per.json"
        status, _ = cli("per", matrix_files["B24"], "--out", out)
        assert status == 0
        assert json.loads(out.read_text()) == {"semiring": "max_times", "n": 2, "algorithm": "dp", "value": "1"}

    def test_semiring_mismatch(self, matrix_files):
        assert cli("per", matrix_files["A24"], "--semiring", "max_plus")[0] == 2

    def test_precondition_failure(self, matrix_files, capsys):
        assert cli("per", matrix_files["A36"], "--alg", "diag")[0] == 2
        assert "a_13" in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert cli("per", tmp_path / "missing.json")[0] == 3

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"semiring": "boolean", "rows": 1, "cols": 1, "entries": [["7"]]}')
        assert cli("per", path)[0] == 3

    def test_zero_denominator_is_an_input_error(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"semiring": "max_times", "rows": 1, "cols": 1, "entries": [["1/0"]]}')
        assert cli("per", path)[0] == 3

    def test_file_that_is_not_utf8(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_bytes(b'{"semiring": "max_times", "rows": 1, "cols": 1, "entries": [["\xff"]]}')
        assert cli("per", path)[0] == 3

    def test_cap_exceeded(self, matrix_files, monkeypatch):
        monkeypatch.setenv("SEMIPERM_DP_CAP", "2")
        assert cli("per", matrix_files["A36"])[0] == 4


class TestMatrixVerbs:
    def test_adjoint(self, matrix_files, tmp_path):
        out = tmp_path / "adj.json"
        status, text = cli("adj", matrix_files["A36"], "--out", out)
        assert status == 0
        assert load_matrix(out).entry(1, 1) == load_matrix(out).semiring.parse("3/50")
        assert text == out.read_text()

    def test_power(self, matrix_files):
        A = load_matrix(matrix_files["A36"])
        assert cli("pow", matrix_files["A36"], 2) == (0, dumps_matrix(mat_pow(A, 2)))


class TestCheck:
    def test_passing_suite(self):
        status, text = cli("check", "thm35", "--semiring", "max_plus", "--n", 3, "--trials", 3)
        assert status == 0
        assert "result: PASS (3/3)" in text

    def test_failing_suite(self):
        status, text = cli("check", "thm35", "--semiring", "plus_times_control", "--trials", 2)
        assert status == 1
        assert "counterexample:" in text

    def test_report_document(self, tmp_path):
        out = tmp_path / "report.json"
        assert cli("check", "remark36", "--out", out)[0] == 0
        assert json.loads(out.read_text())["ok"] is True
        assert out.read_text().endswith("}\n")

    def test_fast_paths_need_a_fast_semiring(self):
        assert cli("check", "fast_paths", "--semiring", "max_times")[0] == 2

    def test_parameterized_semiring(self):
        assert cli("check", "lemma43", "--semiring", "divisor_lattice(12)", "--trials", 3)[0] == 0


class TestSearch:
    def test_witness_is_still_success(self):
        status, text = cli("search", "problem_1_1", "--trials", 2)
        assert status == 0
        assert "relation: left != right" in text

    def test_not_found(self):
        status, text = cli("search", "problem_1_1", "--semiring", "boolean", "--trials", 3)
        assert status == 0
        assert "note: not found in 3 trials" in text


class TestAxioms:
    def test_builtin(self):
        assert cli("axioms", "divisor_lattice(30)")[0] == 0

    def test_control(self, tmp_path):
        out = tmp_path / "axioms.json"
        status, text = cli("axioms", "plus_times_control", "--out", out)
        assert status == 1
        assert "add idempotent" in text
        assert json.loads(out.read_text())["passed"] is False

    def test_unknown_semiring(self):
        assert cli("axioms", "nope")[0] == 2


class TestArguments:
    def test_missing_verb(self):
        assert cli()[0] == 2

    def test_unknown_suite(self):
        assert cli("check", "thm99")[0] == 2

    def test_version(self):
        assert cli("--version")[0] == 0

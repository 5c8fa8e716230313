from streamlit.testing.v1 import AppTest

from src.matrix import dumps_matrix
from src.verify import worked_examples

APP = "../streamlit_app.py"


def metric_values(at):
    return {m.label: m.value for m in at.metric}


def test_starts_on_the_three_by_three_example():
    at = AppTest.from_file(APP, default_timeout=30).run()
    assert not at.exception
    assert at.text_area(key="matrix_input").value == dumps_matrix(worked_examples()["remark36_A"])
    assert metric_values(at)["per(A)"] == "3/500"


def test_loading_an_example():
    at = AppTest.from_file(APP, default_timeout=30).run()
    at.button(key="example_remark24_A").click().run()
    assert not at.exception
    assert metric_values(at) == {"Semiring": "max_times", "n": "2", "per(A)": "2"}


def test_bad_document_shows_an_error():
    at = AppTest.from_file(APP, default_timeout=30).run()
    at.text_area(key="matrix_input").input("{").run()
    assert at.error
    assert not at.metric


def test_running_a_suite():
    at = AppTest.from_file(APP, default_timeout=30).run()
    at.number_input(key="trials").set_value(2)
    at.button(key="run_suite").click().run()
    assert not at.exception
    assert "result: PASS (2/2)" in at.session_state.suite_report

#!/usr/bin/env python3
"""
Semiring Permanents Dashboard
A lightweight dashboard for computing permanents and adjoints and running the verification suites.
"""

import streamlit as st
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

from src.adjoint import adj, satisfies_star
from src.errors import SemiringError
from src.matrix import dumps_matrix, loads_matrix, mat_pow
from src.permanent import per_subset_dp
from src.report_formatter import ReportFormatter
from src.semiring import builtin_semirings
from src.verify import Suite, run_suite, worked_examples

# Page configuration
st.set_page_config(
    page_title="Semiring Permanents",
    page_icon="🧮",
    layout="wide",
    initial_sidebar_state="expanded"
)

report_formatter = ReportFormatter()

EXAMPLE_LABELS = {
    "remark24_A": "2x2 max-times pair, left factor",
    "remark24_B": "2x2 max-times pair, right factor",
    "remark36_A": "3x3 max-times matrix with per(A adj(A)) != per(A)",
}

# Initialize session state
if "matrix_input" not in st.session_state:
    st.session_state.matrix_input = dumps_matrix(worked_examples()["remark36_A"])

if "suite_report" not in st.session_state:
    st.session_state.suite_report = None


def describe_matrix(text: str) -> dict:
    """
    Compute the dashboard summary of a matrix document.

    Args:
        text: Matrix document

    Returns:
        Dict with per, adjoint, power and condition (*) entries (as text)
    """
    A = loads_matrix(text)
    summary = {"semiring": A.semiring.name, "n": str(A.rows), "per": str(per_subset_dp(A))}
    if A.is_square and A.rows >= 2:
        star = satisfies_star(A)
        summary["adj"] = dumps_matrix(adj(A))
        summary["power"] = dumps_matrix(mat_pow(A, A.rows - 1))
        summary["star"] = "holds" if star.holds else f"fails at (i, j, k) = {star.violation}"
    return summary


def main():
    st.title("🧮 Semiring Permanents")

    # Sidebar
    with st.sidebar:
        st.header("📚 Worked examples")
        examples = worked_examples()
        for name, label in EXAMPLE_LABELS.items():
            if st.button(label, key=f"example_{name}", use_container_width=True):
                st.session_state.matrix_input = dumps_matrix(examples[name])
                st.rerun()

        st.divider()

        st.header("🧪 Suite")
        semiring_names = [s.name for s in builtin_semirings()]
        suite = st.selectbox("Suite", [s.value for s in Suite], key="suite")
        semiring = st.selectbox("Semiring", semiring_names, index=semiring_names.index("max_times"), key="semiring")
        n = st.number_input("n", min_value=2, max_value=6, value=3, key="n")
        trials = st.number_input("Trials", min_value=1, max_value=1000, value=50, key="trials")
        seed = st.number_input("Seed", min_value=0, value=0, key="seed")

        if st.button("▶️ Run suite", key="run_suite", use_container_width=True):
            try:
                s = next(x for x in builtin_semirings() if x.name == semiring)
                with st.spinner(f"Running {suite}..."):
                    report = run_suite(suite, s, int(n), int(trials), int(seed))
                st.session_state.suite_report = report_formatter.format_check_report(report)
            except SemiringError as e:
                st.session_state.suite_report = f"Error: {str(e)}"

    # Main content
    st.header("Matrix")
    st.caption("Paste a matrix document or load a worked example from the sidebar")
    text = st.text_area("Matrix document", height=220, key="matrix_input")

    try:
        summary = describe_matrix(text)
    except (SemiringError, ValueError) as e:
        st.error(f"Error: {str(e)}")
        summary = None

    if summary:
        col1, col2, col3 = st.columns(3)
        col1.metric("Semiring", summary["semiring"])
        col2.metric("n", summary["n"])
        col3.metric("per(A)", summary["per"])

        if "adj" in summary:
            st.write(f"**Condition (\\*):** {summary['star']}")
            col1, col2 = st.columns(2)
            with col1:
                st.markdown("#### adj(A)")
                st.code(summary["adj"], language="json")
            with col2:
                st.markdown("#### A^(n-1)")
                st.code(summary["power"], language="json")

    if st.session_state.suite_report:
        st.divider()
        st.header("Suite report")
        st.code(st.session_state.suite_report, language="text")


if __name__ == "__main__":
    main()

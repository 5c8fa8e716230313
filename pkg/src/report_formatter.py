"""Report formatter for rendering check, search and axiom reports as text or JSON."""

import json
from typing import Any, Dict, List

from .matrix import Matrix, dumps_matrix, matrix_to_document
from .semiring import AxiomReport, Element
from .verify import CheckReport, Counterexample


def _value_to_text(value: Any) -> str:
    if isinstance(value, Matrix):
        return "\n" + dumps_matrix(value).rstrip("\n")
    return str(value)


def _value_to_document(value: Any) -> Any:
    if isinstance(value, Matrix):
        return matrix_to_document(value)
    if isinstance(value, Element):
        return str(value)
    if isinstance(value, tuple):
        return [_value_to_document(v) for v in value]
    return value if isinstance(value, (int, str)) or value is None else str(value)


class ReportFormatter:
    """Formats reports into plain text for terminals and JSON documents for ``--out``."""

    def format_check_report(self, report: CheckReport) -> str:
        """
        Render a CheckReport as text.

        Witness matrices are printed in the matrix file format so they can be
        saved and fed back to ``per``/``adj``.

        Args:
            report: Report to render

        Returns:
            Text ending with a newline
        """
        lines = [
            f"statement: {report.statement}",
            f"semiring: {report.semiring}",
            f"trials: {report.trials}",
            f"passed: {report.passed}",
        ]
        if report.skipped:
            lines.append(f"skipped: {report.skipped}")
        if report.seed is not None:
            lines.append(f"seed: {report.seed}")
        if report.note:
            lines.append(f"note: {report.note}")
        lines.append(f"result: {'PASS' if report.ok else 'FAIL'} ({report.passed}/{report.trials})")
        if report.counterexample is not None:
            lines.extend(self._format_counterexample(report.counterexample))
        return "\n".join(lines) + "\n"

    def _format_counterexample(self, counterexample: Counterexample) -> List[str]:
        lines = [
            "counterexample:",
            f"  clause: {counterexample.clause}",
            f"  relation: left {counterexample.relation} right",
            f"  left: {_value_to_text(counterexample.left)}",
            f"  right: {_value_to_text(counterexample.right)}",
        ]
        if counterexample.seed is not None:
            lines.append(f"  trial seed: {counterexample.seed}")
        for name, value in counterexample.parameters:
            lines.append(f"  {name}: {value}")
        for name, matrix in counterexample.matrices:
            lines.append(f"  matrix {name}:")
            lines.append(dumps_matrix(matrix).rstrip("\n"))
        return lines

    def check_report_to_document(self, report: CheckReport) -> Dict[str, Any]:
        document: Dict[str, Any] = {
            "statement": report.statement,
            "semiring": report.semiring,
            "trials": report.trials,
            "passed": report.passed,
            "skipped": report.skipped,
            "seed": report.seed,
            "ok": report.ok,
        }
        if report.note:
            document["note"] = report.note
        counterexample = report.counterexample
        if counterexample is not None:
            document["counterexample"] = {
                "clause": counterexample.clause,
                "relation": counterexample.relation,
                "left": _value_to_document(counterexample.left),
                "right": _value_to_document(counterexample.right),
                "seed": counterexample.seed,
                "parameters": dict(counterexample.parameters),
                "matrices": {name: matrix_to_document(m) for name, m in counterexample.matrices},
            }
        return document

    def format_axiom_report(self, report: AxiomReport) -> str:
        """Render an AxiomReport as text, one line per failing axiom."""
        scope = "exhaustive" if report.exhaustive else "sampled"
        lines = [
            f"semiring: {report.semiring.name}",
            f"samples: {report.samples_used} ({scope})",
            f"result: {'PASS' if report.passed else 'FAIL'}",
        ]
        for axiom, witness in report.failures:
            lines.append(f"  {axiom}: " + ", ".join(str(e) for e in witness))
        return "\n".join(lines) + "\n"

    def axiom_report_to_document(self, report: AxiomReport) -> Dict[str, Any]:
        return {
            "semiring": report.semiring.name,
            "samples_used": report.samples_used,
            "exhaustive": report.exhaustive,
            "passed": report.passed,
            "failures": [{"axiom": axiom, "witness": [str(e) for e in witness]} for axiom, witness in report.failures],
        }

    def dumps(self, document: Dict[str, Any]) -> str:
        return json.dumps(document, indent=2) + "\n"

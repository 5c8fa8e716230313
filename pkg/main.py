#!/usr/bin/env python3
"""Command-line entry point: permanents, adjoints, verification suites and the MCP server."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

from src import __version__
from src.adjoint import adj
from src.errors import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, SemiringError, UsageError, exit_status_for
from src.generators import GenSpec, Profile
from src.matrix import Matrix, dumps_matrix, load_matrix, mat_pow, save_matrix
from src.permanent import PermanentAlgorithm, compute_permanent
from src.report_formatter import ReportFormatter
from src.search import SearchStatement, search_counterexample
from src.semiring import check_axioms, get_semiring
from src.utils import get_log_level, parse_index_list
from src.verify import Suite, run_suite

logger = logging.getLogger(__name__)

report_formatter = ReportFormatter()


def configure_logging(verbose: bool, default_level: str) -> None:
    """Log to stderr; stdout is reserved for command output and JSON-RPC."""
    level = "INFO" if verbose else get_log_level(default_level)
    logging.basicConfig(
        level=getattr(logging, level),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        datefmt='%Y-%m-%d %H:%M:%S',
        force=True,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiperm",
        description="Exact permanents and adjoints over additively idempotent semirings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress at INFO level")
    commands = parser.add_subparsers(dest="verb", required=True)

    per = commands.add_parser("per", help="print the permanent of a matrix file")
    per.add_argument("file")
    per.add_argument("--alg", choices=[a.value for a in PermanentAlgorithm], default="dp")
    per.add_argument("--alpha", help="rows for Laplace expansion, e.g. 1,2")
    per.add_argument("--row", type=int, default=1, help="row for --alg row (default: 1)")
    per.add_argument("--semiring", help="expected semiring of the file")
    per.add_argument("--out", help="write a JSON result document")

    adjoint = commands.add_parser("adj", help="print the adjoint of a matrix file")
    adjoint.add_argument("file")
    adjoint.add_argument("--semiring", help="expected semiring of the file")
    adjoint.add_argument("--out", help="also write the adjoint to this matrix file")

    power = commands.add_parser("pow", help="print A^L for a matrix file")
    power.add_argument("file")
    power.add_argument("exponent", type=int)
    power.add_argument("--semiring", help="expected semiring of the file")
    power.add_argument("--out", help="also write the power to this matrix file")

    check = commands.add_parser("check", help="run a verification suite")
    check.add_argument("suite", choices=[s.value for s in Suite])
    _add_trial_flags(check)

    search = commands.add_parser("search", help="search for counterexamples")
    search.add_argument("statement", choices=[s.value for s in SearchStatement])
    _add_trial_flags(search)
    search.add_argument("--profile", choices=[p.value for p in Profile], default=Profile.DENSE.value)

    axioms = commands.add_parser("axioms", help="check the semiring axioms")
    axioms.add_argument("semiring")
    axioms.add_argument("--out", help="write a JSON report document")

    commands.add_parser("serve", help="run the MCP tool server on stdin/stdout")
    return parser


def _add_trial_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--semiring", default="max_times")
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", help="write a JSON report document")


def _load(path: str, semiring: Optional[str]) -> Matrix:
    A = load_matrix(path)
    if semiring is not None and get_semiring(semiring) != A.semiring:
        raise UsageError(f"--semiring {semiring} does not match {A.semiring.name} in {path}")
    return A


def _write_json(path: Optional[str], document: dict) -> None:
    if path:
        Path(path).write_text(report_formatter.dumps(document), encoding="utf-8")
        logger.info(f"Wrote {path}")


def _cmd_per(args, out) -> int:
    A = _load(args.file, args.semiring)
    alpha = parse_index_list(args.alpha) if args.alpha else None
    result = compute_permanent(A, PermanentAlgorithm(args.alg), alpha=alpha, row=args.row)
    out.write(f"{result.value}\n")
    _write_json(args.out, {
        "semiring": A.semiring.name,
        "n": result.n,
        "algorithm": result.algorithm.value,
        "value": str(result.value),
    })
    return EXIT_OK


def _cmd_matrix(B: Matrix, args, out) -> int:
    out.write(dumps_matrix(B))
    if args.out:
        save_matrix(B, args.out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    report = run_suite(args.suite, get_semiring(args.semiring), args.n, args.trials, args.seed)
    out.write(report_formatter.format_check_report(report))
    _write_json(args.out, report_formatter.check_report_to_document(report))
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_search(args, out) -> int:
    spec = GenSpec(get_semiring(args.semiring), args.n, args.seed, Profile(args.profile))
    report = search_counterexample(args.statement, spec, args.trials)
    out.write(report_formatter.format_check_report(report))
    _write_json(args.out, report_formatter.check_report_to_document(report))
    # Finding a witness is a result, not a failure
    return EXIT_OK


def _cmd_axioms(args, out) -> int:
    report = check_axioms(get_semiring(args.semiring))
    out.write(report_formatter.format_axiom_report(report))
    _write_json(args.out, report_formatter.axiom_report_to_document(report))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def serve() -> int:
    """Run the MCP server until stdin closes."""
    logger.info("=" * 60)
    logger.info("Idempotent Semiring Permanents MCP Server")
    logger.info("=" * 60)
    logger.info("Server is ready and listening for JSON-RPC messages on stdin/stdout")
    logger.info("Available tools:")
    logger.info("  - compute_permanent: Permanent of a matrix document")
    logger.info("  - compute_adjoint: Adjoint of a matrix document")
    logger.info("  - compute_power: Matrix power of a matrix document")
    logger.info("  - run_check_suite: Run a verification suite")
    logger.info("  - search_counterexamples: Search for counterexamples")
    logger.info("  - check_semiring_axioms: Check the axioms of a semiring")
    logger.info("=" * 60)

    from src.server import mcp
    mcp.run()
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    """
    Parse ``argv`` and run one command.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])
        out: Stream for the command's output document (defaults to stdout)

    Returns:
        Exit status: 0 success, 1 check failure, 2 usage error,
        3 input format error, 4 cap exceeded
    """
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        configure_logging(args.verbose, "INFO" if args.verb == "serve" else "WARNING")
        if args.verb == "per":
            return _cmd_per(args, out)
        if args.verb == "adj":
            return _cmd_matrix(adj(_load(args.file, args.semiring)), args, out)
        if args.verb == "pow":
            return _cmd_matrix(mat_pow(_load(args.file, args.semiring), args.exponent), args, out)
        if args.verb == "check":
            return _cmd_check(args, out)
        if args.verb == "search":
            return _cmd_search(args, out)
        if args.verb == "axioms":
            return _cmd_axioms(args, out)
        return serve()

    except (SemiringError, OSError) as e:
        logger.debug(f"{args.verb} failed", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return exit_status_for(e)
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

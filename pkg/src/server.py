"""MCP server exposing permanents, adjoints and the verification suites as tools."""

import logging
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Set up logging (to stderr to avoid breaking JSON-RPC on stdout)
logger = logging.getLogger(__name__)

try:
    from mcp.server.fastmcp import FastMCP
except ImportError:
    # Fallback for different MCP SDK versions
    try:
        from mcp import FastMCP
    except ImportError:
        raise ImportError(
            "MCP SDK not found. Please install it with: pip install mcp"
        )

from .adjoint import adj
from .generators import GenSpec, Profile
from .matrix import dumps_matrix, loads_matrix, mat_pow
from . import permanent
from .permanent import PermanentAlgorithm
from .report_formatter import ReportFormatter
from .search import search_counterexample
from .semiring import check_axioms, get_semiring
from .utils import parse_index_list
from .verify import run_suite


# Initialize MCP server
mcp = FastMCP("Idempotent Semiring Permanents MCP Server")

report_formatter = ReportFormatter()


@mcp.tool()
def compute_permanent(matrix: str, algorithm: str = "dp", alpha: Optional[str] = None) -> str:
    """
    Compute the permanent of a square matrix.

    Args:
        matrix: Matrix document (JSON with semiring, rows, cols, entries)
        algorithm: One of enum, dp, laplace, row, diag, fast (default: dp)
        alpha: Comma separated rows for Laplace expansion, e.g. "1,2"

    Returns:
        The permanent as an exact element string
    """
    try:
        A = loads_matrix(matrix)
        indices = parse_index_list(alpha) if alpha else None
        result = permanent.compute_permanent(A, PermanentAlgorithm(algorithm), alpha=indices)
        return str(result.value)

    except Exception as e:
        logger.error(f"Error in compute_permanent: {e}", exc_info=True)
        return f"Error computing permanent: {str(e)}"


@mcp.tool()
def compute_adjoint(matrix: str) -> str:
    """
    Compute the adjoint matrix, whose (i, j) entry is per(A(j|i)).

    Args:
        matrix: Matrix document of a square matrix with n >= 2

    Returns:
        The adjoint as a matrix document
    """
    try:
        return dumps_matrix(adj(loads_matrix(matrix)))

    except Exception as e:
        logger.error(f"Error in compute_adjoint: {e}", exc_info=True)
        return f"Error computing adjoint: {str(e)}"


@mcp.tool()
def compute_power(matrix: str, exponent: int) -> str:
    """
    Compute the matrix power A^exponent.

    Args:
        matrix: Matrix document of a square matrix
        exponent: Non-negative power (0 gives the identity)

    Returns:
        The power as a matrix document
    """
    try:
        return dumps_matrix(mat_pow(loads_matrix(matrix), exponent))

    except Exception as e:
        logger.error(f"Error in compute_power: {e}", exc_info=True)
        return f"Error computing power: {str(e)}"


@mcp.tool()
def run_check_suite(suite: str, semiring: str = "max_times", n: int = 3, trials: int = 100, seed: int = 0) -> str:
    """
    Run a verification suite on generated matrices.

    Args:
        suite: Suite name, e.g. thm35, lemma43, prop21, cross_algorithms
        semiring: Semiring name, e.g. max_plus or divisor_lattice(30)
        n: Matrix size (default: 3)
        trials: Number of trials (default: 100)
        seed: Base seed (default: 0)

    Returns:
        The check report as text
    """
    try:
        s = get_semiring(semiring)
        report = run_suite(suite, s, n, trials, seed)
        return report_formatter.format_check_report(report)

    except Exception as e:
        logger.error(f"Error in run_check_suite: {e}", exc_info=True)
        return f"Error running suite: {str(e)}"


@mcp.tool()
def search_counterexamples(statement: str, semiring: str = "max_times", n: int = 3, trials: int = 100,
                           seed: int = 0, profile: str = "dense") -> str:
    """
    Search generated matrices for a violation of an equality.

    Args:
        statement: problem_1_1, strict_2_3 or eq_3_2_general
        semiring: Semiring name (default: max_times)
        n: Matrix size (default: 3)
        trials: Number of trials (default: 100)
        seed: Base seed (default: 0)
        profile: Generator profile: dense, sparse, star, comparable-pair or idempotent

    Returns:
        The search report as text
    """
    try:
        s = get_semiring(semiring)
        report = search_counterexample(statement, GenSpec(s, n, seed, Profile(profile)), trials)
        return report_formatter.format_check_report(report)

    except Exception as e:
        logger.error(f"Error in search_counterexamples: {e}", exc_info=True)
        return f"Error searching counterexamples: {str(e)}"


@mcp.tool()
def check_semiring_axioms(semiring: str) -> str:
    """
    Check the semiring axioms on the default samples of a built-in semiring.

    Args:
        semiring: Semiring name, e.g. lukasiewicz or plus_times_control

    Returns:
        The axiom report as text
    """
    try:
        s = get_semiring(semiring)
        return report_formatter.format_axiom_report(check_axioms(s))

    except Exception as e:
        logger.error(f"Error in check_semiring_axioms: {e}", exc_info=True)
        return f"Error checking axioms: {str(e)}"

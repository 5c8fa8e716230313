"""
Bounded, seeded searches for matrices that break a conjectured equality.

A search never proves anything: when no witness turns up the report says
so in its note, together with the number of trials that were run.
"""

import logging
import random
from enum import Enum
from typing import Dict, Optional, Tuple

from .adjoint import adj
from .errors import UsageError
from .generators import GenSpec, gen_matrix
from .matrix import Matrix, mat_mul
from .permanent import per_subset_dp
from .semiring import SemiringId, nat_pow
from .verify import CheckReport, Counterexample, aggregate, run_trials, worked_examples

logger = logging.getLogger(__name__)


class SearchStatement(Enum):
    """Equalities a search can look for violations of."""
    # per(A adj(A)) = per(adj(A) A) = per(A)
    PROBLEM_1_1 = "problem_1_1"
    # per(AB) = per(A) per(B), i.e. strictness of the product inequality
    STRICT_2_3 = "strict_2_3"
    # per(adj(A)) = per(A)^(n-1) without condition (*)
    EQ_3_2_GENERAL = "eq_3_2_general"


_NOTES: Dict[SearchStatement, str] = {
    SearchStatement.EQ_3_2_GENERAL: "open question; results are evidence only",
}


def parse_statement(name: str) -> SearchStatement:
    try:
        return SearchStatement(name)
    except ValueError:
        known = ", ".join(s.value for s in SearchStatement)
        raise UsageError(f"Unknown search statement {name!r} (known: {known})")


def _witness(statement: SearchStatement, clause: str, left, right,
             matrices: Tuple[Tuple[str, Matrix], ...], seed: int) -> CheckReport:
    counterexample = Counterexample(clause, left, right, "!=", matrices, seed=seed)
    return CheckReport(statement.value, matrices[0][1].semiring.name, trials=1, passed=0,
                       counterexample=counterexample)


def _clean(statement: SearchStatement, A: Matrix) -> CheckReport:
    return CheckReport(statement.value, A.semiring.name, trials=1, passed=1)


def _problem_1_1(A: Matrix, seed: int) -> CheckReport:
    statement = SearchStatement.PROBLEM_1_1
    per_a = per_subset_dp(A)
    adj_a = adj(A)
    for clause, product in (("per(A adj(A)) = per(A)", mat_mul(A, adj_a)),
                            ("per(adj(A) A) = per(A)", mat_mul(adj_a, A))):
        value = per_subset_dp(product)
        if value != per_a:
            return _witness(statement, clause, value, per_a, (("A", A),), seed)
    return _clean(statement, A)


def _strict_2_3(A: Matrix, B: Matrix, seed: int) -> CheckReport:
    statement = SearchStatement.STRICT_2_3
    s = A.semiring
    left = per_subset_dp(mat_mul(A, B))
    right = s.mul(per_subset_dp(A), per_subset_dp(B))
    if left != right:
        return _witness(statement, "per(AB) = per(A) per(B)", left, right, (("A", A), ("B", B)), seed)
    return _clean(statement, A)


def _eq_3_2_general(A: Matrix, seed: int) -> CheckReport:
    statement = SearchStatement.EQ_3_2_GENERAL
    s = A.semiring
    left = per_subset_dp(adj(A))
    right = nat_pow(s, per_subset_dp(A), A.rows - 1)
    if left != right:
        return _witness(statement, "per(adj(A)) = per(A)^(n-1)", left, right, (("A", A),), seed)
    return _clean(statement, A)


def _seeded_instance(statement: SearchStatement, spec: GenSpec) -> Optional[Tuple[Matrix, ...]]:
    """The known max_times witnesses, tried first."""
    if spec.semiring.id is not SemiringId.MAX_TIMES:
        return None
    examples = worked_examples()
    if statement is SearchStatement.PROBLEM_1_1:
        return (examples["remark36_A"],)
    if statement is SearchStatement.STRICT_2_3:
        return (examples["remark24_A"], examples["remark24_B"])
    return None


def search_counterexample(statement: str, spec: GenSpec, trials: int,
                          workers: Optional[int] = None) -> CheckReport:
    """
    Look for a violation of ``statement`` over ``trials`` generated instances.

    Trial t draws its matrices from spec.seed + t. Over max_times the known
    witness (3x3 for problem_1_1, the 2x2 pair for strict_2_3) replaces
    trial 0.

    Args:
        statement: problem_1_1, strict_2_3 or eq_3_2_general
        spec: Semiring, size, base seed and profile of the random instances
        trials: Number of trials
        workers: Thread pool size (defaults to SEMIPERM_WORKERS)

    Returns:
        CheckReport whose ``passed`` counts trials without a witness; the
        first witness by trial index is the counterexample
    """
    tag = parse_statement(statement)
    if trials < 1:
        raise UsageError(f"A search needs at least one trial, got {trials}")
    if spec.n < 2 and tag is not SearchStatement.STRICT_2_3:
        raise UsageError(f"{tag.value} needs n >= 2, got {spec.n}")
    seeded = _seeded_instance(tag, spec)
    logger.info(f"Searching {tag.value} over {spec.semiring.name}: n={spec.n}, trials={trials}, seed={spec.seed}")

    def one(trial: int, seed: int) -> CheckReport:
        if trial == 0 and seeded is not None:
            matrices = seeded
        elif tag is SearchStatement.STRICT_2_3:
            rng = random.Random(seed)
            matrices = tuple(gen_matrix(spec.with_seed(rng.getrandbits(64))) for _ in range(2))
        else:
            matrices = (gen_matrix(spec.with_seed(seed)),)
        if tag is SearchStatement.PROBLEM_1_1:
            return _problem_1_1(matrices[0], seed)
        if tag is SearchStatement.STRICT_2_3:
            return _strict_2_3(matrices[0], matrices[1], seed)
        return _eq_3_2_general(matrices[0], seed)

    reports = run_trials(one, trials, spec.seed, workers)
    found = sum(r.trials - r.passed for r in reports)
    note = _NOTES.get(tag, "")
    if not found:
        note = "; ".join(filter(None, [f"not found in {trials} trials", note]))
    report = aggregate(tag.value, spec.semiring.name, reports, spec.seed, note)
    logger.info(f"{tag.value} over {spec.semiring.name}: {found} witnesses in {trials} trials")
    return report

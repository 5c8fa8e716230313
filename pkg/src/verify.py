"""
Executable checks for the permanent and adjoint identities.

Every ``check_*`` function evaluates one instance and returns a CheckReport
with a single trial (or a single skipped trial when a precondition is not
met). ``run_suite`` regenerates instances from a seed and aggregates them.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .adjoint import adj, adj_via_power, per_adj_star, satisfies_star
from .assignment import boolean_matching, per_boolean, per_maxmin, per_maxplus
from .errors import IndexOutOfRangeError, PreconditionError, ShapeError, UsageError
from .generators import GenSpec, Profile, gen_matrix, gen_permutation
from .matrix import (
    Matrix,
    Permutation,
    block_upper_triangular,
    mat_add,
    mat_leq,
    mat_mul,
    mat_pow,
    omega,
    permutation_matrix,
    row_replace,
    scalar_mul,
    transpose,
)
from .permanent import per_diag_dominant, per_enumerate, per_laplace, per_row_expansion, per_subset_dp
from .phi_sets import exhaustive_combine
from .semiring import Element, SemiringDescriptor, SemiringId, get_semiring, nat_pow
from .utils import get_workers

logger = logging.getLogger(__name__)

# Largest l used by the power suites
MAX_POWER = 4


@dataclass(frozen=True)
class Counterexample:
    """
    A failing instance: the clause that broke, both sides and the inputs.

    ``left`` and ``right`` are Elements or Matrices; ``relation`` is "=" or "<=".
    """
    clause: str
    left: Any
    right: Any
    relation: str
    matrices: Tuple[Tuple[str, Matrix], ...] = ()
    parameters: Tuple[Tuple[str, str], ...] = ()
    seed: Optional[int] = None


@dataclass(frozen=True)
class CheckReport:
    """
    Outcome of checking one statement over one or more trials.

    ``trials`` counts evaluated trials; trials whose precondition did not hold
    are counted in ``skipped`` instead. ``counterexample`` is the first failure
    by trial index and is present exactly when ``passed < trials``.
    """
    statement: str
    semiring: str
    trials: int
    passed: int
    counterexample: Optional[Counterexample] = None
    seed: Optional[int] = None
    skipped: int = 0
    note: str = ""

    @property
    def failed(self) -> int:
        return self.trials - self.passed

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


class _Clauses:
    """Collects the first failing clause of one instance."""

    def __init__(self, statement: str, s: SemiringDescriptor,
                 matrices: Sequence[Tuple[str, Matrix]], parameters: Sequence[Tuple[str, Any]] = ()):
        self.statement = statement
        self.s = s
        self.matrices = tuple(matrices)
        self.parameters = tuple((name, str(value)) for name, value in parameters)
        self.failure: Optional[Counterexample] = None

    def _fail(self, clause: str, left: Any, right: Any, relation: str) -> None:
        if self.failure is None:
            logger.debug(f"{self.statement}: clause '{clause}' fails with {left} {relation} {right}")
            self.failure = Counterexample(clause, left, right, relation, self.matrices, self.parameters)

    def equal(self, clause: str, left: Any, right: Any) -> bool:
        if left != right:
            self._fail(clause, left, right, "=")
            return False
        return True

    def below(self, clause: str, left: Any, right: Any) -> bool:
        holds = mat_leq(left, right) if isinstance(left, Matrix) else self.s.leq(left, right)
        if not holds:
            self._fail(clause, left, right, "<=")
        return holds

    def holds(self, clause: str, value: bool, detail: Any) -> bool:
        if not value:
            self._fail(clause, detail, "holds", "=")
        return value

    def report(self) -> CheckReport:
        return CheckReport(
            statement=self.statement,
            semiring=self.s.name,
            trials=1,
            passed=0 if self.failure else 1,
            counterexample=self.failure,
        )


def _skipped(statement: str, s: SemiringDescriptor, reason: str) -> CheckReport:
    logger.warning(f"{statement}: skipped, {reason}")
    return CheckReport(statement=statement, semiring=s.name, trials=0, passed=0, skipped=1, note=reason)


def _square(A: Matrix, statement: str, minimum: int = 1) -> int:
    if not A.is_square:
        raise ShapeError(f"{statement} needs a square matrix, got {A.rows}x{A.cols}")
    if A.rows < minimum:
        raise PreconditionError(f"{statement} needs n >= {minimum}, got n={A.rows}")
    return A.rows


def _same_shape(A: Matrix, B: Matrix) -> None:
    if A.semiring != B.semiring or A.rows != B.rows or A.cols != B.cols:
        raise ShapeError(
            f"Expected matching matrices, got {A.rows}x{A.cols} over {A.semiring.name} "
            f"and {B.rows}x{B.cols} over {B.semiring.name}"
        )


# ---------------------------------------------------------------------------
# Permanent identities
# ---------------------------------------------------------------------------

def _with_dominant_diagonal(A: Matrix) -> Matrix:
    """A with each diagonal entry replaced by its row sum, so a_ii >= a_ik."""
    s = A.semiring
    return Matrix(s, A.rows, A.cols, tuple(
        tuple(s.sum(row) if i == j else e for j, e in enumerate(row)) for i, row in enumerate(A.entries)
    ))


def check_prop21(A: Matrix, B: Matrix, lam: Element, sigma: Permutation, tau: Permutation,
                 C: Optional[Matrix] = None) -> CheckReport:
    """
    The six basic permanent identities on one instance.

    Scalar pull-out, transpose invariance, invariance under permutation
    matrices, the diagonal product for row-dominant diagonals, the block
    upper-triangular product and monotonicity on the pair (A, A + B).

    Args:
        A, B: Square matrices of the same size and semiring
        lam: Scalar in A's semiring
        sigma, tau: Permutations giving P and Q in P A Q
        C: Upper-right block (defaults to A + B)
    """
    n = _square(A, "prop21")
    _same_shape(A, B)
    s = A.semiring
    lam = s.check(lam)
    if sigma.n != n or tau.n != n:
        raise ShapeError(f"Permutations must have size {n}")
    C = mat_add(A, B) if C is None else C
    _same_shape(A, C)

    clauses = _Clauses("prop21", s, [("A", A), ("B", B), ("C", C)],
                       [("lambda", lam), ("sigma", sigma), ("tau", tau)])
    per_a = per_subset_dp(A)

    clauses.equal("per(lambda A) = lambda^n per(A)",
                  per_subset_dp(scalar_mul(lam, A)), s.mul(nat_pow(s, lam, n), per_a))
    clauses.equal("per(A^T) = per(A)", per_subset_dp(transpose(A)), per_a)
    P, Q = permutation_matrix(sigma, s), permutation_matrix(tau, s)
    clauses.equal("per(P A Q) = per(A)", per_subset_dp(mat_mul(mat_mul(P, A), Q)), per_a)

    dominant = _with_dominant_diagonal(A)
    clauses.equal("per(D) = d_11 ... d_nn for a row-dominant diagonal",
                  per_subset_dp(dominant), per_diag_dominant(dominant))
    try:
        clauses.equal("per(A) = a_11 ... a_nn for a row-dominant diagonal", per_a, per_diag_dominant(A))
    except PreconditionError:
        pass

    clauses.equal("per([[A, C], [O, B]]) = per(A) per(B)",
                  per_subset_dp(block_upper_triangular(A, C, B)), s.mul(per_a, per_subset_dp(B)))
    clauses.below("per(A) <= per(A + B)", per_a, per_subset_dp(mat_add(A, B)))
    return clauses.report()


def check_prop23(A: Matrix, B: Matrix) -> CheckReport:
    """per(A) per(B) <= per(AB)."""
    _square(A, "prop23")
    _same_shape(A, B)
    s = A.semiring
    clauses = _Clauses("prop23", s, [("A", A), ("B", B)])
    clauses.below("per(A) per(B) <= per(AB)",
                  s.mul(per_subset_dp(A), per_subset_dp(B)), per_subset_dp(mat_mul(A, B)))
    return clauses.report()


def check_cor25(A: Matrix) -> CheckReport:
    """
    For idempotent A with per(A) >= one, per(A) is multiplicatively idempotent.

    Instances where A^2 != A or one is not below per(A) are skipped.
    """
    _square(A, "cor25")
    s = A.semiring
    if mat_mul(A, A) != A:
        return _skipped("cor25", s, "A^2 != A")
    per_a = per_subset_dp(A)
    if not s.leq(s.one, per_a):
        return _skipped("cor25", s, f"per(A) = {per_a} is not >= one")
    clauses = _Clauses("cor25", s, [("A", A)])
    clauses.equal("per(A) per(A) = per(A)", s.mul(per_a, per_a), per_a)
    return clauses.report()


def check_cross_algorithms(A: Matrix) -> CheckReport:
    """Enumeration, subset DP, Laplace along every proper row set and row expansion agree."""
    n = _square(A, "cross_algorithms")
    clauses = _Clauses("cross_algorithms", A.semiring, [("A", A)])
    reference = per_enumerate(A)
    clauses.equal("per_subset_dp = per_enumerate", per_subset_dp(A), reference)
    if n >= 2:
        for k in range(1, n):
            for alpha in omega(k, n):
                clauses.equal(f"per_laplace along {alpha.indices} = per_enumerate",
                              per_laplace(A, alpha), reference)
        for i in range(1, n + 1):
            clauses.equal(f"per_row_expansion along row {i} = per_enumerate",
                          per_row_expansion(A, i), reference)
    return clauses.report()


def check_fast_path(A: Matrix) -> CheckReport:
    """
    The assignment fast path agrees with the subset DP and its witness
    reproduces the value.

    Raises:
        PreconditionError: If A's semiring has no fast path
    """
    _square(A, "fast_paths")
    s = A.semiring
    clauses = _Clauses("fast_paths", s, [("A", A)])
    reference = per_subset_dp(A)
    if s.id is SemiringId.MAX_PLUS or s.id is SemiringId.FUZZY_MAXMIN:
        solution = per_maxplus(A) if s.id is SemiringId.MAX_PLUS else per_maxmin(A)
        clauses.equal("fast value = per_subset_dp", solution.value, reference)
        clauses.equal(f"weight along witness {solution.assignment} = fast value",
                      solution.assignment.weight(A), solution.value)
    elif s.id is SemiringId.BOOLEAN:
        value = per_boolean(A)
        clauses.equal("fast value = per_subset_dp", value, reference)
        matching = boolean_matching(A)
        if matching is not None:
            clauses.equal(f"weight along matching {matching} = one", matching.weight(A), s.one)
    else:
        raise PreconditionError(f"No fast permanent for {s.name}")
    return clauses.report()


# ---------------------------------------------------------------------------
# Adjoint identities
# ---------------------------------------------------------------------------

def check_prop31(A: Matrix, B: Matrix) -> CheckReport:
    """
    Monotonicity of adj on (A, A + B), subadditivity
    adj(A) + adj(B) <= adj(A + B), and adj(A)^T = adj(A^T).
    """
    _square(A, "prop31", minimum=2)
    _same_shape(A, B)
    clauses = _Clauses("prop31", A.semiring, [("A", A), ("B", B)])
    adj_a, adj_b, adj_sum = adj(A), adj(B), adj(mat_add(A, B))
    clauses.below("adj(A) <= adj(A + B)", adj_a, adj_sum)
    clauses.below("adj(A) + adj(B) <= adj(A + B)", mat_add(adj_a, adj_b), adj_sum)
    clauses.equal("adj(A)^T = adj(A^T)", transpose(adj_a), adj(transpose(A)))
    return clauses.report()


def check_star_closure(A: Matrix, l: int) -> CheckReport:
    """If A satisfies (*) then so does A^l."""
    _square(A, "star_closure", minimum=2)
    s = A.semiring
    if not satisfies_star(A):
        return _skipped("star_closure", s, "A does not satisfy (*)")
    clauses = _Clauses("star_closure", s, [("A", A)], [("l", l)])
    witness = satisfies_star(mat_pow(A, l))
    clauses.holds(f"(*) holds for A^{l}", witness.holds, f"violation {witness.violation}")
    return clauses.report()


def check_lemma32(A: Matrix, l: int) -> CheckReport:
    """per(A^l) = per(A)^l for A satisfying (*)."""
    _square(A, "lemma32", minimum=2)
    s = A.semiring
    if l < 1:
        raise PreconditionError(f"lemma32 needs a positive power, got l={l}")
    if not satisfies_star(A):
        return _skipped("lemma32", s, "A does not satisfy (*)")
    clauses = _Clauses("lemma32", s, [("A", A)], [("l", l)])
    clauses.equal(f"per(A^{l}) = per(A)^{l}", per_subset_dp(mat_pow(A, l)), nat_pow(s, per_subset_dp(A), l))
    return clauses.report()


def check_thm33(A: Matrix) -> CheckReport:
    """adj(A) = A^(n-1) and per(adj(A)) = per(A)^(n-1) for A satisfying (*)."""
    n = _square(A, "thm33", minimum=2)
    s = A.semiring
    if not satisfies_star(A):
        return _skipped("thm33", s, "A does not satisfy (*)")
    clauses = _Clauses("thm33", s, [("A", A)])
    clauses.equal("adj(A) = A^(n-1)", adj(A), adj_via_power(A))
    clauses.equal("per(adj(A)) = per(A)^(n-1)", per_adj_star(A), nat_pow(s, per_subset_dp(A), n - 1))
    return clauses.report()


def check_thm35(A: Matrix) -> CheckReport:
    """per(A adj(A)) = per(adj(A) A) = per(A)^n."""
    n = _square(A, "thm35", minimum=2)
    s = A.semiring
    clauses = _Clauses("thm35", s, [("A", A)])
    adj_a = adj(A)
    power = nat_pow(s, per_subset_dp(A), n)
    clauses.equal("per(A adj(A)) = per(A)^n", per_subset_dp(mat_mul(A, adj_a)), power)
    clauses.equal("per(adj(A) A) = per(A)^n", per_subset_dp(mat_mul(adj_a, A)), power)
    return clauses.report()


def check_lemma44(A: Matrix) -> CheckReport:
    """per(A)^n <= per(A adj(A))."""
    n = _square(A, "lemma44", minimum=2)
    s = A.semiring
    clauses = _Clauses("lemma44", s, [("A", A)])
    clauses.below("per(A)^n <= per(A adj(A))",
                  nat_pow(s, per_subset_dp(A), n), per_subset_dp(mat_mul(A, adj(A))))
    return clauses.report()


def check_row_replacement_product(A: Matrix) -> CheckReport:
    """Entry (i, j) of A adj(A) is per(A(i=>j))."""
    n = _square(A, "row_replacement", minimum=2)
    clauses = _Clauses("row_replacement", A.semiring, [("A", A)])
    product = mat_mul(A, adj(A))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            clauses.equal(f"(A adj(A))_{i}{j} = per(A({i}=>{j}))",
                          product.entry(i, j), per_subset_dp(row_replace(A, i, j)))
    return clauses.report()


# ---------------------------------------------------------------------------
# Chain inequalities
# ---------------------------------------------------------------------------

def _check_indices(indices: Sequence[int], n: int) -> None:
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise IndexOutOfRangeError(f"Index {i!r} outside 1..{n}")


def _chain_product(A: Matrix, indices: Sequence[int]):
    """per(A(p1=>p2)) per(A(p2=>p3)) ... per(A(pk=>p1))."""
    s = A.semiring
    k = len(indices)
    return s.product(per_subset_dp(row_replace(A, indices[t], indices[(t + 1) % k])) for t in range(k))


def check_lemma43(A: Matrix, indices: Sequence[int]) -> CheckReport:
    """
    The chain inequality for a cyclic index list.

    Args:
        A: Square matrix with n >= 2
        indices: p_1, ..., p_k with 1 <= k <= n; repeats are allowed

    Raises:
        IndexOutOfRangeError: If an index is outside 1..n or k is not in 1..n
    """
    n = _square(A, "lemma43", minimum=2)
    indices = tuple(indices)
    if not 1 <= len(indices) <= n:
        raise IndexOutOfRangeError(f"lemma43 needs between 1 and {n} indices, got {len(indices)}")
    _check_indices(indices, n)
    s = A.semiring
    clauses = _Clauses("lemma43", s, [("A", A)], [("indices", ",".join(map(str, indices)))])
    clauses.below("chain of row replacements <= per(A)^k",
                  _chain_product(A, indices), nat_pow(s, per_subset_dp(A), len(indices)))
    return clauses.report()


def check_eq41(A: Matrix, p: int, q: int, r: int) -> CheckReport:
    """per(A(p=>q)) per(A(q=>r)) <= per(A) per(A(p=>r))."""
    n = _square(A, "eq41", minimum=2)
    _check_indices((p, q, r), n)
    s = A.semiring
    clauses = _Clauses("eq41", s, [("A", A)], [("p", p), ("q", q), ("r", r)])
    left = s.mul(per_subset_dp(row_replace(A, p, q)), per_subset_dp(row_replace(A, q, r)))
    right = s.mul(per_subset_dp(A), per_subset_dp(row_replace(A, p, r)))
    clauses.below(f"per(A({p}=>{q})) per(A({q}=>{r})) <= per(A) per(A({p}=>{r}))", left, right)
    return clauses.report()


def check_cycle_bound(A: Matrix, pi: Permutation) -> CheckReport:
    """
    The term of per(A adj(A)) selected by pi is below per(A)^n.

    The bound is checked cycle by cycle (each cycle of length k is bounded by
    per(A)^k) and for the whole product.
    """
    n = _square(A, "cycle_bound", minimum=2)
    if pi.n != n:
        raise ShapeError(f"Permutation of size {pi.n} for a {n}x{n} matrix")
    s = A.semiring
    clauses = _Clauses("cycle_bound", s, [("A", A)], [("pi", pi)])
    per_a = per_subset_dp(A)
    for cycle in pi.cycles():
        clauses.below(f"cycle {cycle} <= per(A)^{len(cycle)}",
                      _chain_product(A, cycle), nat_pow(s, per_a, len(cycle)))
    term = s.product(per_subset_dp(row_replace(A, i, pi(i))) for i in range(1, n + 1))
    clauses.below("product of per(A(i=>pi(i))) <= per(A)^n", term, nat_pow(s, per_a, n))
    return clauses.report()


# ---------------------------------------------------------------------------
# Worked examples
# ---------------------------------------------------------------------------

def worked_examples() -> Dict[str, Matrix]:
    """
    The two hand-checked instances over max_times.

    ``remark24_A``/``remark24_B`` give per(AB) = 4 > 2 = per(A) per(B);
    ``remark36_A`` gives per(A adj(A)) = 216/10^9 = per(A)^3 != per(A).
    """
    s = get_semiring("max_times")
    return {
        "remark24_A": Matrix.from_values(s, [[1, "1/2"], [2, 2]]),
        "remark24_B": Matrix.from_values(s, [[2, 1], [1, 0]]),
        "remark36_A": Matrix.from_values(s, [["1/10", 0, "1/5"], [0, "1/5", "3/10"], [0, 0, "3/10"]]),
    }


def check_remark24() -> CheckReport:
    """per(A) = 2, per(B) = 1, per(AB) = 4, so the product inequality is strict."""
    examples = worked_examples()
    A, B = examples["remark24_A"], examples["remark24_B"]
    s = A.semiring
    clauses = _Clauses("remark24", s, [("A", A), ("B", B)])
    per_a, per_b, per_ab = per_subset_dp(A), per_subset_dp(B), per_subset_dp(mat_mul(A, B))
    clauses.equal("per(A) = 2", per_a, s.parse("2"))
    clauses.equal("per(B) = 1", per_b, s.parse("1"))
    clauses.equal("per(AB) = 4", per_ab, s.parse("4"))
    clauses.holds("per(AB) != per(A) per(B)", per_ab != s.mul(per_a, per_b), f"per(A) per(B) = {s.mul(per_a, per_b)}")
    return clauses.report()


def check_remark36() -> CheckReport:
    """per(A adj(A)) = per(adj(A) A) = per(A)^3 = 216/10^9, which differs from per(A) = 6/1000."""
    A = worked_examples()["remark36_A"]
    s = A.semiring
    clauses = _Clauses("remark36", s, [("A", A)])
    per_a = per_subset_dp(A)
    adj_a = adj(A)
    clauses.equal("per(A) = 6/1000", per_a, s.parse("6/1000"))
    clauses.equal("adj(A)_11 = 6/100", adj_a.entry(1, 1), s.parse("6/100"))
    clauses.equal("per(A adj(A)) = 216/10^9", per_subset_dp(mat_mul(A, adj_a)), s.parse("216/1000000000"))
    clauses.equal("per(adj(A) A) = 216/10^9", per_subset_dp(mat_mul(adj_a, A)), s.parse("216/1000000000"))
    clauses.holds("per(A adj(A)) != per(A)", per_subset_dp(mat_mul(A, adj_a)) != per_a, f"per(A) = {per_a}")
    star = satisfies_star(A)
    clauses.equal("(*) fails with witness (1,3,3)", star.violation, (1, 3, 3))
    return clauses.report()


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

class Suite(Enum):
    """Names accepted by ``run_suite`` and ``check SUITE``."""
    PROP21 = "prop21"
    PROP23 = "prop23"
    COR25 = "cor25"
    PROP31 = "prop31"
    LEMMA32 = "lemma32"
    THM33 = "thm33"
    LEMMA42 = "lemma42"
    LEMMA43 = "lemma43"
    EQ41 = "eq41"
    LEMMA44 = "lemma44"
    THM35 = "thm35"
    ROW_REPLACEMENT = "row_replacement"
    CYCLE_BOUND = "cycle_bound"
    STAR_CLOSURE = "star_closure"
    CROSS_ALGORITHMS = "cross_algorithms"
    FAST_PATHS = "fast_paths"
    REMARK24 = "remark24"
    REMARK36 = "remark36"


FAST_PATH_SEMIRINGS = (SemiringId.MAX_PLUS, SemiringId.FUZZY_MAXMIN, SemiringId.BOOLEAN)

TrialFn = Callable[[SemiringDescriptor, int, int, int], CheckReport]


def _general_profile(trial: int) -> Profile:
    return Profile.SPARSE if trial % 2 else Profile.DENSE


def _draw(s: SemiringDescriptor, n: int, rng: random.Random, profile: Profile) -> Matrix:
    return gen_matrix(GenSpec(s, n, rng.getrandbits(64), profile))


def _first_failure(reports: Sequence[CheckReport]) -> CheckReport:
    """Fold several single-instance reports into one trial."""
    for report in reports:
        if report.counterexample is not None:
            return report
    evaluated = [r for r in reports if r.trials]
    return evaluated[0] if evaluated else reports[0]


def _trial_prop21(s, n, trial, seed):
    rng = random.Random(seed)
    profile = _general_profile(trial)
    A, B, C = (_draw(s, n, rng, profile) for _ in range(3))
    return check_prop21(A, B, s.draw(rng), gen_permutation(n, rng), gen_permutation(n, rng), C)


def _trial_prop23(s, n, trial, seed):
    rng = random.Random(seed)
    profile = _general_profile(trial)
    return check_prop23(_draw(s, n, rng, profile), _draw(s, n, rng, profile))


def _trial_cor25(s, n, trial, seed):
    return check_cor25(gen_matrix(GenSpec(s, n, seed, Profile.IDEMPOTENT)))


def _trial_prop31(s, n, trial, seed):
    A, upper = (gen_matrix(GenSpec(s, n, seed, p)) for p in (Profile.DENSE, Profile.COMPARABLE_PAIR))
    rng = random.Random(seed)
    B = _draw(s, n, rng, _general_profile(trial))
    return _first_failure([check_prop31(A, B), check_prop31(A, upper)])


def _star_matrix(s, n, seed):
    return gen_matrix(GenSpec(s, n, seed, Profile.STAR))


def _trial_lemma32(s, n, trial, seed):
    A = _star_matrix(s, n, seed)
    return _first_failure([check_lemma32(A, l) for l in range(1, MAX_POWER + 1)])


def _trial_star_closure(s, n, trial, seed):
    A = _star_matrix(s, n, seed)
    return _first_failure([check_star_closure(A, l) for l in range(1, MAX_POWER + 1)])


def _trial_thm33(s, n, trial, seed):
    return check_thm33(_star_matrix(s, n, seed))


def _random_indices(rng: random.Random, n: int) -> List[int]:
    return [rng.randint(1, n) for _ in range(rng.randint(1, n))]


def _trial_lemma43(s, n, trial, seed):
    rng = random.Random(seed)
    A = _draw(s, n, rng, _general_profile(trial))
    return check_lemma43(A, _random_indices(rng, n))


def _trial_eq41(s, n, trial, seed):
    rng = random.Random(seed)
    A = _draw(s, n, rng, _general_profile(trial))
    return check_eq41(A, rng.randint(1, n), rng.randint(1, n), rng.randint(1, n))


def _trial_lemma44(s, n, trial, seed):
    return check_lemma44(gen_matrix(GenSpec(s, n, seed, _general_profile(trial))))


def _trial_thm35(s, n, trial, seed):
    return check_thm35(gen_matrix(GenSpec(s, n, seed, _general_profile(trial))))


def _trial_row_replacement(s, n, trial, seed):
    return check_row_replacement_product(gen_matrix(GenSpec(s, n, seed, _general_profile(trial))))


def _trial_cycle_bound(s, n, trial, seed):
    rng = random.Random(seed)
    A = _draw(s, n, rng, _general_profile(trial))
    return check_cycle_bound(A, gen_permutation(n, rng))


def _trial_cross_algorithms(s, n, trial, seed):
    return check_cross_algorithms(gen_matrix(GenSpec(s, n, seed, _general_profile(trial))))


def _trial_fast_paths(s, n, trial, seed):
    return check_fast_path(gen_matrix(GenSpec(s, n, seed, _general_profile(trial))))


_TRIALS: Dict[Suite, TrialFn] = {
    Suite.PROP21: _trial_prop21,
    Suite.PROP23: _trial_prop23,
    Suite.COR25: _trial_cor25,
    Suite.PROP31: _trial_prop31,
    Suite.LEMMA32: _trial_lemma32,
    Suite.THM33: _trial_thm33,
    Suite.LEMMA43: _trial_lemma43,
    Suite.EQ41: _trial_eq41,
    Suite.LEMMA44: _trial_lemma44,
    Suite.THM35: _trial_thm35,
    Suite.ROW_REPLACEMENT: _trial_row_replacement,
    Suite.CYCLE_BOUND: _trial_cycle_bound,
    Suite.STAR_CLOSURE: _trial_star_closure,
    Suite.CROSS_ALGORITHMS: _trial_cross_algorithms,
    Suite.FAST_PATHS: _trial_fast_paths,
}


def run_trials(trial_fn: Callable[[int, int], CheckReport], trials: int, seed: int,
               workers: Optional[int] = None) -> List[CheckReport]:
    """
    Evaluate ``trial_fn(trial_index, seed + trial_index)`` for every trial.

    Uses a thread pool when more than one worker is configured; results come
    back in trial order either way.
    """
    workers = get_workers() if workers is None else workers
    if workers <= 1 or trials <= 1:
        return [trial_fn(t, seed + t) for t in range(trials)]

    results: Dict[int, CheckReport] = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(trial_fn, t, seed + t): t for t in range(trials)}
        for future in as_completed(futures):
            results[futures[future]] = future.result()
    return [results[t] for t in range(trials)]


def aggregate(statement: str, semiring: str, reports: Sequence[CheckReport], seed: int,
              note: str = "") -> CheckReport:
    """Sum trial reports; the first counterexample by trial index is kept."""
    counterexample = next((r.counterexample for r in reports if r.counterexample is not None), None)
    return CheckReport(
        statement=statement,
        semiring=semiring,
        trials=sum(r.trials for r in reports),
        passed=sum(r.passed for r in reports),
        counterexample=counterexample,
        seed=seed,
        skipped=sum(r.skipped for r in reports),
        note=note,
    )


def _tag_seed(report: CheckReport, seed: int) -> CheckReport:
    if report.counterexample is None:
        return report
    return replace(report, counterexample=replace(report.counterexample, seed=seed))


def parse_suite(name: str) -> Suite:
    try:
        return Suite(name)
    except ValueError:
        known = ", ".join(suite.value for suite in Suite)
        raise UsageError(f"Unknown suite {name!r} (known: {known})")


def run_suite(name: str, semiring: SemiringDescriptor, n: int, trials: int, seed: int,
              workers: Optional[int] = None) -> CheckReport:
    """
    Run a named suite.

    Trial t regenerates its instance from seed + t, so a report is
    reproducible from (name, semiring, n, seed) and any single failing trial
    can be replayed on its own.

    Args:
        name: Suite name (see ``Suite``)
        semiring: Semiring of the generated matrices
        n: Matrix size
        trials: Number of trials
        seed: Base seed
        workers: Thread pool size (defaults to SEMIPERM_WORKERS)

    Returns:
        Aggregated CheckReport

    Raises:
        UsageError: For unknown suites, bad sizes or semirings without a fast path
    """
    suite = parse_suite(name)

    if suite is Suite.REMARK24:
        return replace(check_remark24(), seed=seed)
    if suite is Suite.REMARK36:
        return replace(check_remark36(), seed=seed)
    if suite is Suite.LEMMA42:
        if n < 2:
            raise UsageError(f"lemma42 needs n >= 2, got {n}")
        checked, failure = exhaustive_combine(n)
        counterexample = None
        if failure is not None:
            sigma, pi, p, q, r = failure
            counterexample = Counterexample(
                "graph(phi) + Phi(tau, p, r) = Phi(sigma, p, q) + Phi(pi, q, r)", "failed", "holds", "=",
                parameters=(("sigma", str(sigma)), ("pi", str(pi)), ("p", str(p)), ("q", str(q)), ("r", str(r))),
            )
        return CheckReport("lemma42", "none", trials=checked + (1 if failure else 0), passed=checked,
                           counterexample=counterexample, seed=seed, note=f"exhaustive over S_{n}")

    if n < 2:
        raise UsageError(f"Suite {suite.value} needs n >= 2, got {n}")
    if trials < 1:
        raise UsageError(f"Suites need at least one trial, got {trials}")
    if suite is Suite.FAST_PATHS and semiring.id not in FAST_PATH_SEMIRINGS:
        known = ", ".join(i.value for i in FAST_PATH_SEMIRINGS)
        raise UsageError(f"fast_paths runs over {known}, not {semiring.name}")

    trial_fn = _TRIALS[suite]
    logger.info(f"Running {suite.value} over {semiring.name}: n={n}, trials={trials}, seed={seed}")

    def one(trial: int, trial_seed: int) -> CheckReport:
        return _tag_seed(trial_fn(semiring, n, trial, trial_seed), trial_seed)

    report = aggregate(suite.value, semiring.name, run_trials(one, trials, seed, workers), seed)
    logger.info(f"{suite.value} over {semiring.name}: {report.passed}/{report.trials} passed, {report.skipped} skipped")
    return report

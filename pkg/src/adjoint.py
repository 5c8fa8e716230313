"""Adjoint matrices, condition (*) and its power characterization."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import PreconditionError, ShapeError
from .matrix import Matrix, mat_pow
from .permanent import per_minor_table, per_subset_dp
from .semiring import Element

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StarWitness:
    """
    Result of testing a_ii >= a_jk for all i, j, k.

    ``violation`` is a 1-based (i, j, k) with a_jk not below a_ii; ``diagonal``
    is the common diagonal value when the condition holds.
    """
    holds: bool
    violation: Optional[Tuple[int, int, int]] = None
    diagonal: Optional[Element] = None

    def __bool__(self) -> bool:
        return self.holds


def adj(A: Matrix) -> Matrix:
    """
    Adjoint matrix: entry (i, j) is per(A(j|i)).

    Raises:
        PreconditionError: If n = 1 (the adjoint is only defined through (n-1)-minors)
        ShapeError: If A is not square
    """
    if not A.is_square:
        raise ShapeError(f"The adjoint needs a square matrix, got {A.rows}x{A.cols}")
    n = A.rows
    if n < 2:
        raise PreconditionError("The adjoint needs n >= 2")
    minors = per_minor_table(A)
    return Matrix(A.semiring, n, n, tuple(tuple(minors[j][i] for j in range(n)) for i in range(n)))


def _worst_violation(A: Matrix, i: int) -> Optional[Tuple[int, int]]:
    """Among entries not below a_ii, a maximal one, preferring the diagonal, then the lowest position."""
    s = A.semiring
    n = A.rows
    a_ii = A.entry(i, i)
    violators: List[Tuple[int, int]] = [
        (j, k) for j in range(1, n + 1) for k in range(1, n + 1) if not s.leq(A.entry(j, k), a_ii)
    ]
    if not violators:
        return None

    def dominated(position: Tuple[int, int]) -> bool:
        value = A.entry(*position)
        return any(
            value != A.entry(*other) and s.leq(value, A.entry(*other)) for other in violators
        )

    maximal = [p for p in violators if not dominated(p)]
    diagonal = [p for p in maximal if p[0] == p[1]]
    return min(diagonal) if diagonal else min(maximal)


def satisfies_star(A: Matrix) -> StarWitness:
    """
    Test condition (*): a_ii >= a_jk for all i, j, k.

    The witness names the first row i that fails, together with the most
    dominant offending entry (j, k).
    """
    if not A.is_square:
        raise ShapeError(f"Condition (*) needs a square matrix, got {A.rows}x{A.cols}")
    n = A.rows
    if n < 2:
        raise PreconditionError("Condition (*) needs n >= 2")
    for i in range(1, n + 1):
        worst = _worst_violation(A, i)
        if worst is not None:
            return StarWitness(False, (i,) + worst)
    diagonal = {A.entry(i, i) for i in range(1, n + 1)}
    if len(diagonal) != 1:
        # Cannot happen in an idempotent semiring: a_ii <= a_jj <= a_ii forces equality
        raise RuntimeError(f"Condition (*) holds but the diagonal is not constant: {sorted(map(str, diagonal))}")
    return StarWitness(True, None, A.entry(1, 1))


def _require_star(A: Matrix) -> StarWitness:
    witness = satisfies_star(A)
    if not witness.holds:
        i, j, k = witness.violation
        raise PreconditionError(
            f"Condition (*) fails: a_{j}{k} = {A.entry(j, k)} is not <= a_{i}{i} = {A.entry(i, i)}",
            witness=witness,
        )
    return witness


def adj_via_power(A: Matrix) -> Matrix:
    """
    adj(A) as A^(n-1) for matrices satisfying condition (*).

    Raises:
        PreconditionError: Carrying the StarWitness when (*) fails
    """
    _require_star(A)
    return mat_pow(A, A.rows - 1)


def per_adj_star(A: Matrix) -> Element:
    """
    per(adj(A)) for matrices satisfying condition (*); equals per(A)^(n-1).

    Raises:
        PreconditionError: Carrying the StarWitness when (*) fails
    """
    _require_star(A)
    value = per_subset_dp(adj(A))
    logger.debug(f"per(adj(A)) = {value} for a {A.rows}x{A.rows} (*) matrix")
    return value

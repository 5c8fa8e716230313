"""
Fast permanents for semirings where per(A) is an assignment value.

Over max-plus the permanent is the optimal assignment weight, over the
max-min fuzzy algebra it is the bottleneck assignment value, and over the
Boolean semiring it says whether a perfect matching exists.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .errors import CarrierMismatchError, PreconditionError, ShapeError
from .matrix import Matrix, Permutation
from .semiring import Element, SemiringId

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AssignmentSolution:
    """Optimal value and a permutation whose product reproduces it."""
    value: Element
    assignment: Permutation


def _require(A: Matrix, semiring_id: SemiringId) -> int:
    if A.semiring.id is not semiring_id:
        raise CarrierMismatchError(f"Expected a {semiring_id.value} matrix, got {A.semiring.name}")
    if not A.is_square:
        raise ShapeError(f"The permanent needs a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def max_bipartite_matching(n: int, allowed: Callable[[int, int], bool]) -> List[Optional[int]]:
    """
    Maximum matching by augmenting paths (Kuhn's algorithm).

    Args:
        n: Number of rows and of columns (0-based internally)
        allowed: allowed(i, j) tells whether row i may take column j

    Returns:
        col_of_row list; None marks an unmatched row
    """
    row_of_col: List[Optional[int]] = [None] * n

    def search(i: int, seen: List[bool]) -> bool:
        for j in range(n):
            if allowed(i, j) and not seen[j]:
                seen[j] = True
                if row_of_col[j] is None or search(row_of_col[j], seen):
                    row_of_col[j] = i
                    return True
        return False

    for i in range(n):
        search(i, [False] * n)

    col_of_row: List[Optional[int]] = [None] * n
    for j, i in enumerate(row_of_col):
        if i is not None:
            col_of_row[i] = j
    return col_of_row


def _to_permutation(col_of_row: Sequence[Optional[int]]) -> Optional[Permutation]:
    if any(j is None for j in col_of_row):
        return None
    return Permutation(tuple(j + 1 for j in col_of_row))


def _max_weight_assignment(weights: List[List[Optional[Fraction]]]) -> Optional[List[int]]:
    """
    Maximum weight perfect matching by successive best augmenting paths.

    ``None`` weights are forbidden edges. Each augmentation runs a label
    correcting search over alternating paths with exact rational gains; no
    dual potentials are kept. Returns None when no perfect matching exists.
    """
    n = len(weights)
    row_of_col: List[Optional[int]] = [None] * n
    col_of_row: List[Optional[int]] = [None] * n

    for root in range(n):
        best: List[Optional[Fraction]] = [None] * n
        entered_from: List[Optional[int]] = [None] * n
        for v in range(n):
            if weights[root][v] is not None:
                best[v] = weights[root][v]
                entered_from[v] = root

        # The current matching is optimal for its rows, so no gain cycle exists
        # and the relaxation settles within n rounds.
        for _ in range(n + 1):
            changed = False
            for v in range(n):
                u = row_of_col[v]
                if best[v] is None or u is None:
                    continue
                base = best[v] - weights[u][v]
                for w in range(n):
                    if weights[u][w] is None or w == v:
                        continue
                    candidate = base + weights[u][w]
                    if best[w] is None or candidate > best[w]:
                        best[w] = candidate
                        entered_from[w] = u
                        changed = True
            if not changed:
                break
        else:
            raise RuntimeError("Augmenting path search did not settle; matching is not optimal")

        target = None
        for v in range(n):
            if row_of_col[v] is None and best[v] is not None:
                if target is None or best[v] > best[target]:
                    target = v
        if target is None:
            return None

        v = target
        while True:
            u = entered_from[v]
            previous = col_of_row[u]
            col_of_row[u] = v
            row_of_col[v] = u
            if u == root:
                break
            v = previous

    return col_of_row


def per_maxplus(A: Matrix) -> AssignmentSolution:
    """
    Max-plus permanent as the optimal assignment value.

    Bottom entries are forbidden edges. If every permutation meets a bottom
    entry the value is bottom and the witness is the identity.

    Raises:
        CarrierMismatchError: If A is not a max_plus matrix
    """
    n = _require(A, SemiringId.MAX_PLUS)
    weights = [[e.value for e in row] for row in A.entries]
    col_of_row = _max_weight_assignment(weights)
    if col_of_row is None:
        return AssignmentSolution(Element.bottom(), Permutation.identity(n))
    total = sum((weights[i][j] for i, j in enumerate(col_of_row)), Fraction(0))
    return AssignmentSolution(Element.extended(total), _to_permutation(col_of_row))


def per_maxmin(A: Matrix) -> AssignmentSolution:
    """
    Max-min permanent as the bottleneck assignment value.

    Binary search over the sorted distinct entries: t is feasible when a
    perfect matching exists using only entries >= t.

    Raises:
        CarrierMismatchError: If A is not a fuzzy_maxmin matrix
    """
    n = _require(A, SemiringId.FUZZY_MAXMIN)
    values = [[e.value for e in row] for row in A.entries]
    thresholds = sorted({v for row in values for v in row})

    def matching_at(t: Fraction) -> Optional[Permutation]:
        return _to_permutation(max_bipartite_matching(n, lambda i, j: values[i][j] >= t))

    # The smallest entry is always feasible: every edge is allowed
    low, high = 0, len(thresholds) - 1
    witness = matching_at(thresholds[0])
    while low < high:
        middle = (low + high + 1) // 2
        candidate = matching_at(thresholds[middle])
        if candidate is not None:
            low, witness = middle, candidate
        else:
            high = middle - 1
    return AssignmentSolution(Element.rational(thresholds[low]), witness)


def boolean_matching(A: Matrix) -> Optional[Permutation]:
    """A permutation inside the support of a Boolean matrix, or None."""
    n = _require(A, SemiringId.BOOLEAN)
    return _to_permutation(max_bipartite_matching(n, lambda i, j: A.entries[i][j].value == 1))


def per_boolean(A: Matrix) -> Element:
    """
    Boolean permanent: 1 iff a perfect matching exists.

    Raises:
        CarrierMismatchError: If A is not a boolean matrix
    """
    return Element.boolean(boolean_matching(A) is not None)


def per_fast(A: Matrix) -> Element:
    """
    Dispatch to the fast path of A's semiring.

    Raises:
        PreconditionError: If the semiring has no fast path
    """
    semiring_id = A.semiring.id
    logger.debug(f"Fast permanent for {A.semiring.name}")
    if semiring_id is SemiringId.MAX_PLUS:
        return per_maxplus(A).value
    if semiring_id is SemiringId.FUZZY_MAXMIN:
        return per_maxmin(A).value
    if semiring_id is SemiringId.BOOLEAN:
        return per_boolean(A)
    raise PreconditionError(
        f"No fast permanent for {A.semiring.name}; fast paths exist for max_plus, fuzzy_maxmin and boolean"
    )

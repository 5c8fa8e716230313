"""
Permanents over additively idempotent semirings.

Three independent algorithms compute per(A): enumeration of S_n (the
reference oracle), a dynamic program over column subsets (the production
path) and Laplace expansion along a row set. None of them subtracts, so all
are valid over semirings.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Any, List, Optional, Sequence, Tuple, Union

from .assignment import per_fast
from .errors import CapExceededError, IndexOutOfRangeError, PreconditionError, ShapeError
from .matrix import IndexTuple, Matrix, omega
from .semiring import Element, Kernel
from .utils import DP_CAP_VAR, ENUM_CAP_VAR, get_dp_cap, get_enum_cap

logger = logging.getLogger(__name__)


class PermanentAlgorithm(Enum):
    """Algorithms selectable with ``per --alg``."""
    ENUMERATE = "enum"
    SUBSET_DP = "dp"
    LAPLACE = "laplace"
    ROW_EXPANSION = "row"
    DIAG_DOMINANT = "diag"
    FAST = "fast"


@dataclass(frozen=True)
class PermanentResult:
    value: Element
    algorithm: PermanentAlgorithm
    n: int


def _square_size(A: Matrix) -> int:
    if not A.is_square:
        raise ShapeError(f"The permanent needs a square matrix, got {A.rows}x{A.cols}")
    return A.rows


def _enforce_cap(n: int, cap: int, cap_name: str, algorithm: str) -> None:
    if n > cap:
        raise CapExceededError(
            f"{algorithm} refuses n={n}: the cap is {cap} (raise it with {cap_name})",
            cap_name=cap_name, cap=cap, size=n,
        )


def per_enumerate(A: Matrix, cap: Optional[int] = None) -> Element:
    """
    Sum over all n! permutation products; the reference oracle.

    Args:
        A: Square matrix
        cap: Largest accepted n (defaults to SEMIPERM_ENUM_CAP, 10)

    Raises:
        ShapeError: If A is not square
        CapExceededError: If n is over the cap
    """
    n = _square_size(A)
    _enforce_cap(n, get_enum_cap() if cap is None else cap, ENUM_CAP_VAR, "per_enumerate")
    s = A.semiring
    # Entries were checked when A was built; sum the payloads with the defining operations
    payloads = [[e.value for e in row] for row in A.entries]
    # prefix[i] is the product of the first i factors of the current permutation;
    # lexicographic order lets consecutive permutations share it.
    prefix = [s.one.value] * (n + 1)
    previous = None
    total = s.zero.value
    for sigma in permutations(range(n)):
        start = 0
        if previous is not None:
            while sigma[start] == previous[start]:
                start += 1
        for i in range(start, n):
            prefix[i + 1] = s._mul(prefix[i], payloads[i][sigma[i]])
        total = s._add(total, prefix[n])
        previous = sigma
    return Element(s.carrier, total)


def _encoded_rows(A: Matrix) -> Tuple[Kernel, List[List[Any]]]:
    kernel = A.semiring.kernel([e for row in A.entries for e in row])
    return kernel, [[kernel.encode(e) for e in row] for row in A.entries]


def _raw_permanent(kernel: Kernel, rows: List[List[Any]], row_idx: Sequence[int], col_idx: Sequence[int]) -> Any:
    """Subset DP on encoded entries, restricted to the 0-based rows ``row_idx`` and columns ``col_idx``."""
    k = len(row_idx)
    if k == 0:
        return kernel.one
    sub = [[rows[r][c] for c in col_idx] for r in row_idx]
    if k == 1:
        return sub[0][0]
    add, mul, zero = kernel.add, kernel.mul, kernel.zero

    g = [zero] * (1 << k)
    g[0] = kernel.one
    for mask in range(1, 1 << k):
        row = sub[bin(mask).count("1") - 1]
        acc = zero
        rest = mask
        while rest:
            low = rest & -rest
            acc = add(acc, mul(row[low.bit_length() - 1], g[mask ^ low]))
            rest ^= low
        g[mask] = acc
    return g[-1]


def per_subset_dp(A: Matrix, cap: Optional[int] = None) -> Element:
    """
    Dynamic program over column subsets.

    g(empty) = one, and for |S| = i, g(S) = sum over j in S of a_ij g(S - {j});
    the result is g({1..n}). Runs in O(n 2^n) semiring operations on the
    semiring's raw kernel encoding.

    Args:
        A: Square matrix
        cap: Largest accepted n (defaults to SEMIPERM_DP_CAP, 20)

    Raises:
        ShapeError: If A is not square
        CapExceededError: If n is over the cap
    """
    n = _square_size(A)
    _enforce_cap(n, get_dp_cap() if cap is None else cap, DP_CAP_VAR, "per_subset_dp")
    kernel, rows = _encoded_rows(A)
    return kernel.decode(_raw_permanent(kernel, rows, range(n), range(n)), n)


def per_minor_table(A: Matrix) -> List[List[Element]]:
    """
    per(A(i|j)) for every 1-based (i, j), as a 0-based table.

    The entries are encoded once and every (n-1)-minor runs the subset DP on
    the shared encoding.

    Raises:
        ShapeError: If A is not square
        PreconditionError: If n < 2
        CapExceededError: If n - 1 is over the DP cap
    """
    n = _square_size(A)
    if n < 2:
        raise PreconditionError("(n-1)-minors need n >= 2")
    _enforce_cap(n - 1, get_dp_cap(), DP_CAP_VAR, "per_subset_dp")
    kernel, rows = _encoded_rows(A)
    table = []
    for i in range(n):
        other_rows = [r for r in range(n) if r != i]
        table.append([
            kernel.decode(_raw_permanent(kernel, rows, other_rows, [c for c in range(n) if c != j]), n - 1)
            for j in range(n)
        ])
    return table


def per_laplace(A: Matrix, alpha: Union[IndexTuple, Sequence[int]]) -> Element:
    """
    Laplace expansion along the rows alpha:
    per(A) = sum over beta in omega(k, n) of per(A[alpha|beta]) per(A(alpha|beta)).

    Raises:
        PreconditionError: If n < 2
        IndexOutOfRangeError: If alpha is not a valid tuple with 1 <= k <= n-1
    """
    n = _square_size(A)
    if n < 2:
        raise PreconditionError("Laplace expansion needs n >= 2")
    alpha = alpha if isinstance(alpha, IndexTuple) else IndexTuple(n, tuple(alpha))
    if alpha.n != n or not 1 <= len(alpha) <= n - 1:
        raise IndexOutOfRangeError(f"alpha must be a k-tuple over 1..{n} with 1 <= k <= {n - 1}")
    k = len(alpha)
    _enforce_cap(max(k, n - k), get_dp_cap(), DP_CAP_VAR, "per_subset_dp")
    kernel, rows = _encoded_rows(A)
    rows_in = [i - 1 for i in alpha.indices]
    rows_out = [r for r in range(n) if r + 1 not in alpha.indices]
    total = kernel.zero
    for beta in omega(k, n):
        cols_in = [j - 1 for j in beta.indices]
        cols_out = [c for c in range(n) if c + 1 not in beta.indices]
        inner = _raw_permanent(kernel, rows, rows_in, cols_in)
        outer = _raw_permanent(kernel, rows, rows_out, cols_out)
        total = kernel.add(total, kernel.mul(inner, outer))
    return kernel.decode(total, n)


def per_row_expansion(A: Matrix, i: int) -> Element:
    """
    Expansion along row i: per(A) = sum_j a_ij per(A(i|j)).

    Raises:
        PreconditionError: If n < 2
        IndexOutOfRangeError: If i is outside 1..n
    """
    n = _square_size(A)
    if n < 2:
        raise PreconditionError("Row expansion needs n >= 2")
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"Row {i} outside 1..{n}")
    _enforce_cap(n - 1, get_dp_cap(), DP_CAP_VAR, "per_subset_dp")
    kernel, rows = _encoded_rows(A)
    other_rows = [r for r in range(n) if r != i - 1]
    total = kernel.zero
    for j in range(n):
        rest = _raw_permanent(kernel, rows, other_rows, [c for c in range(n) if c != j])
        total = kernel.add(total, kernel.mul(rows[i - 1][j], rest))
    return kernel.decode(total, n)


def per_diag_dominant(A: Matrix) -> Element:
    """
    Diagonal product for matrices with a_ik <= a_ii for all i, k.

    Raises:
        PreconditionError: Naming the first (i, k) with a_ik not below a_ii
    """
    n = _square_size(A)
    s = A.semiring
    for i in range(1, n + 1):
        for k in range(1, n + 1):
            if not s.leq(A.entry(i, k), A.entry(i, i)):
                raise PreconditionError(
                    f"Diagonal is not row-dominant: a_{i}{k} = {A.entry(i, k)} is not <= a_{i}{i} = {A.entry(i, i)}",
                    witness=(i, k),
                )
    return s.product(A.entry(i, i) for i in range(1, n + 1))


def per(A: Matrix) -> Element:
    """The production permanent (subset dynamic program)."""
    return per_subset_dp(A)


def compute_permanent(A: Matrix, algorithm: PermanentAlgorithm = PermanentAlgorithm.SUBSET_DP,
                      alpha: Optional[Sequence[int]] = None, row: int = 1) -> PermanentResult:
    """
    Dispatch to one permanent algorithm.

    Args:
        A: Square matrix
        algorithm: Algorithm to run
        alpha: Row tuple for Laplace expansion (defaults to (1,))
        row: Row for row expansion

    Returns:
        PermanentResult with the value and the algorithm used
    """
    n = _square_size(A)
    logger.debug(f"Computing per of a {n}x{n} {A.semiring.name} matrix with {algorithm.value}")
    if algorithm is PermanentAlgorithm.ENUMERATE:
        value = per_enumerate(A)
    elif algorithm is PermanentAlgorithm.SUBSET_DP:
        value = per_subset_dp(A)
    elif algorithm is PermanentAlgorithm.LAPLACE:
        value = per_laplace(A, tuple(alpha) if alpha else (1,))
    elif algorithm is PermanentAlgorithm.ROW_EXPANSION:
        value = per_row_expansion(A, row)
    elif algorithm is PermanentAlgorithm.DIAG_DOMINANT:
        value = per_diag_dominant(A)
    else:
        value = per_fast(A)
    return PermanentResult(value=value, algorithm=algorithm, n=n)

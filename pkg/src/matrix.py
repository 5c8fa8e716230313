"""
Dense matrices over one semiring, index tuples and permutations.

All indices are 1-based at the API boundary, in error messages and in files.
"""

import json
import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import (
    IndexOutOfRangeError,
    MatrixFormatError,
    PreconditionError,
    SemiringError,
    ShapeError,
)
from .semiring import Element, SemiringDescriptor, SemiringId, get_semiring

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexTuple:
    """A strictly increasing tuple of indices in {1..n}."""
    n: int
    indices: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise IndexOutOfRangeError("An index tuple needs at least one index")
        previous = 0
        for i in self.indices:
            if not isinstance(i, int) or i <= previous or i > self.n:
                raise IndexOutOfRangeError(
                    f"Indices {self.indices} must be strictly increasing within 1..{self.n}"
                )
            previous = i

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def complement(self) -> Tuple[int, ...]:
        chosen = set(self.indices)
        return tuple(i for i in range(1, self.n + 1) if i not in chosen)


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..n}; ``images[i-1]`` is the image of i."""
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise IndexOutOfRangeError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """Build a permutation from disjoint cycles, e.g. ``[(1, 2)]``."""
        images = list(range(1, n + 1))
        for cycle in cycles:
            for position, i in enumerate(cycle):
                images[i - 1] = cycle[(position + 1) % len(cycle)]
        return cls(tuple(images))

    @classmethod
    def all(cls, n: int) -> Iterator["Permutation"]:
        """Every element of S_n in lexicographic order of images."""
        for images in permutations(range(1, n + 1)):
            yield cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexOutOfRangeError(f"Index {i} outside 1..{self.n}")
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self`` after ``other``: i -> self(other(i))."""
        if other.n != self.n:
            raise ShapeError(f"Cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            images[j - 1] = i
        return Permutation(tuple(images))

    def power(self, k: int) -> "Permutation":
        result = Permutation.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = base.compose(result)
        return result

    def cycles(self) -> List[Tuple[int, ...]]:
        """Disjoint cycles (fixed points included), each starting at its least element."""
        seen = set()
        result = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start - 1]
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self.images[j - 1]
            result.append(tuple(cycle))
        return result

    def graph(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, j in enumerate(self.images, start=1)]

    def weight(self, A: "Matrix") -> Element:
        """The product a_{1 s(1)} ... a_{n s(n)} along this permutation."""
        if A.rows != self.n or A.cols != self.n:
            raise ShapeError(f"Permutation of size {self.n} does not fit a {A.rows}x{A.cols} matrix")
        return A.semiring.product(A.entry(i, j) for i, j in self.graph())

    def __str__(self) -> str:
        return "[" + " ".join(str(j) for j in self.images) + "]"


@dataclass(frozen=True)
class Matrix:
    """An immutable dense matrix; ``entries`` is a tuple of row tuples."""
    semiring: SemiringDescriptor
    rows: int
    cols: int
    entries: Tuple[Tuple[Element, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"A matrix needs at least one row and column, got {self.rows}x{self.cols}")
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise ShapeError(f"Entries do not form a {self.rows}x{self.cols} array")
        for row in entries:
            for element in row:
                self.semiring.check(element)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_values(cls, semiring: SemiringDescriptor, values: Sequence[Sequence[Any]]) -> "Matrix":
        """
        Build a matrix from nested sequences of Elements, element strings or Python values.

        Args:
            semiring: Semiring of the entries
            values: Rows of values accepted by ``semiring.coerce``

        Returns:
            The matrix
        """
        entries = tuple(tuple(semiring.coerce(v) for v in row) for row in values)
        if not entries:
            raise ShapeError("A matrix needs at least one row")
        return cls(semiring, len(entries), len(entries[0]), entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def n(self) -> int:
        """Size of a square matrix."""
        if not self.is_square:
            raise ShapeError(f"Expected a square matrix, got {self.rows}x{self.cols}")
        return self.rows

    def entry(self, i: int, j: int) -> Element:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexOutOfRangeError(f"Entry ({i},{j}) outside a {self.rows}x{self.cols} matrix")
        return self.entries[i - 1][j - 1]

    def row(self, i: int) -> Tuple[Element, ...]:
        if not 1 <= i <= self.rows:
            raise IndexOutOfRangeError(f"Row {i} outside 1..{self.rows}")
        return self.entries[i - 1]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.entries)


def _same_semiring(A: Matrix, B: Matrix) -> None:
    if A.semiring != B.semiring:
        raise ShapeError(f"Semiring mismatch: {A.semiring.name} vs {B.semiring.name}")


def identity_matrix(s: SemiringDescriptor, n: int) -> Matrix:
    return Matrix(s, n, n, tuple(tuple(s.one if i == j else s.zero for j in range(n)) for i in range(n)))


def zero_matrix(s: SemiringDescriptor, rows: int, cols: Optional[int] = None) -> Matrix:
    cols = rows if cols is None else cols
    return Matrix(s, rows, cols, tuple(tuple(s.zero for _ in range(cols)) for _ in range(rows)))


def constant_matrix(s: SemiringDescriptor, n: int, value: Element) -> Matrix:
    return Matrix(s, n, n, tuple(tuple(value for _ in range(n)) for _ in range(n)))


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    """Entrywise sum."""
    _same_semiring(A, B)
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise ShapeError(f"Cannot add {A.rows}x{A.cols} and {B.rows}x{B.cols} matrices")
    s = A.semiring
    return Matrix(s, A.rows, A.cols, tuple(
        tuple(s.add(a, b) for a, b in zip(row_a, row_b))
        for row_a, row_b in zip(A.entries, B.entries)
    ))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    """(AB)_ij = sum_k a_ik b_kj with the semiring operations."""
    _same_semiring(A, B)
    if A.cols != B.rows:
        raise ShapeError(f"Cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    s = A.semiring
    columns = list(zip(*B.entries))
    return Matrix(s, A.rows, B.cols, tuple(
        tuple(s.sum(s.mul(a, b) for a, b in zip(row, column)) for column in columns)
        for row in A.entries
    ))


def scalar_mul(scalar: Element, A: Matrix) -> Matrix:
    s = A.semiring
    s.check(scalar)
    return Matrix(s, A.rows, A.cols, tuple(tuple(s.mul(scalar, a) for a in row) for row in A.entries))


def transpose(A: Matrix) -> Matrix:
    return Matrix(A.semiring, A.cols, A.rows, tuple(zip(*A.entries)))


def mat_pow(A: Matrix, l: int) -> Matrix:
    """
    l-fold product of a square matrix; ``l == 0`` gives the identity.

    Raises:
        PreconditionError: If l is negative
    """
    n = A.n
    if l < 0:
        raise PreconditionError(f"mat_pow needs l >= 0, got {l}")
    result = identity_matrix(A.semiring, n)
    for _ in range(l):
        result = mat_mul(result, A)
    return result


def mat_leq(A: Matrix, B: Matrix) -> bool:
    """Entrywise canonical order."""
    _same_semiring(A, B)
    if (A.rows, A.cols) != (B.rows, B.cols):
        raise ShapeError(f"Cannot compare {A.rows}x{A.cols} and {B.rows}x{B.cols} matrices")
    s = A.semiring
    return all(s.leq(a, b) for row_a, row_b in zip(A.entries, B.entries) for a, b in zip(row_a, row_b))


def _as_tuple(A: Matrix, indices: Union[IndexTuple, Sequence[int]], size: int) -> IndexTuple:
    if isinstance(indices, IndexTuple):
        if indices.n != size:
            raise IndexOutOfRangeError(f"Index tuple over 1..{indices.n} used on a dimension of size {size}")
        return indices
    return IndexTuple(size, tuple(indices))


def submatrix_select(A: Matrix, alpha: Union[IndexTuple, Sequence[int]],
                     beta: Union[IndexTuple, Sequence[int]]) -> Matrix:
    """A[alpha|beta]: the entries in rows alpha and columns beta."""
    alpha = _as_tuple(A, alpha, A.rows)
    beta = _as_tuple(A, beta, A.cols)
    if len(alpha) != len(beta):
        raise IndexOutOfRangeError(f"alpha and beta must have the same length, got {len(alpha)} and {len(beta)}")
    return Matrix(A.semiring, len(alpha), len(beta),
                  tuple(tuple(A.entries[i - 1][j - 1] for j in beta) for i in alpha))


def submatrix_delete(A: Matrix, alpha: Union[IndexTuple, Sequence[int]],
                     beta: Union[IndexTuple, Sequence[int]]) -> Matrix:
    """A(alpha|beta): delete rows alpha and columns beta."""
    alpha = _as_tuple(A, alpha, A.rows)
    beta = _as_tuple(A, beta, A.cols)
    if len(alpha) != len(beta):
        raise IndexOutOfRangeError(f"alpha and beta must have the same length, got {len(alpha)} and {len(beta)}")
    keep_rows, keep_cols = alpha.complement(), beta.complement()
    if not keep_rows or not keep_cols:
        raise IndexOutOfRangeError("Deleting every row or column leaves no matrix")
    return Matrix(A.semiring, len(keep_rows), len(keep_cols),
                  tuple(tuple(A.entries[i - 1][j - 1] for j in keep_cols) for i in keep_rows))


def minor(A: Matrix, j: int, i: int) -> Matrix:
    """A(j|i): delete row j and column i."""
    n = A.n
    if n < 2:
        raise PreconditionError("A minor needs n >= 2")
    if not (1 <= j <= n and 1 <= i <= n):
        raise IndexOutOfRangeError(f"Minor ({j}|{i}) outside 1..{n}")
    return submatrix_delete(A, (j,), (i,))


def row_replace(A: Matrix, p: int, q: int) -> Matrix:
    """A(p=>q): row q replaced by a copy of row p."""
    n = A.n
    if not (1 <= p <= n and 1 <= q <= n):
        raise IndexOutOfRangeError(f"Row replacement ({p}=>{q}) outside 1..{n}")
    entries = list(A.entries)
    entries[q - 1] = A.entries[p - 1]
    return Matrix(A.semiring, n, n, tuple(entries))


def permutation_matrix(sigma: Permutation, s: SemiringDescriptor) -> Matrix:
    """Entry (i, sigma(i)) is one, every other entry zero."""
    n = sigma.n
    return Matrix(s, n, n, tuple(
        tuple(s.one if sigma.images[i] == j + 1 else s.zero for j in range(n)) for i in range(n)
    ))


def block_upper_triangular(A: Matrix, C: Matrix, B: Matrix) -> Matrix:
    """The block matrix [[A, C], [O, B]] with O the zero block."""
    _same_semiring(A, B)
    _same_semiring(A, C)
    if C.rows != A.rows or C.cols != B.cols or not A.is_square or not B.is_square:
        raise ShapeError("Blocks do not fit [[A, C], [O, B]]")
    s = A.semiring
    top = tuple(row_a + row_c for row_a, row_c in zip(A.entries, C.entries))
    bottom = tuple(tuple(s.zero for _ in range(A.cols)) + row_b for row_b in B.entries)
    size = A.rows + B.rows
    return Matrix(s, size, size, top + bottom)


def omega(k: int, n: int) -> List[IndexTuple]:
    """
    All strictly increasing k-tuples in {1..n}, lexicographically ordered.

    Raises:
        IndexOutOfRangeError: Unless 1 <= k <= n-1
    """
    if not 1 <= k <= n - 1:
        raise IndexOutOfRangeError(f"omega needs 1 <= k <= n-1, got k={k}, n={n}")
    return [IndexTuple(n, c) for c in combinations(range(1, n + 1), k)]


# ---------------------------------------------------------------------------
# Matrix documents
# ---------------------------------------------------------------------------

_PARAM_FIELD = {SemiringId.DIVISOR_LATTICE: "N", SemiringId.SUBSET_LATTICE: "M"}


def semiring_to_document(s: SemiringDescriptor) -> Dict[str, Any]:
    document: Dict[str, Any] = {"semiring": s.id.value}
    if s.id in _PARAM_FIELD:
        document[_PARAM_FIELD[s.id]] = s.param
    return document


def semiring_from_document(document: Dict[str, Any]) -> SemiringDescriptor:
    name = document.get("semiring")
    if not isinstance(name, str):
        raise MatrixFormatError("Matrix document needs a string field 'semiring'")
    try:
        semiring_id = SemiringId(name)
    except ValueError:
        raise MatrixFormatError(f"Unknown semiring {name!r} in matrix document")
    param = document.get(_PARAM_FIELD[semiring_id]) if semiring_id in _PARAM_FIELD else None
    if semiring_id in _PARAM_FIELD and (isinstance(param, bool) or not isinstance(param, int)):
        raise MatrixFormatError(f"{name} documents need an integer field '{_PARAM_FIELD[semiring_id]}'")
    try:
        return get_semiring(name, param)
    except SemiringError as e:
        raise MatrixFormatError(str(e))


def matrix_to_document(A: Matrix) -> Dict[str, Any]:
    document = semiring_to_document(A.semiring)
    document["rows"] = A.rows
    document["cols"] = A.cols
    document["entries"] = [[A.semiring.format(e) for e in row] for row in A.entries]
    return document


def matrix_from_document(document: Any) -> Matrix:
    """
    Build a matrix from a parsed document.

    Raises:
        MatrixFormatError: If a field is missing or inconsistent, or an entry does not parse
    """
    if not isinstance(document, dict):
        raise MatrixFormatError("A matrix document must be a JSON object")
    s = semiring_from_document(document)
    rows, cols, entries = document.get("rows"), document.get("cols"), document.get("entries")
    if any(isinstance(v, bool) or not isinstance(v, int) for v in (rows, cols)) or rows < 1 or cols < 1:
        raise MatrixFormatError("Fields 'rows' and 'cols' must be positive integers")
    if (not isinstance(entries, list) or len(entries) != rows
            or any(not isinstance(row, list) or len(row) != cols for row in entries)):
        raise MatrixFormatError(f"Field 'entries' must be {rows} arrays of {cols} element strings")
    parsed = []
    for i, row in enumerate(entries, start=1):
        parsed_row = []
        for j, text in enumerate(row, start=1):
            if not isinstance(text, str):
                raise MatrixFormatError(f"Entry ({i},{j}) must be a string, got {text!r}")
            try:
                parsed_row.append(s.parse(text))
            except SemiringError as e:
                raise MatrixFormatError(f"Entry ({i},{j}): {e}")
        parsed.append(tuple(parsed_row))
    return Matrix(s, rows, cols, tuple(parsed))


def dumps_matrix(A: Matrix) -> str:
    """Canonical text: header fields one per line, one entries row per line."""
    document = matrix_to_document(A)
    lines = ["{"]
    for key in [k for k in document if k != "entries"]:
        lines.append(f"  {json.dumps(key)}: {json.dumps(document[key])},")
    lines.append('  "entries": [')
    rows = [json.dumps(row) for row in document["entries"]]
    lines.extend(f"    {row}," for row in rows[:-1])
    lines.append(f"    {rows[-1]}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def loads_matrix(text: str) -> Matrix:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFormatError(f"Matrix document is not valid JSON: {e}")
    return matrix_from_document(document)


def load_matrix(path: Union[str, Path]) -> Matrix:
    """
    Read a matrix document from disk.

    Raises:
        OSError: If the file cannot be read
        MatrixFormatError: If the document is malformed or not UTF-8
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise MatrixFormatError(f"Matrix document {path} is not UTF-8 text: {e}")
    logger.debug(f"Loaded matrix document {path}")
    return loads_matrix(text)


def save_matrix(A: Matrix, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_matrix(A), encoding="utf-8")

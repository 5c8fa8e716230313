"""Hypothesis strategies for semiring elements and matrices."""

from hypothesis import strategies as st

from src.matrix import Matrix, Permutation
from src.semiring import Element, SemiringDescriptor, SemiringId, builtin_semirings

UNIT_INTERVAL = (
    SemiringId.FUZZY_MAXMIN,
    SemiringId.FUZZY_MAXPROD,
    SemiringId.LUKASIEWICZ,
    SemiringId.FUZZY_HAMACHER,
)


def semirings():
    return st.sampled_from(builtin_semirings())


def elements(s: SemiringDescriptor):
    """Elements of ``s`` with small denominators so products stay readable."""
    if s.is_finite:
        return st.sampled_from(s.elements())
    if s.id in UNIT_INTERVAL:
        return st.fractions(min_value=0, max_value=1, max_denominator=10).map(Element.rational)
    if s.id is SemiringId.MAX_PLUS:
        finite = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(Element.extended)
        return st.one_of(st.just(Element.bottom()), finite)
    return st.fractions(min_value=0, max_value=4, max_denominator=10).map(Element.rational)


@st.composite
def matrices(draw, s: SemiringDescriptor, min_n: int = 1, max_n: int = 4):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(square_matrices(s, n))


def square_matrices(s: SemiringDescriptor, n: int):
    row = st.lists(elements(s), min_size=n, max_size=n).map(tuple)
    return st.lists(row, min_size=n, max_size=n).map(lambda rows: Matrix(s, n, n, tuple(rows)))


@st.composite
def semiring_and_matrix(draw, min_n: int = 1, max_n: int = 4):
    s = draw(semirings())
    return s, draw(matrices(s, min_n, max_n))


@st.composite
def semiring_and_pair(draw, min_n: int = 1, max_n: int = 4):
    s = draw(semirings())
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return s, draw(square_matrices(s, n)), draw(square_matrices(s, n))


def permutations(n: int):
    return st.permutations(list(range(1, n + 1))).map(lambda images: Permutation(tuple(images)))

"""
Phi-sets and the permutation combiner behind the chain inequality.

A Phi-set records which entries a permutation product touches once row q
has been replaced by row p:

    Phi(sigma, p, q) = {(i, sigma(i)) : i != q}  plus  (p, sigma(q))

Unions are multiset unions; the combiner deletes pairs with multiplicity.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional, Tuple

from .errors import IndexOutOfRangeError, PreconditionError, ShapeError
from .matrix import Permutation

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class PhiSet:
    """A multiset of (row, column) pairs of size n."""
    pairs: Counter

    @property
    def size(self) -> int:
        return sum(self.pairs.values())

    def __add__(self, other: "PhiSet") -> "PhiSet":
        return PhiSet(self.pairs + other.pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhiSet):
            return NotImplemented
        # Pairs with a zero count are not members
        return +self.pairs == +other.pairs

    def __hash__(self) -> int:
        return hash(frozenset((+self.pairs).items()))

    def sorted_pairs(self) -> List[Pair]:
        return sorted(self.pairs.elements())

    def __str__(self) -> str:
        return "{" + ", ".join(f"({i},{j})" for i, j in self.sorted_pairs()) + "}"


def _check_index(i: int, n: int, name: str) -> None:
    if not isinstance(i, int) or not 1 <= i <= n:
        raise IndexOutOfRangeError(f"{name}={i!r} outside 1..{n}")


def phi_set(sigma: Permutation, p: int, q: int) -> PhiSet:
    """
    Phi(sigma, p, q); with p = q this is the graph of sigma.

    Raises:
        IndexOutOfRangeError: If p or q is outside 1..n
    """
    n = sigma.n
    _check_index(p, n, "p")
    _check_index(q, n, "q")
    pairs = Counter((i, sigma(i)) for i in range(1, n + 1) if i != q)
    pairs[(p, sigma(q))] += 1
    return PhiSet(pairs)


def _orbit(rho: Permutation, r: int) -> List[int]:
    """r, rho(r), rho^2(r), ... up to the first repeat."""
    orbit = [r]
    i = rho(r)
    while i != r:
        orbit.append(i)
        i = rho(i)
    return orbit


def _build_phi(sigma: Permutation, pi: Permutation, q: int, r: int) -> Permutation:
    n = sigma.n
    rho = pi.inverse().compose(sigma)
    orbit = _orbit(rho, r)
    images = list(pi.images)

    if q not in orbit:
        # sigma on the orbit of r, pi elsewhere
        for i in orbit:
            images[i - 1] = sigma(i)
        logger.debug(f"Combiner case one: orbit {orbit} avoids q={q}")
    else:
        k0 = orbit.index(q)
        head = set(orbit[:k0])
        in_orbit = set(orbit)
        for i in range(1, n + 1):
            if i not in in_orbit or i in head:
                images[i - 1] = sigma(i)
        images[q - 1] = pi(r)
        logger.debug(f"Combiner case two: q={q} reached after {k0} steps of orbit {orbit}")
    return Permutation(tuple(images))


def _read_off_tau(leftover: Counter, n: int, p: int, sigma_q: int, r: int) -> Permutation:
    rest = Counter(leftover)
    if rest[(p, sigma_q)] < 1:
        raise RuntimeError(f"Leftover pairs {sorted(rest.elements())} lack the substituted pair ({p},{sigma_q})")
    rest[(p, sigma_q)] -= 1
    images: List[Optional[int]] = [None] * n
    images[r - 1] = sigma_q
    for (i, j), count in rest.items():
        if count == 0:
            continue
        if count != 1 or i == r or images[i - 1] is not None:
            raise RuntimeError(f"Leftover pairs {sorted(rest.elements())} do not describe one pair per row")
        images[i - 1] = j
    if any(j is None for j in images):
        raise RuntimeError(f"Leftover pairs {sorted(rest.elements())} miss a row")
    return Permutation(tuple(images))


def lemma42_combine(sigma: Permutation, pi: Permutation, p: int, q: int, r: int) -> Tuple[Permutation, Permutation]:
    """
    Rearrange Phi(sigma, p, q) + Phi(pi, q, r) into graph(phi) + Phi(tau, p, r).

    phi follows sigma or pi along the orbit of r under pi^-1 sigma, split on
    whether that orbit reaches q. tau is what remains once the graph of phi
    is deleted from the combined multiset. The multiset identity and the
    bijectivity of both results are checked before returning.

    Args:
        sigma: Permutation contributing the (p, q) replacement
        pi: Permutation contributing the (q, r) replacement
        p, q, r: 1-based indices with q != r

    Returns:
        (phi, tau)

    Raises:
        PreconditionError: If q == r
        ShapeError: If sigma and pi differ in size
        IndexOutOfRangeError: If an index is outside 1..n
    """
    if sigma.n != pi.n:
        raise ShapeError(f"Permutations of sizes {sigma.n} and {pi.n}")
    n = sigma.n
    for name, value in (("p", p), ("q", q), ("r", r)):
        _check_index(value, n, name)
    if q == r:
        raise PreconditionError(f"The combiner needs q != r, got q = r = {q}")

    combined = phi_set(sigma, p, q) + phi_set(pi, q, r)
    phi = _build_phi(sigma, pi, q, r)

    leftover = combined.pairs - Counter(phi.graph())
    if sum(leftover.values()) != n:
        raise RuntimeError(f"Graph of phi={phi} is not contained in {combined}")
    tau = _read_off_tau(leftover, n, p, sigma(q), r)

    if combined != PhiSet(Counter(phi.graph())) + phi_set(tau, p, r):
        raise RuntimeError(
            f"Multiset identity fails for sigma={sigma}, pi={pi}, (p,q,r)=({p},{q},{r}): phi={phi}, tau={tau}"
        )
    return phi, tau


def combiner_instances(n: int) -> Iterator[Tuple[Permutation, Permutation, int, int, int]]:
    """Every (sigma, pi, p, q, r) with sigma, pi in S_n and q != r."""
    perms = list(Permutation.all(n))
    indices = range(1, n + 1)
    for sigma, pi, p, q, r in product(perms, perms, indices, indices, indices):
        if q != r:
            yield sigma, pi, p, q, r


def exhaustive_combine(n: int) -> Tuple[int, Optional[Tuple[Permutation, Permutation, int, int, int]]]:
    """
    Run the combiner on every instance of size n.

    Returns:
        (instances checked, first failing instance or None)
    """
    count = 0
    for instance in combiner_instances(n):
        try:
            lemma42_combine(*instance)
        except RuntimeError:
            logger.warning(f"Combiner failed on {instance}", exc_info=True)
            return count, instance
        count += 1
    logger.info(f"Combiner checked {count} instances at n={n}")
    return count, None

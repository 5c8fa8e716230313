"""Deterministic pseudo-random matrices for the verification suites."""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from .errors import UsageError
from .matrix import Matrix, Permutation, identity_matrix, mat_add, mat_pow
from .semiring import SemiringDescriptor


class Profile(Enum):
    """Shapes of generated matrices."""
    DENSE = "dense"
    SPARSE = "sparse"
    STAR = "star"
    COMPARABLE_PAIR = "comparable-pair"
    IDEMPOTENT = "idempotent"


@dataclass(frozen=True)
class GenSpec:
    """
    Everything needed to regenerate one matrix.

    ``zero_probability`` only applies to the sparse profile.
    """
    semiring: SemiringDescriptor
    n: int
    seed: int
    profile: Profile = Profile.DENSE
    zero_probability: Fraction = Fraction(1, 3)

    def __post_init__(self):
        if not isinstance(self.profile, Profile):
            try:
                object.__setattr__(self, "profile", Profile(self.profile))
            except ValueError:
                known = ", ".join(p.value for p in Profile)
                raise UsageError(f"Unknown profile {self.profile!r} (known: {known})")
        if not isinstance(self.n, int) or self.n < 1:
            raise UsageError(f"Generated matrices need n >= 1, got {self.n!r}")
        if not 0 <= self.zero_probability <= 1:
            raise UsageError(f"zero_probability must lie in [0, 1], got {self.zero_probability}")

    def with_seed(self, seed: int) -> "GenSpec":
        return GenSpec(self.semiring, self.n, seed, self.profile, self.zero_probability)

    def with_profile(self, profile: Profile) -> "GenSpec":
        return GenSpec(self.semiring, self.n, self.seed, profile, self.zero_probability)


def _dense(s: SemiringDescriptor, n: int, rng: random.Random) -> Matrix:
    return Matrix(s, n, n, tuple(tuple(s.draw(rng) for _ in range(n)) for _ in range(n)))


def _sparse(s: SemiringDescriptor, n: int, rng: random.Random, p: Fraction) -> Matrix:
    return Matrix(s, n, n, tuple(
        tuple(s.zero if rng.randrange(p.denominator) < p.numerator else s.draw(rng) for _ in range(n))
        for _ in range(n)
    ))


def _star(s: SemiringDescriptor, n: int, rng: random.Random) -> Matrix:
    # Off-diagonal entries are drawn below the diagonal value, so (*) holds by construction
    d = s.draw(rng)
    return Matrix(s, n, n, tuple(
        tuple(d if i == j else s.draw_below(rng, d) for j in range(n)) for i in range(n)
    ))


def _idempotent(s: SemiringDescriptor, n: int, rng: random.Random) -> Matrix:
    # With entries below one, (I + A)^(n-1) is the reflexive-transitive closure and squares to itself
    A = Matrix(s, n, n, tuple(tuple(s.draw_below(rng, s.one) for _ in range(n)) for _ in range(n)))
    return mat_pow(mat_add(identity_matrix(s, n), A), max(n - 1, 1))


def gen_matrix(spec: GenSpec) -> Matrix:
    """
    Regenerate the matrix described by ``spec``.

    For the comparable-pair profile this is the upper member B = A + noise,
    where A is ``gen_matrix`` of the dense profile with the same seed.
    """
    s, n = spec.semiring, spec.n
    rng = random.Random(spec.seed)
    if spec.profile is Profile.DENSE:
        return _dense(s, n, rng)
    if spec.profile is Profile.SPARSE:
        return _sparse(s, n, rng, spec.zero_probability)
    if spec.profile is Profile.STAR:
        if n < 2:
            raise UsageError("The star profile needs n >= 2")
        return _star(s, n, rng)
    if spec.profile is Profile.IDEMPOTENT:
        return _idempotent(s, n, rng)
    base = _dense(s, n, rng)
    noise = _dense(s, n, random.Random(f"noise:{spec.seed}"))
    return mat_add(base, noise)


def gen_comparable_pair(spec: GenSpec) -> Tuple[Matrix, Matrix]:
    """(A, A + noise) from two calls sharing the seed."""
    return (
        gen_matrix(spec.with_profile(Profile.DENSE)),
        gen_matrix(spec.with_profile(Profile.COMPARABLE_PAIR)),
    )


def gen_permutation(n: int, rng: random.Random) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))

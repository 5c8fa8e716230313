"""
Commutative additively idempotent semirings with exact element encodings.

Every built-in semiring works on exact values only: booleans, rationals
(``fractions.Fraction``), rationals with a distinct bottom for max-plus,
divisors of N and subsets of {1..M}. No floating point is involved anywhere.
"""

import logging
import math
import random
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    CarrierMismatchError,
    InvalidElementError,
    PreconditionError,
    UsageError,
)
from .utils import parse_semiring_name

logger = logging.getLogger(__name__)

# Denominators used when drawing random rationals
MAX_DENOMINATOR = 12

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?|-?\d*\.\d+")
_SUBSET_RE = re.compile(r"\{\s*(\d+(?:\s*,\s*\d+)*)?\s*\}")


class CarrierKind(Enum):
    """Kinds of exact payload an element can carry."""
    BOOLEAN = "boolean"
    RATIONAL = "rational"
    RATIONAL_OR_BOTTOM = "rational_or_bottom"
    DIVISOR = "divisor"
    SUBSET = "subset"


class SemiringId(Enum):
    """Identifiers of the semirings this package knows about."""
    BOOLEAN = "boolean"
    FUZZY_MAXMIN = "fuzzy_maxmin"
    FUZZY_MAXPROD = "fuzzy_maxprod"
    LUKASIEWICZ = "lukasiewicz"
    FUZZY_HAMACHER = "fuzzy_hamacher"
    MAX_PLUS = "max_plus"
    MAX_TIMES = "max_times"
    DIVISOR_LATTICE = "divisor_lattice"
    SUBSET_LATTICE = "subset_lattice"
    PLUS_TIMES_CONTROL = "plus_times_control"


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidElementError(f"Refusing inexact or boolean value {value!r} as a rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str) and _RATIONAL_RE.fullmatch(value.strip()):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise InvalidElementError(f"Zero denominator in {value!r}")
    raise InvalidElementError(f"Cannot read {value!r} as an exact rational")


def _format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Element:
    """
    A tagged exact value.

    ``value`` is an ``int`` bit for booleans, a ``Fraction`` for rationals,
    ``None`` (bottom) or a ``Fraction`` for max-plus, a positive ``int`` for
    divisors and a ``frozenset`` of positive ints for subsets.
    """
    tag: CarrierKind
    value: Any

    def __post_init__(self):
        if self.tag is CarrierKind.BOOLEAN:
            if self.value not in (0, 1) or isinstance(self.value, Fraction):
                raise InvalidElementError(f"Boolean payload must be 0 or 1, got {self.value!r}")
            object.__setattr__(self, "value", int(self.value))
        elif self.tag is CarrierKind.RATIONAL:
            object.__setattr__(self, "value", _to_fraction(self.value))
        elif self.tag is CarrierKind.RATIONAL_OR_BOTTOM:
            if self.value is not None:
                object.__setattr__(self, "value", _to_fraction(self.value))
        elif self.tag is CarrierKind.DIVISOR:
            if isinstance(self.value, bool) or not isinstance(self.value, int) or self.value < 1:
                raise InvalidElementError(f"Divisor payload must be a positive integer, got {self.value!r}")
        elif self.tag is CarrierKind.SUBSET:
            items = frozenset(self.value)
            if any(isinstance(i, bool) or not isinstance(i, int) or i < 1 for i in items):
                raise InvalidElementError(f"Subset payload must hold positive integers, got {self.value!r}")
            object.__setattr__(self, "value", items)

    @classmethod
    def boolean(cls, bit: Any) -> "Element":
        return cls(CarrierKind.BOOLEAN, 1 if bit else 0)

    @classmethod
    def rational(cls, value: Any) -> "Element":
        return cls(CarrierKind.RATIONAL, value)

    @classmethod
    def extended(cls, value: Any) -> "Element":
        """A max-plus value; ``None`` stands for bottom (minus infinity)."""
        return cls(CarrierKind.RATIONAL_OR_BOTTOM, value)

    @classmethod
    def bottom(cls) -> "Element":
        return cls(CarrierKind.RATIONAL_OR_BOTTOM, None)

    @classmethod
    def divisor(cls, value: int) -> "Element":
        return cls(CarrierKind.DIVISOR, value)

    @classmethod
    def subset(cls, items: Iterable[int]) -> "Element":
        return cls(CarrierKind.SUBSET, frozenset(items))

    @property
    def is_bottom(self) -> bool:
        return self.tag is CarrierKind.RATIONAL_OR_BOTTOM and self.value is None

    def __str__(self) -> str:
        if self.tag is CarrierKind.BOOLEAN:
            return str(self.value)
        if self.tag is CarrierKind.RATIONAL_OR_BOTTOM and self.value is None:
            return "-inf"
        if self.tag in (CarrierKind.RATIONAL, CarrierKind.RATIONAL_OR_BOTTOM):
            return _format_fraction(self.value)
        if self.tag is CarrierKind.DIVISOR:
            return str(self.value)
        return "{" + ",".join(str(i) for i in sorted(self.value)) + "}"


@dataclass(frozen=True)
class Kernel:
    """
    Raw arithmetic used by the subset dynamic program.

    Values are encoded once (usually to Python ints over a common denominator),
    combined with ``add``/``mul`` and decoded at the end. ``decode`` receives the
    product degree because some encodings scale by the denominator per factor.
    """
    encode: Callable[[Element], Any]
    decode: Callable[[Any, int], Element]
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    zero: Any
    one: Any


def _common_denominator(elements: Iterable[Element]) -> int:
    denominator = 1
    for element in elements:
        if element.value is not None:
            denominator = math.lcm(denominator, element.value.denominator)
    return denominator


@dataclass(frozen=True)
class SemiringDescriptor:
    """
    A built-in semiring: carrier, addition, multiplication, zero and one.

    Subclasses implement ``_add``/``_mul`` on raw payloads and the carrier
    range check; everything else (typed checks, parsing, sampling) is shared.
    """
    id: SemiringId
    param: Optional[int] = None

    carrier: CarrierKind = field(default=CarrierKind.RATIONAL, init=False, repr=False, compare=False)

    @property
    def name(self) -> str:
        """Name as used on the command line, e.g. ``divisor_lattice(12)``."""
        if self.param is None:
            return self.id.value
        return f"{self.id.value}({self.param})"

    def __str__(self) -> str:
        return self.name

    # -- carrier -----------------------------------------------------------

    @property
    def zero(self) -> Element:
        raise NotImplementedError

    @property
    def one(self) -> Element:
        raise NotImplementedError

    def _in_range(self, element: Element) -> bool:
        return True

    def check(self, element: Any) -> Element:
        """
        Return ``element`` unchanged if it belongs to the carrier.

        Raises:
            CarrierMismatchError: If the element has another carrier kind
            InvalidElementError: If the payload is outside the carrier's range
        """
        if not isinstance(element, Element) or element.tag is not self.carrier:
            raise CarrierMismatchError(f"{element!r} is not an element of {self.name}")
        if not self._in_range(element):
            raise InvalidElementError(f"{element} is outside the carrier of {self.name}")
        return element

    def elements(self) -> Optional[List[Element]]:
        """All carrier elements for finite carriers, None otherwise."""
        return None

    @property
    def is_finite(self) -> bool:
        return self.elements() is not None

    # -- arithmetic ----------------------------------------------------------

    def _add(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def _mul(self, x: Any, y: Any) -> Any:
        raise NotImplementedError

    def add(self, a: Element, b: Element) -> Element:
        self.check(a)
        self.check(b)
        return Element(self.carrier, self._add(a.value, b.value))

    def mul(self, a: Element, b: Element) -> Element:
        self.check(a)
        self.check(b)
        return Element(self.carrier, self._mul(a.value, b.value))

    def leq(self, a: Element, b: Element) -> bool:
        """Canonical order: a <= b iff a + b == b."""
        return self.add(a, b) == b

    def sum(self, elements: Iterable[Element]) -> Element:
        total = self.zero
        for element in elements:
            total = self.add(total, element)
        return total

    def product(self, elements: Iterable[Element]) -> Element:
        total = self.one
        for element in elements:
            total = self.mul(total, element)
        return total

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        """Raw arithmetic for the entries ``elements``; the default keeps payloads."""
        return Kernel(
            encode=lambda e: e.value,
            decode=lambda raw, degree: Element(self.carrier, raw),
            add=self._add,
            mul=self._mul,
            zero=self.zero.value,
            one=self.one.value,
        )

    # -- text ------------------------------------------------------------------

    def parse(self, text: str) -> Element:
        """
        Parse the textual encoding of an element.

        Raises:
            InvalidElementError: If the text is not a valid element of this carrier
        """
        raise NotImplementedError

    def format(self, element: Element) -> str:
        return str(self.check(element))

    def coerce(self, value: Any) -> Element:
        """Build an element from an Element, its text, or a plain Python value."""
        if isinstance(value, Element):
            return self.check(value)
        if isinstance(value, str):
            return self.parse(value)
        return self.check(self._from_python(value))

    def _from_python(self, value: Any) -> Element:
        return Element(self.carrier, value)

    # -- random draws ----------------------------------------------------------

    def draw(self, rng: random.Random) -> Element:
        """A pseudo-random carrier element."""
        raise NotImplementedError

    def draw_below(self, rng: random.Random, bound: Element) -> Element:
        """A pseudo-random element ``e`` with ``leq(e, bound)``."""
        raise NotImplementedError


@dataclass(frozen=True)
class BooleanSemiring(SemiringDescriptor):
    """({0,1}, or, and)."""
    id: SemiringId = SemiringId.BOOLEAN

    carrier: CarrierKind = field(default=CarrierKind.BOOLEAN, init=False, repr=False, compare=False)

    @property
    def zero(self) -> Element:
        return Element.boolean(0)

    @property
    def one(self) -> Element:
        return Element.boolean(1)

    def elements(self) -> Optional[List[Element]]:
        return [self.zero, self.one]

    def _add(self, x, y):
        return x | y

    def _mul(self, x, y):
        return x & y

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        return Kernel(
            encode=lambda e: e.value,
            decode=lambda raw, degree: Element.boolean(raw),
            add=int.__or__,
            mul=int.__and__,
            zero=0,
            one=1,
        )

    def parse(self, text: str) -> Element:
        text = text.strip()
        if text not in ("0", "1"):
            raise InvalidElementError(f"Boolean element must be '0' or '1', got {text!r}")
        return Element.boolean(int(text))

    def _from_python(self, value: Any) -> Element:
        if value not in (0, 1):
            raise InvalidElementError(f"Boolean element must be 0 or 1, got {value!r}")
        return Element.boolean(value)

    def draw(self, rng: random.Random) -> Element:
        return Element.boolean(rng.randint(0, 1))

    def draw_below(self, rng: random.Random, bound: Element) -> Element:
        return Element.boolean(rng.randint(0, bound.value))


def _draw_unit_fraction(rng: random.Random) -> Fraction:
    denominator = rng.randint(1, MAX_DENOMINATOR)
    return Fraction(rng.randint(0, denominator), denominator)


@dataclass(frozen=True)
class _UnitIntervalSemiring(SemiringDescriptor):
    """Shared carrier of the fuzzy algebras ([0,1], max, T) for a t-norm T."""

    @property
    def zero(self) -> Element:
        return Element.rational(0)

    @property
    def one(self) -> Element:
        return Element.rational(1)

    def _in_range(self, element: Element) -> bool:
        return 0 <= element.value <= 1

    def _add(self, x, y):
        return max(x, y)

    def parse(self, text: str) -> Element:
        try:
            return self.check(Element.rational(text))
        except (InvalidElementError, CarrierMismatchError) as e:
            raise InvalidElementError(f"Invalid {self.name} element {text!r}: {e}")

    def draw(self, rng: random.Random) -> Element:
        return Element.rational(_draw_unit_fraction(rng))

    def draw_below(self, rng: random.Random, bound: Element) -> Element:
        return Element.rational(bound.value * _draw_unit_fraction(rng))

    def _scaled_kernel(self, elements: Sequence[Element], mul: Callable[[int, int, int], int]) -> Kernel:
        # Every value is an int over the common denominator d; results keep scale d.
        d = _common_denominator(elements)
        return Kernel(
            encode=lambda e: int(e.value * d),
            decode=lambda raw, degree: Element.rational(Fraction(raw, d)),
            add=max,
            mul=lambda x, y: mul(x, y, d),
            zero=0,
            one=d,
        )


@dataclass(frozen=True)
class FuzzyMaxMin(_UnitIntervalSemiring):
    """([0,1], max, min)."""
    id: SemiringId = SemiringId.FUZZY_MAXMIN

    def _mul(self, x, y):
        return min(x, y)

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        d = _common_denominator(elements)
        return Kernel(
            encode=lambda e: int(e.value * d),
            decode=lambda raw, degree: Element.rational(Fraction(raw, d)),
            add=max,
            mul=min,
            zero=0,
            one=d,
        )


@dataclass(frozen=True)
class FuzzyMaxProd(_UnitIntervalSemiring):
    """([0,1], max, product)."""
    id: SemiringId = SemiringId.FUZZY_MAXPROD

    def _mul(self, x, y):
        return x * y

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        return _product_kernel(self, elements)


@dataclass(frozen=True)
class Lukasiewicz(_UnitIntervalSemiring):
    """([0,1], max, max(0, a+b-1))."""
    id: SemiringId = SemiringId.LUKASIEWICZ

    def _mul(self, x, y):
        return max(Fraction(0), x + y - 1)

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        return self._scaled_kernel(elements, lambda x, y, d: max(0, x + y - d))


@dataclass(frozen=True)
class FuzzyHamacher(_UnitIntervalSemiring):
    """([0,1], max, ab/(a+b-ab)) with the product of two zeros defined as 0."""
    id: SemiringId = SemiringId.FUZZY_HAMACHER

    def _mul(self, x, y):
        if x == 0 and y == 0:
            return Fraction(0)
        return x * y / (x + y - x * y)

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        # Additive generator u = 1/a - 1: T(a, b) becomes u_a + u_b and max becomes min.
        # u is an int over the common denominator d; None stands for a = 0 (u infinite).
        d = _common_denominator(
            Element.rational((1 - e.value) / e.value) for e in elements if e.value != 0
        )

        def add(x, y):
            if x is None:
                return y
            if y is None:
                return x
            return min(x, y)

        def mul(x, y):
            if x is None or y is None:
                return None
            return x + y

        return Kernel(
            encode=lambda e: None if e.value == 0 else int((1 - e.value) / e.value * d),
            decode=lambda raw, degree: Element.rational(0 if raw is None else Fraction(d, d + raw)),
            add=add,
            mul=mul,
            zero=None,
            one=0,
        )


@dataclass(frozen=True)
class MaxTimes(SemiringDescriptor):
    """([0,inf), max, usual multiplication)."""
    id: SemiringId = SemiringId.MAX_TIMES

    @property
    def zero(self) -> Element:
        return Element.rational(0)

    @property
    def one(self) -> Element:
        return Element.rational(1)

    def _in_range(self, element: Element) -> bool:
        return element.value >= 0

    def _add(self, x, y):
        return max(x, y)

    def _mul(self, x, y):
        return x * y

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        return _product_kernel(self, elements)

    def parse(self, text: str) -> Element:
        try:
            return self.check(Element.rational(text))
        except (InvalidElementError, CarrierMismatchError) as e:
            raise InvalidElementError(f"Invalid {self.name} element {text!r}: {e}")

    def draw(self, rng: random.Random) -> Element:
        denominator = rng.randint(1, MAX_DENOMINATOR)
        return Element.rational(Fraction(rng.randint(0, 4 * denominator), denominator))

    def draw_below(self, rng: random.Random, bound: Element) -> Element:
        return Element.rational(bound.value * _draw_unit_fraction(rng))


def _product_kernel(semiring: SemiringDescriptor, elements: Sequence[Element]) -> Kernel:
    # A product of k entries is an int over d**k; the DP only compares values of equal degree.
    d = _common_denominator(elements)
    return Kernel(
        encode=lambda e: int(e.value * d),
        decode=lambda raw, degree: Element.rational(Fraction(raw, d ** degree)),
        add=max,
        mul=int.__mul__,
        zero=0,
        one=1,
    )


@dataclass(frozen=True)
class MaxPlus(SemiringDescriptor):
    """(Q with bottom, max, +); bottom is the zero and 0 is the one."""
    id: SemiringId = SemiringId.MAX_PLUS

    carrier: CarrierKind = field(default=CarrierKind.RATIONAL_OR_BOTTOM, init=False, repr=False, compare=False)

    @property
    def zero(self) -> Element:
        return Element.bottom()

    @property
    def one(self) -> Element:
        return Element.extended(0)

    def _add(self, x, y):
        if x is None:
            return y
        if y is None:
            return x
        return max(x, y)

    def _mul(self, x, y):
        if x is None or y is None:
            return None
        return x + y

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        d = _common_denominator(elements)

        def mul(x, y):
            if x is None or y is None:
                return None
            return x + y

        return Kernel(
            encode=lambda e: None if e.value is None else int(e.value * d),
            decode=lambda raw, degree: Element.extended(None if raw is None else Fraction(raw, d)),
            add=self._add,
            mul=mul,
            zero=None,
            one=0,
        )

    def parse(self, text: str) -> Element:
        text = text.strip()
        if text == "-inf":
            return Element.bottom()
        try:
            return Element.extended(text)
        except InvalidElementError as e:
            raise InvalidElementError(f"Invalid {self.name} element {text!r}: {e}")

    def _from_python(self, value: Any) -> Element:
        return Element.extended(value)

    def draw(self, rng: random.Random) -> Element:
        if rng.randrange(10) == 0:
            return Element.bottom()
        denominator = rng.randint(1, MAX_DENOMINATOR)
        return Element.extended(Fraction(rng.randint(-5 * denominator, 5 * denominator), denominator))

    def draw_below(self, rng: random.Random, bound: Element) -> Element:
        if bound.is_bottom or rng.randrange(10) == 0:
            return Element.bottom()
        denominator = rng.randint(1, MAX_DENOMINATOR)
        return Element.extended(bound.value - Fraction(rng.randint(0, 5 * denominator), denominator))


@dataclass(frozen=True)
class DivisorLattice(SemiringDescriptor):
    """(divisors of N, lcm, gcd); 1 is the zero and N the one."""
    id: SemiringId = SemiringId.DIVISOR_LATTICE

    carrier: CarrierKind = field(default=CarrierKind.DIVISOR, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.param is None or self.param < 2:
            raise UsageError(f"divisor_lattice needs N >= 2, got {self.param!r}")

    @property
    def zero(self) -> Element:
        return Element.divisor(1)

    @property
    def one(self) -> Element:
        return Element.divisor(self.param)

    def _in_range(self, element: Element) -> bool:
        return self.param % element.value == 0

    def elements(self) -> Optional[List[Element]]:
        return [Element.divisor(d) for d in range(1, self.param + 1) if self.param % d == 0]

    def _add(self, x, y):
        return math.lcm(x, y)

    def _mul(self, x, y):
        return math.gcd(x, y)

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        return Kernel(
            encode=lambda e: e.value,
            decode=lambda raw, degree: Element.divisor(raw),
            add=math.lcm,
            mul=math.gcd,
            zero=1,
            one=self.param,
        )

    def parse(self, text: str) -> Element:
        text = text.strip()
        if not re.fullmatch(r"\d+", text):
            raise InvalidElementError(f"Divisor element must be a positive integer, got {text!r}")
        element = Element.divisor(int(text))
        if not self._in_range(element):
            raise InvalidElementError(f"{text} does not divide {self.param}")
        return element

    def _from_python(self, value: Any) -> Element:
        return Element.divisor(value)

    def draw(self, rng: random.Random) -> Element:
        return rng.choice(self.elements())

    def draw_below(self, rng: random.Random, bound: Element) -> Element:
        return Element.divisor(rng.choice([d for d in range(1, bound.value + 1) if bound.value % d == 0]))


@dataclass(frozen=True)
class SubsetLattice(SemiringDescriptor):
    """(subsets of {1..M}, union, intersection); the empty set is the zero."""
    id: SemiringId = SemiringId.SUBSET_LATTICE

    carrier: CarrierKind = field(default=CarrierKind.SUBSET, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.param is None or self.param < 1:
            raise UsageError(f"subset_lattice needs M >= 1, got {self.param!r}")

    @property
    def universe(self) -> frozenset:
        return frozenset(range(1, self.param + 1))

    @property
    def zero(self) -> Element:
        return Element.subset(())

    @property
    def one(self) -> Element:
        return Element.subset(self.universe)

    def _in_range(self, element: Element) -> bool:
        return element.value <= self.universe

    def elements(self) -> Optional[List[Element]]:
        universe = sorted(self.universe)
        return [
            Element.subset(i for i, keep in zip(universe, bits) if keep)
            for bits in product((0, 1), repeat=len(universe))
        ]

    def _add(self, x, y):
        return x | y

    def _mul(self, x, y):
        return x & y

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        def encode(e: Element) -> int:
            return sum(1 << (i - 1) for i in e.value)

        def decode(raw: int, degree: int) -> Element:
            return Element.subset(i for i in range(1, self.param + 1) if raw >> (i - 1) & 1)

        return Kernel(
            encode=encode,
            decode=decode,
            add=int.__or__,
            mul=int.__and__,
            zero=0,
            one=(1 << self.param) - 1,
        )

    def parse(self, text: str) -> Element:
        match = _SUBSET_RE.fullmatch(text.strip())
        if not match:
            raise InvalidElementError(f"Subset element must look like {{1,3}}, got {text!r}")
        items = [int(i) for i in match.group(1).split(",")] if match.group(1) else []
        element = Element.subset(items)
        if not self._in_range(element):
            raise InvalidElementError(f"{text} is not a subset of {{1..{self.param}}}")
        return element

    def _from_python(self, value: Any) -> Element:
        return Element.subset(value)

    def draw(self, rng: random.Random) -> Element:
        return Element.subset(i for i in self.universe if rng.randrange(2))

    def draw_below(self, rng: random.Random, bound: Element) -> Element:
        return Element.subset(i for i in sorted(bound.value) if rng.randrange(2))


@dataclass(frozen=True)
class PlusTimesControl(MaxTimes):
    """
    Non-negative rationals with ordinary + and x.

    Not idempotent; exists only as the negative control for ``check_axioms``.
    """
    id: SemiringId = SemiringId.PLUS_TIMES_CONTROL

    def _add(self, x, y):
        return x + y

    def kernel(self, elements: Sequence[Element]) -> Kernel:
        return SemiringDescriptor.kernel(self, elements)


_FACTORIES = {
    SemiringId.BOOLEAN: BooleanSemiring,
    SemiringId.FUZZY_MAXMIN: FuzzyMaxMin,
    SemiringId.FUZZY_MAXPROD: FuzzyMaxProd,
    SemiringId.LUKASIEWICZ: Lukasiewicz,
    SemiringId.FUZZY_HAMACHER: FuzzyHamacher,
    SemiringId.MAX_PLUS: MaxPlus,
    SemiringId.MAX_TIMES: MaxTimes,
    SemiringId.DIVISOR_LATTICE: DivisorLattice,
    SemiringId.SUBSET_LATTICE: SubsetLattice,
    SemiringId.PLUS_TIMES_CONTROL: PlusTimesControl,
}

_PARAMETERIZED = (SemiringId.DIVISOR_LATTICE, SemiringId.SUBSET_LATTICE)


def get_semiring(name: str, param: Optional[int] = None) -> SemiringDescriptor:
    """
    Look up a semiring by id string.

    Args:
        name: Semiring id, optionally with its parameter ("divisor_lattice(12)")
        param: N for divisor lattices, M for subset lattices (overrides the name)

    Returns:
        The semiring descriptor

    Raises:
        UsageError: If the id is unknown or the parameter is missing/unexpected
    """
    base, inline_param = parse_semiring_name(name)
    try:
        semiring_id = SemiringId(base)
    except ValueError:
        known = ", ".join(s.value for s in SemiringId)
        raise UsageError(f"Unknown semiring {base!r} (known: {known})")
    param = param if param is not None else inline_param
    if semiring_id in _PARAMETERIZED:
        if param is None:
            raise UsageError(f"{base} needs a parameter, e.g. {base}(12)")
        return _FACTORIES[semiring_id](param=param)
    if param is not None:
        raise UsageError(f"{base} takes no parameter")
    return _FACTORIES[semiring_id]()


def builtin_semirings() -> List[SemiringDescriptor]:
    """Every built-in semiring, with the default parameters used by the suites."""
    return [
        BooleanSemiring(),
        FuzzyMaxMin(),
        FuzzyMaxProd(),
        Lukasiewicz(),
        MaxPlus(),
        MaxTimes(),
        DivisorLattice(param=30),
        FuzzyHamacher(),
        SubsetLattice(param=3),
    ]


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------

def add(s: SemiringDescriptor, a: Element, b: Element) -> Element:
    return s.add(a, b)


def mul(s: SemiringDescriptor, a: Element, b: Element) -> Element:
    return s.mul(a, b)


def leq(s: SemiringDescriptor, a: Element, b: Element) -> bool:
    return s.leq(a, b)


def nat_pow(s: SemiringDescriptor, a: Element, k: int) -> Element:
    """
    k-fold product of ``a`` by repeated squaring; ``k == 0`` gives one.

    Raises:
        PreconditionError: If k is negative
    """
    s.check(a)
    if k < 0:
        raise PreconditionError(f"nat_pow needs k >= 0, got {k}")
    result = s.one
    base = a
    while k:
        if k & 1:
            result = s.mul(result, base)
        k >>= 1
        if k:
            base = s.mul(base, base)
    return result


@dataclass(frozen=True)
class InclineCheck:
    """Outcome of ``is_incline``; truthy when a + 1 = 1 held for every sample."""
    holds: bool
    exhaustive: bool
    samples_used: int
    witness: Optional[Element] = None

    def __bool__(self) -> bool:
        return self.holds


def is_incline(s: SemiringDescriptor, samples: Optional[Sequence[Element]] = None) -> InclineCheck:
    """
    Test a + 1 = 1 over the samples (the whole carrier when it is finite).

    Args:
        s: Semiring to test
        samples: Elements to test; defaults to ``default_samples(s)``

    Returns:
        InclineCheck with the first failing element as witness
    """
    universe = s.elements()
    exhaustive = universe is not None
    pool = universe if exhaustive else list(samples if samples is not None else default_samples(s))
    for a in pool:
        if s.add(a, s.one) != s.one:
            return InclineCheck(False, exhaustive, len(pool), a)
    return InclineCheck(True, exhaustive, len(pool))


def default_samples(s: SemiringDescriptor, count: int = 10, seed: int = 0) -> List[Element]:
    """
    The documented default sample set for axiom checks.

    Finite carriers with at most 64 elements are returned whole. Otherwise the
    sample holds zero, one and ``count`` generator-drawn values (seeded, so the
    set is identical on every run), with duplicates removed.
    """
    universe = s.elements()
    if universe is not None and len(universe) <= 64:
        return universe
    rng = random.Random(seed)
    samples = [s.zero, s.one]
    attempts = 0
    while len(samples) < count + 2 and attempts < 50 * count:
        candidate = s.draw(rng)
        attempts += 1
        if candidate not in samples:
            samples.append(candidate)
    return samples


@dataclass
class AxiomReport:
    """Failures found by ``check_axioms``; one witness is kept per failing axiom."""
    semiring: SemiringDescriptor
    failures: List[Tuple[str, Tuple[Element, ...]]] = field(default_factory=list)
    samples_used: int = 0
    exhaustive: bool = False

    @property
    def passed(self) -> bool:
        return not self.failures


def check_axioms(s: SemiringDescriptor, samples: Optional[Sequence[Element]] = None) -> AxiomReport:
    """
    Verify the semiring axioms, (P1) and (P2) over all sample triples.

    Args:
        s: Semiring to verify
        samples: At least three distinct elements (or the whole carrier when it
            is smaller) including zero and one; defaults to ``default_samples(s)``

    Returns:
        AxiomReport listing each failing axiom with its first witness

    Raises:
        PreconditionError: If the sample set is too small or misses zero/one
    """
    pool: List[Element] = []
    for element in (samples if samples is not None else default_samples(s)):
        s.check(element)
        if element not in pool:
            pool.append(element)
    universe = s.elements()
    required = min(3, len(universe)) if universe is not None else 3
    if len(pool) < required or s.zero not in pool or s.one not in pool:
        raise PreconditionError(
            f"check_axioms needs at least {required} distinct samples including zero and one, got {len(pool)}"
        )

    zero, one = s.zero, s.one
    report = AxiomReport(
        semiring=s,
        samples_used=len(pool),
        exhaustive=universe is not None and len(pool) == len(universe),
    )
    failing = set()

    def fail(axiom: str, *witness: Element) -> None:
        if axiom not in failing:
            failing.add(axiom)
            report.failures.append((axiom, witness))

    if zero == one:
        fail("one != zero", zero, one)

    for a in pool:
        if s.add(a, a) != a:
            fail("add idempotent", a)
        if s.add(zero, a) != a:
            fail("zero additive identity", a)
        if s.mul(one, a) != a:
            fail("one multiplicative identity", a)
        if s.mul(zero, a) != zero or s.mul(a, zero) != zero:
            fail("zero annihilates", a)
        for b in pool:
            if s.add(a, b) != s.add(b, a):
                fail("add commutative", a, b)
            if s.mul(a, b) != s.mul(b, a):
                fail("mul commutative", a, b)
            if s.leq(a, b) and s.leq(b, a) and a != b:
                fail("(P2) antisymmetric", a, b)
            for c in pool:
                if s.add(s.add(a, b), c) != s.add(a, s.add(b, c)):
                    fail("add associative", a, b, c)
                if s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)):
                    fail("mul associative", a, b, c)
                if s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)):
                    fail("left distributive", a, b, c)
                if s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)):
                    fail("right distributive", a, b, c)

    comparable = [(a, b) for a in pool for b in pool if s.leq(a, b)]
    for a, b in comparable:
        for c, d in comparable:
            if not s.leq(s.add(a, c), s.add(b, d)):
                fail("(P1) monotone add", a, b, c, d)
            if not s.leq(s.mul(a, c), s.mul(b, d)):
                fail("(P1) monotone mul", a, b, c, d)

    logger.debug(f"check_axioms({s.name}): {len(pool)} samples, {len(report.failures)} failing axioms")
    return report

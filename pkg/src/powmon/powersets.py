"""The reduced finitary power monoid of a monoid H.

``FinSubset1`` models a finite subset of H containing the identity;
setwise multiplication makes these a commutative monoid with identity
``{1}``.  Elements are stored sorted and duplicate-free, so set equality
is plain tuple equality and every report is byte-stable.

The exhaustive verification runs multiply hundreds of thousands of
subsets of N0, so products over the ambient group Z use a dedicated
integer fast path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .ambient import GroupElement, GroupSignature
from .monoids import FullN0, MonoidSpec

__all__ = [
    "FinSubset1",
    "QuotientReport",
    "MonoidMismatchError",
    "MembershipError",
    "SetSizeCapError",
    "DIVIDES_CAP_DEFAULT",
    "set_product",
    "set_power",
    "divides",
    "quotients",
    "quotient_multiplicity",
    "reversion",
]

DIVIDES_CAP_DEFAULT = 16

_Z1 = GroupSignature(1)
_Z1_ELEMENTS: dict[int, GroupElement] = {}


def _z1_element(x: int) -> GroupElement:
    elem = _Z1_ELEMENTS.get(x)
    if elem is None:
        elem = GroupElement(_Z1, (x,), ())
        _Z1_ELEMENTS[x] = elem
    return elem


class MonoidMismatchError(ValueError):
    """Setwise operation across two different monoids."""


class MembershipError(ValueError):
    """A set literal contains an element outside its monoid."""

    def __init__(self, monoid: MonoidSpec, element: GroupElement):
        self.monoid = monoid
        self.element = element
        super().__init__(f"element {element!r} is not a member of monoid {monoid.label!r}")


class SetSizeCapError(ValueError):
    """Divisibility search refused: the target set exceeds the cap."""


@dataclass(frozen=True, slots=True)
class FinSubset1:
    """Finite identity-containing subset of a monoid, canonically sorted."""

    monoid: MonoidSpec
    elements: tuple[GroupElement, ...]

    @classmethod
    def make(cls, monoid: MonoidSpec, elements: Iterable[GroupElement]) -> FinSubset1:
        canon = sorted(set(elements) | {monoid.identity()}, key=GroupElement.key)
        for u in canon:
            if not monoid.contains(u):
                raise MembershipError(monoid, u)
        return cls(monoid, tuple(canon))

    @classmethod
    def from_ints(cls, monoid: MonoidSpec, values: Iterable[int]) -> FinSubset1:
        """Convenience constructor for monoids inside the ambient group Z."""
        return cls.make(monoid, [monoid.signature.element(v) for v in values])

    @classmethod
    def _trusted(cls, monoid: MonoidSpec, sorted_elements: tuple[GroupElement, ...]) -> FinSubset1:
        # internal: callers guarantee sortedness, dedup, identity, membership
        return cls(monoid, sorted_elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, u: GroupElement) -> bool:
        return u in self.elements

    def is_singleton_identity(self) -> bool:
        return len(self.elements) == 1

    def ints(self) -> tuple[int, ...]:
        """Free coordinates for subsets of monoids inside Z."""
        return tuple(u.free[0] for u in self.elements)

    def __mul__(self, other: FinSubset1) -> FinSubset1:
        return set_product(self, other)

    def __pow__(self, n: int) -> FinSubset1:
        return set_power(self, n)

    def __repr__(self) -> str:
        return "{" + ",".join(repr(u) for u in self.elements) + "}"


def _check_same_monoid(x: FinSubset1, y: FinSubset1) -> None:
    if x.monoid != y.monoid:
        raise MonoidMismatchError(
            f"sets over different monoids: {x.monoid.label!r} vs {y.monoid.label!r}"
        )


def set_product(x: FinSubset1, y: FinSubset1) -> FinSubset1:
    """Setwise product {u + v : u in X, v in Y}."""
    _check_same_monoid(x, y)
    if x.monoid.signature == _Z1:
        values: set[int] = set()
        ys = [v.free[0] for v in y.elements]
        for u in x.elements:
            a = u.free[0]
            values.update(a + b for b in ys)
        elems = tuple(_z1_element(v) for v in sorted(values))
        return FinSubset1._trusted(x.monoid, elems)
    out: set[GroupElement] = set()
    for u in x.elements:
        for v in y.elements:
            out.add(u + v)
    return FinSubset1._trusted(x.monoid, tuple(sorted(out, key=GroupElement.key)))


def set_power(x: FinSubset1, n: int) -> FinSubset1:
    """n-fold product; the zeroth power is {identity}."""
    if n < 0:
        raise ValueError("set powers need n >= 0")
    result = FinSubset1._trusted(x.monoid, (x.monoid.identity(),))
    for _ in range(n):
        result = set_product(result, x)
    return result


def divides(
    x: FinSubset1, y: FinSubset1, cap: int = DIVIDES_CAP_DEFAULT
) -> FinSubset1 | None:
    """A witness Z with X*Z = Y, or None when X does not divide Y.

    Since the identity lies in every set, any witness satisfies Z <= Y
    and X <= Y, so searching identity-containing subsets of Y is
    complete.  The search is exponential in |Y| and refuses to run past
    ``cap`` elements.
    """
    _check_same_monoid(x, y)
    if len(y) > cap:
        raise SetSizeCapError(f"|Y| = {len(y)} exceeds the divisibility search cap {cap}")
    y_set = set(y.elements)
    if not set(x.elements) <= y_set:
        return None
    # any usable witness element z satisfies u + z in Y for every u in X
    allowed = [
        z
        for z in y.elements
        if not z.is_identity() and all((u + z) in y_set for u in x.elements)
    ]
    for size in range(len(allowed) + 1):
        for combo in itertools.combinations(allowed, size):
            z = FinSubset1._trusted(
                y.monoid, tuple(sorted(set(combo) | {y.monoid.identity()}, key=GroupElement.key))
            )
            if set_product(x, z).elements == y.elements:
                return z
    return None


@dataclass(frozen=True, slots=True)
class QuotientReport:
    """Multiplicity of every quotient of a set X.

    An element a != identity of the monoid is a quotient of X of
    multiplicity n when exactly n members b of X satisfy a + b in X.
    Every non-identity member of X is one.
    """

    entries: tuple[tuple[GroupElement, int], ...]

    def multiplicity(self, a: GroupElement) -> int:
        for elem, count in self.entries:
            if elem == a:
                return count
        return 0

    def quotient_elements(self) -> tuple[GroupElement, ...]:
        return tuple(elem for elem, _ in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def quotient_multiplicity(x: FinSubset1, a: GroupElement) -> int:
    """Number of b in X with a + b in X (0 when a is no quotient)."""
    members = set(x.elements)
    return sum(1 for b in x.elements if (a + b) in members)


def quotients(x: FinSubset1) -> QuotientReport:
    """All quotients of X with multiplicities.

    Candidates are the pairwise differences u - v taken in the ambient
    group; only those landing in the monoid count.  Each multiplicity is
    cross-checked against the cardinality identity
    |{identity, a} * X| = 2|X| - n.
    """
    monoid = x.monoid
    identity = monoid.identity()
    members = set(x.elements)
    candidates: set[GroupElement] = set()
    for u in x.elements:
        for v in x.elements:
            if u != v:
                candidates.add(u - v)
    entries = []
    for a in sorted(candidates, key=GroupElement.key):
        if a == identity or not monoid.contains(a):
            continue
        n = sum(1 for b in x.elements if (a + b) in members)
        if n == 0:
            continue
        pair = FinSubset1._trusted(
            monoid, tuple(sorted({identity, a}, key=GroupElement.key))
        )
        if len(set_product(pair, x)) != 2 * len(x) - n:
            raise AssertionError(
                f"multiplicity cross-check failed for candidate {a!r} on {x!r}"
            )
        entries.append((a, n))
    return QuotientReport(tuple(entries))


def reversion(x: FinSubset1) -> FinSubset1:
    """max X - X, the reflection of a subset of N0 about its maximum."""
    if not isinstance(x.monoid, FullN0):
        raise MonoidMismatchError("reversion is defined over the full monoid N0 only")
    values = x.ints()
    top = values[-1]
    elems = tuple(_z1_element(top - v) for v in reversed(values))
    return FinSubset1._trusted(x.monoid, elems)

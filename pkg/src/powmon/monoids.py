"""Membership-decidable monoid families inside a fixed ambient group.

Six families are supported:

* ``FullN0``        -- all of N0 inside Z;
* ``Numerical``     -- the submonoid of N0 generated by finitely many
                       positive integers;
* ``HalfPlaneLex``  -- a planar copy of (Z x N) | (N0 x {0}), the
                       positive cone of the lexicographic order on Z^2;
* ``IrrationalCone``-- a planar copy of {(x, y) : y <= alpha*x} for a
                       quadratic surd alpha, decided by exact sign
                       computation;
* ``FreeGenerated`` -- the subsemigroup-with-identity generated by a
                       finite set of ambient elements;
* ``Composite``     -- a valuation monoid glued with a translated
                       positive complement, V | (G.M).

Membership is exact for every family.  Queries that quantify over an
infinite monoid are truncated to a ``Window`` and return verdicts with
an explicit UNKNOWN_UP_TO_WINDOW state rather than silently guessing.

Specs are immutable after validation and every query is pure, so all
values are safe to share between threads.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd, isqrt
from typing import ClassVar, Iterable, Iterator

from .ambient import (
    GroupElement,
    GroupSignature,
    SignatureMismatchError,
    element_vector,
    lattice_contains,
    lattice_residue,
    subgroup_rows,
)

__all__ = [
    "QuadraticSurd",
    "Window",
    "ValuationStatus",
    "ValuationVerdict",
    "MonoidSpec",
    "FullN0",
    "Numerical",
    "HalfPlaneLex",
    "IrrationalCone",
    "FreeGenerated",
    "Composite",
    "ComplementSpec",
    "full_n0",
    "numerical",
    "half_plane_lex",
    "irrational_cone",
    "free_generated",
    "composite",
    "is_valuation",
    "units",
    "quotient_group",
    "elements_in_window",
    "ambient_window",
    "witness_search_order",
    "spec_to_dict",
    "spec_from_dict",
    "monoid_to_json",
    "monoid_from_json",
    "load_monoid_file",
]

GRADING_SEARCH_BOUND = 5
GROUP_CERTIFICATE_BOUND = 6


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _sign_a_plus_b_sqrt(a: int, b: int, n: int) -> int:
    """Exact sign of a + b*sqrt(n) for integers a, b and non-square n >= 2."""
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    lhs, rhs = a * a, b * b * n
    if lhs == rhs:
        return 0
    if a > 0:
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1


@dataclass(frozen=True, slots=True)
class QuadraticSurd:
    """The real number (p + q*sqrt(n)) / r, compared exactly.

    ``r`` must be positive and ``n`` a non-square integer >= 2.  A zero
    ``q`` makes the value rational; the monoid constructors that demand
    an irrational slope reject that case, it exists only so negative
    controls can build deliberately degenerate cones.
    """

    p: int
    q: int
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.r <= 0:
            raise ValueError("denominator r must be positive")
        if self.n < 2 or isqrt(self.n) ** 2 == self.n:
            raise ValueError("radicand n must be a non-square integer >= 2")

    def is_irrational(self) -> bool:
        return self.q != 0

    def sign_linear(self, x: int, y: int) -> int:
        """Exact sign of y - alpha*x."""
        return _sign_a_plus_b_sqrt(self.r * y - self.p * x, -self.q * x, self.n)

    def __repr__(self) -> str:
        return f"({self.p}+{self.q}*sqrt({self.n}))/{self.r}"


@dataclass(frozen=True, slots=True)
class Window:
    """Axis-aligned truncation: |every free coordinate| <= bound, full torsion."""

    bound: int

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise ValueError("window bound must be >= 1")

    def scaled(self, factor: int) -> Window:
        return Window(self.bound * factor)


def ambient_window(sig: GroupSignature, window: Window) -> Iterator[GroupElement]:
    """All ambient elements in the window, in canonical ascending order."""
    b = window.bound
    free_ranges = [range(-b, b + 1)] * sig.free_rank
    torsion_ranges = [range(n) for n in sig.torsion_orders]
    for coords in itertools.product(*free_ranges, *torsion_ranges):
        yield GroupElement(sig, coords[: sig.free_rank], coords[sig.free_rank :])


@lru_cache(maxsize=None)
def witness_search_order(sig: GroupSignature, window: Window) -> tuple[GroupElement, ...]:
    """Window elements ordered small-first, non-negative coordinates first.

    Used by all bounded witness searches so that reported witnesses are
    deterministic and as readable as possible.
    """
    elems = list(ambient_window(sig, window))
    elems.sort(key=lambda u: (u.norm_inf(), tuple(-c for c in u.free), u.torsion))
    return tuple(elems)


class ValuationStatus(str, Enum):
    TRUE_ANALYTIC = "TRUE_ANALYTIC"
    FALSE_WITNESS = "FALSE_WITNESS"
    UNKNOWN_UP_TO_WINDOW = "UNKNOWN_UP_TO_WINDOW"


@dataclass(frozen=True, slots=True)
class ValuationVerdict:
    status: ValuationStatus
    witness: GroupElement | None = None


class MonoidSpec:
    """Behavioural base for all monoid families.

    Concrete families are frozen dataclasses; a spec is validated once
    at construction and immutable afterwards.
    """

    __slots__ = ()

    signature: GroupSignature
    label: str
    family: ClassVar[str]

    def contains(self, u: GroupElement) -> bool:
        raise NotImplementedError

    def identity(self) -> GroupElement:
        return self.signature.identity()

    def is_reduced(self) -> bool:
        """Certified analytically per family; never a window search."""
        raise NotImplementedError

    def quotient_generators(self) -> tuple[GroupElement, ...]:
        """Generators of the quotient group inside the ambient group."""
        raise NotImplementedError

    def iter_window_members(self, window: Window) -> Iterator[GroupElement]:
        """Members inside the window; families override with sparse walks."""
        return (u for u in ambient_window(self.signature, window) if self.contains(u))

    def _check_element(self, u: GroupElement) -> None:
        if u.signature != self.signature:
            raise SignatureMismatchError(
                f"element of {u.signature} queried against monoid over {self.signature}"
            )


@lru_cache(maxsize=None)
def elements_in_window(spec: MonoidSpec, window: Window) -> tuple[GroupElement, ...]:
    """Sorted members of ``spec`` inside ``window`` (cached per pair)."""
    return tuple(sorted(spec.iter_window_members(window), key=GroupElement.key))


# ---------------------------------------------------------------------------
# N0 and numerical monoids (ambient Z).
# ---------------------------------------------------------------------------

_Z1 = GroupSignature(1)


@dataclass(frozen=True, slots=True)
class FullN0(MonoidSpec):
    signature: GroupSignature
    label: str = "N0"

    family: ClassVar[str] = "FULL_N0"

    def __post_init__(self) -> None:
        if self.signature != _Z1:
            raise ValueError("FULL_N0 lives in the ambient group Z")

    def contains(self, u: GroupElement) -> bool:
        self._check_element(u)
        return u.free[0] >= 0

    def is_reduced(self) -> bool:
        return True

    def quotient_generators(self) -> tuple[GroupElement, ...]:
        return (self.signature.element(1),)

    def iter_window_members(self, window: Window) -> Iterator[GroupElement]:
        return (self.signature.element(x) for x in range(window.bound + 1))


def _apery_table(gens: tuple[int, ...]) -> tuple[int, ...]:
    """Least member of the monoid in each residue class mod the smallest
    generator, computed by shortest-path relaxation over the residues."""
    m = gens[0]
    best = [0] + [None] * (m - 1)
    frontier = [0]
    while frontier:
        new_frontier = []
        for value_res in frontier:
            base = best[value_res]
            for g in gens:
                cand = base + g
                res = cand % m
                if best[res] is None or cand < best[res]:
                    best[res] = cand
                    new_frontier.append(res)
        frontier = new_frontier
    return tuple(best)


@dataclass(frozen=True, slots=True)
class Numerical(MonoidSpec):
    """Submonoid of N0 generated by positive integers.

    An empty generator tuple gives the trivial monoid {0} (used as the
    pseudo-unit submonoid of a proper numerical monoid).  Generators
    with gcd > 1 are supported; membership is decided on the
    gcd-normalized copy.
    """

    signature: GroupSignature
    generators: tuple[int, ...]
    label: str = ""
    _gcd: int = field(init=False, repr=False, compare=False, default=0)
    _normalized: tuple[int, ...] = field(init=False, repr=False, compare=False, default=())
    _apery: tuple[int, ...] = field(init=False, repr=False, compare=False, default=())

    family: ClassVar[str] = "NUMERICAL"

    def __post_init__(self) -> None:
        if self.signature != _Z1:
            raise ValueError("NUMERICAL monoids live in the ambient group Z")
        gens = tuple(sorted(set(self.generators)))
        if any(g < 1 for g in gens):
            raise ValueError("numerical monoid generators must be positive")
        object.__setattr__(self, "generators", gens)
        if not gens:
            return
        g0 = 0
        for g in gens:
            g0 = gcd(g0, g)
        normalized = tuple(g // g0 for g in gens)
        object.__setattr__(self, "_gcd", g0)
        object.__setattr__(self, "_normalized", normalized)
        if 1 not in normalized:
            object.__setattr__(self, "_apery", _apery_table(normalized))

    @property
    def content_gcd(self) -> int:
        return self._gcd

    def is_all_of_scaled_n0(self) -> bool:
        """True when the monoid is g*N0, i.e. a full copy of N0."""
        return bool(self.generators) and 1 in self._normalized

    def is_trivial(self) -> bool:
        return not self.generators

    def frobenius_gap(self) -> int | None:
        """Largest element of gcd*N0 missing from the monoid, None if none."""
        if self.is_trivial() or self.is_all_of_scaled_n0():
            return None
        return self._gcd * (max(self._apery) - self._normalized[0])

    def contains_int(self, x: int) -> bool:
        if not self.generators:
            return x == 0
        if x < 0 or x % self._gcd:
            return False
        xn = x // self._gcd
        if 1 in self._normalized:
            return True
        return xn >= self._apery[xn % self._normalized[0]]

    def contains(self, u: GroupElement) -> bool:
        self._check_element(u)
        return self.contains_int(u.free[0])

    def is_reduced(self) -> bool:
        return True

    def quotient_generators(self) -> tuple[GroupElement, ...]:
        if not self.generators:
            return ()
        return (self.signature.element(self._gcd),)

    def iter_window_members(self, window: Window) -> Iterator[GroupElement]:
        return (
            self.signature.element(x)
            for x in range(window.bound + 1)
            if self.contains_int(x)
        )


# ---------------------------------------------------------------------------
# Planar valuation monoids (embedded in two free coordinates).
# ---------------------------------------------------------------------------


class _Planar(MonoidSpec):
    """Shared plumbing for monoids supported on two free coordinates."""

    __slots__ = ()

    embedding: tuple[int, int]

    def _validate_embedding(self) -> None:
        i, j = self.embedding
        d = self.signature.free_rank
        if not (0 <= i < d and 0 <= j < d and i != j):
            raise ValueError(f"embedding {self.embedding} invalid for free rank {d}")

    def plane_coords(self, u: GroupElement) -> tuple[int, int] | None:
        """(x, y) on the embedding plane, or None if u leaves the plane."""
        i, j = self.embedding
        if any(u.torsion):
            return None
        for k, c in enumerate(u.free):
            if c and k not in (i, j):
                return None
        return u.free[i], u.free[j]

    def plane_element(self, x: int, y: int) -> GroupElement:
        i, j = self.embedding
        free = [0] * self.signature.free_rank
        free[i], free[j] = x, y
        return self.signature.element(free, (0,) * len(self.signature.torsion_orders))

    def quotient_generators(self) -> tuple[GroupElement, ...]:
        return (self.plane_element(1, 0), self.plane_element(0, 1))

    def iter_window_members(self, window: Window) -> Iterator[GroupElement]:
        b = window.bound
        for x in range(-b, b + 1):
            for y in range(-b, b + 1):
                u = self.plane_element(x, y)
                if self.contains(u):
                    yield u


@dataclass(frozen=True, slots=True)
class HalfPlaneLex(_Planar):
    """Copy of (Z x N) | (N0 x {0}): the lexicographic positive cone."""

    signature: GroupSignature
    embedding: tuple[int, int]
    label: str = ""

    family: ClassVar[str] = "HALF_PLANE_LEX"

    def __post_init__(self) -> None:
        object.__setattr__(self, "embedding", tuple(self.embedding))
        self._validate_embedding()

    def contains(self, u: GroupElement) -> bool:
        self._check_element(u)
        xy = self.plane_coords(u)
        if xy is None:
            return False
        x, y = xy
        return y >= 1 or (y == 0 and x >= 0)

    def is_reduced(self) -> bool:
        return True


@dataclass(frozen=True, slots=True)
class IrrationalCone(_Planar):
    """Copy of {(x, y) in Z^2 : y <= alpha*x}, alpha a quadratic surd.

    With an irrational slope the boundary line meets the lattice only at
    the origin, so the cone is the positive half of a total order and
    the monoid is reduced.  A rational slope (q == 0) leaves boundary
    lattice points inside, making the cone non-reduced; construct such
    cones only through the dataclass directly, never via the public
    factory, and only as negative controls.
    """

    signature: GroupSignature
    embedding: tuple[int, int]
    alpha: QuadraticSurd
    label: str = ""

    family: ClassVar[str] = "IRRATIONAL_CONE"

    def __post_init__(self) -> None:
        object.__setattr__(self, "embedding", tuple(self.embedding))
        self._validate_embedding()

    def contains(self, u: GroupElement) -> bool:
        self._check_element(u)
        xy = self.plane_coords(u)
        if xy is None:
            return False
        x, y = xy
        return self.alpha.sign_linear(x, y) <= 0

    def is_reduced(self) -> bool:
        return self.alpha.is_irrational()


# ---------------------------------------------------------------------------
# Finitely generated subsemigroups-with-identity.
# ---------------------------------------------------------------------------


def _find_positive_grading(
    sig: GroupSignature, vectors: list[tuple[int, ...]]
) -> tuple[int, ...] | None:
    """Small integer functional strictly positive on every vector."""
    d = sig.free_rank
    if d == 0 or not vectors:
        return None
    for radius in range(1, GRADING_SEARCH_BOUND + 1):
        for lam in itertools.product(range(-radius, radius + 1), repeat=d):
            if max(abs(c) for c in lam) != radius:
                continue
            if all(sum(l * v for l, v in zip(lam, vec)) > 0 for vec in vectors):
                return lam
    return None


def _find_group_certificate(gens: tuple[GroupElement, ...]) -> tuple[int, ...] | None:
    """Coefficients c_i >= 1 with sum(c_i * g_i) = identity, if any.

    Such a certificate proves every generator invertible, hence that the
    generated semigroup is the full generated subgroup.
    """
    k = len(gens)
    for coeffs in itertools.product(range(1, GROUP_CERTIFICATE_BOUND + 1), repeat=k):
        total = gens[0].scale(coeffs[0])
        for c, g in zip(coeffs[1:], gens[1:]):
            total = total + g.scale(c)
        if total.is_identity():
            return coeffs
    return None


@dataclass(frozen=True, slots=True)
class FreeGenerated(MonoidSpec):
    """Subsemigroup-with-identity generated by finitely many elements.

    Membership search must terminate, so construction requires one of:

    * a positive grading (an integer functional strictly positive on
      every generator), which bounds coefficient search and also proves
      the monoid reduced; or
    * a group certificate (the identity as an everywhere-positive
      combination), in which case the monoid is the generated subgroup
      and membership is a lattice question.

    Other generator sets are rejected: their membership problem is
    unbounded integer programming, out of scope here.
    """

    signature: GroupSignature
    generators: tuple[GroupElement, ...]
    label: str = ""
    _grading: tuple[int, ...] | None = field(init=False, repr=False, compare=False, default=None)
    _group_rows: tuple[tuple[int, ...], ...] | None = field(
        init=False, repr=False, compare=False, default=None
    )
    _cache: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    family: ClassVar[str] = "FREE_GENERATED"

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if g.signature != self.signature:
                raise SignatureMismatchError("generator signature mismatch")
        if not gens:
            object.__setattr__(self, "_group_rows", subgroup_rows(self.signature, ()))
            return
        grading = _find_positive_grading(self.signature, [g.free for g in gens])
        if grading is not None:
            object.__setattr__(self, "_grading", grading)
            return
        if _find_group_certificate(gens) is not None:
            object.__setattr__(self, "_group_rows", subgroup_rows(self.signature, gens))
            return
        raise ValueError(
            "generators admit no positive grading (searched |coeff| <= "
            f"{GRADING_SEARCH_BOUND}) and do not certify a group; membership "
            "would be undecidable by bounded search"
        )

    @property
    def grading(self) -> tuple[int, ...] | None:
        return self._grading

    def is_group(self) -> bool:
        return self._group_rows is not None

    def _lambda(self, free: tuple[int, ...]) -> int:
        return sum(l * c for l, c in zip(self._grading, free))

    def _graded_member(self, u: GroupElement) -> bool:
        target = self._lambda(u.free)
        if target < 0:
            return False
        if target == 0:
            return u.is_identity()
        gens = self.generators
        weights = [self._lambda(g.free) for g in gens]
        memo = self._cache.setdefault("member", {})

        def rec(i: int, residual: GroupElement, budget: int) -> bool:
            if residual.is_identity() and budget == 0:
                return True
            if i == len(gens):
                return False
            key = (i, residual.free, residual.torsion)
            hit = memo.get(key)
            if hit is not None:
                return hit
            ok = False
            g, w = gens[i], weights[i]
            c_max = budget // w
            step = residual
            for c in range(c_max + 1):
                if rec(i + 1, step, budget - c * w):
                    ok = True
                    break
                step = step - g
            memo[key] = ok
            return ok

        return rec(0, u, target)

    def contains(self, u: GroupElement) -> bool:
        self._check_element(u)
        if u.is_identity():
            return True
        if self._group_rows is not None:
            if not self._group_rows:
                return False
            return lattice_contains(self._group_rows, element_vector(u))
        return self._graded_member(u)

    def is_reduced(self) -> bool:
        if self._grading is not None:
            return True
        # a group: reduced only if trivial
        return all(g.is_identity() for g in self.generators)

    def quotient_generators(self) -> tuple[GroupElement, ...]:
        return self.generators


# ---------------------------------------------------------------------------
# Composite monoids: valuation part glued with a translated complement.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ComplementSpec:
    """The set G.M: base subgroup G times the semigroup M generated by
    positive generators (at least one generator used).

    Membership of u is the existence of c in N0^k, c != 0, with
    u - sum(c_i * m_i) in the lattice of G.  A grading functional that
    vanishes on G and is strictly positive on every m_i bounds the
    search; construction fails if none is found.
    """

    signature: GroupSignature
    base_subgroup: tuple[GroupElement, ...]
    positive_generators: tuple[GroupElement, ...]
    _base_rows: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False, default=()
    )
    _grading: tuple[int, ...] = field(init=False, repr=False, compare=False, default=())
    _cache: dict = field(init=False, repr=False, compare=False, default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "base_subgroup", tuple(self.base_subgroup))
        object.__setattr__(self, "positive_generators", tuple(self.positive_generators))
        for g in self.base_subgroup + self.positive_generators:
            if g.signature != self.signature:
                raise SignatureMismatchError("complement generator signature mismatch")
        if not self.positive_generators:
            raise ValueError("complement needs at least one positive generator")
        rows = subgroup_rows(self.signature, self.base_subgroup)
        object.__setattr__(self, "_base_rows", rows)
        grading = self._find_grading()
        if grading is None:
            raise ValueError(
                "no integer functional vanishes on the base subgroup and is "
                "strictly positive on every positive generator; complement "
                "membership would be unbounded"
            )
        object.__setattr__(self, "_grading", grading)

    def _find_grading(self) -> tuple[int, ...] | None:
        d = self.signature.free_rank
        if d == 0:
            return None
        base_free = [g.free for g in self.base_subgroup]
        pos_free = [g.free for g in self.positive_generators]
        for radius in range(1, GRADING_SEARCH_BOUND + 1):
            for lam in itertools.product(range(-radius, radius + 1), repeat=d):
                if max(abs(c) for c in lam) != radius:
                    continue
                if any(sum(l * v for l, v in zip(lam, vec)) for vec in base_free):
                    continue
                if all(sum(l * v for l, v in zip(lam, vec)) > 0 for vec in pos_free):
                    return lam
        return None

    def _lambda(self, u: GroupElement) -> int:
        return sum(l * c for l, c in zip(self._grading, u.free))

    def member_combination(self, u: GroupElement) -> tuple[int, ...] | None:
        """A nonzero coefficient vector witnessing membership, or None.

        Memoized on the canonical residue of u modulo the base lattice,
        so repeated queries across a window collapse to a few searches.
        """
        residue = lattice_residue(self._base_rows, element_vector(u))
        memo = self._cache.setdefault("member", {})
        if residue in memo:
            return memo[residue]
        budget = self._lambda(u)
        gens = self.positive_generators
        weights = [self._lambda(g) for g in gens]
        found: tuple[int, ...] | None = None
        if budget >= 1:
            for coeffs in self._bounded_combinations(weights, budget):
                if not any(coeffs):
                    continue
                total = self.signature.identity()
                for c, g in zip(coeffs, gens):
                    if c:
                        total = total + g.scale(c)
                if lattice_residue(self._base_rows, element_vector(total)) == residue:
                    found = coeffs
                    break
        memo[residue] = found
        return found

    @staticmethod
    def _bounded_combinations(weights: list[int], budget: int) -> Iterator[tuple[int, ...]]:
        """All c >= 0 with sum(c_i * weights_i) == budget, ascending."""
        k = len(weights)

        def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if i == k - 1:
                c, r = divmod(remaining, weights[i])
                if r == 0:
                    yield prefix + (c,)
                return
            for c in range(remaining // weights[i] + 1):
                yield from rec(i + 1, remaining - c * weights[i], prefix + (c,))

        yield from rec(0, budget, ())

    def contains(self, u: GroupElement) -> bool:
        if u.signature != self.signature:
            raise SignatureMismatchError("element signature mismatch")
        return self.member_combination(u) is not None

    def contains_with_base(self, u: GroupElement) -> bool:
        """Membership in G.(M | {identity}) = G.M union G."""
        if self._base_rows:
            if lattice_contains(self._base_rows, element_vector(u)):
                return True
        elif u.is_identity():
            return True
        return self.contains(u)

    def has_incomparable_pair(self) -> bool:
        """Some pair of positive generators divides in neither direction."""
        gens = self.positive_generators
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                d1 = gens[i] - gens[j]
                if not self.contains_with_base(d1) and not self.contains_with_base(-d1):
                    return True
        return False


def is_analytic_valuation_family(spec: MonoidSpec) -> bool:
    """Families whose total divisibility order is certified by construction."""
    if isinstance(spec, (FullN0, HalfPlaneLex, IrrationalCone)):
        return True
    if isinstance(spec, Numerical):
        return spec.is_trivial() or spec.is_all_of_scaled_n0()
    return False


@dataclass(frozen=True, slots=True)
class Composite(MonoidSpec):
    """V | (G.M): a valuation monoid glued with a positive complement.

    Validation makes the decomposition structural rather than searched:

    * the valuation part is an analytically-certified valuation family
      and reduced;
    * its quotient group lies inside the base subgroup lattice, so the
      complement is closed under translation by that quotient group and
      disjoint from the valuation part;
    * some pair of positive generators is incomparable, so the
      complement genuinely breaks the total order (otherwise the glued
      monoid would itself be a valuation monoid).
    """

    signature: GroupSignature
    valuation_part: MonoidSpec
    complement_part: ComplementSpec
    label: str = ""

    family: ClassVar[str] = "COMPOSITE"

    def __post_init__(self) -> None:
        if self.valuation_part.signature != self.signature:
            raise SignatureMismatchError("valuation part signature mismatch")
        if self.complement_part.signature != self.signature:
            raise SignatureMismatchError("complement signature mismatch")
        if not is_analytic_valuation_family(self.valuation_part):
            raise ValueError("composite valuation part must be an analytic valuation family")
        rows = self.complement_part._base_rows
        for g in self.valuation_part.quotient_generators():
            if not lattice_contains(rows, element_vector(g)):
                raise ValueError(
                    "quotient group of the valuation part must lie in the "
                    "complement's base subgroup"
                )
        if not self.complement_part.has_incomparable_pair():
            raise ValueError(
                "complement positive generators are totally ordered; the "
                "glued monoid would be a plain valuation monoid"
            )

    def contains(self, u: GroupElement) -> bool:
        self._check_element(u)
        return self.valuation_part.contains(u) or self.complement_part.contains(u)

    def in_complement(self, u: GroupElement) -> bool:
        self._check_element(u)
        return self.complement_part.contains(u)

    def is_reduced(self) -> bool:
        # complement members have strictly positive grading, so none is
        # invertible; reducedness rests on the valuation part alone
        return self.valuation_part.is_reduced()

    def quotient_generators(self) -> tuple[GroupElement, ...]:
        return (
            self.valuation_part.quotient_generators()
            + self.complement_part.base_subgroup
            + self.complement_part.positive_generators
        )


# ---------------------------------------------------------------------------
# Factories (the validating public constructors).
# ---------------------------------------------------------------------------


def full_n0(label: str = "N0") -> FullN0:
    return FullN0(_Z1, label)


def numerical(generators: Iterable[int], label: str = "") -> Numerical:
    gens = tuple(generators)
    return Numerical(_Z1, gens, label or f"<{','.join(map(str, gens))}>")


def half_plane_lex(
    signature: GroupSignature = GroupSignature(2),
    embedding: tuple[int, int] = (0, 1),
    label: str = "half-plane-lex",
) -> HalfPlaneLex:
    return HalfPlaneLex(signature, embedding, label)


def irrational_cone(
    alpha: QuadraticSurd,
    signature: GroupSignature = GroupSignature(2),
    embedding: tuple[int, int] = (0, 1),
    label: str = "",
) -> IrrationalCone:
    if not alpha.is_irrational():
        raise ValueError("cone slope must be irrational (q != 0)")
    return IrrationalCone(signature, embedding, alpha, label or f"cone{alpha!r}")


def free_generated(
    signature: GroupSignature, generators: Iterable[GroupElement], label: str = "free-generated"
) -> FreeGenerated:
    return FreeGenerated(signature, tuple(generators), label)


def composite(
    valuation_part: MonoidSpec, complement_part: ComplementSpec, label: str = "composite"
) -> Composite:
    return Composite(valuation_part.signature, valuation_part, complement_part, label)


# ---------------------------------------------------------------------------
# Window-quantified queries.
# ---------------------------------------------------------------------------


def is_valuation(spec: MonoidSpec, window: Window) -> ValuationVerdict:
    """Total-order verdict: analytic for the order-cone families, a
    bounded witness search elsewhere."""
    if is_analytic_valuation_family(spec):
        return ValuationVerdict(ValuationStatus.TRUE_ANALYTIC)
    q_rows = subgroup_rows(spec.signature, spec.quotient_generators())
    for u in witness_search_order(spec.signature, window):
        if u.is_identity():
            continue
        if not q_rows or not lattice_contains(q_rows, element_vector(u)):
            continue
        if not spec.contains(u) and not spec.contains(-u):
            return ValuationVerdict(ValuationStatus.FALSE_WITNESS, u)
    return ValuationVerdict(ValuationStatus.UNKNOWN_UP_TO_WINDOW)


def units(spec: MonoidSpec, window: Window) -> tuple[GroupElement, ...]:
    """Members u of the window with -u also a member."""
    return tuple(u for u in elements_in_window(spec, window) if spec.contains(-u))


def quotient_group(spec: MonoidSpec) -> tuple[GroupElement, ...]:
    return spec.quotient_generators()


# ---------------------------------------------------------------------------
# JSON serialization of monoid definitions.
#
# Schema: {label, signature: {free_rank, torsion_orders}, family,
# family-specific fields}; elements as {free: [...], torsion: [...]};
# surds as {p, q, r, n}.  Round trips are bit-exact.
# ---------------------------------------------------------------------------


def _element_to_obj(u: GroupElement) -> dict:
    return {"free": list(u.free), "torsion": list(u.torsion)}


def _element_from_obj(sig: GroupSignature, obj: dict) -> GroupElement:
    return sig.element(tuple(obj["free"]), tuple(obj.get("torsion", ())))


def _signature_to_obj(sig: GroupSignature) -> dict:
    return {"free_rank": sig.free_rank, "torsion_orders": list(sig.torsion_orders)}


def _signature_from_obj(obj: dict) -> GroupSignature:
    return GroupSignature(obj["free_rank"], tuple(obj.get("torsion_orders", ())))


def spec_to_dict(spec: MonoidSpec) -> dict:
    out: dict = {
        "family": spec.family,
        "label": spec.label,
        "signature": _signature_to_obj(spec.signature),
    }
    if isinstance(spec, Numerical):
        out["generators"] = list(spec.generators)
    elif isinstance(spec, HalfPlaneLex):
        out["embedding"] = list(spec.embedding)
    elif isinstance(spec, IrrationalCone):
        out["embedding"] = list(spec.embedding)
        a = spec.alpha
        out["alpha"] = {"p": a.p, "q": a.q, "r": a.r, "n": a.n}
    elif isinstance(spec, FreeGenerated):
        out["generators"] = [_element_to_obj(g) for g in spec.generators]
    elif isinstance(spec, Composite):
        out["valuation_part"] = spec_to_dict(spec.valuation_part)
        out["complement_part"] = {
            "base_subgroup": [_element_to_obj(g) for g in spec.complement_part.base_subgroup],
            "positive_generators": [
                _element_to_obj(g) for g in spec.complement_part.positive_generators
            ],
        }
    elif not isinstance(spec, FullN0):
        raise TypeError(f"cannot serialize {type(spec).__name__}")
    return out


def spec_from_dict(obj: dict) -> MonoidSpec:
    try:
        family = obj["family"]
        label = obj.get("label", "")
        sig = _signature_from_obj(obj["signature"])
        if family == "FULL_N0":
            return FullN0(sig, label)
        if family == "NUMERICAL":
            return Numerical(sig, tuple(obj["generators"]), label)
        if family == "HALF_PLANE_LEX":
            return HalfPlaneLex(sig, tuple(obj["embedding"]), label)
        if family == "IRRATIONAL_CONE":
            a = obj["alpha"]
            alpha = QuadraticSurd(a["p"], a["q"], a["r"], a["n"])
            if not alpha.is_irrational():
                raise ValueError("cone slope must be irrational (q != 0)")
            return IrrationalCone(sig, tuple(obj["embedding"]), alpha, label)
        if family == "FREE_GENERATED":
            gens = tuple(_element_from_obj(sig, g) for g in obj["generators"])
            return FreeGenerated(sig, gens, label)
        if family == "COMPOSITE":
            val = spec_from_dict(obj["valuation_part"])
            comp = obj["complement_part"]
            complement = ComplementSpec(
                sig,
                tuple(_element_from_obj(sig, g) for g in comp["base_subgroup"]),
                tuple(_element_from_obj(sig, g) for g in comp["positive_generators"]),
            )
            return Composite(sig, val, complement, label)
    except KeyError as exc:
        raise ValueError(f"monoid definition missing field {exc}") from exc
    raise ValueError(f"unknown monoid family {family!r}")


def monoid_to_json(spec: MonoidSpec) -> str:
    return json.dumps(spec_to_dict(spec), sort_keys=True, indent=2) + "\n"


def monoid_from_json(text: str) -> MonoidSpec:
    return spec_from_dict(json.loads(text))


def load_monoid_file(path) -> MonoidSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return monoid_from_json(fh.read())

import json
import random
from fractions import Fraction
from math import isqrt

import pytest

from powmon.ambient import GroupSignature
from powmon.monoids import (
    ComplementSpec,
    FreeGenerated,
    QuadraticSurd,
    ValuationStatus,
    Window,
    composite,
    elements_in_window,
    free_generated,
    full_n0,
    half_plane_lex,
    irrational_cone,
    is_valuation,
    monoid_from_json,
    monoid_to_json,
    numerical,
    quotient_group,
    spec_from_dict,
    spec_to_dict,
    units,
)

Z1 = GroupSignature(1)
Z2 = GroupSignature(2)


def surd_sign_oracle(alpha: QuadraticSurd, x: int, y: int) -> int:
    """Independent check of sign(y - alpha*x) by rational sandwiching.

    sqrt(n) is pinned between isqrt(n * scale^2) / scale and the next
    rational step; the precision is raised until the sandwich decides.
    """
    if x == 0:
        return (y > 0) - (y < 0)
    scale = 10**6
    while True:
        s = isqrt(alpha.n * scale * scale)
        lo = (Fraction(alpha.p) + alpha.q * Fraction(s if alpha.q > 0 else s + 1, scale)) / alpha.r
        hi = (Fraction(alpha.p) + alpha.q * Fraction(s + 1 if alpha.q > 0 else s, scale)) / alpha.r
        val_lo = y - hi * x if x > 0 else y - lo * x
        val_hi = y - lo * x if x > 0 else y - hi * x
        if val_lo > 0:
            return 1
        if val_hi < 0:
            return -1
        scale *= 1000


def test_surd_validation():
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 0, 2)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 1, 4)  # perfect square radicand
    with pytest.raises(ValueError):
        irrational_cone(QuadraticSurd(3, 0, 2, 2))  # rational slope rejected


def test_surd_sign_examples():
    sqrt2 = QuadraticSurd(0, 1, 1, 2)
    # oracle for the cone example (2, 3): 3 > 2*sqrt(2) because 9 > 8
    assert 3 * 3 > 2 * 2 * 2
    assert sqrt2.sign_linear(2, 3) == 1
    assert sqrt2.sign_linear(1, 1) == -1
    assert sqrt2.sign_linear(0, 0) == 0
    assert sqrt2.sign_linear(-2, -3) == -1


def test_surd_sign_against_sandwich_oracle():
    rng = random.Random(11)
    alphas = [
        QuadraticSurd(0, 1, 1, 2),
        QuadraticSurd(1, 1, 2, 5),
        QuadraticSurd(-3, 1, 5, 7),
        QuadraticSurd(2, -3, 4, 3),
    ]
    for _ in range(10_000):
        alpha = rng.choice(alphas)
        x = rng.randint(-50, 50)
        y = rng.randint(-80, 80)
        assert alpha.sign_linear(x, y) == surd_sign_oracle(alpha, x, y)


def test_half_plane_membership(halfplane):
    assert halfplane.contains(Z2.element((-5, 3)))
    assert not halfplane.contains(Z2.element((-1, 0)))
    assert halfplane.contains(Z2.element((0, 0)))
    assert halfplane.contains(Z2.element((4, 0)))
    assert not halfplane.contains(Z2.element((3, -1)))


def test_cone_membership(cone_sqrt2):
    assert not cone_sqrt2.contains(Z2.element((2, 3)))
    assert cone_sqrt2.contains(Z2.element((2, 2)))
    assert cone_sqrt2.contains(Z2.element((-2, -3)))
    assert cone_sqrt2.contains(Z2.element((0, 0)))
    assert not cone_sqrt2.contains(Z2.element((0, 1)))


def test_numerical_membership(num23):
    # oracle: enumerate combinations 2a + 3b up to 12
    reachable = {2 * a + 3 * b for a in range(7) for b in range(5) if 2 * a + 3 * b <= 12}
    for x in range(13):
        assert num23.contains_int(x) == (x in reachable)
    assert not num23.contains_int(1)
    assert num23.contains_int(5)
    assert not num23.contains_int(-2)


def test_numerical_gcd_normalization():
    m = numerical([4, 6])
    # oracle: {4,6} generates 2 * <2,3> = {0, 4, 6, 8, 10, ...}
    members = {0}
    for _ in range(8):
        members |= {x + 4 for x in members} | {x + 6 for x in members}
    for x in range(0, 25):
        assert m.contains_int(x) == (x in members)
    assert m.frobenius_gap() == 2  # largest even number missing


def test_numerical_frobenius(num23):
    assert num23.frobenius_gap() == 1
    assert numerical([3, 5]).frobenius_gap() == 7
    assert numerical([1]).frobenius_gap() is None
    assert numerical([1]).is_all_of_scaled_n0()


def test_trivial_numerical():
    t = numerical([])
    assert t.is_trivial()
    assert t.contains_int(0)
    assert not t.contains_int(1)
    assert quotient_group(t) == ()


def test_free_generated_graded_membership():
    gens = (Z2.element((2, 0)), Z2.element((1, 1)))
    m = free_generated(Z2, gens)
    assert m.grading is not None
    # oracle: bounded enumeration of combinations
    members = {
        (2 * a + b, b)
        for a in range(9)
        for b in range(9)
    }
    for x in range(-4, 9):
        for y in range(-4, 9):
            assert m.contains(Z2.element((x, y))) == ((x, y) in members)


def test_free_generated_group_certificate():
    gens = (Z2.element((1, 0)), Z2.element((0, 1)), Z2.element((-1, -1)))
    m = free_generated(Z2, gens)
    assert m.is_group()
    assert not m.is_reduced()
    w = Window(3)
    # generators sum to zero: every window point is a unit
    assert units(m, w) == elements_in_window(m, w)
    assert len(units(m, w)) == 7 * 7


def test_free_generated_rejects_undecidable():
    # Z x N0: zero is a positive combination of the first two generators
    # but never involves the third, so there is neither a positive
    # grading nor a group certificate
    gens = (Z2.element((1, 0)), Z2.element((-1, 0)), Z2.element((0, 1)))
    with pytest.raises(ValueError):
        free_generated(Z2, gens)


def test_free_generated_torsion_group():
    sig = GroupSignature(0, (3,))
    m = free_generated(sig, (sig.element((), (1,)),))
    assert m.is_group()
    assert m.contains(sig.element((), (2,)))


def test_is_valuation_analytic(halfplane, cone_sqrt2, n0):
    w = Window(6)
    for spec in (halfplane, cone_sqrt2, n0):
        assert is_valuation(spec, w).status is ValuationStatus.TRUE_ANALYTIC
    assert is_valuation(numerical([1]), w).status is ValuationStatus.TRUE_ANALYTIC


def test_is_valuation_numerical_witness(num23):
    verdict = is_valuation(num23, Window(6))
    assert verdict.status is ValuationStatus.FALSE_WITNESS
    assert verdict.witness == Z1.element(1)


def test_is_valuation_composite_witness(rank4_h):
    verdict = is_valuation(rank4_h, Window(2))
    assert verdict.status is ValuationStatus.FALSE_WITNESS
    w = verdict.witness
    assert rank4_h.contains(w) is False
    assert rank4_h.contains(-w) is False


def test_valuation_verdict_stable_under_window_growth(halfplane, cone_sqrt2):
    for spec in (halfplane, cone_sqrt2):
        for bound in (2, 4, 8, 12):
            assert is_valuation(spec, Window(bound)).status is ValuationStatus.TRUE_ANALYTIC


def test_analytic_valuation_survives_witness_search(halfplane, cone_sqrt2):
    """Oracle for the analytic verdicts: an explicit scan up to bound 12
    finds no element of the quotient group outside both H and -H."""
    for spec in (halfplane, cone_sqrt2):
        for x in range(-12, 13):
            for y in range(-12, 13):
                u = Z2.element((x, y))
                assert spec.contains(u) or spec.contains(-u)


def test_units(num23, halfplane):
    w = Window(8)
    assert units(num23, w) == (Z1.element(0),)
    assert units(halfplane, w) == (Z2.element((0, 0)),)


def test_quotient_groups(num23, halfplane, cone_sqrt2):
    assert quotient_group(num23) == (Z1.element(1),)
    assert set(quotient_group(halfplane)) == {Z2.element((1, 0)), Z2.element((0, 1))}
    # oracle: (1,1) and (1,0) lie in the cone and generate Z^2
    assert cone_sqrt2.contains(Z2.element((1, 1)))
    assert cone_sqrt2.contains(Z2.element((1, 0)))
    assert set(quotient_group(cone_sqrt2)) == {Z2.element((1, 0)), Z2.element((0, 1))}


def test_membership_closure_sampled(num23, halfplane, cone_sqrt2, rank4_h):
    w = Window(5)
    rng = random.Random(23)
    for spec in (num23, halfplane, cone_sqrt2, rank4_h):
        pool = elements_in_window(spec, w)
        assert spec.identity() in pool
        for _ in range(10_000):
            u = pool[rng.randrange(len(pool))]
            v = pool[rng.randrange(len(pool))]
            assert spec.contains(u + v)


def test_complement_membership(rank4_complement):
    Z4 = GroupSignature(4)
    assert rank4_complement.contains(Z4.element((5, -7, 1, 0)))
    assert rank4_complement.contains(Z4.element((0, 0, 2, 3)))
    assert not rank4_complement.contains(Z4.element((1, 1, 0, 0)))
    assert not rank4_complement.contains(Z4.element((0, 0, -1, 2)))
    assert rank4_complement.member_combination(Z4.element((9, 9, 1, 2))) == (1, 2)


def test_composite_membership(rank4_h):
    Z4 = GroupSignature(4)
    assert rank4_h.contains(Z4.element((-3, 2, 0, 0)))  # half-plane part
    assert rank4_h.contains(Z4.element((-3, -2, 1, 0)))  # complement part
    assert not rank4_h.contains(Z4.element((-3, 0, 0, 0)))
    assert not rank4_h.contains(Z4.element((0, 0, -1, 0)))
    assert rank4_h.is_reduced()


def test_composite_rejects_totally_ordered_complement(halfplane):
    Z3 = GroupSignature(3)
    val = half_plane_lex(Z3, (0, 1))
    comp = ComplementSpec(
        Z3,
        base_subgroup=(Z3.basis_element(0), Z3.basis_element(1)),
        positive_generators=(Z3.basis_element(2),),
    )
    with pytest.raises(ValueError):
        composite(val, comp)


def test_composite_rejects_unrelated_quotients():
    Z3 = GroupSignature(3)
    val = half_plane_lex(Z3, (0, 1))
    comp = ComplementSpec(Z3, (Z3.basis_element(0),), (Z3.basis_element(2),))
    with pytest.raises(ValueError):
        composite(val, comp)  # q(val) not inside base subgroup


def test_json_round_trip(n0, num23, halfplane, cone_sqrt2, rank4_h):
    for spec in (n0, num23, halfplane, cone_sqrt2, rank4_h):
        text = monoid_to_json(spec)
        again = monoid_from_json(text)
        assert again == spec
        assert monoid_to_json(again) == text


def test_json_schema_validation():
    with pytest.raises(ValueError):
        spec_from_dict({"family": "NO_SUCH", "label": "", "signature": {"free_rank": 1}})
    with pytest.raises(ValueError):
        spec_from_dict({"family": "FULL_N0", "label": ""})
    # rational slope rejected at load time
    bad = {
        "family": "IRRATIONAL_CONE",
        "label": "",
        "signature": {"free_rank": 2, "torsion_orders": []},
        "embedding": [0, 1],
        "alpha": {"p": 3, "q": 0, "r": 2, "n": 2},
    }
    with pytest.raises(ValueError):
        spec_from_dict(bad)


def test_elements_in_window_sorted_and_cached(num23):
    w = Window(9)
    elems = elements_in_window(num23, w)
    assert elems == tuple(sorted(elems, key=lambda u: u.key()))
    assert [u.free[0] for u in elems] == [0, 2, 3, 4, 5, 6, 7, 8, 9]
    assert elements_in_window(num23, Window(9)) is elems

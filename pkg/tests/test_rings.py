from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from modfact.fields import RationalField, PrimeField, ExtensionField, field_from_json
from modfact.rings import BaseRing, NotNormalError

from common import R5x3, RQ2, RS, RS1


def coeffs(ring):
    if isinstance(ring.field, RationalField):
        return st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.sampled_from(list(ring.field.elements()))


def polys(ring, max_len=5):
    return st.lists(coeffs(ring), max_size=max_len).map(
        lambda cs: ring.trim(list(cs)))


RINGS = [R5x3, RQ2, RS, RS1]
ring_polys = st.sampled_from(RINGS).flatmap(
    lambda r: st.tuples(st.just(r), polys(r), polys(r), polys(r)))


@given(ring_polys)
@settings(max_examples=120, deadline=None)
def test_addition_laws(data):
    ring, f, g, h = data
    # (f + g) + h = f + (g + h)
    assert ring.add(ring.add(f, g), h) == ring.add(f, ring.add(g, h))
    # f + g = g + f
    assert ring.add(f, g) == ring.add(g, f)
    # f + (-f) = 0
    assert ring.add(f, ring.neg(f)) == []


@given(ring_polys)
@settings(max_examples=120, deadline=None)
def test_multiplication_laws(data):
    ring, f, g, h = data
    # (f g) h = f (g h)
    assert ring.mul(ring.mul(f, g), h) == ring.mul(f, ring.mul(g, h))
    # f (g + h) = f g + f h
    assert ring.mul(f, ring.add(g, h)) == ring.add(ring.mul(f, g), ring.mul(f, h))
    # (f + g) h = f h + g h
    assert ring.mul(ring.add(f, g), h) == ring.add(ring.mul(f, h), ring.mul(g, h))
    # 1 f = f 1 = f
    assert ring.mul(ring.one, f) == f and ring.mul(f, ring.one) == f


@given(ring_polys)
@settings(max_examples=120, deadline=None)
def test_omega_is_normal(data):
    ring, f, g, h = data
    # omega f = sigma_omega(f) omega
    assert ring.mul(ring.omega, f) == ring.mul(ring.apply_sigma(f), ring.omega)


@given(ring_polys)
@settings(max_examples=120, deadline=None)
def test_sigma_is_a_ring_map(data):
    ring, f, g, h = data
    assert ring.apply_sigma(ring.mul(f, g)) == ring.mul(ring.apply_sigma(f),
                                                        ring.apply_sigma(g))
    assert ring.apply_sigma(ring.add(f, g)) == ring.add(ring.apply_sigma(f),
                                                        ring.apply_sigma(g))
    # sigma^-1 sigma = id
    assert ring.apply_sigma(ring.apply_sigma(f, 1), -1) == f


@given(ring_polys)
@settings(max_examples=120, deadline=None)
def test_division_identities(data):
    ring, f, g, h = data
    if not g:
        return
    q, r = ring.right_quo_rem(f, g)
    # f = q g + r with deg r < deg g
    assert ring.add(ring.mul(q, g), r) == f
    assert len(r) < len(g)
    q, r = ring.left_quo_rem(f, g)
    # f = g q + r
    assert ring.add(ring.mul(g, q), r) == f
    assert len(r) < len(g)


@given(ring_polys)
@settings(max_examples=60, deadline=None)
def test_quotient_reduce_is_idempotent(data):
    ring, f, g, h = data
    red = ring.quotient_reduce(f)
    assert len(red) <= ring.omega_deg
    assert ring.quotient_reduce(red) == red
    # reduction is additive
    fg = ring.quotient_reduce(ring.add(f, g))
    assert fg == ring.quotient_reduce(ring.add(red, ring.quotient_reduce(g)))


def test_commutative_ring_has_trivial_sigma():
    assert R5x3.commutative and R5x3.apply_sigma([2, 3]) == [2, 3]
    assert RQ2.commutative


def test_skew_ring_requires_monomial_omega():
    F4 = ExtensionField(2, 2)
    with pytest.raises(NotNormalError):
        BaseRing(F4, 1, [F4.one, F4.zero, F4.one])  # 1 + x^2 is not normal
    with pytest.raises(NotNormalError):
        BaseRing(F4, 1, [])
    # sigma-fixed leading coefficients are fine: c = 1 in F_4
    BaseRing(F4, 1, [F4.zero, F4.one])
    # a non-fixed leading coefficient is rejected
    gen = (0, 1)
    assert F4.frob(gen, 1) != gen
    with pytest.raises(NotNormalError):
        BaseRing(F4, 1, [F4.zero, gen])


def test_rational_ring_rejects_frobenius():
    with pytest.raises(ValueError):
        BaseRing(RationalField(), 1, [Fraction(0), Fraction(1)])


def test_ring_json_roundtrip():
    for ring in RINGS:
        data = ring.to_json()
        back = BaseRing(field_from_json(data["field"]), data["sigma_power"],
                        [ring.field.elem_from_json(c) for c in data["omega"]])
        assert back == ring


def test_skew_auto_power_matches_omega_degree():
    # omega = x^2 over F_4 with sigma = Frob composes to Frob^2 = id on F_4
    assert RS.auto_power == 0
    assert RS1.auto_power == 1

import random

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from modfact.matrices import TwistedMatrix
from modfact.factorizations import (Factorization, Morphism, theta,
                                    theta_morphism, omega_morphism, shift,
                                    shift_inverse, shift_power, shift_morphism,
                                    face, face_morphism, degeneracy,
                                    degeneracy_morphism, direct_sum,
                                    direct_sum_morphism, summand_inclusion,
                                    summand_projection, face0_transport,
                                    face0_transport_back, top_transport,
                                    top_transport_back)
from modfact import randomgen as rg

from common import R5x2, R5x3, RQ2, RS, X2, X2b, X3b, XS, mk, x_, one

RINGS = [R5x3, RQ2, RS]
seeds = st.integers(0, 10 ** 6)
folds = st.integers(1, 4)


def robj(ring, seed, n):
    return rg.random_object(ring, random.Random(seed), n, max_rank=2, max_deg=2)


def rmor(x, y, seed):
    return rg.random_morphism(random.Random(seed), x, y, max_deg=1)


def test_fold_one_objects_are_omega_identities():
    t1 = theta(R5x3, 1, 0, 2)
    assert t1.maps[0] == TwistedMatrix.omega_identity(R5x3, 2)
    bad = TwistedMatrix(R5x3, [[R5x3.omega, one], [[], R5x3.omega]], 1)
    with pytest.raises(ValueError):
        Factorization(R5x3, [2], [bad]).assert_valid()


def test_rotation_defects_catch_corruption():
    assert not X3b.rotation_defects()
    broken = [m.copy() for m in X3b.maps]
    broken[1].m[0][1] = R5x3.add(list(broken[1].m[0][1]), one)
    y = Factorization(R5x3, X3b.ranks, broken)
    assert y.rotation_defects()


def test_theta_objects_validate():
    for n in (1, 2, 3, 4):
        for i in range(n):
            theta(R5x3, n, i, 2).assert_valid()
            theta(RS, n, i, 1).assert_valid()


@given(st.sampled_from(RINGS), seeds, folds)
@settings(max_examples=60, deadline=None)
def test_shift_inverts(ring, seed, n):
    x = robj(ring, seed, n)
    assert shift_inverse(shift(x)) == x
    assert shift(shift_inverse(x)) == x
    # n applications of the shift twist the identity
    assert shift_power(x, x.n) == x.sigma_twist(-1)


@given(st.sampled_from(RINGS), seeds, folds)
@settings(max_examples=60, deadline=None)
def test_face_degeneracy_identities(ring, seed, n):
    x = robj(ring, seed, n)
    # degeneracy . face = id in every slot, including the wraparound one
    for i in range(x.n + 1):
        y = face(x, i)
        y.assert_valid()
        assert y.n == x.n + 1
        assert degeneracy(y, i) == x
    # the top face is the rotated bottom face
    assert face(x, x.n) == shift(face(x, 0))


@given(st.sampled_from(RINGS), seeds, st.integers(2, 4))
@settings(max_examples=60, deadline=None)
def test_shift_face_exchange(ring, seed, n):
    x = robj(ring, seed, n)
    for i in range(x.n):
        assert shift(face(x, i + 1)) == face(shift(x), i)
    y = face(x, 0)
    for i in range(1, y.n - 1):
        assert degeneracy(shift(y), i) == shift(degeneracy(y, i + 1))


def test_shifted_theta_drops_the_index():
    for n in (2, 3, 4):
        for i in range(n - 1):
            assert shift(theta(R5x3, n, i + 1, 2)) == theta(R5x3, n, i, 2)


@given(st.sampled_from(RINGS), seeds, st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_morphism_algebra(ring, seed, n):
    x = robj(ring, seed, n)
    y = robj(ring, seed + 1, n)
    f = rmor(x, y, seed + 2)
    g = rmor(y, y, seed + 3)
    f.assert_valid()
    assert Morphism.identity(x).then(f) == f
    assert f.then(Morphism.identity(y)) == f
    assert f.add(f.neg()).is_zero()
    assert f.then(g).components[0].rows == x.ranks[0]
    # functoriality of the shift on composites
    assert shift_morphism(f.then(g)) == shift_morphism(f).then(shift_morphism(g))
    for i in range(x.n):
        assert face_morphism(f.then(g), i) == \
            face_morphism(f, i).then(face_morphism(g, i))


def test_theta_morphism_components():
    g = TwistedMatrix(R5x3, [[x_, one], [[], x_]], 0)
    for i in range(3):
        tm = theta_morphism(R5x3, 3, i, g)
        tm.assert_valid()
        for j in range(3):
            want = g.sigma_entries(1) if j < i else g
            assert tm.components[j] == want


@given(st.sampled_from(RINGS), seeds, st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_adjunction_transports_are_mutually_inverse(ring, seed, n):
    x = robj(ring, seed, n)
    y = robj(ring, seed + 1, n + 1)
    g = rmor(face(x, 0), y, seed + 2)
    back = face0_transport_back(face0_transport(g), y)
    assert back.components == g.components
    f = rmor(x, degeneracy(y, 0), seed + 3)
    assert face0_transport(face0_transport_back(f, y)).components == f.components
    h = rmor(degeneracy(y, y.n - 2), x, seed + 4)
    assert top_transport_back(top_transport(h, y), x).components == h.components
    hh = rmor(y, face(x, x.n), seed + 5)
    assert top_transport(top_transport_back(hh, x), y).components == hh.components


def test_direct_sum_and_summand_maps():
    parts = [X2, X2b]
    s = direct_sum(parts)
    s.assert_valid()
    assert s.ranks == [3, 3]
    for t in range(2):
        inc = summand_inclusion(parts, t)
        prj = summand_projection(parts, t)
        inc.assert_valid()
        prj.assert_valid()
        assert inc.then(prj) == Morphism.identity(parts[t])
    f = direct_sum_morphism([Morphism.identity(X2), omega_morphism(X2b)])
    f.assert_valid()


def test_factorization_json_roundtrip():
    for x in (X3b, XS, theta(RQ2, 3, 1, 2)):
        assert Factorization.from_json(x.ring, x.to_json()) == x
        f = omega_morphism(x) if x.ring.commutative else Morphism.identity(x)
        back = Morphism.from_json(x, x, f.to_json())
        assert back == f

import pytest

from modfact.matrices import TwistedMatrix
from modfact.factorizations import Factorization, Morphism, theta, face, shift_power
from modfact.recollement import (recollement, face0_pair, top_pair, pr0_pair,
                                 shift_functor, face_functor)

from common import R5x2, R5x3, ring5, X2, X2b, X3, X3b, XS, mk, x_, one

R5x4 = ring5([0, 0, 0, 0, 1])
xx = [0, 0, 1]
X4 = mk(R5x4, [1, 1, 1, 1], [[[x_]], [[x_]], [[x_]], [[x_]]])

rings = {2: R5x2, 3: R5x3, 4: R5x4}
CASES = [(2, 1), (3, 1), (3, 2), (4, 2)]


def f1_object(ring, m):
    return Factorization(ring, [m], [TwistedMatrix.scalar(ring, m, ring.omega, 1)])


def objs_for(n):
    ring = rings[n]
    if n == 2:
        return ring, [X2, X2b, theta(ring, 2, 0, 1), theta(ring, 2, 1, 2)]
    if n == 3:
        return ring, [X3, X3b, theta(ring, 3, 1, 1), theta(ring, 3, 2, 2)]
    return ring, [X4, theta(ring, 4, 2, 1), theta(ring, 4, 3, 1)]


def sources_for(n, k):
    ring = rings[n]
    if k == 1:
        return [f1_object(ring, 1), f1_object(ring, 2)]
    _, ks = objs_for(k)
    picked = [x for x in ks if x.ring == ring]
    return picked or [theta(ring, k, 0, 1), theta(ring, k, 1, 2)]


def test_base_pair_triangles():
    for m, X in ((2, X2), (2, X2b), (3, X3b)):
        p = face0_pair(m)
        assert p.triangle_left(X)
        assert p.triangle_right(face(X, 0))
        t = top_pair(m)
        assert t.triangle_right(X)
        assert t.triangle_left(face(X, m))
        q = pr0_pair(m + 1)
        assert q.triangle_right(X)
        assert q.triangle_left(face(X, 0))


def test_skew_base_pair_triangles():
    ps = face0_pair(2)
    assert ps.triangle_left(XS)
    assert ps.triangle_right(face(XS, 0))
    ts = pr0_pair(3)
    assert ts.triangle_right(XS)
    assert ts.triangle_left(face(XS, 0))


@pytest.mark.parametrize("n,k", CASES)
def test_sections_and_triangles(n, k):
    rec = recollement(n, k)
    ring = rings[n]
    sources = sources_for(n, k)
    _, tops = objs_for(n)
    for x in sources:
        assert rec.section_identities(x), (n, k, x.ranks)
        for y in tops:
            assert rec.triangles(x, y), (n, k, x.ranks, y.ranks)
        f = Morphism.identity(x).scale_central(ring.omega)
        assert rec.section_identities_morphism(f)


@pytest.mark.parametrize("n,k", CASES)
def test_right_section_normal_form(n, k):
    # section_right = S^(n-1) . face_0^(n-k) . S^-(k-1)
    rec = recollement(n, k)
    sec2 = shift_functor(-(k - 1))
    for _ in range(n - k):
        sec2 = sec2.then(face_functor(0))
    sec2 = sec2.then(shift_functor(n - 1))
    for x in sources_for(n, k):
        assert sec2.obj(x) == rec.section_right.obj(x)


@pytest.mark.parametrize("n,k", CASES)
def test_kernel_objects_are_stably_zero(n, k):
    rec = recollement(n, k)
    ring = rings[n]
    m = n - k + 1
    if m == 2:
        zs = [X2, X2b] if ring == R5x2 else [mk(ring, [1, 1], [[[x_]], [[xx]]])]
    elif m == 3:
        zs = [X3] if ring == R5x3 else \
             [mk(ring, [1, 1, 1], [[[x_]], [[x_]], [[xx]]])]
    else:
        zs = [shift_power(X4, 1), X4]
    for z in zs:
        assert z.n == m
        assert rec.kernel_stably_zero(z), (n, k, z.ranks)


@pytest.mark.parametrize("n,k", CASES)
def test_inc_composites_land_in_kernel_fold(n, k):
    rec = recollement(n, k)
    _, tops = objs_for(n)
    for y in tops:
        zl = rec.inc_left.obj(y)
        zr = rec.inc_right.obj(y)
        assert zl.n == n - k + 1 and zr.n == n - k + 1
        zl.assert_valid()
        zr.assert_valid()

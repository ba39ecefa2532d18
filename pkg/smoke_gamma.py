import random

from modfact.fields import PrimeField, ExtensionField, RationalField
from modfact.rings import BaseRing
from modfact.matrices import TwistedMatrix
from modfact.factorizations import Factorization, Morphism, theta
import modfact.matrixring as mr
import modfact.homotopy as ho

rng = random.Random(11)


def mk(ring, ranks, raw):
    maps = []
    n = len(ranks)
    for i, mat in enumerate(raw):
        tw = 1 if i == n - 1 else 0
        maps.append(TwistedMatrix(ring, mat, tw, rows=ranks[i], cols=ranks[(i + 1) % n]))
    return Factorization(ring, ranks, maps).assert_valid()


R5 = BaseRing(PrimeField(5), 0, [0, 0, 0, 1])
x_ = [0, 1]
one = [1]
X3 = mk(R5, [1, 1, 1], [[[x_]], [[x_]], [[x_]]])
X3b = mk(R5, [2, 2, 2], [
    [[x_, one], [[], x_]],
    [[x_, one], [[], x_]],
    [[x_, [3]], [[], x_]],
])
# check X3b validity was asserted by mk
R52 = BaseRing(PrimeField(5), 0, [0, 0, 1])
X2 = mk(R52, [1, 1], [[[x_]], [[x_]]])

F4 = ExtensionField(2, 2)
RS = BaseRing(F4, 1, [(0, 0), (0, 0), (1, 0)])
xs = [F4.zero, F4.one]
XS = mk(RS, [2, 2], [
    [[xs, [(0, 1)]], [[], xs]],
    [[xs, [(1, 1)]], [[], xs]],
])
X1 = theta(RS, 1, 0, 2)

# roundtrip psi(phi(x)) = x
for X in [X3, X3b, X2, XS, X1, theta(R5, 3, 0, 2), theta(R5, 3, 2, 1)]:
    gm = mr.phi(X)
    assert not mr.validate_gamma(gm)
    assert mr.psi(gm) == X
print("object roundtrip ok")

# phi(theta^0) has identity composites above the diagonal
gt = mr.phi(theta(R5, 3, 0, 2))
from modfact.matrices import mat_identity
for (i, j), m in gt.maps.items():
    if i < j:
        assert m.m == mat_identity(R5, 2), (i, j)
print("theta^0 grid ok")

# phi . psi = id on grids (rebuild from read-off)
for X in [X3b, XS]:
    gm = mr.phi(X)
    assert mr.phi(mr.psi(gm)) == gm
print("grid roundtrip ok")

# morphism roundtrip
for X, Y in [(X3b, X3b), (XS, XS)]:
    for _ in range(5):
        w = ho.random_witness(rng, X, Y, 2)
        f = ho.reconstruct_from_witness(X, Y, w)
        gf = mr.phi_morphism(f)
        assert not gf.defects()
        assert mr.psi_morphism(gf) == f
print("morphism roundtrip ok")

# corruption rejection: every structure map, every entry
gm = mr.phi(X3b)
bad_count = 0
for key in sorted(gm.maps):
    mat = gm.maps[key]
    for a in range(mat.rows):
        for b in range(mat.cols):
            corrupt = {k: v.copy() for k, v in gm.maps.items()}
            entry = list(corrupt[key].m[a][b])
            entry = R5.add(entry, one)
            corrupt[key].m[a][b] = entry
            gmc = mr.GammaModule(R5, gm.ranks, corrupt)
            assert mr.validate_gamma(gmc), ("corruption missed", key, a, b)
            bad_count += 1
print("corruption rejection ok on", bad_count, "single-entry edits")

# morphism corruption: corrupt one component entry of a valid tuple
w = ho.random_witness(rng, X3b, X3b, 1)
f = ho.reconstruct_from_witness(X3b, X3b, w)
gf = mr.phi_morphism(f)
hits = 0
for t in range(gf.n):
    for a in range(gf.components[t].rows):
        for b in range(gf.components[t].cols):
            comps = [c.copy() for c in gf.components]
            comps[t].m[a][b] = R5.add(list(comps[t].m[a][b]), one)
            gmc = mr.GammaMorphism(gf.source, gf.target, comps)
            if gmc.defects():
                hits += 1
assert hits > 0
print("morphism corruption: %d of %d edits detected" % (hits, sum(
    c.rows * c.cols for c in gf.components)))

# JSON roundtrip
gm = mr.phi(XS)
data = gm.to_json()
back = mr.GammaModule.from_json(RS, data)
assert back == gm
print("gamma json ok")
print("gamma smoke ok")

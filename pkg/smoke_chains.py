import random
import time

from modfact.fields import RationalField, PrimeField, ExtensionField
from modfact.rings import BaseRing, UnsupportedRingError
from modfact.matrices import TwistedMatrix, mat_mul, invariant_factors
from modfact.factorizations import Factorization, Morphism, theta, omega_morphism
import modfact.homotopy as ho
from modfact.chains import (ChainModule, ChainMorphism, zero_chain,
                            staircase_chain, cok0, cok0_morphism,
                            chain_is_mono, lift, chain_iso,
                            chain_factors_projective, faithfulness_report)
from modfact.modules import ModulePresentation

rng = random.Random(11)


def mk(ring, ranks, raw):
    maps = []
    n = len(ranks)
    for i, mat in enumerate(raw):
        tw = 1 if i == n - 1 else 0
        maps.append(TwistedMatrix(ring, mat, tw, rows=ranks[i], cols=ranks[(i + 1) % n]))
    return Factorization(ring, ranks, maps).assert_valid()


R5x2 = BaseRing(PrimeField(5), 0, [0, 0, 1])
R5x3 = BaseRing(PrimeField(5), 0, [0, 0, 0, 1])
x_ = [0, 1]
xx = [0, 0, 1]
one = [1]
X2 = mk(R5x2, [1, 1], [[[x_]], [[x_]]])
X3 = mk(R5x3, [1, 1, 1], [[[x_]], [[x_]], [[x_]]])
X2b = mk(R5x2, [2, 2], [
    [[x_, one], [[], x_]],
    [[x_, [4]], [[], x_]],
])
X3b = mk(R5x3, [2, 2, 2], [
    [[x_, one], [[], x_]],
    [[x_, one], [[], x_]],
    [[x_, [3]], [[], x_]],
])
X3diag = mk(R5x3, [2, 2, 2], [
    [[x_, []], [[], x_]],
    [[x_, []], [[], xx]],
    [[x_, []], [[], one]],
])

from fractions import Fraction
RQ2 = BaseRing(RationalField(), 0, [Fraction(0), Fraction(0), Fraction(1)])
xq = [Fraction(0), Fraction(1)]
X2Q = mk(RQ2, [1, 1], [[[xq]], [[xq]]])

# 1. cok0 oracles
c2 = cok0(X2)
assert c2.n == 2 and len(c2.modules) == 1
assert c2.dims() == [1]
assert c2.slot_invariants() == [[x_]]
c3 = cok0(X3)
assert c3.dims() == [1, 2]
assert c3.slot_invariants() == [[x_], [xx]]
assert chain_is_mono(c3) == (True, None)
assert c3.check_torsion()
print("cok0 oracles ok")

# 2. theta chains are staircases (up to iso), theta^0 is the zero chain
for n, ring in ((2, R5x2), (3, R5x3)):
    for j in range(n):
        th = theta(ring, n, j, 2)
        cth = cok0(th)
        st = staircase_chain(ring, n, j, 2)
        assert cth.check_torsion()
        if j == 0:
            assert cth.is_zero() and st.is_zero()
        else:
            res = chain_iso(cth, st)
            assert res.found, (n, j, res)
print("theta staircases ok")

# 3. JSON roundtrip
data = c3.to_json()
back = ChainModule.from_json(R5x3, data)
assert back == c3
g = cok0_morphism(Morphism.identity(X3))
assert g.is_valid()
gj = g.to_json()
gback = ChainMorphism.from_json(c3, c3, gj)
assert gback.components == g.components
print("chain json ok")

# 4. lift/cok0 roundtrips
L2 = lift(c2)
assert L2.ranks == [1, 1]
assert chain_iso(cok0(L2), c2).found
cb = cok0(X2b)          # stably zero object: single invariant factor x^2
assert cb.slot_invariants() == [[xx]]
Lb = lift(cb)
assert Lb.ranks == [1, 1]       # minimal model has rank 1
assert chain_iso(cok0(Lb), cb).found

for X in (X3, X3b, X3diag):
    c = cok0(X)
    L = lift(c)
    assert L.is_valid()
    res = chain_iso(cok0(L), c)
    assert res.found, (X.ranks, res.reason)
print("lift roundtrips ok")

# 5. permutation-conjugated object gives an isomorphic chain
P = [[[], one], [one, []]]
Xp = mk(R5x3, [2, 2, 2], [
    mat_mul(R5x3, mat_mul(R5x3, P, X3diag.maps[0].m), P),
    mat_mul(R5x3, mat_mul(R5x3, P, X3diag.maps[1].m), P),
    mat_mul(R5x3, mat_mul(R5x3, P, X3diag.maps[2].m), P),
])
res = chain_iso(cok0(X3diag), cok0(Xp))
assert res.found
print("conjugated chain iso ok")

# 6. chain_iso definitive negatives
Xsq = mk(R5x2, [1, 1], [[[xx]], [[one]]])
res = chain_iso(cok0(X2), cok0(Xsq))
assert not res.found and res.definitive
res = chain_iso(c2, zero_chain(R5x2, 2))
assert not res.found and res.definitive
print("chain iso negatives ok")

# 7. mono failure and lift errors
bad = ChainModule(R5x2, [
    ModulePresentation(R5x2, 1, [[xx]], abar=True),
    ModulePresentation(R5x2, 1, [[xx]], abar=True),
], [[[xx]]], n=3)
ok, slot = chain_is_mono(bad)
assert not ok and slot == 1
try:
    lift(bad)
    raise SystemExit("lift accepted a non-mono chain")
except ValueError:
    pass
free = ChainModule(R5x2, [ModulePresentation(R5x2, 1, [], abar=True)], [], n=2)
try:
    lift(free)
    raise SystemExit("lift accepted a non-torsion chain")
except ValueError:
    pass
print("lift guards ok")

# 8. faithfulness: both routes agree on knowns
idm = Morphism.identity(X2)
rep = faithfulness_report(idm)
assert rep["zero_agree"] and rep["null_agree"]
assert not rep["zero_chain"] and not rep["null_homotopic"]

om = omega_morphism(X2)
rep = faithfulness_report(om)
assert rep["zero_agree"] and rep["null_agree"]
assert rep["zero_chain"] and rep["null_homotopic"]

xid = Morphism.identity(X2).scale_central(x_)
rep = faithfulness_report(xid)
assert rep["zero_agree"] and rep["null_agree"]
assert rep["zero_chain"] and rep["null_homotopic"]

for X in (X3, X2b, X3b, X2Q):
    for _ in range(5):
        w = ho.random_witness(rng, X, X, max_deg=1)
        f = ho.reconstruct_from_witness(X, X, w)
        rep = faithfulness_report(f)
        assert rep["null_homotopic"] and rep["null_agree"], (X.ranks, rep)
        assert rep["zero_agree"], (X.ranks, rep)
print("faithfulness agreement ok")

# 9. skew guard
F4 = ExtensionField(2, 2)
RS = BaseRing(F4, 1, [(0, 0), (0, 0), (1, 0)])
xs = [F4.zero, F4.one]
XSneg = mk(RS, [1, 1], [[[xs]], [[xs]]])
cS = cok0(XSneg)
assert cS.dims() == [1]          # one F_4 basis vector below the pivot x
try:
    lift(cS)
    raise SystemExit("lift accepted a skew ring")
except UnsupportedRingError:
    pass
try:
    chain_factors_projective(Morphism.identity(XSneg))
    raise SystemExit("projective factoring accepted a skew ring")
except UnsupportedRingError:
    pass
rep = faithfulness_report(Morphism.identity(XSneg))
assert rep["zero_agree"] and "null_agree" not in rep
print("skew guards ok")

# 10. timing
t0 = time.time()
for _ in range(20):
    c = cok0(X3b)
    L = lift(c)
    assert chain_iso(cok0(L), c).found
t1 = time.time()
for _ in range(20):
    w = ho.random_witness(rng, X3b, X3b, max_deg=1)
    f = ho.reconstruct_from_witness(X3b, X3b, w)
    rep = faithfulness_report(f)
    assert rep["null_agree"] and rep["zero_agree"]
t2 = time.time()
print("20 rank-2 n=3 lift roundtrips: %.2fs" % (t1 - t0))
print("20 rank-2 n=3 faithfulness reports: %.2fs" % (t2 - t1))
print("chains smoke ok")

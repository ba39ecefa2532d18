import random
import time
import os
import tempfile

from modfact.rings import BaseRing
from modfact.fields import RationalField, PrimeField
from modfact.matrices import TwistedMatrix
from modfact.factorizations import Factorization, Morphism
from modfact.homotopy import is_p_null_homotopic, factors_through_trivials, \
    reconstruct_from_witness, check_witness
from modfact.matrixring import phi, validate_gamma
from modfact import randomgen as rg
from modfact import jsonio


def poly(ring, ints):
    return [ring.field.from_int(c) for c in ints]


rings = rg.default_instances()
assert len(rings) == 10
assert sum(1 for r in rings if r.sigma_power) == 2
print("instances ok")

rng = random.Random(7)
t0 = time.time()
count = 0
for ring in rings:
    for n in (1, 2, 3, 4):
        for _ in range(4):
            x = rg.random_object(ring, rng, n, max_rank=3, max_deg=2)
            assert x.is_valid()
            count += 1
print("random objects ok (%d in %.2fs)" % (count, time.time() - t0))

# determinism
r1 = random.Random(123)
r2 = random.Random(123)
ring = rings[1]  # QQ, x^3
a = rg.random_object(ring, r1, 3)
b = rg.random_object(ring, r2, 3)
assert a.ranks == b.ranks and a.maps == b.maps
print("determinism ok")

# certified nonzero agrees with the oracle
t0 = time.time()
checked = 0
for ring in [r for r in rings if not r.sigma_power]:
    for n in (2, 3):
        for _ in range(2):
            x = rg.random_nonzero_object(ring, rng, n, max_rank=2)
            assert rg.certified_nonzero(x)
            ident = Morphism.identity(x)
            v = is_p_null_homotopic(ident)
            assert not v.null, (ring.pretty(ring.omega), n, x.ranks)
            t = factors_through_trivials(ident)
            assert not t, (ring.pretty(ring.omega), n)
            checked += 1
print("certified negatives vs oracle ok (%d in %.2fs)" % (checked, time.time() - t0))

# the coprime-split surprise: (x-1, x^2) at omega = x^2(x-1) is stably zero
qq = BaseRing(RationalField(), 0, poly_ := None) if False else rings[3]
assert rings[3].field == RationalField() and len(rings[3].omega) == 4
ring = rings[3]  # QQ, x^2(x-1)
d0 = TwistedMatrix(ring, [[poly(ring, [-1, 1])]], 0)
d1 = TwistedMatrix(ring, [[poly(ring, [0, 0, 1])]], 1)
xz = Factorization(ring, [1, 1], [d0, d1])
xz.assert_valid()
assert not rg.certified_nonzero(xz)
assert is_p_null_homotopic(Morphism.identity(xz)).null
print("coprime split stably zero ok")

# positives reconstruct exactly
for ring in rings:
    x = rg.random_object(ring, rng, 3, max_rank=2)
    y = rg.random_object(ring, rng, 3, max_rank=2)
    f, w = rg.random_null_morphism(rng, x, y)
    f.assert_valid()
    assert check_witness(x, y, w)
    v = is_p_null_homotopic(f)
    assert v.null
    assert reconstruct_from_witness(x, y, v.witness) == f
print("null positives ok")

# mixed morphisms valid, both verdicts occur over commutative rings
pos = neg = 0
ring = rings[5]  # F5, x^3
homcache = {}
objs = [rg.random_object(ring, rng, 2, max_rank=2) for _ in range(4)]
objs += [rg.random_nonzero_object(ring, rng, 2, max_rank=2) for _ in range(2)]
for _ in range(60):
    x = rng.choice(objs)
    y = rng.choice(objs)
    key = (id(x), id(y))
    if key not in homcache and x is not y:
        homcache[key] = None
    f = rg.random_morphism(rng, x, y, hom=homcache.get(key))
    f.assert_valid()
    if is_p_null_homotopic(f).null:
        pos += 1
    else:
        neg += 1
print("mixed morphisms ok (null=%d nonnull=%d)" % (pos, neg))
assert pos and neg

# corruption is rejected
for ring in (rings[0], rings[8]):
    x = rg.random_object(ring, rng, 3, max_rank=2)
    gm = phi(x)
    assert not validate_gamma(gm)
    bad = rg.corrupt_gamma(gm, rng)
    assert validate_gamma(bad)
print("gamma corruption rejected ok")

# jsonio roundtrips
tmp = tempfile.mkdtemp()
ring = rings[2]  # QQ, x^4
x = rg.random_object(ring, rng, 3, max_rank=2)
jsonio.write_json(ring.to_json(), os.path.join(tmp, "ring.json"))
jsonio.write_json(x.to_json(), os.path.join(tmp, "x.json"))
ring2 = jsonio.load_ring(os.path.join(tmp, "ring.json"))
x2 = jsonio.load_factorization(os.path.join(tmp, "x.json"), ring2)
assert x2.ranks == x.ranks and x2.maps == x.maps

f, w = rg.random_null_morphism(rng, x, x)
data = f.to_json()
data["source"] = x.to_json()
data["target"] = x.to_json()
data["ring"] = ring.to_json()
jsonio.write_json(data, os.path.join(tmp, "f.json"))
f2 = jsonio.load_morphism(os.path.join(tmp, "f.json"))
assert f2.components == f.components

from modfact.chains import cok0
c = cok0(x)
jsonio.write_json(c.to_json(), os.path.join(tmp, "c.json"))
c2 = jsonio.load_chain(os.path.join(tmp, "c.json"), ring2)
assert c2.dims() == c.dims()

gm = phi(x)
jsonio.write_json(gm.to_json(), os.path.join(tmp, "g.json"))
g2 = jsonio.load_gamma(os.path.join(tmp, "g.json"), ring2)
assert g2 == gm

kind, obj = jsonio.load_any(os.path.join(tmp, "x.json"), ring2)
assert kind == "factorization"
kind, obj = jsonio.load_any(os.path.join(tmp, "c.json"), ring2)
assert kind == "chain"
kind, obj = jsonio.load_any(os.path.join(tmp, "g.json"), ring2)
assert kind == "gamma"

try:
    jsonio.load_ring(os.path.join(tmp, "x.json"))
    raise SystemExit("should have rejected")
except jsonio.InputError:
    pass
try:
    jsonio.load_factorization(os.path.join(tmp, "missing.json"), ring2)
    raise SystemExit("should have rejected")
except jsonio.InputError:
    pass
print("jsonio roundtrips ok")

print("random smoke ok")

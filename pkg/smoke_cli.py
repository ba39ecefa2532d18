import json
import os
import random
import subprocess
import sys

sys.path.insert(0, "src")
from modfact import jsonio
from modfact.factorizations import Factorization, theta
from modfact.matrices import TwistedMatrix
from modfact.matrixring import phi
from modfact.chains import cok0
from modfact.randomgen import (default_instances, random_object,
                               random_morphism, random_nonzero_object,
                               corrupt_gamma)

TMP = "/tmp/cli_smoke"
os.makedirs(TMP, exist_ok=True)


def run(*argv):
    proc = subprocess.run([sys.executable, "-m", "modfact.cli"] + list(argv),
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def wj(name, data):
    path = os.path.join(TMP, name)
    jsonio.write_json(data, path)
    return path


inst = default_instances()
q2 = inst[0]
f5m = [r for r in inst if r.commutative and r.omega != r.x_power(r.omega_deg)][0]
f4 = [r for r in inst if not r.commutative][0]
rng = random.Random(7)

ringp = wj("ring.json", q2.to_json())
skewp = wj("skew.json", f4.to_json())

# validate: factorization, morphism, gamma, chain
x = random_object(q2, rng, 3)
y = random_object(q2, rng, 3)
f = random_morphism(rng, x, y)
xp = wj("x.json", dict(x.to_json(), ring=q2.to_json()))
fd = f.to_json()
fd["source"] = x.to_json()
fd["target"] = y.to_json()
fd["ring"] = q2.to_json()
fp = wj("f.json", fd)
gp = wj("g.json", dict(phi(x).to_json(), ring=q2.to_json()))
cp = wj("c.json", dict(cok0(x).to_json(), ring=q2.to_json()))

code, out, err = run("validate", xp, fp, gp, cp)
rep = json.loads(out)
assert code == 0 and rep["passed"], (code, err)
print("validate ok:", [e["kind"] for e in rep["results"]])

# invalid object -> exit 2
badx = x.to_json()
badx["maps"][0]["entries"][0][0] = ["1", "1"]
badp = wj("bad.json", dict(badx, ring=q2.to_json()))
code, out, err = run("validate", badp)
assert code == 2 and not json.loads(out)["passed"], (code, out, err)
print("validate rejects exit", code)

# garbage file -> exit 3
with open(os.path.join(TMP, "junk.json"), "w") as fh:
    fh.write("{nope")
code, out, err = run("validate", os.path.join(TMP, "junk.json"))
assert code == 3, (code, err)
print("parse error exit", code)

# functor verbs
for name, extra in [("shift", []), ("shift-inverse", []),
                    ("shift-power", ["--a", "2"]), ("face", ["--i", "1"]),
                    ("degeneracy", ["--i", "0"])]:
    code, out, err = run("functor", name, xp, *extra)
    assert code == 0, (name, code, err)
    assert "result" in json.loads(out)
code, out, err = run("functor", "face", fp, "--i", "0")
assert code == 0, (code, err)
print("functor verbs ok")
code, out, err = run("functor", "face", xp)
assert code == 3, (code, err)
print("missing --i exit", code)

# homotopy-check: null positive and certified negative
fn, w = None, None
from modfact.randomgen import random_null_morphism
fnull, _ = random_null_morphism(rng, x, y)
fd = fnull.to_json()
fd.update(source=x.to_json(), target=y.to_json(), ring=q2.to_json())
code, out, err = run("homotopy-check", wj("fnull.json", fd))
rep = json.loads(out)
assert code == 0 and rep["verdict"]["null_homotopic"] and rep["witness_reconstructs"]
print("homotopy-check positive ok")

z = random_nonzero_object(q2, rng, 3)
from modfact.factorizations import Morphism
idz = Morphism.identity(z)
fd = idz.to_json()
fd.update(source=z.to_json(), target=z.to_json(), ring=q2.to_json())
code, out, err = run("homotopy-check", wj("idz.json", fd))
rep = json.loads(out)
assert code == 0 and not rep["verdict"]["null_homotopic"] and not rep["verdict"]["bounded"]
print("homotopy-check negative ok")

# skew negative -> bounded verdict exit 5 (x, x) over omega = x^2
f4b = [r for r in default_instances() if not r.commutative and r.omega_deg == 2][0]
zs = Factorization(f4b, [1, 1], [TwistedMatrix(f4b, [[f4b.x_power(1)]], 0),
                                 TwistedMatrix(f4b, [[f4b.x_power(1)]], 1)])
ids = Morphism.identity(zs)
fd = ids.to_json()
fd.update(source=zs.to_json(), target=zs.to_json(), ring=f4b.to_json())
code, out, err = run("homotopy-check", wj("ids.json", fd))
rep = json.loads(out)
assert code == 5 and rep["verdict"]["bounded"], (code, out)
print("bounded verdict exit", code)

# stable-hom, stably-zero
zp = wj("z.json", dict(z.to_json(), ring=q2.to_json()))
code, out, err = run("stable-hom", zp, zp)
assert code == 0 and json.loads(out)["report"]["hom_rank"] >= 1, (code, err)
print("stable-hom ok")
code, out, err = run("stable-hom", wj("zs.json", dict(zs.to_json(), ring=f4.to_json())),
                     wj("zs2.json", dict(zs.to_json(), ring=f4.to_json())))
assert code == 4, (code, err)
print("stable-hom skew exit", code)
code, out, err = run("stably-zero", zp)
assert code == 0 and not json.loads(out)["verdict"]["null_homotopic"]
t0 = theta(q2, 3, 0, 2)
code, out, err = run("stably-zero", wj("t0.json", dict(t0.to_json(), ring=q2.to_json())))
assert code == 0 and json.loads(out)["verdict"]["null_homotopic"]
print("stably-zero ok")

# cok0 / lift / chain-iso roundtrip
code, out, err = run("cok0", zp)
rep = json.loads(out)
assert code == 0
cpath = wj("zc.json", dict(rep["chain"], ring=q2.to_json()))
code, out, err = run("lift", cpath)
assert code == 0, (code, err)
lx = json.loads(out)["factorization"]
code, out, err = run("cok0", wj("lx.json", dict(lx, ring=q2.to_json())))
assert code == 0
c2path = wj("zc2.json", dict(json.loads(out)["chain"], ring=q2.to_json()))
code, out, err = run("chain-iso", cpath, c2path)
assert code == 0 and json.loads(out)["result"]["isomorphic"], (code, out, err)
print("cok0/lift/chain-iso ok")

# chain-iso definitive no -> exit 2
other = cok0(theta(q2, 3, 1, 1))
code, out, err = run("chain-iso", cpath,
                     wj("other.json", dict(other.to_json(), ring=q2.to_json())))
assert code == 2, (code, out, err)
print("chain-iso mismatch exit", code)

# phi / psi roundtrip and corruption
code, out, err = run("phi", xp)
assert code == 0
gout = json.loads(out)["gamma"]
code, out, err = run("psi", wj("gx.json", dict(gout, ring=q2.to_json())))
assert code == 0
assert Factorization.from_json(q2, json.loads(out)["factorization"]) == x
bad = corrupt_gamma(phi(x), rng)
code, out, err = run("psi", wj("gbad.json", dict(bad.to_json(), ring=q2.to_json())))
assert code == 2, (code, err)
print("phi/psi ok, corruption exit", code)

# recollement
code, out, err = run("recollement", "3", "1", "--ring", ringp, "--cases", "4")
rep = json.loads(out)
assert code == 0 and rep["passed"], (code, out, err)
print("recollement ok")
code, out, err = run("recollement", "3", "1", "--ring", skewp, "--cases", "3")
assert code in (0, 5), (code, err)
print("recollement skew exit", code)
code, out, err = run("recollement", "1", "1", "--ring", ringp)
assert code == 3, (code, err)
print("recollement bad (n,k) exit", code)

# laws determinism and suite filter
code, out, err = run("laws", "--ring", ringp, "--seed", "11", "--cases", "3",
                     "--json", os.path.join(TMP, "laws1.json"))
assert code == 0, (code, err)
code, out, err = run("laws", "--ring", ringp, "--seed", "11", "--cases", "3",
                     "--json", os.path.join(TMP, "laws2.json"))
assert code == 0
b1 = open(os.path.join(TMP, "laws1.json"), "rb").read()
b2 = open(os.path.join(TMP, "laws2.json"), "rb").read()
assert b1 == b2 and len(b1) > 100
print("laws byte-identical reports ok")
code, out, err = run("laws", "--ring", ringp, "--cases", "2",
                     "--suite", "functor-laws,adjunction")
rep = json.loads(out)
assert code == 0 and len(rep["suites"]) == 2
code, out, err = run("laws", "--suite", "nope", "--ring", ringp)
assert code == 3, (code, err)
print("laws suite filter ok")

# default ring path (no --ring): laws quick run
code, out, err = run("laws", "--cases", "2", "--n", "2")
assert code == 0, (code, err)
print("laws default ring ok")

print("ALL CLI SMOKE OK")

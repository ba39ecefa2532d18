import json
import time

from modfact.laws import Scenario, run_suites
from modfact.randomgen import default_instances


def show(tag, ring, seed=0, cases=6, folds=(1, 2, 3, 4)):
    sc = Scenario(ring, seed=seed, folds=folds, max_rank=3, max_deg=2,
                  cases=cases)
    t0 = time.time()
    rep = run_suites(sc)
    dt = time.time() - t0
    print("== %s  (%.2fs)  passed=%s" % (tag, dt, rep["passed"]))
    for s in rep["suites"]:
        line = "  %-20s cases=%-4d" % (s["name"], s["cases"])
        if s.get("skipped"):
            line += " SKIP: %s" % s["skipped"]
        elif s["failures"]:
            line += " FAIL: %s" % s["failures"][:3]
        print(line)
    assert rep["passed"], tag
    for s in rep["suites"]:
        assert s.get("skipped") or s["cases"] > 0, (tag, s["name"])
    return rep


inst = default_instances()
by = {(r.field.to_json()["kind"], r.omega_deg, r.sigma_power): r for r in inst}
q2 = inst[0]                                   # rationals, x^2
f5 = [r for r in inst if not r.commutative or True][5]
f5 = [r for r in inst[4:8] if r.omega_deg == 3][0]     # F5, x^3
qm = [r for r in inst[:4] if r.omega_deg == 3 and r.omega != r.x_power(3)][0]
f4 = [r for r in inst if not r.commutative and r.omega_deg == 2][0]

r1 = show("F5 x^3", f5)
show("Q x^2", q2)
show("Q x^2(x-1)", qm, cases=5)
show("F4 skew x^2", f4, cases=5)

r1b = show("F5 x^3 again", f5)
assert json.dumps(r1, sort_keys=True) == json.dumps(r1b, sort_keys=True)
print("determinism ok")

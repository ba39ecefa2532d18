"""The matrix-grid correspondence and the command line.

A factorization is equivalently a module over a triangular matrix ring:
a grid of structure maps indexed by slot pairs. phi and psi convert in
both directions, validation pinpoints broken grid entries, and the same
operations are reachable from the shell through the modfact command.
"""

import json
import random
import subprocess
import sys
import tempfile

from modfact.fields import PrimeField
from modfact.rings import BaseRing
from modfact import jsonio
import modfact.matrixring as mr
from modfact.randomgen import random_object, corrupt_gamma

ring = BaseRing(PrimeField(5), 0, [0, 0, 0, 1])
rng = random.Random(5)

# 1. phi and psi are mutually inverse, bit for bit
x = random_object(ring, rng, 3, max_rank=2)
gm = mr.phi(x)
print("grid validates:", not mr.validate_gamma(gm))
print("psi(phi(x)) == x:", mr.psi(gm) == x)
print("phi(psi(grid)) == grid:", mr.phi(mr.psi(gm)) == gm)

# 2. corruption of any structure map is caught
bad = corrupt_gamma(gm, rng)
print("corrupted grid defects:", len(mr.validate_gamma(bad)))

# 3. the same roundtrip through the CLI
with tempfile.TemporaryDirectory() as tmp:
    xpath = tmp + "/x.json"
    jsonio.write_json(dict(x.to_json(), ring=ring.to_json()), xpath)
    out = subprocess.run([sys.executable, "-m", "modfact.cli", "phi", xpath],
                         capture_output=True, text=True)
    print("cli phi exit:", out.returncode)
    gpath = tmp + "/g.json"
    jsonio.write_json(dict(json.loads(out.stdout)["gamma"],
                           ring=ring.to_json()), gpath)
    out = subprocess.run([sys.executable, "-m", "modfact.cli", "psi", gpath],
                         capture_output=True, text=True)
    back = json.loads(out.stdout)["factorization"]
    from modfact.factorizations import Factorization
    print("cli psi returns the object:",
          Factorization.from_json(ring, back) == x)

# 4. the laws runner exercises every suite on a chosen ring and seed;
#    reports are byte-identical for a fixed seed
out = subprocess.run([sys.executable, "-m", "modfact.cli", "laws",
                      "--cases", "2", "--n", "2", "--suite",
                      "functor-laws,omega-division"],
                     capture_output=True, text=True)
rep = json.loads(out.stdout)
print("laws run passed:", rep["passed"],
      "suites:", [s["name"] for s in rep["suites"]])

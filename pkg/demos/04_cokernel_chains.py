"""From factorizations to chains of quotient modules and back.

The slot cokernels of a factorization assemble into a chain of modules
over the quotient ring; the chain determines the object up to stable
equivalence, and a lift procedure rebuilds a factorization from any
admissible chain. This script walks the roundtrip and the faithfulness
of the correspondence on morphisms.
"""

import random

from modfact.fields import PrimeField
from modfact.rings import BaseRing
from modfact.factorizations import Morphism, omega_morphism
from modfact.chains import cok0, lift, chain_iso, faithfulness_report
from modfact.randomgen import random_object, random_null_morphism

ring = BaseRing(PrimeField(5), 0, [0, 0, 0, 1])  # omega = x^3
rng = random.Random(3)

# 1. the chain of a random 3-fold object
x = random_object(ring, rng, 3, max_rank=2, max_deg=2)
c = cok0(x)
print("object ranks:", x.ranks)
print("chain dims over F_5:", c.dims())
print("slot invariant factors:",
      [[ring.pretty(f) for f in slot] for slot in c.slot_invariants()])

# 2. lifting the chain gives a factorization with the same chain
L = lift(c)
print("lifted ranks:", L.ranks, "valid:", L.is_valid())
res = chain_iso(cok0(L), c)
print("chains isomorphic:", res.found)

# 3. morphisms transport: zero and null verdicts agree on both sides
f, _ = random_null_morphism(rng, x, x, max_deg=1)
rep = faithfulness_report(f)
print("null morphism report:", rep)

# 4. omega times the identity dies in every quotient, and is null
rep = faithfulness_report(omega_morphism(x))
print("omega*id zero in chains:", rep["zero_chain"],
      " null homotopic:", rep["null_homotopic"])

# 5. the identity of a nontrivial object does neither
rep = faithfulness_report(Morphism.identity(x))
print("id zero in chains:", rep["zero_chain"],
      " null homotopic:", rep["null_homotopic"])

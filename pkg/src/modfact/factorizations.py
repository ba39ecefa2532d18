"""n-fold factorizations of omega and the simplicial functors between them.

An object is a cycle of n free modules A^{r_0}, ..., A^{r_{n-1}} with maps
d^i: slot i -> slot i+1 (twist 0) and a last map d^{n-1} into the twisted
first module (twist 1), such that every rotated n-fold composite equals
omega * I. Morphisms are twist-0 component tuples making all squares
commute, the last one up to the induced automorphism.

The functors here: shift (both directions), the trivial objects theta^i,
face insertions, degeneracy fusions, and direct sums, each with its
morphism action, plus the two adjunction transports whose unit/counit
data is an explicit matrix formula.
"""

from .matrices import TwistedMatrix, twisted_compose, mat_mul


class Factorization:
    def __init__(self, ring, ranks, maps):
        self.ring = ring
        self.n = len(ranks)
        if self.n == 0:
            raise ValueError("a factorization needs at least one slot")
        if len(maps) != self.n:
            raise ValueError("expected %d maps, got %d" % (self.n, len(maps)))
        self.ranks = list(ranks)
        self.maps = list(maps)
        for i, d in enumerate(self.maps):
            want_twist = 1 if i == self.n - 1 else 0
            tgt = self.ranks[(i + 1) % self.n]
            if d.rows != self.ranks[i] or d.cols != tgt or d.twist != want_twist:
                raise ValueError(
                    "map %d must be %dx%d at twist %d, got %dx%d at twist %d"
                    % (i, self.ranks[i], tgt, want_twist, d.rows, d.cols, d.twist))
            if d.ring != ring:
                raise ValueError("map %d lives over a different ring" % i)
        self._ranges = {}

    def __eq__(self, other):
        return (isinstance(other, Factorization) and self.ring == other.ring
                and self.ranks == other.ranks and self.maps == other.maps)

    def __repr__(self):
        return "<%d-fold ranks=%s>" % (self.n, self.ranks)

    def compose_range(self, i, j):
        """Composite of d^i ... d^j; empty ranges give the identity of slot i."""
        if not (0 <= i <= self.n and -1 <= j <= self.n - 1):
            raise ValueError("range (%d, %d) out of bounds" % (i, j))
        # maps are never mutated after construction, so memoizing is safe
        cached = self._ranges.get((i, j))
        if cached is not None:
            return cached
        if j < i:
            out = TwistedMatrix.identity(self.ring, self.ranks[i % self.n], 0)
        else:
            out = twisted_compose(*self.maps[i:j + 1])
        self._ranges[(i, j)] = out
        return out

    def rotation_defects(self):
        """Indices i where the rotated composite through slot i is not omega*I."""
        bad = []
        for i in range(self.n):
            comp = self.compose_range(i, self.n - 1)
            if i > 0:
                comp = comp.then(self.compose_range(0, i - 1))
            if comp != TwistedMatrix.omega_identity(self.ring, self.ranks[i]):
                bad.append(i)
        return bad

    def is_valid(self):
        return not self.rotation_defects()

    def assert_valid(self):
        bad = self.rotation_defects()
        if bad:
            raise ValueError("rotation identity fails at slots %s" % bad)
        return self

    def omega_endo(self, i):
        return TwistedMatrix.omega_identity(self.ring, self.ranks[i])

    def sigma_twist(self, power=1):
        """The twisted object: every map hit entrywise by sigma^power."""
        return Factorization(self.ring, self.ranks,
                             [d.sigma_entries(power) for d in self.maps])

    def to_json(self):
        return {"n": self.n, "ranks": list(self.ranks),
                "maps": [d.to_json() for d in self.maps]}

    @staticmethod
    def from_json(ring, data):
        for key in ("n", "ranks", "maps"):
            if key not in data:
                raise ValueError("factorization object is missing %r" % key)
        ranks = [int(r) for r in data["ranks"]]
        if int(data["n"]) != len(ranks):
            raise ValueError("declared fold count does not match the rank list")
        maps = [TwistedMatrix.from_json(ring, d) for d in data["maps"]]
        return Factorization(ring, ranks, maps)


class Morphism:
    def __init__(self, source, target, components):
        if source.ring != target.ring or source.n != target.n:
            raise ValueError("morphism endpoints must share ring and fold count")
        self.source = source
        self.target = target
        self.ring = source.ring
        self.n = source.n
        self.components = list(components)
        if len(self.components) != self.n:
            raise ValueError("expected %d components" % self.n)
        for i, f in enumerate(self.components):
            if (f.rows, f.cols, f.twist) != (source.ranks[i], target.ranks[i], 0):
                raise ValueError(
                    "component %d must be %dx%d at twist 0, got %dx%d at twist %d"
                    % (i, source.ranks[i], target.ranks[i], f.rows, f.cols, f.twist))

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.source == other.source
                and self.target == other.target and self.components == other.components)

    def square_defects(self):
        bad = []
        for i in range(self.n):
            lhs = self.source.maps[i].then(self.components[(i + 1) % self.n])
            rhs = self.components[i].then(self.target.maps[i])
            if lhs != rhs:
                bad.append(i)
        return bad

    def is_valid(self):
        return not self.square_defects()

    def assert_valid(self):
        bad = self.square_defects()
        if bad:
            raise ValueError("morphism squares fail at slots %s" % bad)
        return self

    def then(self, other):
        if self.target != other.source:
            raise ValueError("composite endpoints do not match")
        comps = [f.then(g) for f, g in zip(self.components, other.components)]
        return Morphism(self.source, other.target, comps)

    def add(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("sum endpoints do not match")
        return Morphism(self.source, self.target,
                        [f.add(g) for f, g in zip(self.components, other.components)])

    def sub(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("difference endpoints do not match")
        return Morphism(self.source, self.target,
                        [f.sub(g) for f, g in zip(self.components, other.components)])

    def neg(self):
        return Morphism(self.source, self.target, [f.neg() for f in self.components])

    def is_zero(self):
        return all(f.is_zero() for f in self.components)

    @staticmethod
    def identity(x):
        return Morphism(x, x, [TwistedMatrix.identity(x.ring, r, 0) for r in x.ranks])

    @staticmethod
    def zero(x, y):
        return Morphism(x, y, [TwistedMatrix.zero(x.ring, a, b, 0)
                               for a, b in zip(x.ranks, y.ranks)])

    def scale_central(self, poly):
        """poly * f, valid as a morphism only when poly is central (commutative case)."""
        if not self.ring.commutative:
            raise ValueError("scalar scaling needs a central scalar")
        return Morphism(self.source, self.target,
                        [f.scale_left(poly) for f in self.components])

    def to_json(self):
        return {"components": [f.to_json() for f in self.components]}

    @staticmethod
    def from_json(source, target, data):
        if "components" not in data:
            raise ValueError("morphism object is missing 'components'")
        comps = [TwistedMatrix.from_json(source.ring, d) for d in data["components"]]
        return Morphism(source, target, comps)


def omega_morphism(x):
    """omega * identity; an endomorphism only in the commutative case."""
    return Morphism.identity(x).scale_central(x.ring.omega)


# -- trivial objects --

def theta(ring, n, i, m=1):
    """The trivial factorization with omega concentrated before slot i.

    theta^0(A^m) = (I, ..., I, omega*I @1); for i >= 1 the omega sits at
    slot i-1 and the wrap-around map is the identity.
    """
    if not (0 <= i <= n - 1):
        raise ValueError("theta index %d out of range for fold %d" % (i, n))
    maps = []
    for j in range(n - 1):
        if i >= 1 and j == i - 1:
            maps.append(TwistedMatrix.scalar(ring, m, ring.omega, 0))
        else:
            maps.append(TwistedMatrix.identity(ring, m, 0))
    if i == 0:
        maps.append(TwistedMatrix.omega_identity(ring, m))
    else:
        maps.append(TwistedMatrix.identity(ring, m, 1))
    return Factorization(ring, [m] * n, maps)


def theta_morphism(ring, n, i, g):
    """Component action of theta^i on a module map g (twist-0 matrix)."""
    if g.twist != 0:
        raise ValueError("theta acts on twist-0 module maps")
    src = theta(ring, n, i, g.rows)
    tgt = theta(ring, n, i, g.cols)
    comps = [g.sigma_entries(1) for _ in range(i)] + [g.copy() for _ in range(n - i)]
    return Morphism(src, tgt, comps)


# -- shift --

def shift(x):
    ring = x.ring
    n = x.n
    if n == 1:
        return Factorization(ring, list(x.ranks), [x.maps[0].sigma_entries(-1)])
    ranks = x.ranks[1:] + [x.ranks[0]]
    maps = [d.copy() for d in x.maps[1:n - 1]]
    maps.append(x.maps[n - 1].sigma_entries(-1).with_twist(0))
    maps.append(x.maps[0].with_twist(1))
    return Factorization(ring, ranks, maps)


def shift_morphism(f):
    n = f.n
    if n == 1:
        comps = [f.components[0].sigma_entries(-1)]
    else:
        comps = [c.copy() for c in f.components[1:]] + [f.components[0].sigma_entries(-1)]
    return Morphism(shift(f.source), shift(f.target), comps)


def shift_inverse(y):
    ring = y.ring
    n = y.n
    if n == 1:
        return Factorization(ring, list(y.ranks), [y.maps[0].sigma_entries(1)])
    ranks = [y.ranks[-1]] + y.ranks[:-1]
    maps = [y.maps[n - 1].with_twist(0)]
    maps.extend(d.copy() for d in y.maps[:n - 2])
    maps.append(y.maps[n - 2].sigma_entries(1).with_twist(1))
    return Factorization(ring, ranks, maps)


def shift_inverse_morphism(f):
    n = f.n
    if n == 1:
        comps = [f.components[0].sigma_entries(1)]
    else:
        comps = [f.components[n - 1].sigma_entries(1)] + [c.copy() for c in f.components[:n - 1]]
    return Morphism(shift_inverse(f.source), shift_inverse(f.target), comps)


def shift_power(x, a):
    out = x
    if a >= 0:
        for _ in range(a):
            out = shift(out)
    else:
        for _ in range(-a):
            out = shift_inverse(out)
    return out


def shift_power_morphism(f, a):
    out = f
    if a >= 0:
        for _ in range(a):
            out = shift_morphism(out)
    else:
        for _ in range(-a):
            out = shift_inverse_morphism(out)
    return out


# -- face and degeneracy --

def face(x, i):
    """Insert a slot at position i (0 <= i <= n), raising the fold count by one."""
    ring = x.ring
    n = x.n
    if not (0 <= i <= n):
        raise ValueError("face index %d out of range for fold %d" % (i, n))
    if i <= n - 1:
        ranks = x.ranks[:i + 1] + [x.ranks[i]] + x.ranks[i + 1:]
        maps = ([d.copy() for d in x.maps[:i]]
                + [TwistedMatrix.identity(ring, x.ranks[i], 0)]
                + [d.copy() for d in x.maps[i:]])
        return Factorization(ring, ranks, maps)
    ranks = x.ranks + [x.ranks[0]]
    maps = [d.copy() for d in x.maps[:n - 1]]
    maps.append(x.maps[n - 1].sigma_entries(-1).with_twist(0))
    maps.append(TwistedMatrix.identity(ring, x.ranks[0], 1))
    return Factorization(ring, ranks, maps)


def face_morphism(f, i):
    n = f.n
    if not (0 <= i <= n):
        raise ValueError("face index %d out of range for fold %d" % (i, n))
    if i <= n - 1:
        comps = (f.components[:i + 1] + [f.components[i].copy()] + f.components[i + 1:])
    else:
        comps = f.components + [f.components[0].sigma_entries(-1)]
    return Morphism(face(f.source, i), face(f.target, i), comps)


def degeneracy(x, i):
    """Fuse slots i and i+1 (indices mod the fold count), lowering the fold by one."""
    n = x.n
    if n < 2:
        raise ValueError("degeneracy needs fold count at least 2")
    if not (0 <= i <= n - 1):
        raise ValueError("degeneracy index %d out of range for fold %d" % (i, n))
    if i <= n - 2:
        ranks = x.ranks[:i + 1] + x.ranks[i + 2:]
        maps = ([d.copy() for d in x.maps[:i]]
                + [x.maps[i].then(x.maps[i + 1])]
                + [d.copy() for d in x.maps[i + 2:]])
        return Factorization(x.ring, ranks, maps)
    return shift_inverse(degeneracy(shift(x), n - 2))


def degeneracy_morphism(f, i):
    n = f.n
    if n < 2:
        raise ValueError("degeneracy needs fold count at least 2")
    if not (0 <= i <= n - 1):
        raise ValueError("degeneracy index %d out of range for fold %d" % (i, n))
    if i <= n - 2:
        comps = f.components[:i + 1] + f.components[i + 2:]
        return Morphism(degeneracy(f.source, i), degeneracy(f.target, i), comps)
    return shift_inverse_morphism(degeneracy_morphism(shift_morphism(f), n - 2))


# -- direct sums --

def direct_sum(parts):
    if not parts:
        raise ValueError("empty direct sum")
    ring = parts[0].ring
    n = parts[0].n
    for p in parts:
        if p.ring != ring or p.n != n:
            raise ValueError("direct sum needs matching ring and fold count")
    ranks = [sum(p.ranks[i] for p in parts) for i in range(n)]
    maps = [TwistedMatrix.direct_sum(ring, [p.maps[i] for p in parts])
            for i in range(n)]
    return Factorization(ring, ranks, maps)


def direct_sum_morphism(fs):
    src = direct_sum([f.source for f in fs])
    tgt = direct_sum([f.target for f in fs])
    n = src.n
    ring = src.ring
    comps = [TwistedMatrix.direct_sum(ring, [f.components[i] for f in fs])
             for i in range(n)]
    return Morphism(src, tgt, comps)


def summand_inclusion(parts, t):
    """The inclusion of parts[t] into the direct sum."""
    ring = parts[0].ring
    total = direct_sum(parts)
    comps = []
    for i in range(total.n):
        before = sum(p.ranks[i] for p in parts[:t])
        block = TwistedMatrix.zero(ring, parts[t].ranks[i], total.ranks[i], 0)
        m = block.m
        for a in range(parts[t].ranks[i]):
            m[a][before + a] = list(ring.one)
        comps.append(TwistedMatrix(ring, m, 0, parts[t].ranks[i], total.ranks[i]))
    return Morphism(parts[t], total, comps)


def summand_projection(parts, t):
    ring = parts[0].ring
    total = direct_sum(parts)
    comps = []
    for i in range(total.n):
        before = sum(p.ranks[i] for p in parts[:t])
        block = TwistedMatrix.zero(ring, total.ranks[i], parts[t].ranks[i], 0)
        m = block.m
        for a in range(parts[t].ranks[i]):
            m[before + a][a] = list(ring.one)
        comps.append(TwistedMatrix(ring, m, 0, total.ranks[i], parts[t].ranks[i]))
    return Morphism(total, parts[t], comps)


# -- the two explicit adjunctions --
#
# (face at 0) left adjoint to (degeneracy at 0):
#   Hom(face_0 X, Y) = Hom(X, degeneracy_0 Y), unit the identity,
#   counit (I, N_0, I, ..., I).
# (degeneracy at top) left adjoint to (face at top):
#   Hom(degeneracy_{n-1} Y, X) = Hom(Y, face_n X), counit the identity,
#   unit (I, ..., I, sigma^{-1}(N_last)).

def face0_unit(x):
    return Morphism(x, degeneracy(face(x, 0), 0), [c.copy() for c in
                                                   Morphism.identity(x).components])


def face0_counit(y):
    """face_0(degeneracy_0 Y) -> Y."""
    ring = y.ring
    src = face(degeneracy(y, 0), 0)
    comps = [TwistedMatrix.identity(ring, y.ranks[0], 0),
             y.maps[0].copy()]
    comps += [TwistedMatrix.identity(ring, r, 0) for r in y.ranks[2:]]
    return Morphism(src, y, comps)


def face0_transport(g):
    """Adjunct of g: face_0 X -> Y across (face_0, degeneracy_0)."""
    x_src = degeneracy(g.source, 0)
    comps = [g.components[0].copy()] + [c.copy() for c in g.components[2:]]
    return Morphism(x_src, degeneracy(g.target, 0), comps)


def face0_transport_back(f, y):
    """Adjunct of f: X -> degeneracy_0 Y as a morphism face_0 X -> Y."""
    x = f.source
    comps = [f.components[0].copy(), f.components[0].then(y.maps[0])]
    comps += [c.copy() for c in f.components[1:]]
    return Morphism(face(x, 0), y, comps)


def top_unit(y):
    """Y -> face_top(degeneracy_top Y) for the top pair (fold of Y is n+1)."""
    ring = y.ring
    n = y.n - 1
    tgt = face(degeneracy(y, n - 1), n)
    comps = [TwistedMatrix.identity(ring, r, 0) for r in y.ranks[:n]]
    comps.append(TwistedMatrix(ring, y.maps[n].sigma_entries(-1).m, 0,
                               y.ranks[n], y.ranks[0]))
    return Morphism(y, tgt, comps)


def top_counit(x):
    src = degeneracy(face(x, x.n), x.n - 1)
    return Morphism(src, x, Morphism.identity(x).components)


def top_transport(f, y):
    """Adjunct of f: degeneracy_top Y -> X as a morphism Y -> face_top X."""
    x = f.target
    n = x.n
    last = mat_mul(y.ring, y.maps[n].m, f.components[0].m)
    gl = TwistedMatrix(y.ring, last, 0, y.ranks[n], x.ranks[0]).sigma_entries(-1)
    comps = [c.copy() for c in f.components] + [gl]
    return Morphism(y, face(x, n), comps)


def top_transport_back(g, x):
    """Adjunct of g: Y -> face_top X by dropping the last component."""
    y = g.source
    n = y.n - 1
    if face(x, n) != g.target:
        raise ValueError("target is not the top face of the given object")
    comps = [c.copy() for c in g.components[:n]]
    return Morphism(degeneracy(y, n - 1), x, comps)

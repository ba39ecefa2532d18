"""Null-homotopy witnesses, the trivial-factorization test, and stable hom.

A witness against f: X -> Y is a tuple h^0, ..., h^{n-1} where h^i has
twist -1 and shape r_i(X) x r_{i+1}(Y) for i < n-1, and h^{n-1} has twist
0 and shape r_{n-1}(X) x r_0(Y). reconstruct_from_witness maps a witness
to the morphism it bounds; f is p-null-homotopic when it lies in the
image of that linear map.

Two independent deciders are provided. is_p_null_homotopic solves the
reconstruction formula for the witness directly. factors_through_trivials
solves for a factorization through theta^0(A^{r_0 Y}) + ... +
theta^{n-1}(A^{r_{n-1} Y}) followed by the canonical counit; homs into a
trivial object are free on one component, which makes that system linear
too. Both are exact over a commutative base; over a skew base both run a
degree-bounded prime-field solve and the verdict says so.
"""

from .fields import PrimeField
from .rings import UnsupportedRingError
from .matrices import (TwistedMatrix, twisted_compose, mat_mul, solve_right,
                       left_kernel, smith_form)
from .modules import kmat_solve, prime_coords, from_prime_coords, prime_degree
from .factorizations import Morphism, theta, direct_sum


# -- witnesses --

def witness_shapes(x, y):
    """Shape/twist table (rows, cols, twist) for a witness from x to y."""
    n = x.n
    out = []
    for i in range(n - 1):
        out.append((x.ranks[i], y.ranks[i + 1], -1))
    out.append((x.ranks[n - 1], y.ranks[0], 0))
    return out


def check_witness(x, y, w):
    shapes = witness_shapes(x, y)
    if len(w) != x.n:
        raise ValueError("expected %d homotopy components" % x.n)
    for i, (h, want) in enumerate(zip(w, shapes)):
        if (h.rows, h.cols, h.twist) != want:
            raise ValueError(
                "homotopy component %d must be %dx%d at twist %d, got %dx%d at twist %d"
                % ((i,) + want + (h.rows, h.cols, h.twist)))
    return w


def zero_witness(x, y):
    return [TwistedMatrix.zero(x.ring, r, c, t) for r, c, t in witness_shapes(x, y)]


def random_witness(rng, x, y, max_deg=2):
    ring = x.ring
    out = []
    for r, c, t in witness_shapes(x, y):
        m = [[ring.random_poly(rng, max_deg) for _ in range(c)] for _ in range(r)]
        out.append(TwistedMatrix(ring, m, t, rows=r, cols=c))
    return out


def witness_to_json(w):
    return {"components": [h.to_json() for h in w]}


def witness_from_json(ring, x, y, data):
    if "components" not in data:
        raise ValueError("witness object is missing 'components'")
    w = [TwistedMatrix.from_json(ring, d) for d in data["components"]]
    return check_witness(x, y, w)


def reconstruct_from_witness(x, y, w):
    """The morphism bounded by w; each summand is a twisted composite.

    f^i = sum_{j >= i} d_X^{i..j-1} h^j d_Y^{j+1..n-1} d_Y^{0..i-1}
        + sum_{j < i}  d_X^{i..n-1} d_X^{0..j-1} h^j d_Y^{j+1..i-1}
    with empty ranges as identities; every term balances to twist 0.
    """
    check_witness(x, y, w)
    n = x.n
    ring = x.ring
    comps = []
    for i in range(n):
        acc = TwistedMatrix.zero(ring, x.ranks[i], y.ranks[i], 0)
        for j in range(i, n):
            if w[j].is_zero():
                continue
            term = twisted_compose(x.compose_range(i, j - 1), w[j],
                                   y.compose_range(j + 1, n - 1),
                                   y.compose_range(0, i - 1))
            assert term.twist == 0
            acc = acc.add(term)
        for j in range(i):
            if w[j].is_zero():
                continue
            term = twisted_compose(x.compose_range(i, n - 1),
                                   x.compose_range(0, j - 1), w[j],
                                   y.compose_range(j + 1, i - 1))
            assert term.twist == 0
            acc = acc.add(term)
        comps.append(acc)
    return Morphism(x, y, comps)


# -- witness transport (homotopy is a two-sided ideal, constructively) --

def witness_precompose(u, w):
    """Witness for u f given a witness w for f: X -> Y and u: W -> X."""
    return [twisted_compose(c, h) for c, h in zip(u.components, w)]


def witness_postcompose(w, v):
    """Witness for f v given a witness w for f: X -> Y and v: Y -> Z."""
    n = len(w)
    out = [twisted_compose(w[j], v.components[j + 1]) for j in range(n - 1)]
    out.append(twisted_compose(w[n - 1], v.components[0]))
    return out


def witness_shift(x, y, w):
    """Witness for shift(f) given a witness w for f: the components rotate,
    the old top picks up sigma^{-1}, and the old h^0 lands at twist 0."""
    n = x.n
    if n == 1:
        return [w[0].sigma_entries(-1)]
    out = [w[j + 1] for j in range(n - 2)]
    out.append(w[n - 1].sigma_entries(-1).with_twist(-1))
    out.append(w[0].with_twist(0))
    return out


def witness_direct_sum(ws):
    """Witness for a direct sum of morphisms from witnesses of the parts."""
    n = len(ws[0])
    ring = ws[0][0].ring
    return [TwistedMatrix.direct_sum(ring, [w[j] for w in ws]) for j in range(n)]


# -- verdicts --

class HomotopyVerdict:
    """Outcome of a null-homotopy decision.

    null is the verdict; witness reconstructs the morphism exactly when
    null holds. bounded marks a skew-case negative that only searched
    witnesses up to the stated degree bound, so it is not a definitive no.
    """

    def __init__(self, null, witness=None, bounded=False, bound=None):
        self.null = null
        self.witness = witness
        self.bounded = bounded
        self.bound = bound

    def __bool__(self):
        return self.null

    def __repr__(self):
        if self.null:
            return "<null-homotopic>"
        if self.bounded:
            return "<no witness up to degree %s>" % self.bound
        return "<not null-homotopic>"

    def to_json(self):
        out = {"null_homotopic": self.null, "bounded": self.bounded}
        if self.bound is not None:
            out["degree_bound"] = self.bound
        if self.witness is not None:
            out["witness"] = witness_to_json(self.witness)
        return out


class TrivialFactorization:
    """Outcome of the factor-through-trivials decision; g then counit = f."""

    def __init__(self, factors, g=None, counit=None, through=None,
                 bounded=False, bound=None):
        self.factors = factors
        self.g = g
        self.counit = counit
        self.through = through
        self.bounded = bounded
        self.bound = bound

    def __bool__(self):
        return self.factors

    def to_json(self):
        out = {"factors_through_trivials": self.factors, "bounded": self.bounded}
        if self.bound is not None:
            out["degree_bound"] = self.bound
        if self.g is not None:
            out["into_trivial_sum"] = self.g.to_json()
            out["counit"] = self.counit.to_json()
            out["trivial_ranks"] = list(self.through.ranks)
        return out


# -- shared linear-solve engines --

def _flatten_polys(f):
    vec = []
    for comp in f.components:
        for row in comp.m:
            vec.extend(row)
    return vec


def _solve_exact(ring, unit_count, build, f):
    """Coefficients c (polys) with build(c) == f, for build A-linear; or None."""
    one = ring.from_int(1)
    zero = []
    rows = []
    for u in range(unit_count):
        coeffs = [zero] * unit_count
        coeffs[u] = one
        rows.append(_flatten_polys(build(coeffs)))
    sol = solve_right(ring, rows, [_flatten_polys(f)])
    if sol is None:
        return None
    coeffs = [ring.trim(c) for c in sol[0]]
    if build(coeffs) != f:
        return None
    return coeffs


def _flatten_fp(fld, e, dmax, f):
    vec = []
    for comp in f.components:
        for row in comp.m:
            for poly in row:
                for d in range(dmax + 1):
                    c = poly[d] if d < len(poly) else fld.zero
                    vec.extend(prime_coords(fld, c))
    return vec


def _solve_bounded(ring, unit_count, bound, build, f):
    """Polys c_u of degree <= bound with build(c) == f, via a prime-field
    solve; build only needs to be additive and prime-subfield homogeneous."""
    fld = ring.field
    e = prime_degree(fld)
    pf = PrimeField(fld.p)
    units = []
    cands = []
    dmax = max((ring.deg(p) for comp in f.components for row in comp.m
                for p in row), default=-1)
    for u in range(unit_count):
        for m in range(bound + 1):
            for c in range(e):
                coeffs = [[] for _ in range(unit_count)]
                coords = [0] * e
                coords[c] = 1
                poly = [fld.zero] * m + [from_prime_coords(fld, coords)]
                coeffs[u] = poly
                cand = build(coeffs)
                units.append((u, m, c))
                cands.append(cand)
                for comp in cand.components:
                    for row in comp.m:
                        for p in row:
                            if ring.deg(p) > dmax:
                                dmax = ring.deg(p)
    if dmax < 0:
        dmax = 0
    rows = [_flatten_fp(fld, e, dmax, cand) for cand in cands]
    sol = kmat_solve(pf, rows, [_flatten_fp(fld, e, dmax, f)])
    if sol is None:
        return None
    coeff_coords = [[[0] * e for _ in range(bound + 1)] for _ in range(unit_count)]
    for (u, m, c), val in zip(units, sol[0]):
        coeff_coords[u][m][c] = val % fld.p
    coeffs = []
    for u in range(unit_count):
        poly = [from_prime_coords(fld, coords) for coords in coeff_coords[u]]
        coeffs.append(ring.trim(poly))
    if build(coeffs) != f:
        return None
    return coeffs


def _entry_degree_bound(f):
    x, y = f.source, f.target
    best = 0
    for mats in (x.maps, y.maps, f.components):
        for mat in mats:
            for row in mat.m:
                for p in row:
                    d = x.ring.deg(p)
                    if d > best:
                        best = d
    return best


# -- decider one: solve the reconstruction formula --

def _witness_slots(x, y):
    slots = []
    for j, (r, c, _) in enumerate(witness_shapes(x, y)):
        for a in range(r):
            for b in range(c):
                slots.append((j, a, b))
    return slots


def _witness_build(x, y, slots):
    shapes = witness_shapes(x, y)
    ring = x.ring

    def build(coeffs):
        mats = [[[[] for _ in range(c)] for _ in range(r)] for r, c, _ in shapes]
        for (j, a, b), poly in zip(slots, coeffs):
            mats[j][a][b] = poly
        w = [TwistedMatrix(ring, m, t, rows=r, cols=c)
             for m, (r, c, t) in zip(mats, shapes)]
        return reconstruct_from_witness(x, y, w)

    return build


def _witness_from_coeffs(x, y, slots, coeffs):
    shapes = witness_shapes(x, y)
    ring = x.ring
    mats = [[[[] for _ in range(c)] for _ in range(r)] for r, c, _ in shapes]
    for (j, a, b), poly in zip(slots, coeffs):
        mats[j][a][b] = poly
    return [TwistedMatrix(ring, m, t, rows=r, cols=c)
            for m, (r, c, t) in zip(mats, shapes)]


def is_p_null_homotopic(f, escalations=2):
    """Decide whether f bounds some witness.

    Exact over a commutative base. Over a skew base the witness degree is
    capped at (max entry degree) + deg omega and escalated that many more
    steps of deg omega; a negative is then only 'none up to the bound'.
    """
    x, y = f.source, f.target
    ring = x.ring
    slots = _witness_slots(x, y)
    build = _witness_build(x, y, slots)
    if ring.commutative:
        coeffs = _solve_exact(ring, len(slots), build, f)
        if coeffs is None:
            return HomotopyVerdict(False)
        w = _witness_from_coeffs(x, y, slots, coeffs)
        assert reconstruct_from_witness(x, y, w) == f
        return HomotopyVerdict(True, witness=w)
    step = max(ring.deg(ring.omega), 1)
    bound = _entry_degree_bound(f) + step
    for _ in range(escalations + 1):
        coeffs = _solve_bounded(ring, len(slots), bound, build, f)
        if coeffs is not None:
            w = _witness_from_coeffs(x, y, slots, coeffs)
            assert reconstruct_from_witness(x, y, w) == f
            return HomotopyVerdict(True, witness=w, bound=bound)
        bound += step
    return HomotopyVerdict(False, bounded=True, bound=bound - step)


def is_stably_zero(x, escalations=2):
    """True iff the identity of x is null-homotopic (x vanishes stably)."""
    return is_p_null_homotopic(Morphism.identity(x), escalations)


def is_stable_iso_pair(f, g, escalations=2):
    """Verify that f and g are mutually inverse in the stable category.

    Returns (ok, bounded): both composites minus identities must be
    null-homotopic; bounded is set when a skew negative relied on the
    degree cap (so 'not ok' is then inconclusive).
    """
    if f.source != g.target or f.target != g.source:
        raise ValueError("candidate pair endpoints do not match")
    v1 = is_p_null_homotopic(f.then(g).sub(Morphism.identity(f.source)), escalations)
    v2 = is_p_null_homotopic(g.then(f).sub(Morphism.identity(g.source)), escalations)
    return (v1.null and v2.null, v1.bounded or v2.bounded)


# -- decider two: factor through the trivial objects --

def trivial_hom(x, i, lam):
    """The morphism x -> theta^i(A^m) whose component at slot (i-1 mod n)
    is lam; every morphism into a trivial object arises uniquely this way."""
    ring = x.ring
    n = x.n
    if lam.twist != 0 or lam.rows != x.ranks[(i - 1) % n]:
        raise ValueError("parameter must be %dx? at twist 0" % x.ranks[(i - 1) % n])
    m = lam.cols
    comps = [None] * n
    if i == 0:
        comps[n - 1] = lam
        for j in range(n - 1):
            comps[j] = TwistedMatrix(
                ring, mat_mul(ring, x.compose_range(j, n - 2).m, lam.m), 0,
                rows=x.ranks[j], cols=m)
    else:
        comps[i - 1] = lam
        for j in range(i - 1):
            comps[j] = TwistedMatrix(
                ring, mat_mul(ring, x.compose_range(j, i - 2).m, lam.m), 0,
                rows=x.ranks[j], cols=m)
        # the wrap-around square forces the top slot, then the chain above i
        raw = mat_mul(ring, x.maps[n - 1].m,
                      mat_mul(ring, x.compose_range(0, i - 2).m, lam.m))
        top = TwistedMatrix(ring, raw, 0, rows=x.ranks[n - 1], cols=m).sigma_entries(-1)
        comps[n - 1] = top
        for j in range(i, n - 1):
            comps[j] = TwistedMatrix(
                ring, mat_mul(ring, x.compose_range(j, n - 2).m, top.m), 0,
                rows=x.ranks[j], cols=m)
    return Morphism(x, theta(ring, n, i, m), comps)


def trivial_counit(y, i):
    """theta^i(A^{r_i y}) -> y: slot j carries the composite of y's maps
    from slot i around to slot j (the identity at j = i)."""
    ring = y.ring
    n = y.n
    m = y.ranks[i]
    comps = []
    for j in range(n):
        if j >= i:
            raw = y.compose_range(i, j - 1).m
        else:
            raw = mat_mul(ring, y.compose_range(i, n - 1).m,
                          y.compose_range(0, j - 1).m)
        comps.append(TwistedMatrix(ring, raw, 0, rows=m, cols=y.ranks[j]))
    return Morphism(theta(ring, n, i, m), y, comps)


def trivial_sum_counit(y):
    """The trivial sum T = theta^0(A^{r_0}) + ... + theta^{n-1}(A^{r_{n-1}})
    and the stacked counit T -> y."""
    ring = y.ring
    n = y.n
    parts = [theta(ring, n, i, y.ranks[i]) for i in range(n)]
    t = direct_sum(parts)
    counits = [trivial_counit(y, i) for i in range(n)]
    comps = []
    for j in range(n):
        rows = []
        for eps in counits:
            rows.extend(eps.components[j].m)
        comps.append(TwistedMatrix(ring, rows, 0, rows=t.ranks[j], cols=y.ranks[j]))
    return t, Morphism(t, y, comps)


def _lambda_slots(x, y):
    n = x.n
    slots = []
    for i in range(n):
        r = x.ranks[(i - 1) % n]
        c = y.ranks[i]
        for a in range(r):
            for b in range(c):
                slots.append((i, a, b))
    return slots


def _lambda_build(f, t, slots):
    x, y = f.source, f.target
    ring = x.ring
    n = x.n

    def build(coeffs):
        mats = [[[[] for _ in range(y.ranks[i])] for _ in range(x.ranks[(i - 1) % n])]
                for i in range(n)]
        for (i, a, b), poly in zip(slots, coeffs):
            mats[i][a][b] = poly
        parts = [trivial_hom(x, i, TwistedMatrix(
            ring, mats[i], 0, rows=x.ranks[(i - 1) % n], cols=y.ranks[i]))
            for i in range(n)]
        comps = []
        for j in range(n):
            block = [[] for _ in range(x.ranks[j])]
            for g in parts:
                for rr, row in enumerate(g.components[j].m):
                    block[rr] = block[rr] + row
            comps.append(TwistedMatrix(ring, block, 0, rows=x.ranks[j], cols=t.ranks[j]))
        return Morphism(x, t, comps)

    return build


def factors_through_trivials(f, escalations=2):
    """Decide whether f factors through the sum of all trivial objects on
    y's ranks; by the homotopy correspondence this must agree with
    is_p_null_homotopic, but the linear system solved here is different."""
    x, y = f.source, f.target
    ring = x.ring
    t, eps = trivial_sum_counit(y)
    slots = _lambda_slots(x, y)
    build_g = _lambda_build(f, t, slots)

    def build(coeffs):
        return build_g(coeffs).then(eps)

    if ring.commutative:
        coeffs = _solve_exact(ring, len(slots), build, f)
        bound = None
    else:
        step = max(ring.deg(ring.omega), 1)
        bound = _entry_degree_bound(f) + step
        coeffs = None
        for _ in range(escalations + 1):
            coeffs = _solve_bounded(ring, len(slots), bound, build, f)
            if coeffs is not None:
                break
            bound += step
        if coeffs is None:
            return TrivialFactorization(False, bounded=True, bound=bound - step)
    if coeffs is None:
        return TrivialFactorization(False)
    g = build_g(coeffs)
    assert g.is_valid()
    assert g.then(eps) == f
    return TrivialFactorization(True, g=g, counit=eps, through=t, bound=bound)


def factors_through_theta0(f, escalations=2):
    """Decide whether f factors through theta^0(A^{r_0 y}) alone (the
    smaller ideal used by the cokernel correspondence)."""
    x, y = f.source, f.target
    ring = x.ring
    eps = trivial_counit(y, 0)
    t0 = eps.source
    n = x.n
    slots = []
    r = x.ranks[n - 1]
    c = y.ranks[0]
    for a in range(r):
        for b in range(c):
            slots.append((a, b))

    def build_g(coeffs):
        mat = [[[] for _ in range(c)] for _ in range(r)]
        for (a, b), poly in zip(slots, coeffs):
            mat[a][b] = poly
        return trivial_hom(x, 0, TwistedMatrix(ring, mat, 0, rows=r, cols=c))

    def build(coeffs):
        return build_g(coeffs).then(eps)

    if ring.commutative:
        coeffs = _solve_exact(ring, len(slots), build, f)
        if coeffs is None:
            return TrivialFactorization(False)
        bound = None
    else:
        step = max(ring.deg(ring.omega), 1)
        bound = _entry_degree_bound(f) + step
        coeffs = None
        for _ in range(escalations + 1):
            coeffs = _solve_bounded(ring, len(slots), bound, build, f)
            if coeffs is not None:
                break
            bound += step
        if coeffs is None:
            return TrivialFactorization(False, bounded=True, bound=bound - step)
    g = build_g(coeffs)
    assert g.is_valid()
    assert g.then(eps) == f
    return TrivialFactorization(True, g=g, counit=eps, through=t0, bound=bound)


# -- the morphism module and its stable quotient (commutative case) --

class HomSpace:
    """A-basis of the morphism module Hom(x, y), commutative base only."""

    def __init__(self, x, y):
        ring = x.ring
        if not ring.commutative:
            raise UnsupportedRingError("hom modules need a commutative base ring")
        if x.n != y.n:
            raise ValueError("fold counts differ")
        self.x = x
        self.y = y
        self.ring = ring
        self.slots = []
        for i in range(x.n):
            for a in range(x.ranks[i]):
                for b in range(y.ranks[i]):
                    self.slots.append((i, a, b))
        rows = []
        for u in range(len(self.slots)):
            coeffs = [[]] * len(self.slots)
            coeffs[u] = ring.from_int(1)
            rows.append(self._defect_vec(self._components(coeffs)))
        self.constraints = rows
        self.basis_rows = left_kernel(ring, rows) if rows else []
        self.basis = [self.from_coords(r) for r in self.basis_rows]

    def _components(self, coeffs):
        x, y, ring = self.x, self.y, self.ring
        mats = [[[[] for _ in range(y.ranks[i])] for _ in range(x.ranks[i])]
                for i in range(x.n)]
        for (i, a, b), poly in zip(self.slots, coeffs):
            mats[i][a][b] = poly
        return [TwistedMatrix(ring, m, 0, rows=x.ranks[i], cols=y.ranks[i])
                for i, m in enumerate(mats)]

    def _defect_vec(self, comps):
        x, y = self.x, self.y
        vec = []
        for i in range(x.n):
            lhs = x.maps[i].then(comps[(i + 1) % x.n])
            rhs = comps[i].then(y.maps[i])
            for row in lhs.sub(rhs).m:
                vec.extend(row)
        return vec

    def from_coords(self, row):
        return Morphism(self.x, self.y, self._components([self.ring.trim(c)
                                                          for c in row]))

    def coordinates(self, f):
        """Basis coordinates of a valid morphism f (None only if f is not
        in the span, which would mean f fails the commuting squares)."""
        if f.source != self.x or f.target != self.y:
            raise ValueError("morphism endpoints do not match this hom space")
        vec = _flatten_polys(f)
        if not self.basis_rows:
            return [] if all(not p for p in vec) else None
        sol = solve_right(self.ring, self.basis_rows, [vec])
        return None if sol is None else sol[0]

    @property
    def rank(self):
        return len(self.basis_rows)


def hom_module(x, y):
    return HomSpace(x, y)


def _omega_power_divides(ring, factor):
    """True when factor divides some power of omega (checked at power deg)."""
    acc = ring.from_int(1)
    for _ in range(ring.deg(factor)):
        acc = ring.right_quo_rem(ring.mul(acc, ring.omega), factor)[1]
        if not acc:
            return True
    return not acc


class StableHomReport:
    """Stable hom as a finitely presented module: a hom-space basis modulo
    the image of the witness reconstruction (or the theta^0 ideal)."""

    def __init__(self, hom, relations, ideal):
        self.hom = hom
        self.relations = relations
        self.ideal = ideal
        ring = hom.ring
        b = hom.rank
        if b == 0:
            self.invariant_factors = []
            self.representatives = []
        else:
            rel = relations if relations else [[[] for _ in range(b)]]
            d, _, _, v_inv = smith_form(ring, rel)
            rows = len(d)
            facs = []
            reps = []
            for t in range(b):
                diag = d[t][t] if t < rows and t < b else []
                if not diag:
                    facs.append([])
                    reps.append(hom.from_coords(v_inv[t]))
                elif ring.deg(diag) > 0:
                    facs.append(list(diag))
                    reps.append(hom.from_coords(v_inv[t]))
            self.invariant_factors = facs
            self.representatives = reps
        self.k_dimension = None
        if all(f for f in self.invariant_factors):
            self.k_dimension = sum(ring.deg(f) for f in self.invariant_factors)
        self.omega_torsion = (self.k_dimension is not None and
                              all(_omega_power_divides(ring, f)
                                  for f in self.invariant_factors))

    def factor_names(self):
        ring = self.hom.ring
        return sorted("free" if not f else ring.pretty(f)
                      for f in self.invariant_factors)

    def is_zero(self):
        return not self.invariant_factors

    def to_json(self):
        ring = self.hom.ring
        return {
            "ideal": self.ideal,
            "hom_rank": self.hom.rank,
            "invariant_factors": [ring.poly_to_json(f) for f in self.invariant_factors],
            "invariant_factors_pretty": ["free" if not f else ring.pretty(f)
                                         for f in self.invariant_factors],
            "k_dimension": self.k_dimension,
            "omega_torsion": self.omega_torsion,
            "representatives": [m.to_json() for m in self.representatives],
        }


def stable_hom(x, y, ideal="all"):
    """Present Hom(x, y) modulo null-homotopics (ideal='all') or modulo
    maps factoring through theta^0 only (ideal='theta0')."""
    if ideal not in ("all", "theta0"):
        raise ValueError("ideal must be 'all' or 'theta0'")
    hom = HomSpace(x, y)
    ring = x.ring
    rel = []
    if ideal == "all":
        slots = _witness_slots(x, y)
        build = _witness_build(x, y, slots)
    else:
        eps = trivial_counit(y, 0)
        n = x.n
        slots = [(a, b) for a in range(x.ranks[n - 1]) for b in range(y.ranks[0])]

        def build(coeffs):
            mat = [[[] for _ in range(y.ranks[0])] for _ in range(x.ranks[n - 1])]
            for (a, b), poly in zip(slots, coeffs):
                mat[a][b] = poly
            lam = TwistedMatrix(ring, mat, 0, rows=x.ranks[n - 1], cols=y.ranks[0])
            return trivial_hom(x, 0, lam).then(eps)

    one = ring.from_int(1)
    for u in range(len(slots)):
        coeffs = [[]] * len(slots)
        coeffs[u] = one
        g = build(coeffs)
        row = hom.coordinates(g)
        assert row is not None, "null morphism escaped the hom space"
        rel.append(row)
    return StableHomReport(hom, rel, ideal)

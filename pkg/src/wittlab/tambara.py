"""Green and Tambara functors over cyclic groups.

A Green functor is a Mackey functor with a commutative ring on each
level, given by structure constants on the presentation generators.  A
Tambara functor adds multiplicative (non-additive) norm maps between
levels; norms are stored as element-level closures because no matrix
can carry them.

Two input classes support the norm functor N_{C_n}^{C_{p^k n}}:

* the Burnside Tambara functor, whose norms are computed through the
  table-of-marks embedding A(C_d) -> prod_j Z (exponentiate the mark at
  gcd(d', j) by the orbit count); the function-enumeration description
  of the same norm is kept as a test oracle;
* constant Tambara functors on a ring A, whose norm tower is the
  classical Witt tower: level p^q m carries W_{q+1}(A), restriction in
  the p-direction is the Witt Frobenius, transfer the Verschiebung,
  and the internal norm the ghost-shift multiplicative transfer.
"""

from . import abgroups
from .abgroups import AbHom, FgAbGroup
from .errors import (ActionOrderInvalid, GroupMismatch, NotASubgroup,
                     PrimeDividesN, UnsupportedInput)
from .mackey import (CyclicGroupSpec, MackeyFunctor, MackeyMap, burnside,
                     divisors, fixed_point_levels, prime_steps, zeta)
from .rings import IntegerRing, is_prime
from .witt import WittRing


def _unit_vec(n, i):
    v = [0] * n
    v[i] = 1
    return tuple(v)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class GreenFunctor:
    """Levelwise commutative rings on a Mackey functor.

    ``mul[d][i][j]`` is the product of generators i and j of level d as
    a coordinate vector; ``one[d]`` is the unit.  Restrictions are ring
    maps and multiplication satisfies Frobenius reciprocity against the
    transfers; ``validate_green`` checks all of it.
    """

    def __init__(self, mackey, mul, one):
        self.mackey = mackey
        self.mul = {d: tuple(tuple(tuple(v) for v in row) for row in table)
                    for d, table in mul.items()}
        self.one = {d: tuple(v) for d, v in one.items()}
        for d in mackey.group.divisors:
            if d not in self.mul or d not in self.one:
                raise ValueError("missing ring structure at level %d" % d)

    @property
    def group(self):
        return self.mackey.group

    def level(self, d):
        return self.mackey.level(d)

    def multiply(self, d, x, y):
        level = self.mackey.level(d)
        table = self.mul[d]
        acc = [0] * level.ngens
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        c = xi * yj
                        for t, v in enumerate(table[i][j]):
                            if v:
                                acc[t] += c * v
        return tuple(acc)

    def unit(self, d):
        return self.one[d]

    def power(self, d, x, n):
        if n < 0:
            raise ValueError("negative power")
        acc = self.unit(d)
        base = tuple(x)
        while n:
            if n & 1:
                acc = self.multiply(d, acc, base)
            if n > 1:
                base = self.multiply(d, base, base)
            n >>= 1
        return acc

    def validate_green(self, rng=None, samples=4):
        mk = self.mackey
        for d in mk.group.divisors:
            level = mk.level(d)
            gens = [_unit_vec(level.ngens, i) for i in range(level.ngens)]
            # structure constants descend to the presented quotient
            for rel in level.relations:
                for g in gens:
                    assert level.is_zero(self.multiply(d, rel, g)), \
                        "multiplication ill-defined at level %d" % d
            for i, gi in enumerate(gens):
                assert level.equal(self.multiply(d, self.one[d], gi), gi), \
                    "unit fails at level %d" % d
                for j, gj in enumerate(gens):
                    assert level.equal(self.multiply(d, gi, gj),
                                       self.multiply(d, gj, gi)), \
                        "commutativity fails at level %d" % d
                    for gk in gens:
                        lhs = self.multiply(d, self.multiply(d, gi, gj), gk)
                        rhs = self.multiply(d, gi, self.multiply(d, gj, gk))
                        assert level.equal(lhs, rhs), \
                            "associativity fails at level %d" % d
            w = mk.weyl[d]
            assert level.equal(w.apply(self.one[d]), self.one[d]), \
                "weyl does not fix the unit at level %d" % d
            for gi in gens:
                for gj in gens:
                    assert level.equal(
                        w.apply(self.multiply(d, gi, gj)),
                        self.multiply(d, w.apply(gi), w.apply(gj))), \
                        "weyl is not a ring map at level %d" % d
        for (dsub, d) in mk.group.covering_pairs():
            r = mk.res[(d, dsub)]
            t = mk.tr[(dsub, d)]
            ld, lsub = mk.level(d), mk.level(dsub)
            assert lsub.equal(r.apply(self.one[d]), self.one[dsub]), \
                "res does not preserve the unit at (%d, %d)" % (dsub, d)
            for i in range(ld.ngens):
                gi = _unit_vec(ld.ngens, i)
                for j in range(ld.ngens):
                    gj = _unit_vec(ld.ngens, j)
                    assert lsub.equal(
                        r.apply(self.multiply(d, gi, gj)),
                        self.multiply(dsub, r.apply(gi), r.apply(gj))), \
                        "res is not a ring map at (%d, %d)" % (dsub, d)
                # Frobenius reciprocity x tr(y) = tr(res(x) y), bilinear
                for j in range(lsub.ngens):
                    y = _unit_vec(lsub.ngens, j)
                    lhs = self.multiply(d, gi, t.apply(y))
                    rhs = t.apply(self.multiply(dsub, r.apply(gi), y))
                    assert ld.equal(lhs, rhs), \
                        "Frobenius reciprocity fails at (%d, %d)" % (dsub, d)
        return True

    def to_json(self):
        data = self.mackey.to_json()
        data["mul"] = {str(d): [[list(v) for v in row] for row in table]
                       for d, table in self.mul.items()}
        data["one"] = {str(d): list(v) for d, v in self.one.items()}
        return data


class TambaraFunctor:
    """A Green functor with internal norm maps.

    Norms are stored for covering pairs as closures on coordinate
    vectors; composite norms are taken along ascending prime steps
    (any order agrees, which validate_tambara spot-checks).
    """

    def __init__(self, green, norms, kind, payload=None):
        self.green = green
        self.norms = dict(norms)
        self.kind = kind
        self.payload = dict(payload or {})

    @property
    def mackey(self):
        return self.green.mackey

    @property
    def group(self):
        return self.green.mackey.group

    def internal_norm(self, x, d_from, d_to):
        if d_to % d_from:
            raise NotASubgroup("%d does not divide %d" % (d_from, d_to))
        cur = d_from
        out = tuple(x)
        for q in prime_steps(d_to // d_from):
            out = self.norms[(cur, cur * q)](out)
            cur *= q
        return out

    def validate_tambara(self, rng, samples=6):
        mk = self.mackey
        N = mk.group.N
        for (dsub, d) in mk.group.covering_pairs():
            nmap = self.norms[(dsub, d)]
            lsub, ld = mk.level(dsub), mk.level(d)
            assert ld.equal(nmap(self.green.one[dsub]), self.green.one[d]), \
                "norm does not preserve 1 at (%d, %d)" % (dsub, d)
            pool = _sample_pool(lsub, rng, samples)
            for x in pool:
                for y in pool:
                    lhs = nmap(self.green.multiply(dsub, x, y))
                    rhs = self.green.multiply(d, nmap(x), nmap(y))
                    assert ld.equal(lhs, rhs), \
                        "norm not multiplicative at (%d, %d)" % (dsub, d)
            r = mk.res[(d, dsub)]
            for x in pool:
                prod = self.green.one[dsub]
                for j in range(d // dsub):
                    prod = self.green.multiply(
                        dsub, prod,
                        mk.weyl[dsub].power((j * (N // d)) % (N // dsub))
                        .apply(x))
                assert lsub.equal(r.apply(nmap(x)), prod), \
                    "res of norm is not the Weyl orbit product at " \
                    "(%d, %d)" % (dsub, d)
        return True

    def to_json(self):
        data = self.green.to_json()
        data["norm_class"] = self.kind_label()
        return data

    def kind_label(self):
        if self.kind == "constant":
            return "constant:%s" % self.payload["ring_spec"].name
        return self.kind


class GreenMap(MackeyMap):
    """Map of Green functors: a Mackey map that is a ring map levelwise."""

    def __init__(self, source, target, components, check=True):
        self.source_green = source
        self.target_green = target
        super().__init__(source.mackey, target.mackey, components,
                         check=check)
        if check:
            self.validate_ring_maps()

    def validate_ring_maps(self):
        src, tgt = self.source_green, self.target_green
        for d in src.mackey.group.divisors:
            f = self.components[d]
            lt = tgt.level(d)
            assert lt.equal(f.apply(src.one[d]), tgt.one[d]), \
                "unit not preserved at level %d" % d
            n = src.level(d).ngens
            for i in range(n):
                for j in range(n):
                    lhs = f.apply(src.multiply(d, _unit_vec(n, i),
                                               _unit_vec(n, j)))
                    rhs = tgt.multiply(d, f.apply(_unit_vec(n, i)),
                                       f.apply(_unit_vec(n, j)))
                    assert lt.equal(lhs, rhs), \
                        "component at level %d is not a ring map" % d
        return True


def _sample_pool(level, rng, samples):
    order = level.order()
    if order is not None and order <= 81:
        return [tuple(v) for v in level.elements()]
    pool = [level.zero(), _unit_vec(level.ngens, 0) if level.ngens else ()]
    for _ in range(samples):
        pool.append(level.random_element(rng, 4))
    return pool


# ---------------------------------------------------------------------------
# Burnside Tambara functor via the table of marks


def _marks_table(d):
    """Rows = basis orbits [C_d/C_e], columns = subgroups C_j; the entry
    counts C_j-fixed points of C_d/C_e, i.e. d/e when j | e else 0."""
    divs = divisors(d)
    return [[(d // e if e % j == 0 else 0) for j in divs] for e in divs]


def burnside_to_marks(d, x):
    return tuple(abgroups.vecmat(list(x), _marks_table(d)))


def burnside_from_marks(d, marks):
    """Invert the (unitriangular after scaling) table of marks."""
    divs = divisors(d)
    coeff = {}
    for j in reversed(divs):
        acc = marks[divs.index(j)]
        for e in divs:
            if e > j and e % j == 0:
                acc -= coeff[e] * (d // e)
        q, r = divmod(acc, d // j)
        if r:
            raise ArithmeticError(
                "mark vector not realizable in A(C_%d)" % d)
        coeff[j] = q
    return tuple(coeff[e] for e in divs)


def burnside_tambara(N):
    """The Burnside Tambara functor of C_N.

    Multiplication is the orbit decomposition of products of orbits;
    norms exponentiate mark vectors: the C_j-mark of n_{d'}^{d}(x) is
    the gcd(d', j)-mark of x raised to the orbit count (d/j)gcd(d',j)/d'.
    """
    mk = burnside(N)
    mul = {}
    one = {}
    for d in mk.group.divisors:
        divs = divisors(d)
        n = len(divs)
        table = []
        for a in divs:
            row = []
            for b in divs:
                g = _gcd(a, b)
                count = d * g // (a * b)
                vec = [0] * n
                vec[divs.index(g)] = count
                row.append(tuple(vec))
            table.append(tuple(row))
        mul[d] = tuple(table)
        one[d] = _unit_vec(n, divs.index(d))
    green = GreenFunctor(mk, mul, one)
    norms = {}
    for (dsub, d) in mk.group.covering_pairs():
        norms[(dsub, d)] = _burnside_norm_closure(dsub, d)
    return TambaraFunctor(green, norms, "burnside")


def _burnside_norm_closure(dsub, d):
    divs = divisors(d)
    sub_divs = divisors(dsub)

    def norm(x):
        marks = burnside_to_marks(dsub, x)
        out = []
        for j in divs:
            g = _gcd(dsub, j)
            exponent = (d // j) * g // dsub
            out.append(marks[sub_divs.index(g)] ** exponent)
        return burnside_from_marks(d, out)

    return norm


# ---------------------------------------------------------------------------
# presented rings (encode/decode between elements and coordinates)


class PresentedRing:
    """A commutative ring whose additive group is a presented FgAbGroup.

    ``ops`` does the element-level arithmetic (a ring carrier or a
    WittRing); encode/decode translate between elements and generator
    coordinate vectors.
    """

    def __init__(self, ops, group, gens, encode, decode):
        self.ops = ops
        self.group = group
        self.gens = list(gens)
        self.encode = encode
        self.decode = decode
        self.mul = tuple(tuple(tuple(encode(ops.mul(gi, gj)))
                               for gj in gens) for gi in gens)
        self.one = tuple(encode(ops.one()))


def present_finite_ring(ops, elements, key):
    """Minimal-ish presentation of a finite ring by BFS over sums.

    Generators are chosen greedily by maximal additive order; the
    spanning-tree edge relations of the Cayley graph present the group.
    """
    zero = ops.zero()
    n = len(elements)
    orders = []
    for el in elements:
        acc = el
        o = 1
        while not ops.eq(acc, zero):
            acc = ops.add(acc, el)
            o += 1
        orders.append(o)
    gens = []
    rep = {key(zero): ()}
    by_key = {key(zero): zero}
    while len(rep) < n:
        cand = None
        for idx, el in enumerate(elements):
            if key(el) not in rep and (cand is None
                                       or orders[idx] > orders[cand]):
                cand = idx
        gens.append(elements[cand])
        g = len(gens)
        rep = {key(zero): (0,) * g}
        by_key = {key(zero): zero}
        frontier = [zero]
        while frontier:
            nxt = []
            for x in frontier:
                vx = rep[key(x)]
                for i, gen in enumerate(gens):
                    y = ops.add(x, gen)
                    ky = key(y)
                    if ky not in rep:
                        vy = list(vx)
                        vy[i] += 1
                        rep[ky] = tuple(vy)
                        by_key[ky] = y
                        nxt.append(y)
            frontier = nxt
    rels = []
    for el in elements:
        v = rep[key(el)]
        for i, gen in enumerate(gens):
            w = rep[key(ops.add(el, gen))]
            row = [a - b for a, b in zip(v, w)]
            row[i] += 1
            if any(row):
                rels.append(row)
    group = FgAbGroup(len(gens), rels)
    assert group.order() == n, "presentation does not match the carrier"
    decode_table = {group.canonical(rep[key(el)]): el for el in elements}

    def encode(el):
        return rep[key(el)]

    def decode(vec):
        return decode_table[group.canonical(tuple(vec))]

    return PresentedRing(ops, group, gens, encode, decode)


def present_integer_witt(wr):
    """Free presentation of W_k(Z) on the basis V^j(unit).

    The coordinate change is triangular: peeling the top Witt
    coordinate and subtracting that multiple of the unit leaves a
    vector in the image of V, so encoding terminates in k steps.
    """
    k = wr.k
    towers = [WittRing(wr.p, l, wr.ring) for l in range(1, k + 1)]
    group = FgAbGroup.free(k)
    basis = []
    for j in range(k):
        coords = [0] * k
        coords[j] = 1
        basis.append(wr.vector(coords))

    def decode(vec):
        acc = wr.zero()
        for j, c in enumerate(vec):
            if c:
                acc = wr.add(acc, wr.scalar_mul(c, basis[j]))
        return acc

    def encode(w):
        out = []
        cur = w
        for j in range(k):
            length = k - j
            ring = towers[length - 1]
            c = cur.coords[0]
            out.append(c)
            if length == 1:
                break
            diff = ring.sub(cur, ring.scalar_mul(c, ring.one()))
            cur = towers[length - 2].vector(diff.coords[1:])
        return tuple(out)

    return PresentedRing(wr, group, basis, encode, decode)


def present_witt_ring(wr):
    if wr.ring.is_finite:
        elements = list(wr.elements())
        return present_finite_ring(wr, elements,
                                   key=lambda w: tuple(w.coords))
    if isinstance(wr.ring, IntegerRing):
        return present_integer_witt(wr)
    raise UnsupportedInput(
        "no presentation for Witt vectors over %s" % wr.ring.name)


def present_ring_spec(spec):
    """Present a plain ring carrier, elements as themselves."""
    if spec.is_finite:
        return present_finite_ring(spec, list(spec.elements()),
                                   key=lambda x: x)
    if isinstance(spec, IntegerRing):
        group = FgAbGroup.free(1)
        return PresentedRing(spec, group, [1],
                             lambda x: (x,), lambda v: v[0])
    raise UnsupportedInput("no presentation for the ring %s" % spec.name)


# ---------------------------------------------------------------------------
# fixed points of a ring with C_N-action


class ActionRing:
    """A commutative ring with a finite-order ring automorphism.

    The additive group is a presented FgAbGroup with multiplication
    structure constants; the action is an AbHom that must be a ring
    automorphism.
    """

    def __init__(self, group, mul, one, action):
        self.group = group
        self.mul = tuple(tuple(tuple(v) for v in row) for row in mul)
        self.one = tuple(one)
        self.action = action
        n = group.ngens
        for i in range(n):
            for j in range(n):
                lhs = action.apply(self.multiply(_unit_vec(n, i),
                                                 _unit_vec(n, j)))
                rhs = self.multiply(action.apply(_unit_vec(n, i)),
                                    action.apply(_unit_vec(n, j)))
                if not group.equal(lhs, rhs):
                    raise ValueError("action is not a ring automorphism")
        if not group.equal(action.apply(self.one), self.one):
            raise ValueError("action does not fix the unit")

    def multiply(self, x, y):
        acc = [0] * self.group.ngens
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        c = xi * yj
                        for t, v in enumerate(self.mul[i][j]):
                            if v:
                                acc[t] += c * v
        return tuple(acc)

    def is_trivial_action(self):
        return self.action.equal(AbHom.identity(self.group))


def fixed_point_tambara(ring, N):
    """Tambara functor of fixed points of a C_N-action on a ring.

    Levels are the fixed subrings, res the inclusions, tr the coset
    sums, and the norm the product over the Weyl orbit.
    """
    group = CyclicGroupSpec(N)
    if ring.is_trivial_action():
        # constant functor: every level is the ring itself
        levels = {d: ring.group for d in group.divisors}
        res = {}
        tr = {}
        for (dsub, d) in group.covering_pairs():
            res[(d, dsub)] = AbHom.identity(ring.group)
            tr[(dsub, d)] = AbHom.scalar(ring.group, d // dsub)
        weyl = {d: AbHom.identity(ring.group) for d in group.divisors}
        mk = MackeyFunctor(group, levels, res, tr, weyl)
        green = GreenFunctor(mk, {d: ring.mul for d in group.divisors},
                             {d: ring.one for d in group.divisors})
        norms = {}
        for (dsub, d) in group.covering_pairs():
            norms[(dsub, d)] = _power_norm_closure(green, d, dsub, d // dsub)
        return TambaraFunctor(green, norms, "fixed_point",
                              {"action_ring": ring, "trivial": True})

    A = ring.group
    if not ring.action.power(N).equal(AbHom.identity(A)):
        raise ActionOrderInvalid("action order does not divide %d" % N)
    levels, inclusions = fixed_point_levels(A, ring.action, N)
    res = {}
    tr = {}
    weyl = {}
    mul = {}
    one = {}
    for d in group.divisors:
        incl = inclusions[d]
        n = levels[d].ngens
        wrows = []
        for i in range(n):
            img = ring.action.apply(incl.apply(_unit_vec(n, i)))
            wrows.append(_pull_back(img, incl))
        weyl[d] = AbHom(levels[d], levels[d], wrows, check=True)
        table = []
        for i in range(n):
            row = []
            xi = incl.apply(_unit_vec(n, i))
            for j in range(n):
                yj = incl.apply(_unit_vec(n, j))
                row.append(_pull_back(ring.multiply(xi, yj), incl))
            table.append(tuple(row))
        mul[d] = tuple(table)
        one[d] = _pull_back(ring.one, incl)
    for (dsub, d) in group.covering_pairs():
        n = levels[d].ngens
        rrows = [_pull_back(inclusions[d].apply(_unit_vec(n, i)),
                            inclusions[dsub]) for i in range(n)]
        res[(d, dsub)] = AbHom(levels[d], levels[dsub], rrows, check=True)
        m = levels[dsub].ngens
        trows = []
        for i in range(m):
            x = inclusions[dsub].apply(_unit_vec(m, i))
            acc = A.zero()
            for j in range(d // dsub):
                acc = A.add(acc,
                            ring.action.power((j * (N // d)) % N).apply(x))
            trows.append(_pull_back(acc, inclusions[d]))
        tr[(dsub, d)] = AbHom(levels[dsub], levels[d], trows, check=True)
    mk = MackeyFunctor(group, levels, res, tr, weyl)
    green = GreenFunctor(mk, mul, one)
    norms = {}
    for (dsub, d) in group.covering_pairs():
        norms[(dsub, d)] = _orbit_product_norm_closure(
            ring, inclusions, N, dsub, d)
    return TambaraFunctor(green, norms, "fixed_point",
                          {"action_ring": ring, "trivial": False})


def _pull_back(vec, incl):
    pre = abgroups.preimage(incl, vec)
    if pre is None:
        raise AssertionError("value does not land in the fixed subring")
    return pre


def _power_norm_closure(green, level_d, dsub, index):
    def norm(x):
        return green.power(level_d, x, index)
    return norm


def _orbit_product_norm_closure(ring, inclusions, N, dsub, d):
    def norm(x):
        lifted = inclusions[dsub].apply(tuple(x))
        acc = ring.one
        for j in range(d // dsub):
            acc = ring.multiply(
                acc, ring.action.power((j * (N // d)) % N).apply(lifted))
        return _pull_back(acc, inclusions[d])
    return norm


def constant_tambara(spec, N):
    """The constant Tambara functor on a ring carrier (trivial action)."""
    pres = present_ring_spec(spec)
    ring = ActionRing(pres.group, pres.mul, pres.one,
                      AbHom.identity(pres.group))
    out = fixed_point_tambara(ring, N)
    out.kind = "constant"
    out.payload.update({"ring_spec": spec, "presentation": pres})
    return out


# ---------------------------------------------------------------------------
# the norm functor


def split_p_part(d, p):
    """d = p^q * m with p coprime to m."""
    q = 0
    while d % p == 0:
        d //= p
        q += 1
    return q, d


def norm_functor(R, p, k):
    """Norm a supported C_n-Tambara functor up to C_{p^k n}.

    Burnside functors norm to Burnside functors; constant functors to
    the Witt tower.  Everything else raises UnsupportedInput.
    """
    if not is_prime(p):
        raise ValueError("p = %d is not prime" % p)
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = R.group.N
    if n % p == 0:
        raise PrimeDividesN("p = %d divides n = %d" % (p, n))
    if R.kind == "burnside":
        return burnside_tambara(p ** k * n)
    if R.kind == "constant":
        return _constant_norm_tower(R, p, k)
    raise UnsupportedInput(
        "no norm recipe for Tambara functors of kind %r" % R.kind)


def _constant_norm_tower(R, p, k):
    spec = R.payload["ring_spec"]
    n = R.group.N
    towers = {q: WittRing(p, q + 1, spec) for q in range(k + 1)}
    pres = {q: present_witt_ring(towers[q]) for q in range(k + 1)}
    group = CyclicGroupSpec(p ** k * n)
    levels = {}
    for d in group.divisors:
        q, _m = split_p_part(d, p)
        levels[d] = pres[q].group
    res = {}
    tr = {}
    for (dsub, d) in group.covering_pairs():
        q, _ = split_p_part(d, p)
        qsub, _ = split_p_part(dsub, p)
        if q == qsub + 1:
            # p-direction: Witt Frobenius down, Verschiebung up
            fro = [pres[qsub].encode(towers[q].frobenius(g))
                   for g in pres[q].gens]
            res[(d, dsub)] = AbHom(levels[d], levels[dsub], fro, check=True)
            ver = [pres[q].encode(towers[q].verschiebung(g))
                   for g in pres[qsub].gens]
            tr[(dsub, d)] = AbHom(levels[dsub], levels[d], ver, check=True)
        else:
            # n-direction: identity / multiplication by the index
            res[(d, dsub)] = AbHom.identity(levels[d])
            tr[(dsub, d)] = AbHom.scalar(levels[d], d // dsub)
    weyl = {d: AbHom.identity(levels[d]) for d in group.divisors}
    mk = MackeyFunctor(group, levels, res, tr, weyl)
    mul = {}
    one = {}
    for d in group.divisors:
        q, _ = split_p_part(d, p)
        mul[d] = pres[q].mul
        one[d] = pres[q].one
    green = GreenFunctor(mk, mul, one)
    norms = {}
    for (dsub, d) in group.covering_pairs():
        q, _ = split_p_part(d, p)
        qsub, _ = split_p_part(dsub, p)
        if q == qsub + 1:
            norms[(dsub, d)] = _witt_norm_closure(towers, pres, qsub)
        else:
            norms[(dsub, d)] = _power_norm_closure(green, d, dsub, d // dsub)
    return TambaraFunctor(green, norms, "witt_tower",
                          {"ring_spec": spec, "p": p, "k": k, "n": n,
                           "presentations": pres, "witt_rings": towers})


def _witt_norm_closure(towers, pres, qsub):
    def norm(x):
        w = pres[qsub].decode(tuple(x))
        return pres[qsub + 1].encode(towers[qsub].norm(w))
    return norm


# ---------------------------------------------------------------------------
# transport of Green structure along reindexing


def zeta_green(G, m):
    """Reindex a Green functor along C_N -> C_N/C_m."""
    mk = zeta(G.mackey, m)
    mul = {d: G.mul[d * m] for d in mk.group.divisors}
    one = {d: G.one[d * m] for d in mk.group.divisors}
    return GreenFunctor(mk, mul, one)


def restrict_green(G, h):
    """Restrict a Green functor to the subgroup C_h."""
    from .mackey import restrict_to_subgroup
    mk = restrict_to_subgroup(G.mackey, h)
    mul = {d: G.mul[d] for d in mk.group.divisors}
    one = {d: G.one[d] for d in mk.group.divisors}
    return GreenFunctor(mk, mul, one)


def green_from_json(data):
    """Rebuild a Green functor from the extended Mackey schema."""
    mk = MackeyFunctor.from_json(data)
    mul = {int(d): tuple(tuple(tuple(v) for v in row) for row in table)
           for d, table in data["mul"].items()}
    one = {int(d): tuple(v) for d, v in data["one"].items()}
    return GreenFunctor(mk, mul, one)


def internal_norm(T, x, d_from, d_to):
    """Function form of TambaraFunctor.internal_norm."""
    return T.internal_norm(x, d_from, d_to)

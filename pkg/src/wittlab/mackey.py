"""Mackey functors for cyclic groups C_N.

Levels are indexed by the divisors of N (the subgroup C_d corresponds
to the divisor d) and carry finitely generated abelian groups.
Restriction, transfer and the action of the fixed global generator of
C_N are stored sparsely, only for covering pairs (d', d) with d/d'
prime; composites are derived by transitivity.  The double coset law
for the cyclic group reads

    res . tr = sum_j weyl[d']^(j*N/d),   j = 0 .. d/d' - 1.

Box products are computed by a finite generators-and-relations
presentation of the Day convolution, and geometric fixed points by the
transfer (Brauer) quotient.
"""

from . import abgroups
from .abgroups import AbHom, FgAbGroup
from .errors import ActionOrderInvalid, GroupMismatch, NotASubgroup
from .rings import is_prime


def divisors(n):
    """Sorted divisor list.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def prime_steps(q):
    """Prime factors of q with multiplicity, ascending."""
    out = []
    f = 2
    while f * f <= q:
        while q % f == 0:
            out.append(f)
            q //= f
        f += 1
    if q > 1:
        out.append(q)
    return out


class CyclicGroupSpec:
    """The cyclic group C_N with its divisor lattice of subgroups."""

    __slots__ = ("N", "divisors")

    def __init__(self, N):
        N = int(N)
        if N < 1:
            raise ValueError("group order must be positive")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "divisors", tuple(divisors(N)))

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def covering_pairs(self):
        """All (d_sub, d) with d_sub | d | N and d/d_sub prime."""
        out = []
        for d in self.divisors:
            for q in sorted(set(prime_steps(d))):
                out.append((d // q, d))
        return out

    def comparable_pairs(self):
        """All (d_sub, d) with d_sub | d | N, d_sub < d."""
        out = []
        for d in self.divisors:
            for e in divisors(d):
                if e < d:
                    out.append((e, d))
        return out

    def weyl_order(self, d):
        return self.N // d

    def __eq__(self, other):
        return isinstance(other, CyclicGroupSpec) and other.N == self.N

    def __hash__(self):
        return hash(("C", self.N))

    def __repr__(self):
        return "CyclicGroupSpec(%d)" % self.N


class MackeyFunctor:
    """Divisor-indexed levels with res, tr and Weyl generator action.

    ``res[(d, d_sub)]`` maps level[d] -> level[d_sub] and
    ``tr[(d_sub, d)]`` maps level[d_sub] -> level[d], both stored for
    covering pairs only.  ``weyl[d]`` is the action of the fixed global
    generator of C_N on level[d]; it has order dividing N/d.
    """

    def __init__(self, group, levels, res, tr, weyl):
        if not isinstance(group, CyclicGroupSpec):
            group = CyclicGroupSpec(group)
        self.group = group
        self.levels = dict(levels)
        self.res = dict(res)
        self.tr = dict(tr)
        self.weyl = dict(weyl)
        for d in group.divisors:
            if d not in self.levels:
                raise ValueError("missing level %d" % d)
            if d not in self.weyl:
                self.weyl[d] = AbHom.identity(self.levels[d])
        for (dsub, d) in group.covering_pairs():
            if (d, dsub) not in self.res or (dsub, d) not in self.tr:
                raise ValueError("missing covering maps for %d | %d"
                                 % (dsub, d))

    @property
    def N(self):
        return self.group.N

    def level(self, d):
        try:
            return self.levels[d]
        except KeyError:
            raise NotASubgroup("%d does not divide %d" % (d, self.N))

    def weyl_map(self, d):
        return self.weyl[d]

    def weyl_power(self, d, j):
        return self.weyl[d].power(j % self.group.weyl_order(d)
                                  if self.group.weyl_order(d) else 0)

    def res_map(self, d_from, d_to):
        """Composite restriction along prime steps, d_to | d_from."""
        if d_from % d_to:
            raise NotASubgroup("%d does not divide %d" % (d_to, d_from))
        out = AbHom.identity(self.level(d_from))
        cur = d_from
        for q in prime_steps(d_from // d_to):
            out = self.res[(cur, cur // q)].compose(out)
            cur //= q
        return out

    def tr_map(self, d_from, d_to):
        """Composite transfer along prime steps, d_from | d_to."""
        if d_to % d_from:
            raise NotASubgroup("%d does not divide %d" % (d_from, d_to))
        out = AbHom.identity(self.level(d_from))
        cur = d_from
        for q in prime_steps(d_to // d_from):
            out = self.tr[(cur, cur * q)].compose(out)
            cur *= q
        return out

    # -- invariant suite

    def validate(self):
        """Check the full Mackey invariant suite; raises AssertionError."""
        N = self.N
        for d in self.group.divisors:
            w = self.weyl[d]
            assert abgroups.is_isomorphism(w), "weyl[%d] not invertible" % d
            assert w.power(N // d).equal(AbHom.identity(self.level(d))), \
                "weyl[%d] does not have order dividing %d" % (d, N // d)
        for (dsub, d) in self.group.covering_pairs():
            r = self.res[(d, dsub)]
            t = self.tr[(dsub, d)]
            assert r.compose(self.weyl[d]).equal(
                self.weyl[dsub].compose(r)), \
                "res and weyl do not commute at (%d, %d)" % (dsub, d)
            assert self.weyl[d].compose(t).equal(
                t.compose(self.weyl[dsub])), \
                "tr and weyl do not commute at (%d, %d)" % (dsub, d)
            assert t.compose(self.weyl[dsub].power(N // d)).equal(t), \
                "transfer does not coequalize the Weyl action at %d" % d
        # transitivity: the two prime orders around each square agree
        for d in self.group.divisors:
            qs = sorted(set(prime_steps(d)))
            for a in qs:
                for b in qs:
                    if a < b and d % (a * b) == 0:
                        r1 = self.res[(d // a, d // (a * b))].compose(
                            self.res[(d, d // a)])
                        r2 = self.res[(d // b, d // (a * b))].compose(
                            self.res[(d, d // b)])
                        assert r1.equal(r2), "res transitivity at %d" % d
                        t1 = self.tr[(d // a, d)].compose(
                            self.tr[(d // (a * b), d // a)])
                        t2 = self.tr[(d // b, d)].compose(
                            self.tr[(d // (a * b), d // b)])
                        assert t1.equal(t2), "tr transitivity at %d" % d
        # double coset law on every comparable pair
        for (e, d) in self.group.comparable_pairs():
            lhs = self.res_map(d, e).compose(self.tr_map(e, d))
            rhs = None
            for j in range(d // e):
                term = self.weyl[e].power((j * (N // d)) % (N // e))
                rhs = term if rhs is None else rhs.add(term)
            assert lhs.equal(rhs), "double coset law fails at (%d, %d)" % (e, d)
        return True

    def to_json(self):
        data = {
            "N": self.N,
            "levels": {str(d): self.levels[d].to_json()
                       for d in self.group.divisors},
            "res": {"%d<-%d" % (dsub, d): self.res[(d, dsub)].to_json()
                    for (dsub, d) in self.group.covering_pairs()},
            "tr": {"%d->%d" % (dsub, d): self.tr[(dsub, d)].to_json()
                   for (dsub, d) in self.group.covering_pairs()},
            "weyl": {str(d): self.weyl[d].to_json()
                     for d in self.group.divisors},
        }
        return data

    @classmethod
    def from_json(cls, data):
        group = CyclicGroupSpec(int(data["N"]))
        levels = {d: FgAbGroup.from_json(data["levels"][str(d)])
                  for d in group.divisors}
        res = {}
        tr = {}
        for (dsub, d) in group.covering_pairs():
            res[(d, dsub)] = AbHom(
                levels[d], levels[dsub],
                data["res"]["%d<-%d" % (dsub, d)]["matrix"])
            tr[(dsub, d)] = AbHom(
                levels[dsub], levels[d],
                data["tr"]["%d->%d" % (dsub, d)]["matrix"])
        weyl = {d: AbHom(levels[d], levels[d],
                         data["weyl"][str(d)]["matrix"])
                for d in group.divisors}
        return cls(group, levels, res, tr, weyl)

    def __repr__(self):
        sizes = ", ".join("%d:%s" % (d, self.levels[d].describe())
                          for d in self.group.divisors)
        return "MackeyFunctor(C%d; %s)" % (self.N, sizes)


class MackeyMap:
    """Levelwise homomorphism commuting with res, tr and weyl."""

    def __init__(self, source, target, components, check=True):
        if source.group != target.group:
            raise GroupMismatch("maps need a common group")
        self.source = source
        self.target = target
        self.components = dict(components)
        if check:
            self.validate()

    def validate(self):
        src, tgt = self.source, self.target
        for d in src.group.divisors:
            f = self.components[d]
            assert f.compose(src.weyl[d]).equal(tgt.weyl[d].compose(f)), \
                "component %d does not commute with weyl" % d
        for (dsub, d) in src.group.covering_pairs():
            fd = self.components[d]
            fsub = self.components[dsub]
            assert fsub.compose(src.res[(d, dsub)]).equal(
                tgt.res[(d, dsub)].compose(fd)), \
                "component does not commute with res at (%d, %d)" % (dsub, d)
            assert fd.compose(src.tr[(dsub, d)]).equal(
                tgt.tr[(dsub, d)].compose(fsub)), \
                "component does not commute with tr at (%d, %d)" % (dsub, d)
        return True

    def is_levelwise_isomorphism(self):
        return all(abgroups.is_isomorphism(f)
                   for f in self.components.values())

    def is_levelwise_surjection(self):
        return all(abgroups.is_surjective(f)
                   for f in self.components.values())


# ---------------------------------------------------------------------------
# the Burnside Mackey functor


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def burnside(N):
    """Burnside Mackey functor: level[d] free on the orbits [C_d/C_e].

    tr raises orbits ([C_d'/C_e] -> [C_d/C_e]); res counts orbits of
    the restricted action; the Weyl action is the identity because it
    fixes isomorphism classes of spans.
    """
    group = CyclicGroupSpec(N)
    levels = {d: FgAbGroup.free(len(divisors(d))) for d in group.divisors}
    res = {}
    tr = {}
    for (dsub, d) in group.covering_pairs():
        basis_d = divisors(d)
        basis_sub = divisors(dsub)
        rmat = []
        for e in basis_d:
            g = _gcd(e, dsub)
            count = d * g // (e * dsub)
            row = [0] * len(basis_sub)
            row[basis_sub.index(g)] = count
            rmat.append(row)
        tmat = []
        for e in basis_sub:
            row = [0] * len(basis_d)
            row[basis_d.index(e)] = 1
            tmat.append(row)
        res[(d, dsub)] = AbHom(levels[d], levels[dsub], rmat, check=False)
        tr[(dsub, d)] = AbHom(levels[dsub], levels[d], tmat, check=False)
    weyl = {d: AbHom.identity(levels[d]) for d in group.divisors}
    return MackeyFunctor(group, levels, res, tr, weyl)


def burnside_basis_vector(d, e):
    """Coordinate vector of the orbit [C_d/C_e] in level d."""
    basis = divisors(d)
    vec = [0] * len(basis)
    vec[basis.index(e)] = 1
    return tuple(vec)


# ---------------------------------------------------------------------------
# fixed points of a group with C_N-action


def fixed_point_levels(A, action, N):
    """Fixed subgroups A^{C_d} with their inclusions into A.

    ``action`` is one automorphism of A of order dividing N (the global
    generator); C_d is generated by its (N/d)-th power.
    """
    if not abgroups.is_isomorphism(action):
        raise ActionOrderInvalid("action is not an automorphism")
    if not action.power(N).equal(AbHom.identity(A)):
        raise ActionOrderInvalid("action order does not divide %d" % N)
    levels = {}
    inclusions = {}
    for d in divisors(N):
        sigma = action.power(N // d)
        kgroup, incl = abgroups.kernel(sigma.sub(AbHom.identity(A)))
        levels[d] = kgroup
        inclusions[d] = incl
    return levels, inclusions


def _factor_through_inclusion(vec, incl):
    pre = abgroups.preimage(incl, vec)
    if pre is None:
        raise AssertionError("element does not lie in the fixed subgroup")
    return pre


def fixed_point_mackey(A, action, N):
    """Mackey functor of fixed points of a C_N-action on A.

    res is the inclusion of fixed points, tr the sum over coset
    representatives, weyl the induced generator action.
    """
    levels, inclusions = fixed_point_levels(A, action, N)
    group = CyclicGroupSpec(N)
    res = {}
    tr = {}
    weyl = {}
    for d in group.divisors:
        incl = inclusions[d]
        rows = [_factor_through_inclusion(action.apply(incl.apply(g)),
                                          incl)
                for g in _gen_vectors(levels[d])]
        weyl[d] = AbHom(levels[d], levels[d], rows, check=True)
    for (dsub, d) in group.covering_pairs():
        rows = [_factor_through_inclusion(inclusions[d].apply(g),
                                          inclusions[dsub])
                for g in _gen_vectors(levels[d])]
        res[(d, dsub)] = AbHom(levels[d], levels[dsub], rows, check=True)
        trows = []
        for g in _gen_vectors(levels[dsub]):
            x = inclusions[dsub].apply(g)
            acc = (0,) * A.ngens
            for j in range(d // dsub):
                acc = A.add(acc, action.power((j * (N // d)) % N).apply(x))
            trows.append(_factor_through_inclusion(acc, inclusions[d]))
        tr[(dsub, d)] = AbHom(levels[dsub], levels[d], trows, check=True)
    return MackeyFunctor(group, levels, res, tr, weyl)


def _gen_vectors(group):
    for i in range(group.ngens):
        vec = [0] * group.ngens
        vec[i] = 1
        yield tuple(vec)


# ---------------------------------------------------------------------------
# box product


class BoxProduct(MackeyFunctor):
    """Day convolution of two Mackey functors over the same group.

    level[d] is generated by symbols g_e(x_i (x) y_j) for e | d and
    generators x_i, y_j of the factor levels at e, modulo bilinearity,
    Weyl stabilization by C_d/C_e, and the Frobenius relations
    g_e(tr x (x) y) = g_e'(x (x) res y) and its mirror.  tr keeps
    symbols, weyl acts diagonally, res is the double coset expansion.
    """

    def __init__(self, left, right):
        if left.group != right.group:
            raise GroupMismatch("box product needs a common group")
        group = left.group
        self.group = group  # needed by the relation builders below
        self.factors = (left, right)
        symbols = {}
        offsets = {}
        for d in group.divisors:
            syms = []
            offs = {}
            for e in divisors(d):
                offs[e] = len(syms)
                for i in range(left.level(e).ngens):
                    for j in range(right.level(e).ngens):
                        syms.append((e, i, j))
            symbols[d] = syms
            offsets[d] = offs
        self.symbols = symbols
        self._offsets = offsets

        levels = {}
        for d in group.divisors:
            levels[d] = FgAbGroup(len(symbols[d]), self._relations(d))
        res = {}
        tr = {}
        weyl = {}
        for d in group.divisors:
            rows = [self._expand(d, e,
                                 left.weyl[e].matrix[i],
                                 right.weyl[e].matrix[j])
                    for (e, i, j) in symbols[d]]
            weyl[d] = AbHom(levels[d], levels[d], rows, check=True)
        for (dsub, d) in group.covering_pairs():
            trows = []
            for (e, i, j) in symbols[dsub]:
                row = [0] * len(symbols[d])
                row[self._index(d, e, i, j)] = 1
                trows.append(row)
            tr[(dsub, d)] = AbHom(levels[dsub], levels[d], trows, check=True)
            rrows = [self._res_row(d, dsub, sym) for sym in symbols[d]]
            res[(d, dsub)] = AbHom(levels[d], levels[dsub], rrows, check=True)
        super().__init__(group, levels, res, tr, weyl)

    # symbol bookkeeping

    def _index(self, d, e, i, j):
        right = self.factors[1]
        return self._offsets[d][e] + i * right.level(e).ngens + j

    def _expand(self, d, e, xvec, yvec):
        """Bilinear expansion of g_e(x (x) y) over the symbols at level d."""
        row = [0] * len(self.symbols[d])
        for i, xi in enumerate(xvec):
            if xi:
                for j, yj in enumerate(yvec):
                    if yj:
                        row[self._index(d, e, i, j)] += xi * yj
        return row

    def _unit_vec(self, n, i):
        v = [0] * n
        v[i] = 1
        return v

    def _relations(self, d):
        left, right = self.factors
        N = self.group.N
        rels = []
        nsym = len(self.symbols[d])
        for e in divisors(d):
            gl = left.level(e)
            gr = right.level(e)
            # bilinearity against the presentations of the factors
            for rel in gl.relations:
                for j in range(gr.ngens):
                    row = self._expand(d, e, rel, self._unit_vec(gr.ngens, j))
                    if any(row):
                        rels.append(row)
            for rel in gr.relations:
                for i in range(gl.ngens):
                    row = self._expand(d, e, self._unit_vec(gl.ngens, i), rel)
                    if any(row):
                        rels.append(row)
            # Weyl stabilization by the generator of C_d/C_e
            if e != d:
                wl = left.weyl[e].power(N // d)
                wr = right.weyl[e].power(N // d)
                for i in range(gl.ngens):
                    for j in range(gr.ngens):
                        row = self._expand(d, e, wl.matrix[i], wr.matrix[j])
                        row[self._index(d, e, i, j)] -= 1
                        if any(row):
                            rels.append(row)
            # Frobenius relations along covering pairs below e
            for q in sorted(set(prime_steps(e))):
                esub = e // q
                trl = left.tr[(esub, e)]
                trr = right.tr[(esub, e)]
                rsl = left.res[(e, esub)]
                rsr = right.res[(e, esub)]
                for i in range(left.level(esub).ngens):
                    for j in range(gr.ngens):
                        row = self._expand(d, e, trl.matrix[i],
                                           self._unit_vec(gr.ngens, j))
                        sub = self._expand(d, esub,
                                           self._unit_vec(
                                               left.level(esub).ngens, i),
                                           rsr.matrix[j])
                        row = [a - b for a, b in zip(row, sub)]
                        if any(row):
                            rels.append(row)
                for i in range(gl.ngens):
                    for j in range(right.level(esub).ngens):
                        row = self._expand(d, e,
                                           self._unit_vec(gl.ngens, i),
                                           trr.matrix[j])
                        sub = self._expand(d, esub, rsl.matrix[i],
                                           self._unit_vec(
                                               right.level(esub).ngens, j))
                        row = [a - b for a, b in zip(row, sub)]
                        if any(row):
                            rels.append(row)
        return rels

    def _res_row(self, d, dsub, sym):
        """Double coset expansion of res applied to one symbol."""
        left, right = self.factors
        N = self.group.N
        (e, i, j) = sym
        g = _gcd(e, dsub)
        l = e * dsub // g
        count = d // l
        rx = left.res_map(e, g).matrix[i]
        ry = right.res_map(e, g).matrix[j]
        row = [0] * len(self.symbols[dsub])
        for t in range(count):
            shift = (t * (N // d)) % (N // g)
            wx = abgroups.vecmat(list(rx),
                                 [list(r) for r in
                                  left.weyl[g].power(shift).matrix])
            wy = abgroups.vecmat(list(ry),
                                 [list(r) for r in
                                  right.weyl[g].power(shift).matrix])
            part = self._expand(dsub, g, wx, wy)
            row = [a + b for a, b in zip(row, part)]
        return row

    def pure_tensor(self, d, e, xvec, yvec):
        """Element g_e(x (x) y) of level d, for x, y at level e | d."""
        return tuple(self._expand(d, e, list(xvec), list(yvec)))


def box_product(left, right):
    return BoxProduct(left, right)


def box_unit_map(box, module):
    """Canonical map burnside(N) [] M -> M for a BoxProduct with the
    Burnside functor on the left; a levelwise isomorphism."""
    comps = {}
    for d in box.group.divisors:
        rows = []
        for (e, i, j) in box.symbols[d]:
            f = divisors(e)[i]  # the orbit [C_e/C_f]
            y = [0] * module.level(e).ngens
            y[j] = 1
            img = module.tr_map(f, d).apply(module.res_map(e, f).apply(y))
            rows.append(img)
        comps[d] = AbHom(box.level(d), module.level(d), rows, check=True)
    return MackeyMap(box, module, comps)


def box_symmetry_map(box, flipped):
    """Canonical isomorphism M [] N -> N [] M on symbols."""
    comps = {}
    for d in box.group.divisors:
        rows = []
        for (e, i, j) in box.symbols[d]:
            row = [0] * len(flipped.symbols[d])
            row[flipped._index(d, e, j, i)] = 1
            rows.append(row)
        comps[d] = AbHom(box.level(d), flipped.level(d), rows, check=True)
    return MackeyMap(box, flipped, comps)


def box_associativity_map(left_assoc, right_assoc):
    """Canonical map (M [] N) [] P -> M [] (N [] P) on symbols.

    A symbol g_e(g_f(x (x) y) (x) z) is sent, via the Frobenius
    relation, to g_f(x (x) g_f(y (x) res z)).
    """
    mn = left_assoc.factors[0]       # BoxProduct of (M, N)
    p_fun = left_assoc.factors[1]
    m_fun = right_assoc.factors[0]
    np_box = right_assoc.factors[1]  # BoxProduct of (N, P)
    n_fun = np_box.factors[0]
    comps = {}
    for d in left_assoc.group.divisors:
        rows = []
        for (e, u, l) in left_assoc.symbols[d]:
            # u indexes a symbol g_f(x_i (x) y_j) of (M [] N).level(e)
            (f, i, j) = mn.symbols[e][u]
            resp = p_fun.res_map(e, f).matrix[l]
            inner = np_box.pure_tensor(f, f,
                                       _unit(n_fun.level(f).ngens, j), resp)
            xvec = _unit(m_fun.level(f).ngens, i)
            rows.append(right_assoc.pure_tensor(d, f, xvec, inner))
        comps[d] = AbHom(left_assoc.level(d), right_assoc.level(d), rows,
                         check=True)
    return MackeyMap(left_assoc, right_assoc, comps)


def _unit(n, i):
    v = [0] * n
    v[i] = 1
    return tuple(v)


# ---------------------------------------------------------------------------
# change of group


def restrict_to_subgroup(M, h):
    """Restriction to C_h; the generator of C_h is the (N/h)-th power
    of the chosen generator of C_N, so weyl gets raised to that power."""
    if M.N % h:
        raise NotASubgroup("%d does not divide %d" % (h, M.N))
    group = CyclicGroupSpec(h)
    levels = {d: M.level(d) for d in group.divisors}
    res = {(d, dsub): M.res[(d, dsub)] for (dsub, d) in group.covering_pairs()}
    tr = {(dsub, d): M.tr[(dsub, d)] for (dsub, d) in group.covering_pairs()}
    weyl = {d: M.weyl[d].power(M.N // h) for d in group.divisors}
    return MackeyFunctor(group, levels, res, tr, weyl)


def zeta(M, m):
    """Reindex along C_N -> C_N/C_m: level[d] of the result is
    M.level[d*m].  The canonical projection sends generator to
    generator, so the stored weyl matrices carry over unchanged."""
    if M.N % m:
        raise NotASubgroup("%d does not divide %d" % (m, M.N))
    group = CyclicGroupSpec(M.N // m)
    levels = {d: M.level(d * m) for d in group.divisors}
    res = {(d, dsub): M.res[(d * m, dsub * m)]
           for (dsub, d) in group.covering_pairs()}
    tr = {(dsub, d): M.tr[(dsub * m, d * m)]
          for (dsub, d) in group.covering_pairs()}
    weyl = {d: M.weyl[d * m] for d in group.divisors}
    return MackeyFunctor(group, levels, res, tr, weyl)


def geometric_fixed_points(M, m):
    """Brauer quotient model of the C_m-geometric fixed points.

    level[d] = M.level[d*m] / sum of transfer images from levels e with
    e | d*m and m not dividing e.  Returns (functor, projection) where
    the projection realizes the canonical map zeta -> Phi.
    """
    if M.N % m:
        raise NotASubgroup("%d does not divide %d" % (m, M.N))
    if m != 1 and len(set(prime_steps(m))) != 1:
        raise ValueError("geometric fixed points need a prime power order")
    source = zeta(M, m)
    group = source.group
    levels = {}
    for d in group.divisors:
        extra = []
        target = M.level(d * m)
        for e in divisors(d * m):
            if e % m:
                t = M.tr_map(e, d * m)
                for row in t.matrix:
                    if any(row):
                        extra.append(list(row))
        levels[d] = FgAbGroup(target.ngens,
                              [list(r) for r in target.relations] + extra)
    res = {}
    tr = {}
    weyl = {}
    for d in group.divisors:
        weyl[d] = AbHom(levels[d], levels[d],
                        source.weyl[d].matrix, check=True)
    for (dsub, d) in group.covering_pairs():
        res[(d, dsub)] = AbHom(levels[d], levels[dsub],
                               source.res[(d, dsub)].matrix, check=True)
        tr[(dsub, d)] = AbHom(levels[dsub], levels[d],
                              source.tr[(dsub, d)].matrix, check=True)
    phi = MackeyFunctor(group, levels, res, tr, weyl)
    proj = MackeyMap(source, phi,
                     {d: AbHom(source.level(d), levels[d],
                               abgroups.identity_matrix(levels[d].ngens),
                               check=False)
                      for d in group.divisors})
    return phi, proj


def weyl_coinvariants(M, d):
    """Level d modulo x - weyl(x); returns (group, projection)."""
    return abgroups.quotient_by_endomorphism_family(
        M.level(d), [M.weyl[d]])

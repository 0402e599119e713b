"""Finitely generated abelian groups and exact integer linear algebra.

A group is presented as Z^ngens modulo the row lattice of an integer
relations matrix.  Elements are integer coordinate vectors over the
generators.  The Smith normal form of the relations matrix is computed
once at construction; it yields the invariant factors and a change of
basis in which equality, lattice membership and enumeration of elements
are all decided by modular reduction.  Everything runs on Python's
arbitrary-precision integers; there is no floating point anywhere.
"""

from fractions import Fraction


# ---------------------------------------------------------------------------
# bare matrix helpers (rows of ints; row vector times matrix convention)

def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix dimensions do not match")
    bcols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * bcols
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def vecmat(v, m):
    """Row vector times matrix."""
    if len(v) != len(m):
        raise ValueError("vector/matrix dimensions do not match")
    ncols = len(m[0]) if m else 0
    acc = [0] * ncols
    for x, row in zip(v, m):
        if x:
            for j, y in enumerate(row):
                if y:
                    acc[j] += x * y
    return acc


def determinant(m):
    """Exact determinant via fraction-based Gaussian elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for t in range(n):
        piv = None
        for i in range(t, n):
            if a[i][t]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != t:
            a[t], a[piv] = a[piv], a[t]
            det = -det
        det *= a[t][t]
        inv = 1 / a[t][t]
        for i in range(t + 1, n):
            if a[i][t]:
                f = a[i][t] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
    assert det.denominator == 1
    return int(det)


def invert_unimodular(m):
    """Inverse of an integer matrix with determinant +-1."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for t in range(n):
        piv = None
        for i in range(t, n):
            if a[i][t]:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        a[t], a[piv] = a[piv], a[t]
        inv = 1 / a[t][t]
        a[t] = [x * inv for x in a[t]]
        for i in range(n):
            if i != t and a[i][t]:
                f = a[i][t]
                a[i] = [x - f * y for x, y in zip(a[i], a[t])]
    out = []
    for row in a:
        ints = []
        for x in row[n:]:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            ints.append(int(x))
        out.append(ints)
    return out


def smith_normal_form(m):
    """Smith normal form with transforms.

    Returns ``(d, left, right)`` with ``left * m * right = d``, where
    ``d`` is diagonal with a divisibility chain d0 | d1 | ... and both
    transforms are unimodular.  Total on arbitrary integer matrices.

    >>> d, l, r = smith_normal_form([[2, 0], [0, 3]])
    >>> [d[0][0], d[1][1]]
    [1, 6]
    """
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    a = [[int(x) for x in row] for row in m]
    left = identity_matrix(nrows)
    right = identity_matrix(ncols)
    t = 0
    while t < min(nrows, ncols):
        # pivot on the smallest nonzero entry of the trailing block
        pivot = None
        best = 0
        for i in range(t, nrows):
            row = a[i]
            for j in range(t, ncols):
                v = row[j]
                if v and (pivot is None or abs(v) < best):
                    pivot = (i, j)
                    best = abs(v)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            left[t], left[pi] = left[pi], left[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
            for row in right:
                row[t], row[pj] = row[pj], row[t]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            left[t] = [-x for x in left[t]]
        piv = a[t][t]
        dirty = False
        for i in range(t + 1, nrows):
            q = a[i][t] // piv
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                left[i] = [x - q * y for x, y in zip(left[i], left[t])]
            if a[i][t]:
                dirty = True
        for j in range(t + 1, ncols):
            q = a[t][j] // piv
            if q:
                for row in a:
                    row[j] -= q * row[t]
                for row in right:
                    row[j] -= q * row[t]
            if a[t][j]:
                dirty = True
        if dirty:
            continue  # leftover remainders are smaller than piv; repick
        # enforce the divisibility chain before advancing
        fold = None
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if a[i][j] % piv:
                    fold = i
                    break
            if fold is not None:
                break
        if fold is not None:
            a[t] = [x + y for x, y in zip(a[t], a[fold])]
            left[t] = [x + y for x, y in zip(left[t], left[fold])]
            continue
        t += 1
    d = tuple(tuple(row) for row in a)
    return d, tuple(tuple(r) for r in left), tuple(tuple(r) for r in right)


# ---------------------------------------------------------------------------


class FgAbGroup:
    """A finitely generated abelian group Z^ngens / row lattice.

    >>> g = FgAbGroup(2, [[2, 0]])     # Z/2 + Z
    >>> g.invariant_factors
    (2, 0)
    >>> g.equal((1, 0), (3, 0))
    True
    >>> g.equal((1, 0), (0, 1))
    False
    """

    __slots__ = ("ngens", "relations", "_dvec", "_right", "_rinv",
                 "_invariants")

    def __init__(self, ngens, relations=()):
        ngens = int(ngens)
        if ngens < 0:
            raise ValueError("ngens must be nonnegative")
        rel = tuple(tuple(int(x) for x in row) for row in relations)
        for row in rel:
            if len(row) != ngens:
                raise ValueError("relation width does not match ngens")
        object.__setattr__(self, "ngens", ngens)
        object.__setattr__(self, "relations", rel)
        if rel:
            d, _left, right = smith_normal_form(rel)
            dvec = [d[i][i] if i < len(rel) else 0 for i in range(ngens)]
        else:
            right = tuple(tuple(r) for r in identity_matrix(ngens))
            dvec = [0] * ngens
        object.__setattr__(self, "_dvec", tuple(dvec))
        object.__setattr__(self, "_right", right)
        rinv = invert_unimodular([list(r) for r in right]) if ngens else []
        object.__setattr__(self, "_rinv", tuple(tuple(r) for r in rinv))
        inv = tuple(x for x in dvec if x != 1)
        object.__setattr__(self, "_invariants", inv)

    def __setattr__(self, name, value):
        raise AttributeError("FgAbGroup instances are immutable")

    # -- presentation data

    @classmethod
    def free(cls, rank):
        return cls(rank)

    @classmethod
    def from_invariant_factors(cls, factors):
        factors = [int(x) for x in factors]
        rels = []
        for i, f in enumerate(factors):
            if f:
                row = [0] * len(factors)
                row[i] = f
                rels.append(row)
        return cls(len(factors), rels)

    @property
    def invariant_factors(self):
        """Invariant factors d1 | d2 | ..., trailing zeros = free rank."""
        return self._invariants

    def zero(self):
        return (0,) * self.ngens

    # -- element arithmetic (elements are coordinate tuples)

    def canonical(self, x):
        """Canonical form of an element; equal iff canonical forms agree."""
        if len(x) != self.ngens:
            raise ValueError("element has wrong length")
        z = vecmat(list(x), [list(r) for r in self._right])
        out = []
        for zi, di in zip(z, self._dvec):
            out.append(zi % di if di else zi)
        return tuple(out)

    def is_zero(self, x):
        return not any(self.canonical(x))

    def equal(self, x, y):
        return self.canonical(x) == self.canonical(y)

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a for a in x)

    def scale(self, c, x):
        return tuple(c * a for a in x)

    # -- global structure

    def order(self):
        """Number of elements, or None when the group is infinite."""
        total = 1
        for d in self._dvec:
            if d == 0:
                return None
            total *= d
        return total

    def is_trivial(self):
        return self.order() == 1

    def elements(self):
        """Iterate over all elements of a finite group, in a fixed order."""
        if self.order() is None:
            raise ValueError("group is infinite")
        rinv = [list(r) for r in self._rinv]

        def rec(prefix, idx):
            if idx == self.ngens:
                yield tuple(vecmat(prefix, rinv))
                return
            for v in range(self._dvec[idx]):
                yield from rec(prefix + [v], idx + 1)

        if self.ngens == 0:
            yield ()
        else:
            yield from rec([], 0)

    def random_element(self, rng, bound=9):
        return tuple(rng.randint(-bound, bound) for _ in range(self.ngens))

    def to_json(self):
        """Invariant factors plus, when needed, the raw presentation.

        The presentation fields keep generator indices of stored
        matrices meaningful after a round trip.
        """
        data = {"invariant_factors": list(self.invariant_factors)}
        if self.relations or self.ngens != len(self.invariant_factors):
            data["ngens"] = self.ngens
            data["relations"] = [list(r) for r in self.relations]
        return data

    @classmethod
    def from_json(cls, data):
        if "relations" in data:
            return cls(data["ngens"], data["relations"])
        return cls.from_invariant_factors(data["invariant_factors"])

    def describe(self):
        parts = []
        for d in self.invariant_factors:
            parts.append("Z" if d == 0 else "Z/%d" % d)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "FgAbGroup(%d gens, %s)" % (self.ngens, self.describe())


class AbHom:
    """Homomorphism between presented groups, as a matrix on generators.

    Rows are indexed by the generators of the source.  Construction
    checks well-definedness: every relation of the source must map into
    the relation lattice of the target.
    """

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, check=True):
        matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        if len(matrix) != source.ngens:
            raise ValueError("matrix has wrong number of rows")
        for row in matrix:
            if len(row) != target.ngens:
                raise ValueError("matrix has wrong number of columns")
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "matrix", matrix)
        if check:
            for rel in source.relations:
                img = vecmat(list(rel), [list(r) for r in matrix])
                if not target.is_zero(img):
                    raise ValueError(
                        "map does not preserve relations: %r" % (rel,))

    def __setattr__(self, name, value):
        raise AttributeError("AbHom instances are immutable")

    @classmethod
    def identity(cls, group):
        return cls(group, group, identity_matrix(group.ngens), check=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target,
                   [[0] * target.ngens for _ in range(source.ngens)],
                   check=False)

    @classmethod
    def scalar(cls, group, c):
        return cls(group, group,
                   [[c if i == j else 0 for j in range(group.ngens)]
                    for i in range(group.ngens)], check=False)

    def apply(self, x):
        if len(x) != self.source.ngens:
            raise ValueError("element has wrong length")
        if self.source.ngens == 0:
            return (0,) * self.target.ngens
        return tuple(vecmat(list(x), [list(r) for r in self.matrix]))

    def compose(self, inner):
        """self after inner."""
        if inner.target is not self.source and \
                inner.target.ngens != self.source.ngens:
            raise ValueError("homomorphisms do not compose")
        if self.source.ngens == 0:
            mat = [[0] * self.target.ngens
                   for _ in range(inner.source.ngens)]
        else:
            mat = matmul([list(r) for r in inner.matrix],
                         [list(r) for r in self.matrix])
        return AbHom(inner.source, self.target, mat, check=False)

    def add(self, other):
        mat = [[a + b for a, b in zip(r1, r2)]
               for r1, r2 in zip(self.matrix, other.matrix)]
        return AbHom(self.source, self.target, mat, check=False)

    def sub(self, other):
        mat = [[a - b for a, b in zip(r1, r2)]
               for r1, r2 in zip(self.matrix, other.matrix)]
        return AbHom(self.source, self.target, mat, check=False)

    def scale_by(self, c):
        mat = [[c * a for a in row] for row in self.matrix]
        return AbHom(self.source, self.target, mat, check=False)

    def power(self, j):
        """j-fold composite of an endomorphism."""
        if self.source.ngens != self.target.ngens:
            raise ValueError("power of a non-endomorphism")
        out = AbHom.identity(self.source)
        for _ in range(j):
            out = self.compose(out)
        return out

    def equal(self, other):
        if self.source.ngens != other.source.ngens or \
                self.target.ngens != other.target.ngens:
            return False
        for r1, r2 in zip(self.matrix, other.matrix):
            if self.target.canonical(r1) != self.target.canonical(r2):
                return False
        return True

    def is_zero_hom(self):
        return all(self.target.is_zero(row) for row in self.matrix)

    def to_json(self):
        return {"matrix": [list(r) for r in self.matrix]}

    def __repr__(self):
        return "AbHom(%d -> %d gens)" % (self.source.ngens, self.target.ngens)


# ---------------------------------------------------------------------------
# derived constructions


def _left_kernel_lattice(m, nrows, ncols):
    """Basis rows v with v * m = 0, for an explicit nrows x ncols matrix."""
    if nrows == 0:
        return []
    d, left, _right = smith_normal_form(m)
    rank = 0
    for i in range(min(nrows, ncols)):
        if d[i][i]:
            rank += 1
    return [list(left[i]) for i in range(rank, nrows)]


def _solution_lattice(hom):
    """Basis of the lattice {x in Z^src : hom(x) = 0 in target}."""
    src, tgt = hom.source, hom.target
    stacked = [list(r) for r in hom.matrix] + [list(r) for r in tgt.relations]
    basis = _left_kernel_lattice(stacked, len(stacked), tgt.ngens)
    return [row[:src.ngens] for row in basis]


def kernel(hom):
    """Kernel subgroup with its inclusion into the source.

    >>> z = FgAbGroup.free(1)
    >>> k, incl = kernel(AbHom(z, z, [[3]]))
    >>> k.invariant_factors
    ()
    """
    src = hom.source
    kgens = _solution_lattice(hom)
    if not kgens:
        triv = FgAbGroup(0)
        return triv, AbHom(triv, src, [], check=False)
    incl_matrix = kgens
    # relations among the kernel generators, taken inside the source group
    stacked = [list(r) for r in incl_matrix] + \
        [list(r) for r in src.relations]
    basis = _left_kernel_lattice(stacked, len(stacked), src.ngens)
    rels = [row[:len(kgens)] for row in basis]
    kgroup = FgAbGroup(len(kgens), rels)
    return kgroup, AbHom(kgroup, src, incl_matrix, check=True)


def image(hom):
    """Image subgroup with its inclusion into the target."""
    src, tgt = hom.source, hom.target
    rels = _solution_lattice(hom)
    igroup = FgAbGroup(src.ngens, rels)
    return igroup, AbHom(igroup, tgt, [list(r) for r in hom.matrix],
                         check=True)


def cokernel(hom):
    """Target modulo image, with the projection from the target.

    >>> z = FgAbGroup.free(1)
    >>> c, proj = cokernel(AbHom(z, z, [[3]]))
    >>> c.invariant_factors
    (3,)
    """
    tgt = hom.target
    rels = [list(r) for r in tgt.relations] + [list(r) for r in hom.matrix]
    cgroup = FgAbGroup(tgt.ngens, rels)
    proj = AbHom(tgt, cgroup, identity_matrix(tgt.ngens), check=False)
    return cgroup, proj


def quotient_by_endomorphism_family(group, endos):
    """Coinvariants: quotient by the subgroup generated by x - phi(x)."""
    rels = [list(r) for r in group.relations]
    for phi in endos:
        if phi.source is not group and phi.source.ngens != group.ngens:
            raise ValueError("endomorphism does not act on the group")
        for i in range(group.ngens):
            row = [-x for x in phi.matrix[i]]
            row[i] += 1
            if any(row):
                rels.append(row)
    q = FgAbGroup(group.ngens, rels)
    return q, AbHom(group, q, identity_matrix(group.ngens), check=False)


def direct_sum(*groups):
    """Direct sum with coordinate injections and projections."""
    ngens = sum(g.ngens for g in groups)
    rels = []
    offset = 0
    for g in groups:
        for row in g.relations:
            full = [0] * ngens
            full[offset:offset + g.ngens] = list(row)
            rels.append(full)
        offset += g.ngens
    total = FgAbGroup(ngens, rels)
    injections = []
    projections = []
    offset = 0
    for g in groups:
        inj = [[0] * ngens for _ in range(g.ngens)]
        prj = [[0] * g.ngens for _ in range(ngens)]
        for i in range(g.ngens):
            inj[i][offset + i] = 1
            prj[offset + i][i] = 1
        injections.append(AbHom(g, total, inj, check=False))
        projections.append(AbHom(total, g, prj, check=True))
        offset += g.ngens
    return total, injections, projections


def tensor(a, b):
    """Tensor product with the bilinear pairing on elements.

    >>> t, pair = tensor(FgAbGroup.from_invariant_factors([9]),
    ...                  FgAbGroup.from_invariant_factors([3]))
    >>> t.invariant_factors
    (3,)
    """
    na, nb = a.ngens, b.ngens
    ngens = na * nb

    def idx(i, j):
        return i * nb + j

    rels = []
    for row in a.relations:
        for j in range(nb):
            full = [0] * ngens
            for i, c in enumerate(row):
                full[idx(i, j)] = c
            rels.append(full)
    for row in b.relations:
        for i in range(na):
            full = [0] * ngens
            for j, c in enumerate(row):
                full[idx(i, j)] = c
            rels.append(full)
    t = FgAbGroup(ngens, rels)

    def pair(x, y):
        out = [0] * ngens
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        out[idx(i, j)] += xi * yj
        return tuple(out)

    return t, pair


def is_injective(hom):
    for row in _solution_lattice(hom):
        if not hom.source.is_zero(row):
            return False
    return True


def is_surjective(hom):
    cgroup, _ = cokernel(hom)
    return cgroup.is_trivial()


def is_isomorphism(hom):
    return is_injective(hom) and is_surjective(hom)


def preimage(hom, y):
    """Some x with hom(x) = y in the target, or None."""
    src, tgt = hom.source, hom.target
    stacked = [list(r) for r in hom.matrix] + [list(r) for r in tgt.relations]
    nrows = len(stacked)
    if nrows == 0:
        return src.zero() if tgt.is_zero(y) else None
    d, left, right = smith_normal_form(stacked)
    z = vecmat(list(y), [list(r) for r in right])
    w = [0] * nrows
    for j in range(tgt.ngens):
        dj = d[j][j] if j < min(nrows, tgt.ngens) else 0
        if dj:
            if z[j] % dj:
                return None
            w[j] = z[j] // dj
        elif z[j]:
            return None
    v = vecmat(w, [list(r) for r in left])
    return tuple(v[:src.ngens])


def compose(outer, inner):
    """Function form of AbHom.compose."""
    return outer.compose(inner)

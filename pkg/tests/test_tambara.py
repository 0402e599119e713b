"""Tests for Green and Tambara functors, norms, and the norm functor.

Burnside norms are checked against a direct function-enumeration
oracle: realize an honest G-set, enumerate the twisted function set
Map_{C_{d'}}(C_d, X) and count orbits with their stabilizers.
"""

import random
from itertools import product as iproduct

import pytest

from wittlab.abgroups import AbHom, FgAbGroup
from wittlab.errors import NotASubgroup, PrimeDividesN, UnsupportedInput
from wittlab.mackey import box_product, divisors
from wittlab.rings import IntegerRing, ModularRing
from wittlab.tambara import (ActionRing, burnside_from_marks,
                             burnside_tambara, burnside_to_marks,
                             constant_tambara, fixed_point_tambara,
                             green_from_json, norm_functor,
                             present_integer_witt, present_witt_ring,
                             zeta_green)
from wittlab.witt import WittRing


def norm_by_function_enumeration(dsub, d, orbit_stabilizers):
    """Enumeration oracle for Burnside norms on an honest C_dsub-set.

    ``orbit_stabilizers`` lists the stabilizer order e | dsub of each
    orbit.  Returns coordinates over the orbit basis of A(C_d).
    """
    points = []
    for oi, e in enumerate(orbit_stabilizers):
        for j in range(dsub // e):
            points.append((oi, j))
    index = {pt: i for i, pt in enumerate(points)}

    def act(i):
        oi, j = points[i]
        size = dsub // orbit_stabilizers[oi]
        return index[(oi, (j + 1) % size)]

    s = d // dsub
    counts = {e: 0 for e in divisors(d)}
    visited = set()
    for f in iproduct(range(len(points)), repeat=s):
        if f in visited:
            continue
        orbit = []
        cur = f
        while cur not in orbit:
            orbit.append(cur)
            visited.add(cur)
            cur = cur[1:] + (act(cur[0]),)
        stab_order = d // len(orbit)
        counts[stab_order] += 1
    divs = divisors(d)
    return tuple(counts[e] for e in divs)


class TestBurnsideGreen:
    def test_orbit_product(self):
        t = burnside_tambara(3)
        free = (1, 0)  # [C3/e]
        assert t.green.multiply(3, free, free) == (3, 0)

    def test_validates(self):
        rng = random.Random(0)
        for n in (1, 2, 3, 6):
            t = burnside_tambara(n)
            t.green.validate_green(rng)
            t.validate_tambara(rng)

    def test_marks_round_trip(self):
        rng = random.Random(1)
        for d in (2, 3, 6, 12):
            for _ in range(10):
                x = tuple(rng.randint(-5, 5) for _ in divisors(d))
                assert burnside_from_marks(d, burnside_to_marks(d, x)) == x


class TestBurnsideNorms:
    def test_norm_of_two_element_set(self):
        t = burnside_tambara(3)
        # 2 in A(e) is a 2-element trivial set; 8 functions C_3 -> {0,1}
        got = t.internal_norm((2,), 1, 3)
        oracle = norm_by_function_enumeration(1, 3, [1, 1])
        assert got == oracle == (2, 2)

    def test_norm_against_enumeration_oracle(self):
        t = burnside_tambara(6)
        cases = [
            (1, 2, [1, 1, 1]),
            (1, 3, [1]),
            (2, 6, [1, 2]),      # one free orbit and one fixed point
            (2, 6, [2, 2]),
            (3, 6, [1, 3]),
        ]
        for dsub, d, orbits in cases:
            x = [0] * len(divisors(dsub))
            for e in orbits:
                x[divisors(dsub).index(e)] += 1
            got = t.internal_norm(tuple(x), dsub, d)
            assert got == norm_by_function_enumeration(dsub, d, orbits)

    def test_norm_transitivity(self):
        t = burnside_tambara(12)
        rng = random.Random(2)
        for _ in range(10):
            x = tuple(rng.randint(-3, 3) for _ in divisors(1))
            one_step = t.internal_norm(x, 1, 12)
            via = t.internal_norm(t.internal_norm(x, 1, 2), 2, 12)
            assert one_step == via

    def test_res_norm_power_on_integers(self):
        for k in (1, 2):
            t = burnside_tambara(3 ** k)
            for x in range(-5, 6):
                n = t.internal_norm((x,), 1, 3 ** k)
                down = t.mackey.res_map(3 ** k, 1).apply(n)
                assert down == (x ** (3 ** k),)

    def test_not_a_subgroup(self):
        t = burnside_tambara(6)
        with pytest.raises(NotASubgroup):
            t.internal_norm((1, 0), 2, 3)


class TestFixedPointTambara:
    def test_constant_f3_norm_is_square(self):
        r = constant_tambara(ModularRing(3), 2)
        pres = r.payload["presentation"]
        for a in range(3):
            got = r.internal_norm(pres.encode(a), 1, 2)
            assert r.green.level(2).equal(got, pres.encode((a * a) % 3))

    def test_norm_not_additive_over_z(self):
        r = constant_tambara(IntegerRing(), 2)
        # n(1 + 1) = 4, not 2
        assert r.internal_norm((2,), 1, 2) == (4,)

    def test_res_norm_is_weyl_orbit_product(self):
        rng = random.Random(3)
        z2 = FgAbGroup.free(2)
        swap = AbHom(z2, z2, [[0, 1], [1, 0]])
        ring = ActionRing(z2, [[(1, 0), (0, 0)], [(0, 0), (0, 1)]],
                          (1, 1), swap)
        t = fixed_point_tambara(ring, 2)
        t.green.validate_green(rng)
        t.validate_tambara(rng)
        # explicitly: res(norm(x)) = x * swap(x) at the bottom
        x = (2, 5)
        n = t.internal_norm(x, 1, 2)
        down = t.mackey.res_map(2, 1).apply(n)
        expected = ring.multiply(x, swap.apply(x))
        assert t.green.level(1).equal(down, expected)

    def test_validates_on_battery(self):
        rng = random.Random(4)
        for spec, n in ((ModularRing(3), 2), (ModularRing(4), 1),
                        (IntegerRing(), 2)):
            t = constant_tambara(spec, n)
            t.green.validate_green(rng)
            t.validate_tambara(rng)

    def test_action_must_be_ring_automorphism(self):
        z = FgAbGroup.free(1)
        with pytest.raises(ValueError):
            ActionRing(z, [[(1,)]], (1,), AbHom(z, z, [[-1]]))


class TestNormFunctor:
    def test_burnside_class(self):
        out = norm_functor(burnside_tambara(2), 3, 1)
        assert out.kind == "burnside"
        assert out.group.N == 6
        ref = burnside_tambara(6)
        for d in divisors(6):
            assert out.green.mul[d] == ref.green.mul[d]
            assert out.green.one[d] == ref.green.one[d]

    def test_prime_divides_n(self):
        with pytest.raises(PrimeDividesN):
            norm_functor(burnside_tambara(3), 3, 1)
        with pytest.raises(PrimeDividesN):
            norm_functor(constant_tambara(ModularRing(3), 2), 2, 1)

    def test_unsupported_inputs(self):
        z2 = FgAbGroup.free(2)
        swap = AbHom(z2, z2, [[0, 1], [1, 0]])
        ring = ActionRing(z2, [[(1, 0), (0, 0)], [(0, 0), (0, 1)]],
                          (1, 1), swap)
        t = fixed_point_tambara(ring, 2)
        with pytest.raises(UnsupportedInput):
            norm_functor(t, 3, 1)

    def test_constant_tower_shape(self):
        rng = random.Random(5)
        w = norm_functor(constant_tambara(ModularRing(3), 2), 3, 1)
        w.green.validate_green(rng)
        w.validate_tambara(rng)
        levels = {d: w.green.level(d).invariant_factors for d in divisors(6)}
        assert levels == {1: (3,), 2: (3,), 3: (9,), 6: (9,)}

    def test_constant_tower_maps_are_witt_operators(self):
        w = norm_functor(constant_tambara(ModularRing(3), 1), 3, 2)
        pres = w.payload["presentations"]
        rings = w.payload["witt_rings"]
        # res along p = Frobenius, tr = Verschiebung, exhaustively
        for q in (1, 2):
            res = w.mackey.res[(3 ** q, 3 ** (q - 1))]
            tr = w.mackey.tr[(3 ** (q - 1), 3 ** q)]
            for x in rings[q].elements():
                got = res.apply(pres[q].encode(x))
                assert pres[q - 1].group.equal(
                    got, pres[q - 1].encode(rings[q].frobenius(x)))
            for y in rings[q - 1].elements():
                got = tr.apply(pres[q - 1].encode(y))
                assert pres[q].group.equal(
                    got, pres[q].encode(rings[q].verschiebung(y)))

    def test_mixed_orbit_box_consistency(self):
        # the closed form at the free orbit agrees with the box-product
        # decomposition M^{[] p} of the underlying Mackey functor
        r = constant_tambara(ModularRing(3), 2)
        w = norm_functor(r, 3, 1)
        cube = box_product(r.mackey,
                           box_product(r.mackey, r.mackey))
        assert cube.level(1).invariant_factors == \
            w.green.level(1).invariant_factors == (3,)

    def test_z9_identification(self):
        w = norm_functor(constant_tambara(ModularRing(3), 2), 3, 1)
        assert w.green.level(3).invariant_factors == (9,)
        # restriction to the free orbit is reduction mod 3
        res = w.mackey.res_map(3, 1)
        unit3 = w.green.one[3]
        unit1 = w.green.one[1]
        lvl1 = w.green.level(1)
        for c in range(9):
            got = res.apply(tuple(c * v for v in unit3))
            assert lvl1.equal(got, tuple((c % 3) * v for v in unit1))


class TestPresentations:
    def test_finite_witt_presentation_faithful(self):
        wr = WittRing(3, 2, ModularRing(4))
        pres = present_witt_ring(wr)
        assert pres.group.order() == 16
        for x in wr.elements():
            assert wr.eq(pres.decode(pres.encode(x)), x)

    def test_integer_witt_presentation(self):
        wr = WittRing(3, 3, IntegerRing())
        pres = present_integer_witt(wr)
        rng = random.Random(6)
        for _ in range(20):
            x = wr.vector([rng.randint(-9, 9) for _ in range(3)])
            assert wr.eq(pres.decode(pres.encode(x)), x)
            y = wr.vector([rng.randint(-9, 9) for _ in range(3)])
            # encoding is additive
            assert pres.group.equal(
                pres.encode(wr.add(x, y)),
                pres.group.add(pres.encode(x), pres.encode(y)))


class TestZetaGreen:
    def test_transport(self):
        rng = random.Random(7)
        r = norm_functor(constant_tambara(ModularRing(3), 2), 3, 1)
        z = zeta_green(r.green, 3)
        z.validate_green(rng)
        assert z.mackey.N == 2
        assert z.level(1).invariant_factors == (9,)


class TestGreenJson:
    def test_round_trip(self):
        rng = random.Random(8)
        g = burnside_tambara(6).green
        back = green_from_json(g.to_json())
        back.validate_green(rng)
        for d in divisors(6):
            assert back.mul[d] == g.mul[d]

"""Tests for Mackey functors over cyclic groups."""

import pytest

from wittlab.abgroups import AbHom, FgAbGroup, identity_matrix, tensor
from wittlab.errors import ActionOrderInvalid, GroupMismatch, NotASubgroup
from wittlab.mackey import (CyclicGroupSpec, MackeyFunctor, MackeyMap,
                            box_associativity_map, box_product,
                            box_symmetry_map, box_unit_map, burnside,
                            burnside_basis_vector, divisors,
                            fixed_point_mackey, geometric_fixed_points,
                            restrict_to_subgroup, weyl_coinvariants, zeta)


def sign_z_over_c2():
    z = FgAbGroup.free(1)
    return fixed_point_mackey(z, AbHom(z, z, [[-1]]), 2)


def const_f3_over_c2():
    f3 = FgAbGroup.from_invariant_factors([3])
    return fixed_point_mackey(f3, AbHom.identity(f3), 2)


BATTERY = None


def battery():
    global BATTERY
    if BATTERY is None:
        BATTERY = {
            "A2": burnside(2),
            "A6": burnside(6),
            "constF3": const_f3_over_c2(),
            "signZ": sign_z_over_c2(),
        }
    return BATTERY


class TestCyclicGroupSpec:
    def test_divisors(self):
        assert CyclicGroupSpec(12).divisors == (1, 2, 3, 4, 6, 12)

    def test_covering_pairs(self):
        assert set(CyclicGroupSpec(6).covering_pairs()) == {
            (1, 2), (1, 3), (2, 6), (3, 6)}


class TestBurnside:
    def test_levels_are_free_on_orbits(self):
        a = burnside(6)
        assert [a.level(d).ngens for d in (1, 2, 3, 6)] == [1, 2, 2, 4]
        a.validate()

    def test_n2_maps(self):
        a = burnside(2)
        # res([C2/e]) = 2, res([C2/C2]) = 1 down on level 1
        assert a.res[(2, 1)].apply(burnside_basis_vector(2, 1)) == (2,)
        assert a.res[(2, 1)].apply(burnside_basis_vector(2, 2)) == (1,)
        # tr(1) = [C2/e]
        assert a.tr[(1, 2)].apply((1,)) == burnside_basis_vector(2, 1)

    def test_n1_is_constant_z(self):
        a = burnside(1)
        assert a.level(1).invariant_factors == (0,)

    def test_double_coset_at_bottom(self):
        a = burnside(2)
        rt = a.res_map(2, 1).compose(a.tr_map(1, 2))
        assert rt.matrix == ((2,),)

    def test_weyl_trivial(self):
        a = burnside(6)
        for d in divisors(6):
            assert a.weyl[d].equal(AbHom.identity(a.level(d)))


class TestFixedPoints:
    def test_constant_f3(self):
        c = const_f3_over_c2()
        c.validate()
        assert c.level(1).invariant_factors == (3,)
        assert c.level(2).invariant_factors == (3,)
        assert c.res[(2, 1)].equal(AbHom.identity(c.level(1)))
        assert c.tr[(1, 2)].equal(AbHom.scalar(c.level(1), 2))

    def test_sign_action(self):
        s = sign_z_over_c2()
        s.validate()
        assert s.level(1).invariant_factors == (0,)
        assert s.level(2).is_trivial()

    def test_tr_then_res_is_orbit_sum(self):
        # on the fixed-point functor of Z^2 with swap action
        z2 = FgAbGroup.free(2)
        swap = AbHom(z2, z2, [[0, 1], [1, 0]])
        m = fixed_point_mackey(z2, swap, 2)
        m.validate()
        rt = m.res_map(2, 1).compose(m.tr_map(1, 2))
        expected = AbHom.identity(m.level(1)).add(m.weyl[1])
        assert rt.equal(expected)

    def test_invalid_action_order(self):
        z = FgAbGroup.free(1)
        doubling = AbHom(z, z, [[2]])
        with pytest.raises(ActionOrderInvalid):
            fixed_point_mackey(z, doubling, 2)


class TestBoxProduct:
    def test_group_mismatch(self):
        with pytest.raises(GroupMismatch):
            box_product(burnside(2), burnside(6))

    def test_every_battery_functor_validates(self):
        for m in battery().values():
            m.validate()

    @pytest.mark.parametrize("name", ["A6", "constF3", "signZ"])
    def test_unit_isomorphism(self, name):
        m = battery()[name]
        unit = burnside(m.N)
        bx = box_product(unit, m)
        bx.validate()
        u = box_unit_map(bx, m)
        assert u.is_levelwise_isomorphism()

    def test_symmetry(self):
        m, n = battery()["constF3"], battery()["signZ"]
        bx = box_product(m, n)
        bx.validate()
        sym = box_symmetry_map(bx, box_product(n, m))
        assert sym.is_levelwise_isomorphism()
        a6 = battery()["A6"]
        bx6 = box_product(a6, a6)
        sym6 = box_symmetry_map(bx6, box_product(a6, a6))
        assert sym6.is_levelwise_isomorphism()

    def test_associativity_over_c2(self):
        a2, c, s = battery()["A2"], battery()["constF3"], battery()["signZ"]
        left = box_product(box_product(a2, c), s)
        right = box_product(a2, box_product(c, s))
        assoc = box_associativity_map(left, right)
        assert assoc.is_levelwise_isomorphism()

    def test_associativity_over_c6(self):
        a6 = battery()["A6"]
        left = box_product(box_product(a6, a6), a6)
        right = box_product(a6, box_product(a6, a6))
        assoc = box_associativity_map(left, right)
        assert assoc.is_levelwise_isomorphism()

    def test_bottom_level_is_tensor(self):
        m, n = battery()["constF3"], battery()["signZ"]
        bx = box_product(m, n)
        t, pair = tensor(m.level(1), n.level(1))
        # the canonical map from the tensor presentation
        gens = []
        for i in range(m.level(1).ngens):
            for j in range(n.level(1).ngens):
                x = tuple(1 if a == i else 0
                          for a in range(m.level(1).ngens))
                y = tuple(1 if b == j else 0
                          for b in range(n.level(1).ngens))
                gens.append(bx.pure_tensor(1, 1, x, y))
        hom = AbHom(t, bx.level(1), gens)
        from wittlab.abgroups import is_isomorphism
        assert is_isomorphism(hom)

    def test_restriction_commutes_with_box(self):
        a6 = battery()["A6"]
        big = box_product(a6, a6)
        restricted = restrict_to_subgroup(big, 2)
        boxed = box_product(restrict_to_subgroup(a6, 2),
                            restrict_to_subgroup(a6, 2))
        comps = {d: AbHom(restricted.level(d), boxed.level(d),
                          identity_matrix(restricted.level(d).ngens))
                 for d in (1, 2)}
        m = MackeyMap(restricted, boxed, comps)
        assert m.is_levelwise_isomorphism()


class TestRestrictAndZeta:
    def test_restrict_burnside(self):
        a6 = burnside(6)
        a2 = restrict_to_subgroup(a6, 2)
        a2.validate()
        ref = burnside(2)
        comps = {d: AbHom(a2.level(d), ref.level(d),
                          identity_matrix(a2.level(d).ngens))
                 for d in (1, 2)}
        m = MackeyMap(a2, ref, comps)
        assert m.is_levelwise_isomorphism()

    def test_restrict_to_full_group(self):
        a6 = burnside(6)
        same = restrict_to_subgroup(a6, 6)
        assert same.level(6) is a6.level(6)
        assert same.weyl[1].equal(a6.weyl[1])

    def test_restrict_not_a_subgroup(self):
        with pytest.raises(NotASubgroup):
            restrict_to_subgroup(burnside(6), 4)

    def test_zeta_trivial(self):
        a6 = burnside(6)
        z = zeta(a6, 1)
        assert z.level(6) is a6.level(6)

    def test_zeta_reindexes(self):
        z = zeta(burnside(6), 2)
        assert z.N == 3
        assert z.level(1).invariant_factors == (0, 0)
        z.validate()


class TestGeometricFixedPoints:
    def test_burnside_brauer_quotient(self):
        phi, proj = geometric_fixed_points(burnside(3), 3)
        level = phi.level(1)
        assert level.invariant_factors == (0,)
        assert level.is_zero(burnside_basis_vector(3, 1))
        fixed_class = level.canonical(burnside_basis_vector(3, 3))
        assert any(fixed_class)
        # [C_3/C_3] generates: sending 1 -> [C_3/C_3] is an isomorphism
        z = FgAbGroup.free(1)
        gen = AbHom(z, level, [burnside_basis_vector(3, 3)])
        from wittlab.abgroups import is_isomorphism
        assert is_isomorphism(gen)

    def test_trivial_subgroup(self):
        a6 = burnside(6)
        phi, proj = geometric_fixed_points(a6, 1)
        for d in divisors(6):
            assert phi.level(d).invariant_factors == \
                a6.level(d).invariant_factors

    def test_projection_surjective(self):
        phi, proj = geometric_fixed_points(burnside(6), 2)
        assert proj.is_levelwise_surjection()

    def test_monoidal_on_burnside_pair(self):
        # Phi(A [] A) and Phi(A) [] Phi(A) for A = burnside(3)
        a3 = burnside(3)
        bx = box_product(a3, a3)
        phi_box, _ = geometric_fixed_points(bx, 3)
        phi_a, _ = geometric_fixed_points(a3, 3)
        boxed_phi = box_product(phi_a, phi_a)
        # the canonical comparison sends symbols with 3 | e to the
        # corresponding symbol of the quotients, the rest to zero
        rows = []
        for (e, i, j) in bx.symbols[3]:
            if e % 3 == 0:
                rows.append(boxed_phi.pure_tensor(
                    1, e // 3,
                    tuple(1 if a == i else 0
                          for a in range(phi_a.level(e // 3).ngens)),
                    tuple(1 if b == j else 0
                          for b in range(phi_a.level(e // 3).ngens))))
            else:
                rows.append((0,) * boxed_phi.level(1).ngens)
        hom = AbHom(phi_box.level(1), boxed_phi.level(1), rows)
        from wittlab.abgroups import is_isomorphism
        assert is_isomorphism(hom)

    def test_composite_order_rejected(self):
        with pytest.raises(ValueError):
            geometric_fixed_points(burnside(6), 6)


class TestWeylCoinvariants:
    def test_trivial_action(self):
        a6 = burnside(6)
        for d in divisors(6):
            q, proj = weyl_coinvariants(a6, d)
            assert q.invariant_factors == a6.level(d).invariant_factors

    def test_sign_action(self):
        s = sign_z_over_c2()
        q, proj = weyl_coinvariants(s, 1)
        assert q.invariant_factors == (2,)


class TestJson:
    def test_round_trip(self):
        a6 = burnside(6)
        data = a6.to_json()
        back = MackeyFunctor.from_json(data)
        back.validate()
        for d in divisors(6):
            assert back.level(d).invariant_factors == \
                a6.level(d).invariant_factors
        assert back.res[(6, 3)].matrix == a6.res[(6, 3)].matrix

    def test_covering_keys_only(self):
        data = burnside(6).to_json()
        assert set(data["res"]) == {"1<-2", "1<-3", "2<-6", "3<-6"}
        assert set(data["tr"]) == {"1->2", "1->3", "2->6", "3->6"}

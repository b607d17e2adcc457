from fractions import Fraction

import pytest

from ncreflect.exprs import parse
from ncreflect.hopf import (
    Character,
    CharacterGroup,
    Group,
    HopfAction,
    HopfAlgebra,
    apply_columns,
    central_idempotents,
    dual_group_algebra,
    dual_group_characters,
    group_algebra,
    group_linear_characters,
    winding_left_cols,
    winding_right_cols,
)
from ncreflect.linalg import Matrix
from ncreflect.ncalg import GradedAlgebra
from ncreflect.presets.groups import cyclic_scaling_group, dihedral8, mystic_group
from ncreflect.presets.kac import (
    kac_palyutkin_action,
    kac_palyutkin_characters,
    kac_palyutkin_hopf,
    kac_palyutkin_idempotents,
    skew_plane,
)
from ncreflect.scalars import Cyc, I, MINUS_ONE, ONE, ZERO, zeta


# -- groups -------------------------------------------------------------------


def test_cyclic_and_product_groups():
    c6 = Group.cyclic(6)
    assert c6.order == 6
    assert c6.element_order(1) == 6
    assert c6.inverse[1] == 5
    c2xc3 = Group.direct_product(Group.cyclic(2, "s"), Group.cyclic(3, "t"))
    assert c2xc3.order == 6
    assert c2xc3.is_abelian()
    assert sorted(c2xc3.element_order(g) for g in range(6)) == [1, 2, 3, 3, 6, 6]


def test_dihedral8():
    d8 = dihedral8()
    assert d8.order == 8
    assert not d8.is_abelian()
    p, r = d8.index("p"), d8.index("r")
    assert d8.element_order(p) == 4
    assert d8.element_order(r) == 2
    # r p r = p^{-1}
    assert d8.table[d8.table[r][p]][r] == d8.inverse[p]


def test_matrix_group_closure():
    group, rep, gens = cyclic_scaling_group(2, 3)
    assert group.order == 6
    assert group.is_abelian()
    group16, rep16, _ = mystic_group(2, 4)
    assert group16.order == 16
    assert not group16.is_abelian()
    with pytest.raises(ValueError):
        mystic_group(4, 6)  # beta must be divisible by alpha


def test_group_validation():
    with pytest.raises(ValueError):
        Group(["a", "b"], [[0, 1], [1, 1]])  # b*b = b: no inverse structure


# -- Hopf algebra axioms ------------------------------------------------------


def test_group_algebra_axioms():
    for g in (Group.cyclic(4), dihedral8()):
        h = group_algebra(g)
        assert h.verify() == []
        lam = h.integral()
        assert lam == {i: Cyc.rational(1, g.order) for i in range(g.order)}


def test_dual_group_algebra_axioms():
    g = dihedral8()
    h = dual_group_algebra(g)
    assert h.verify() == []
    assert h.integral() == {g.identity: ONE}


def test_kac_palyutkin_axioms_and_integral():
    h = kac_palyutkin_hopf()
    assert h.verify() == []
    assert h.integral() == {i: Cyc.rational(1, 8) for i in range(8)}
    # S is the identity except for swapping xz and yz
    assert h.antipode[5] == {6: ONE} and h.antipode[6] == {5: ONE}
    # z^2 = (1+x+y-xy)/2
    half = Cyc.rational(1, 2)
    assert h.mult[4][4] == {0: half, 1: half, 2: half, 3: -half}


def test_corrupted_comultiplication_is_caught():
    h = kac_palyutkin_hopf()
    z = 4
    broken = [list(t) for t in h.comult]
    broken[z] = [(a, b, (-c if (a, b) == (6, 4) else c)) for a, b, c in broken[z]]
    bad = HopfAlgebra(h.labels, h.unit, h.mult, broken, h.counit, h.antipode)
    failures = bad.verify()
    assert failures
    assert any("z" in f for f in failures)


# -- characters ---------------------------------------------------------------


def test_kac_palyutkin_character_group_is_klein_four():
    h = kac_palyutkin_hopf()
    chars = kac_palyutkin_characters(h)
    assert len(chars) == 4
    g = chars.group
    assert g.labels == ["eps", "g", "gp", "ggp"]
    assert all(g.element_order(i) in (1, 2) for i in range(4))
    assert g.table[g.index("g")][g.index("gp")] == g.index("ggp")


def test_character_values_on_z():
    h = kac_palyutkin_hopf()
    chars = kac_palyutkin_characters(h).chars
    z = 4
    assert [c.values[z] for c in chars] == [ONE, MINUS_ONE, -I, I]


def test_dual_group_characters_mirror_the_group():
    g = dihedral8()
    h = dual_group_algebra(g)
    chars = dual_group_characters(h, g)
    assert chars.group.labels == g.labels
    assert chars.group.table == g.table


def test_group_linear_characters():
    c2xc3 = Group.direct_product(Group.cyclic(2, "s"), Group.cyclic(3, "t"))
    h = group_algebra(c2xc3)
    chars = group_linear_characters(h, c2xc3)
    assert len(chars) == 6  # abelian: all characters are linear
    d8 = dihedral8()
    chars8 = group_linear_characters(group_algebra(d8), d8)
    assert len(chars8) == 4  # abelianisation is Klein four
    assert sum(1 for ch in chars8.chars if ch.label == "triv") == 1


def test_winding_composition():
    h = kac_palyutkin_hopf()
    chars = kac_palyutkin_characters(h)
    for a in chars.chars:
        for b in chars.chars:
            ab = a.convolve(b)
            cols_a = winding_right_cols(h, a)
            cols_b = winding_right_cols(h, b)
            cols_ab = winding_right_cols(h, ab)
            for i in range(h.dim):
                two_step = apply_columns(cols_a, apply_columns(cols_b, {i: ONE}))
                assert two_step == apply_columns(cols_ab, {i: ONE})


def test_winding_left_right_agree_on_cocommutative():
    g = Group.cyclic(4)
    h = group_algebra(g)
    chars = group_linear_characters(h, g)
    for ch in chars.chars:
        assert winding_left_cols(h, ch) == winding_right_cols(h, ch)


def test_central_idempotents_match_closed_forms():
    h = kac_palyutkin_hopf()
    chars = kac_palyutkin_characters(h)
    derived = central_idempotents(h, chars)
    assert derived == kac_palyutkin_idempotents()


def test_dual_group_idempotents_are_point_masses():
    g = dihedral8()
    h = dual_group_algebra(g)
    chars = dual_group_characters(h, g)
    ps = central_idempotents(h, chars)
    assert ps == [{i: ONE} for i in range(8)]


# -- actions ------------------------------------------------------------------


def test_kac_palyutkin_action_on_generators():
    h = kac_palyutkin_hopf()
    alg = skew_plane()
    act = kac_palyutkin_action(h, alg)
    assert act.verify() == []
    z, xz = 4, 5
    u2 = alg.element("u^2")
    v2 = alg.element("v^2")
    uv = alg.element("u*v")
    assert act.act(z, u2.vec, 2) == v2.vec
    assert act.act(z, uv.vec, 2) == {k: -I * c for k, c in uv.vec.items()}
    assert act.act(xz, alg.element("v").vec, 1) == {0: MINUS_ONE}


def test_action_matrix_agrees_with_columns():
    h = kac_palyutkin_hopf()
    alg = skew_plane()
    act = kac_palyutkin_action(h, alg)
    for hh in range(8):
        m = act.matrix(hh, 3)
        for k in range(alg.dim(3)):
            col = act.columns(hh, 3)[k]
            dense = m.col(k)
            assert {i: c for i, c in enumerate(dense) if not c.is_zero()} == col


def test_module_algebra_violation_is_reported():
    # swapping u and v does not preserve v*u - i*u*v
    alg = skew_plane(max_degree=6)
    c2 = Group.cyclic(2, "s")
    h = group_algebra(c2)
    act = HopfAction.from_group_matrices(h, alg, c2, {1: Matrix([[0, 1], [1, 0]])})
    failures = act.verify()
    assert any("relation" in f for f in failures)


def test_group_matrix_consistency_check():
    alg = skew_plane(max_degree=6)
    c2 = Group.cyclic(2, "s")
    h = group_algebra(c2)
    with pytest.raises(ValueError):
        # matrix of order 4 assigned to an element of order 2
        HopfAction.from_group_matrices(h, alg, c2, {1: Matrix([[I, 0], [0, 1]])})


def test_dual_group_action_fast_path_matches_generic():
    g = Group.cyclic(3)
    alg = GradedAlgebra(["x", "y"], [parse("x*y - y*x", ["x", "y"])], max_degree=6)
    h = dual_group_algebra(g)
    fast = HopfAction.from_grading(h, alg, g, [1, 2])
    generic = HopfAction.from_matrices(
        h, alg, [[fast.gen_images[k][i] for i in range(2)] for k in range(3)]
    )
    assert fast.verify() == []
    for hh in range(3):
        for d in range(5):
            assert fast.columns(hh, d) == generic.columns(hh, d)


def test_dual_group_action_rejects_inhomogeneous_relations():
    g = Group.cyclic(2)
    # x*y + y^2 is not homogeneous for deg x = g, deg y = e
    alg = GradedAlgebra(["x", "y"], [parse("x*y + y*y", ["x", "y"])], max_degree=6)
    act = HopfAction.from_grading(dual_group_algebra(g), alg, g, [1, 0])
    assert act.verify()


def test_act_free_matches_slice_action():
    h = kac_palyutkin_hopf()
    alg = skew_plane()
    act = kac_palyutkin_action(h, alg)
    for hh in range(8):
        poly = parse("u*v + 2*v*u - u^2", ["u", "v"])
        free_img = act.act_free(hh, poly)
        _, direct = alg.nf(free_img)
        _, vec = alg.nf(poly)
        assert act.act(hh, vec, 2) == direct

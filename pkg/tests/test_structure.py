"""Cocycles, Frobenius pairing, trace discriminant, Nakayama verification,
Steinberg factorisation, isotypic series and Jacobian transfer on the
built-in examples."""

from __future__ import annotations

import pytest

from ncreflect.invariants import (
    component_report,
    fixed_ring,
    homological_determinant,
    jacobian_data,
    proportional,
)
from ncreflect.presets import catalog
from ncreflect.scalars import Cyc, ONE, zeta
from ncreflect.structure import (
    AlgebraEndo,
    cocycle_table,
    frobenius_pairing,
    isotypic_series,
    jacobian_transfer,
    nakayama_check,
    steinberg_factorization,
    tp_det,
    tp_divide,
    tp_mul,
    tp_proportional,
    trace_discriminant,
)

_CACHE: dict = {}


def bundle(name: str, D: int = 8):
    key = (name, D)
    if key not in _CACHE:
        p = catalog.build(name, max_degree=D)
        comp = component_report(p.action, p.chars, D)
        fixed = fixed_ring(p.action, p.chars, comp.slices, D)
        supplied = p.options.get("hdet")
        sup_idx = p.chars.group.labels.index(supplied) if supplied else None
        hdet = homological_determinant(p.action, p.chars, comp, fixed, D, supplied=sup_idx)
        jac = jacobian_data(p.algebra, p.chars, comp, fixed, hdet.char_index)
        coc = cocycle_table(p.algebra, p.chars, comp, fixed, D)
        _CACHE[key] = (p, comp, fixed, hdet, jac, coc)
    return _CACHE[key]


def cidx(p, label: str) -> int:
    return p.chars.group.labels.index(label)


# ---------------------------------------------------------------------------
# the abstract polynomial model


def test_tpoly_arithmetic():
    x = {(1, 0): ONE}
    y = {(0, 1): ONE}
    p = tp_mul(x, y)
    assert p == {(1, 1): ONE}
    assert tp_divide(p, x) == y
    assert tp_divide(x, p) is None
    diff = {(2, 0): ONE, (0, 2): -ONE}  # x^2 - y^2
    quot = tp_divide(diff, {(1, 0): ONE, (0, 1): ONE})
    assert quot == {(1, 0): ONE, (0, 1): -ONE}
    assert tp_proportional(diff, {(2, 0): Cyc.rational(3), (0, 2): Cyc.rational(-3)})
    assert not tp_proportional(diff, {(2, 0): ONE, (0, 2): ONE})


def test_tpoly_determinant():
    x = {(1,): ONE}
    det = tp_det([[x, {(0,): ONE}], [{(0,): ONE}, x]], 1)
    assert det == {(2,): ONE, (0,): -ONE}
    anti = tp_det([[None, x], [x, None]], 1)
    assert anti == {(2,): -ONE}


# ---------------------------------------------------------------------------
# cocycles


def test_kac_cocycles():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    alg = p.algebra
    assert coc.complete
    assert coc.normal
    gp = cidx(p, "gp")
    # f_gp^2 = uv uv = i u^2 v^2 lands in the trivial component
    assert coc.table[gp][gp] == alg.element("u^2*v^2").scale(zeta(4))
    e = cidx(p, "eps")
    assert coc.table[e][e] == alg.element("1", 0)
    # c is the product itself whenever the target generator is 1
    g = cidx(p, "g")
    assert coc.table[g][g] == comp.f[g] * comp.f[g]


def test_dihedral3_cocycles_normal():
    p, comp, fixed, hdet, jac, coc = bundle("e22-dualD8")
    assert coc.complete
    assert coc.normal
    r, rp = cidx(p, "r"), cidx(p, "rp")
    prod = comp.f[r] * comp.f[rp]
    target = comp.f[p.chars.group.table[r][rp]]
    c = coc.table[r][rp]
    assert (c * target) == prod


def test_downup_cocycles_incomplete():
    p, comp, fixed, hdet, jac, coc = bundle("e23-downup-dualD8")
    assert not coc.complete  # f_{p3} does not exist


# ---------------------------------------------------------------------------
# Frobenius pairing


def test_kac_frobenius_scalars():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    frob = frobenius_pairing(p.algebra, p.chars, comp, hdet.char_index)
    assert frob.verdict == "yes"
    assert frob.identity_holds
    want = {"eps": ONE, "g": -ONE, "gp": ONE, "ggp": ONE}
    for label, value in want.items():
        assert frob.scalars[cidx(p, label)] == value


def test_dihedral3_frobenius():
    p, comp, fixed, hdet, jac, coc = bundle("e22-dualD8")
    frob = frobenius_pairing(p.algebra, p.chars, comp, hdet.char_index)
    assert frob.verdict == "yes"
    assert all(s is not None and not s.is_zero() for s in frob.scalars)


def test_cyclic_frobenius():
    p, comp, fixed, hdet, jac, coc = bundle("l41-cyclic-n-m(z3,2,3)")
    frob = frobenius_pairing(p.algebra, p.chars, comp, hdet.char_index)
    assert frob.verdict == "yes"


def test_downup_frobenius_undetermined():
    p, comp, fixed, hdet, jac, coc = bundle("e23-downup-dualD8")
    frob = frobenius_pairing(p.algebra, p.chars, comp, hdet.char_index)
    assert frob.verdict == "undetermined"


# ---------------------------------------------------------------------------
# trace discriminant


def test_dihedral3_trace_discriminant():
    p, comp, fixed, hdet, jac, coc = bundle("e22-dualD8")
    data = trace_discriminant(p.action, p.chars, comp, fixed, coc, jac.delta_left, 8)
    assert data.applicable, data.precondition_notes
    assert len(data.generator_names) == 3
    assert tp_proportional(data.discriminant, {(4, 4, 4): ONE})
    assert data.is_product_of_pair_products
    assert data.delta_divides
    assert data.divides_delta_power
    assert data.verdict == "radical-equal"


def test_kac_trace_discriminant_not_applicable():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    data = trace_discriminant(p.action, p.chars, comp, fixed, coc, jac.delta_left, 8)
    assert not data.applicable
    assert any("dual group" in note for note in data.precondition_notes)
    assert data.verdict == "not-computable"


def test_cyclic_trace_discriminant_not_applicable():
    p, comp, fixed, hdet, jac, coc = bundle("l41-cyclic-n-m(z3,2,3)")
    data = trace_discriminant(p.action, p.chars, comp, fixed, coc, jac.delta_left, 8)
    assert not data.applicable


# ---------------------------------------------------------------------------
# Nakayama verification


def test_kac_nakayama():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    data = nakayama_check(
        p.action, p.chars, fixed, hdet.char_index, jac.j, jac.a,
        p.options["nakayama"], 8, hdet.koszul_top,
    )
    assert data.is_automorphism
    assert data.twisted_action_identity, data.failures
    assert data.fixes_fixed_ring
    assert data.scales_jacobian
    assert data.scales_arrangement
    assert data.induced_is_identity
    assert data.index_additive
    assert data.failures == []


def test_kac_nakayama_wrong_candidate():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    wrong = [{0: zeta(4)}, {1: zeta(4)}]  # u -> i u, v -> i v
    data = nakayama_check(
        p.action, p.chars, fixed, hdet.char_index, jac.j, jac.a,
        wrong, 8, hdet.koszul_top,
    )
    assert data.is_automorphism  # it does extend to an automorphism ...
    assert not data.twisted_action_identity  # ... but the twist is wrong


def test_algebra_endo_respects_relations():
    p, comp, fixed, hdet, jac, coc = bundle("e22-dualD8")
    alg = p.algebra
    swap = AlgebraEndo(alg, [alg.element("y").vec, alg.element("x").vec,
                             alg.element("z").vec])
    assert not swap.respects_relations()


# ---------------------------------------------------------------------------
# Steinberg factorisation


def test_dihedral3_steinberg():
    p, comp, fixed, hdet, jac, coc = bundle("e22-dualD8")
    got = steinberg_factorization(p.algebra, p.chars, comp, jac.j, hdet.char_index)
    assert got.verdict == "yes"
    assert got.labels == ["r", "rp", "r"]
    prod = comp.f[cidx(p, "r")] * comp.f[cidx(p, "rp")] * comp.f[cidx(p, "r")]
    assert prod.scale(got.scalar) == jac.j


def test_downup_steinberg():
    p, comp, fixed, hdet, jac, coc = bundle("e23-downup-dualD8")
    got = steinberg_factorization(p.algebra, p.chars, comp, jac.j, hdet.char_index)
    assert got.verdict == "yes"
    assert got.labels == ["p", "p"]
    assert got.scalar == ONE


def test_kac_steinberg_undetermined():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    got = steinberg_factorization(p.algebra, p.chars, comp, jac.j, hdet.char_index)
    assert got.verdict == "undetermined"
    assert "degree-one" in got.reason


# ---------------------------------------------------------------------------
# isotypic series and transfer


def test_kac_isotypic_series():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    iso = isotypic_series(p.action, p.chars, comp, fixed, 8)
    assert iso.idempotent_images_match_components
    even = [p.algebra.dim(d) if d % 2 == 0 else 0 for d in range(9)]
    assert iso.grouplike_dims == even
    assert iso.complement_dims == [p.algebra.dim(d) - even[d] for d in range(9)]
    assert iso.grouplike_rank == 4
    assert iso.complement_rank == 4


def test_kac_isotypic_with_closed_form_idempotents():
    from ncreflect.presets.kac import kac_palyutkin_idempotents

    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    iso = isotypic_series(p.action, p.chars, comp, fixed, 6,
                          idempotents=kac_palyutkin_idempotents())
    assert iso.idempotent_images_match_components


def test_cyclic_isotypic_series():
    p, comp, fixed, hdet, jac, coc = bundle("l41-cyclic-n-m(z3,2,3)")
    iso = isotypic_series(p.action, p.chars, comp, fixed, 8)
    assert iso.idempotent_images_match_components
    assert iso.grouplike_dims == [p.algebra.dim(d) for d in range(9)]
    assert iso.complement_dims == [0] * 9
    assert iso.grouplike_rank == 6
    assert iso.complement_rank == 0


def test_kac_jacobian_transfer():
    p, comp, fixed, hdet, jac, coc = bundle("e42-kacpalyutkin")
    iso = isotypic_series(p.action, p.chars, comp, fixed, 8)
    tr = jacobian_transfer(p.algebra, p.chars, comp, fixed, iso.grouplike_slices,
                           jac.j, 8)
    assert tr.closed_under_product
    assert [int(c) for c in tr.xi_prime] == [1, 0, 2, 0, 1, 0, 0, 0, 0]
    assert tr.hdet_prime_index == cidx(p, "ggp")
    assert tr.jacobians_proportional


def test_cyclic_jacobian_transfer():
    p, comp, fixed, hdet, jac, coc = bundle("l41-cyclic-n-m(z3,2,3)")
    iso = isotypic_series(p.action, p.chars, comp, fixed, 8)
    tr = jacobian_transfer(p.algebra, p.chars, comp, fixed, iso.grouplike_slices,
                           jac.j, 8)
    assert tr.closed_under_product
    assert tr.jacobians_proportional

"""Degree-one divisor lines in candidate and certificate modes."""

from __future__ import annotations

import pytest

from ncreflect.divisors import (
    candidate_lines,
    form_degree,
    left_divisors,
    right_divisors,
)
from ncreflect.invariants import (
    component_report,
    fixed_ring,
    homological_determinant,
    jacobian_data,
)
from ncreflect.presets import catalog
from ncreflect.presets.kac import skew_plane
from ncreflect.scalars import Cyc, I, ONE, ZERO, zeta

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
        _CACHE[key] = (p, comp, fixed, hdet, jac)
    return _CACHE[key]


def line_set(report):
    return {tuple(sorted((k, c.key()) for k, c in e.vec.items())) for e in report.lines}


def as_set(elems):
    return {tuple(sorted((k, c.key()) for k, c in e.vec.items())) for e in elems}


# ---------------------------------------------------------------------------
# the skew plane under the eight-dimensional Hopf algebra: left and right
# divisor sets of the Jacobian differ


def test_kac_jacobian_divisors_left_and_right():
    p, comp, fixed, hdet, jac = bundle("e42-kacpalyutkin")
    alg = p.algebra
    z = zeta(8)
    z3 = z * z * z
    z5 = z3 * z * z
    z7 = z5 * z * z
    u, v = alg.element("u"), alg.element("v")
    expect_left = [u, v, u + v.scale(z3), u + v.scale(z7)]
    expect_right = [u, v, u + v.scale(z), u + v.scale(z5)]
    for mode in ("candidates", "certificate"):
        left = left_divisors(alg, jac.j, mode=mode, conductor=8)
        right = right_divisors(alg, jac.j, mode=mode, conductor=8)
        assert line_set(left) == as_set(expect_left)
        assert line_set(right) == as_set(expect_right)
        assert line_set(left) != line_set(right)
    cert_l = left_divisors(alg, jac.j, mode="certificate", conductor=8)
    cert_r = right_divisors(alg, jac.j, mode="certificate", conductor=8)
    assert not cert_l.residual_warning and not cert_r.residual_warning
    # st(t^2 + i s^2) and st(t^2 - i s^2) up to the monic normalisation
    assert cert_l.certificate == [ZERO, -I, ZERO, ONE, ZERO]
    assert cert_r.certificate == [ZERO, I, ZERO, ONE, ZERO]


def test_kac_divisors_invariant_under_rescaling():
    p, comp, fixed, hdet, jac = bundle("e42-kacpalyutkin")
    scaled = jac.j.scale(Cyc.rational(-7, 3))
    a = left_divisors(p.algebra, jac.j, mode="certificate", conductor=8)
    b = left_divisors(p.algebra, scaled, mode="certificate", conductor=8)
    assert line_set(a) == line_set(b)
    assert a.certificate == b.certificate


def test_degree_one_and_degree_two_self_divisors():
    alg = skew_plane(8)
    u = alg.element("u")
    for mode in ("candidates", "certificate"):
        rep = left_divisors(alg, u, mode=mode, conductor=8)
        assert line_set(rep) == as_set([u])
        rep2 = left_divisors(alg, alg.element("u^2"), mode=mode, conductor=8)
        assert line_set(rep2) == as_set([u])
    assert right_divisors(alg, alg.element("u^2"), mode="certificate", conductor=8).lines == [u]


# ---------------------------------------------------------------------------
# three generators: candidates mode only


def test_dihedral3_divisors_are_the_generators():
    p, comp, fixed, hdet, jac = bundle("e22-dualD8", 6)
    alg = p.algebra
    gens = [alg.element(n) for n in ("x", "y", "z")]
    for f in (jac.j, jac.a):
        left = left_divisors(alg, f, mode="candidates", conductor=4)
        right = right_divisors(alg, f, mode="candidates", conductor=4)
        assert line_set(left) == as_set(gens)
        assert line_set(right) == as_set(gens)
    with pytest.raises(ValueError):
        left_divisors(alg, jac.j, mode="certificate", conductor=4)
    # the degree-one component generators sit inside both divisor sets
    degree_one = [f for f in comp.f if f is not None and f.degree == 1]
    assert as_set(degree_one) == as_set(gens)


# ---------------------------------------------------------------------------
# the two scaling families


def test_cyclic_family_divisors():
    p, comp, fixed, hdet, jac = bundle("l41-cyclic-n-m(z3,2,3)")
    alg = p.algebra
    gens = [alg.element("x"), alg.element("y")]
    for mode in ("candidates", "certificate"):
        rj = left_divisors(alg, jac.j, mode=mode, conductor=3)
        ra = left_divisors(alg, jac.a, mode=mode, conductor=3)
        assert line_set(rj) == as_set(gens)
        assert line_set(ra) == as_set(gens)
        # lines dividing the arrangement element divide the Jacobian
        assert line_set(ra) <= line_set(rj)
    assert right_divisors(alg, jac.j, mode="certificate", conductor=3).lines == gens
    cert = left_divisors(alg, jac.j, mode="certificate", conductor=3)
    assert not cert.residual_warning


def test_mystic_family_divisors():
    p, comp, fixed, hdet, jac = bundle("l41-mystic(2,4)", 12)
    alg = p.algebra
    x, y = alg.element("x"), alg.element("y")
    z4 = zeta(4)
    expected = [x, y]
    root = ONE
    for _ in range(4):
        expected.append(x + y.scale(root))
        root = root * z4
    for mode in ("candidates", "certificate"):
        left = left_divisors(alg, jac.j, mode=mode, conductor=4)
        right = right_divisors(alg, jac.j, mode=mode, conductor=4)
        assert line_set(left) == as_set(expected)
        assert line_set(right) == as_set(expected)
    cert = left_divisors(alg, jac.j, mode="certificate", conductor=4)
    assert not cert.residual_warning
    assert form_degree(cert.certificate) == 6


# ---------------------------------------------------------------------------
# honesty of the certificate residual


def test_certificate_residual_warning_and_extra_candidates():
    alg = catalog.build("trivial", 6).algebra  # the commutative plane
    f = alg.element("x^2 + 2*x*y")  # (x + 2y) x, and x + 2y is not a root of unity line
    rep = left_divisors(alg, f, mode="certificate", conductor=4)
    assert line_set(rep) == as_set([alg.element("x")])
    assert rep.residual_warning and rep.residual_degree == 1
    extra = (alg.element("x + 2*y"),)
    rep2 = left_divisors(alg, f, mode="certificate", conductor=4, extra_candidates=extra)
    assert line_set(rep2) == as_set([alg.element("x"), alg.element("x + 2*y")])
    assert not rep2.residual_warning
    # candidates mode silently reports only what it can see
    rep3 = left_divisors(alg, f, mode="candidates", conductor=4, extra_candidates=extra)
    assert line_set(rep3) == line_set(rep2)


def test_candidate_family_is_deduplicated():
    alg = catalog.build("trivial", 6).algebra
    fam = candidate_lines(alg, 4)
    assert len(fam) == 6  # x, y, x+y, x+iy, x-y, x-iy
    fam2 = candidate_lines(alg, 4, (alg.element("x + y"), alg.element("3*x + 3*y")))
    assert len(fam2) == 6

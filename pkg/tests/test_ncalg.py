import random

import pytest

from ncreflect.exprs import parse
from ncreflect.ncalg import (
    DegreeOverflow,
    Elem,
    GradedAlgebra,
    augmentation_module_slices,
    left_ideal_slices,
    mul_space_elem,
    right_ideal_slices,
    subalgebra_slices,
    two_sided_ideal_slices,
)
from ncreflect.scalars import Cyc, I, ONE

from oracles import QuotientOracle, free_words


def qp_relation(q):
    # v*u - q*u*v
    return {(1, 0): ONE, (0, 1): -q}


def quantum_plane(q=I, max_degree=12):
    return GradedAlgebra(["u", "v"], [qp_relation(q)], max_degree=max_degree)


def skew3(max_degree=12):
    gens = ["x", "y", "z"]
    rels = [parse(s, gens) for s in ("z*x + x*z", "y*x - z*y", "y*z - x*y")]
    return GradedAlgebra(gens, rels, max_degree=max_degree)


def downup(max_degree=12):
    gens = ["u", "d"]
    rels = [parse(s, gens) for s in ("d*u^2 - u^2*d", "d^2*u - u*d^2")]
    return GradedAlgebra(gens, rels, max_degree=max_degree)


def test_quantum_plane_dimensions_and_basis():
    alg = quantum_plane()
    assert alg.hilbert(8) == [d + 1 for d in range(9)]
    assert alg.basis_words(2) == [(0, 0), (0, 1), (1, 1)]
    # v*u rewrites to i*u*v
    assert alg.element("v*u") == alg.element("i*u*v")
    assert alg.element("v*u - i*u*v").is_zero()


def test_free_algebra_without_relations():
    alg = GradedAlgebra(["a", "b"], [], max_degree=8)
    assert alg.hilbert(6) == [2 ** d for d in range(7)]
    assert alg.free_dim(6) == 64


def test_skew3_dimensions():
    alg = skew3()
    assert alg.hilbert(8) == [(d + 1) * (d + 2) // 2 for d in range(9)]


def test_downup_dimensions():
    alg = downup()
    assert alg.hilbert(12) == [1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 42, 49]
    # normal words avoid the rewritten leading words d*u*u and d*d*u
    for w in alg.basis_words(4):
        assert (1, 0, 0) not in [w[i:i + 3] for i in range(2)]
        assert (1, 1, 0) not in [w[i:i + 3] for i in range(2)]
    assert alg.element("d*u^2") == alg.element("u^2*d")


def test_weighted_generators():
    gens = ["x", "y"]
    alg = GradedAlgebra(gens, [parse("x*y - y*x", gens)], weights=[1, 2], max_degree=10)
    assert alg.hilbert(7) == [1, 1, 2, 2, 3, 3, 4, 4]
    assert alg.element("x*y") == alg.element("y*x")


def test_engine_matches_quotient_oracle():
    cases = [
        (2, [qp_relation(I)], None, 6),
        (3, [parse(s, ["x", "y", "z"]) for s in ("z*x + x*z", "y*x - z*y", "y*z - x*y")], None, 4),
        (2, [parse(s, ["u", "d"]) for s in ("d*u^2 - u^2*d", "d^2*u - u*d^2")], None, 6),
        (2, [parse("x*y - y*x", ["x", "y"])], [1, 2], 6),
    ]
    for nletters, rels, weights, maxdeg in cases:
        names = ["g%d" % k for k in range(nletters)]
        alg = GradedAlgebra(names, rels, weights=weights, max_degree=maxdeg)
        oracle = QuotientOracle(nletters, rels, weights)
        for d in range(maxdeg + 1):
            assert alg.basis_words(d) == oracle.basis(d)
        top = min(4, maxdeg)
        for word in free_words(nletters, alg.weights, top):
            got = alg.nf_word(word)
            words = alg.basis_words(sum(alg.weights[i] for i in word))
            assert {words[k]: c for k, c in got.items()} == oracle.nf(word)


def test_presentation_invariance():
    gens = ["x", "y", "z"]
    rels = [parse(s, gens) for s in ("z*x + x*z", "y*x - z*y", "y*z - x*y")]
    base = skew3(max_degree=6)
    rng = random.Random(9)
    shuffled = rels[::-1]
    scaled = []
    for r in rels:
        scale = Cyc.rational(rng.choice([2, 3, -1]), rng.choice([1, 2]))
        scaled.append({w: c * scale for w, c in r.items()})
    for variant in (shuffled, scaled):
        alg = GradedAlgebra(gens, variant, max_degree=6)
        for d in range(7):
            assert alg.basis_words(d) == base.basis_words(d)


def test_associativity_randomised():
    alg = skew3(max_degree=9)
    rng = random.Random(20260815)

    def rand_elem(deg):
        dim = alg.dim(deg)
        vec = {}
        for k in rng.sample(range(dim), min(3, dim)):
            c = Cyc.rational(rng.randint(-2, 2))
            if not c.is_zero():
                vec[k] = c
        return Elem(alg, deg, vec)

    for _ in range(12):
        a = rand_elem(rng.randint(1, 3))
        b = rand_elem(rng.randint(1, 3))
        c = rand_elem(rng.randint(1, 3))
        assert ((a * b) * c) == (a * (b * c))


def test_degree_overflow():
    alg = quantum_plane(max_degree=5)
    assert alg.dim(5) == 6
    with pytest.raises(DegreeOverflow):
        alg.dim(6)
    with pytest.raises(DegreeOverflow):
        alg.element("u^2") * alg.element("v^4")


def test_rejects_bad_presentations():
    with pytest.raises(ValueError):
        GradedAlgebra(["x", "x"], [])
    with pytest.raises(ValueError):
        GradedAlgebra(["x", "y"], [parse("x + x*y", ["x", "y"])])  # inhomogeneous
    with pytest.raises(ValueError):
        GradedAlgebra(["x", "y"], [{}])  # zero relation
    with pytest.raises(ValueError):
        GradedAlgebra(["x", "y"], [], weights=[1])
    with pytest.raises(ValueError):
        GradedAlgebra(["x", "y"], [parse("2 - x*y", ["x", "y"])])


def test_normal_element_ideals_agree():
    # u is normal in the quantum plane, so Au = uA = (u)
    alg = quantum_plane(max_degree=8)
    u = alg.element("u")
    left = left_ideal_slices(alg, [u], 8)
    right = right_ideal_slices(alg, [u], 8)
    both = two_sided_ideal_slices(alg, [u], 8)
    assert left == right == both
    assert [s.dim for s in left] == [0] + [d for d in range(1, 9)]


def test_left_right_ideals_differ_when_not_normal():
    alg = downup(max_degree=8)
    u = alg.element("u")
    left = left_ideal_slices(alg, [u], 6)
    right = right_ideal_slices(alg, [u], 6)
    both = two_sided_ideal_slices(alg, [u], 6)
    assert any(left[d] != right[d] for d in range(7))
    for d in range(7):
        assert left[d] <= both[d] and right[d] <= both[d]


def test_subalgebra_slices():
    alg = skew3(max_degree=8)
    gens = [alg.element(s) for s in ("x^2", "y^2", "z^2")]
    slices = subalgebra_slices(alg, gens, 8)
    for d in range(9):
        if d % 2:
            assert slices[d].dim == 0
        else:
            k = d // 2
            assert slices[d].dim == (k + 1) * (k + 2) // 2


def test_augmentation_module_matches_ideal():
    alg = quantum_plane(max_degree=8)
    u = alg.element("u")
    sub = subalgebra_slices(alg, [u], 8)
    module = augmentation_module_slices(alg, sub, 8)
    ideal = left_ideal_slices(alg, [u], 8)
    assert module == ideal


def test_mul_space_elem():
    alg = quantum_plane(max_degree=6)
    space = alg.slice_space(1)
    img = mul_space_elem(alg, space, 1, alg.element("u"))
    assert img.dim == 2
    assert img.contains(alg.element("u^2").vec)
    assert img.contains(alg.element("u*v").vec)
    assert not img.contains(alg.element("v^2").vec)

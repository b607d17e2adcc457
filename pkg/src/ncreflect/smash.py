"""Degree-truncated smash product A # H and the ideals it carries.

The slice of A-degree d is A_d tensor H with coordinates
a_index * dim H + h_index.  On top of the multiplication this module
computes the pertinency ideal (the two-sided ideal generated by 1 # Λ),
its trace on A (the radical ideal), the dual-group shortcut, the rife
checks at the Hopf and at the action level, the dis-radical inside the
fixed ring, and the principal-generator search for the radical.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import CharacterGroup, HopfAction, HopfAlgebra
from .linalg import Subspace, Vec, intersect_all, vec_addto
from .ncalg import (
    Elem,
    GradedAlgebra,
    left_ideal_slices,
    mul_elem_space,
    mul_space_elem,
    two_sided_ideal_slices,
)
from .scalars import Cyc, ONE, ZERO


class SmashProduct:
    """A # H, one homogeneous A-degree at a time."""

    def __init__(self, action: HopfAction):
        self.action = action
        self.alg = action.alg
        self.hopf = action.hopf
        self.nH = action.hopf.dim

    def dim(self, degree: int) -> int:
        return self.alg.dim(degree) * self.nH

    def include_a(self, vec: Vec, degree: int) -> Vec:
        """a # 1."""
        out: Vec = {}
        for i, c in vec.items():
            for h, x in self.hopf.unit.items():
                out[i * self.nH + h] = c * x
        return out

    def include_h(self, hvec: Vec) -> Vec:
        """1 # h in degree zero (A_0 = k)."""
        return {h: c for h, c in hvec.items()}

    def unit_integral(self) -> Vec:
        return self.include_h(self.hopf.integral())

    def mul(self, v: Vec, dv: int, w: Vec, dw: int) -> Vec:
        """(a#h)(b#k) = sum a (h_(1).b) # h_(2) k."""
        alg, hopf, nH = self.alg, self.hopf, self.nH
        out: Vec = {}
        for key1, c1 in v.items():
            i, h = divmod(key1, nH)
            left = {i: ONE}
            for h1, h2, c in hopf.comult[h]:
                cols = self.action.columns(h1, dw)
                row = hopf.mult[h2]
                for key2, c2 in w.items():
                    j, k = divmod(key2, nH)
                    amul = alg.mul(left, dv, cols[j], dw)
                    if not amul:
                        continue
                    coeff = c1 * c * c2
                    for hi, hc in row[k].items():
                        for ai, ac in amul.items():
                            slot = ai * nH + hi
                            new = out.get(slot, ZERO) + coeff * ac * hc
                            if new.is_zero():
                                out.pop(slot, None)
                            else:
                                out[slot] = new
        return out

    def show(self, vec: Vec, degree: int) -> str:
        parts = []
        for key in sorted(vec):
            i, h = divmod(key, self.nH)
            parts.append(
                f"({self.alg.show_vec({i: vec[key]}, degree)})#{self.hopf.labels[h]}"
            )
        return " + ".join(parts) if parts else "0"


def _left_letter_smash(sm: SmashProduct, i: int, vec: Vec, degree: int) -> Vec:
    """(x_i # 1) * vec for vec of A-degree `degree`."""
    cols = sm.alg.left_letter(i, degree)
    out: Vec = {}
    for key, c in vec.items():
        a, h = divmod(key, sm.nH)
        for ai, ac in cols[a].items():
            slot = ai * sm.nH + h
            new = out.get(slot, ZERO) + c * ac
            if new.is_zero():
                out.pop(slot, None)
            else:
                out[slot] = new
    return out


def integral_span_slices(sm: SmashProduct, max_degree: int) -> list[Subspace]:
    """S_d = span{(1#Λ)(b#k)} over basis pairs of A_d x H."""
    lam = sm.unit_integral()
    out = []
    for d in range(max_degree + 1):
        space = Subspace(sm.dim(d))
        for key in range(sm.dim(d)):
            space.add(sm.mul(lam, 0, {key: ONE}, d))
        out.append(space)
    return out


def pertinency_slices(sm: SmashProduct, max_degree: int) -> list[Subspace]:
    """Slices of (A#H)(1#Λ)(A#H).

    Left factors collapse to A # Λ because h·Λ = counit(h)Λ, so the slice
    in A-degree d is sum_e A_e · S_{d-e} with S as above; the sum is built
    by the usual generated-in-positive-degree recursion.
    """
    spans = integral_span_slices(sm, max_degree)
    alg = sm.alg
    out: list[Subspace] = []
    for d in range(max_degree + 1):
        space = Subspace(sm.dim(d))
        for v in spans[d].basis():
            space.add(v)
        for i in range(alg.ngens):
            lower = d - alg.weights[i]
            if lower < 0:
                continue
            for v in out[lower].basis():
                space.add(_left_letter_smash(sm, i, v, lower))
        out.append(space)
    return out


def _trace_on_a(sm: SmashProduct, space: Subspace, degree: int) -> Subspace:
    """Intersect a smash slice with A_d # 1 and return A_d coordinates."""
    alg, nH = sm.alg, sm.nH
    dim = alg.dim(degree)
    unit = sm.hopf.unit
    h0 = min(unit)
    scale = unit[h0].inverse()
    ambient = Subspace.span(
        sm.dim(degree),
        [sm.include_a({i: ONE}, degree) for i in range(dim)],
    )
    inter = space.intersect(ambient)
    slices = Subspace(dim)
    for w in inter.basis():
        slices.add({i: w[i * nH + h0] * scale
                    for i in range(dim) if i * nH + h0 in w})
    return slices


@dataclass
class RadicalData:
    slices: list[Subspace]
    pertinency_dims: list[int]
    quotient_dims: list[int]


def radical_slices(action: HopfAction, max_degree: int) -> RadicalData:
    """Trace of the pertinency ideal on A, degree by degree."""
    sm = SmashProduct(action)
    pert = pertinency_slices(sm, max_degree)
    slices = [_trace_on_a(sm, pert[d], d) for d in range(max_degree + 1)]
    pdims = [p.dim for p in pert]
    qdims = [sm.dim(d) - pdims[d] for d in range(max_degree + 1)]
    return RadicalData(slices, pdims, qdims)


def dual_group_shortcut(
    alg: GradedAlgebra, comp_slices: list[list[Subspace]], max_degree: int
) -> list[Subspace]:
    """For dual group actions the radical equals the intersection of the
    left ideals A·A_g over the component grading."""
    ideals = []
    for slices in comp_slices:
        gens = [
            Elem(alg, d, v)
            for d in range(max_degree + 1)
            for v in slices[d].basis()
        ]
        ideals.append(left_ideal_slices(alg, gens, max_degree))
    return [
        intersect_all([ideal[d] for ideal in ideals])
        for d in range(max_degree + 1)
    ]


# ---------------------------------------------------------------------------
# rife checks


def commutator_ideal(hopf: HopfAlgebra) -> Subspace:
    """Ideal closure of the span of all basis commutators."""
    space = Subspace(hopf.dim)
    for i in range(hopf.dim):
        for j in range(i + 1, hopf.dim):
            com = dict(hopf.mult[i][j])
            vec_addto(com, hopf.mult[j][i], -ONE)
            space.add(com)
    while True:
        before = space.dim
        for v in list(space.basis()):
            for b in range(hopf.dim):
                space.add(hopf.mul_vec({b: ONE}, v))
                space.add(hopf.mul_vec(v, {b: ONE}))
        if space.dim == before:
            return space


def rife_hopf_check(
    hopf: HopfAlgebra, chars: CharacterGroup, idempotents: list[Vec]
) -> bool:
    """Δ(Λ) = Σ_g p_g ⊗ p_{g⁻¹} + X with X in I_com ⊗ I_com."""
    residual = dict(hopf.comult_vec(hopf.integral()))
    g0 = chars.group
    for g in range(g0.order):
        p, q = idempotents[g], idempotents[g0.inverse[g]]
        for i, a in p.items():
            for j, b in q.items():
                key = (i, j)
                new = residual.get(key, ZERO) - a * b
                if new.is_zero():
                    residual.pop(key, None)
                else:
                    residual[key] = new
    if not residual:
        return True
    icom = commutator_ideal(hopf)
    basis = icom.basis()
    ambient = Subspace(hopf.dim * hopf.dim)
    for u in basis:
        for w in basis:
            ambient.add({i * hopf.dim + j: a * b
                         for i, a in u.items() for j, b in w.items()})
    flat = {i * hopf.dim + j: c for (i, j), c in residual.items()}
    return ambient.contains(flat)


@dataclass
class RifeData:
    hopf_rife: bool
    j_normal: bool
    radical_is_jacobian_ideal: bool
    action_rife: bool
    radical_inside_left_ideal: bool | None  # only asserted when hopf_rife


def rife_action_check(
    action: HopfAction,
    chars: CharacterGroup,
    idempotents: list[Vec],
    j: Elem,
    radical: list[Subspace],
    max_degree: int,
) -> RifeData:
    alg = action.alg
    hopf_rife = rife_hopf_check(action.hopf, chars, idempotents)
    j_normal = True
    for d in range(max_degree - j.degree + 1):
        s = alg.slice_space(d)
        if mul_elem_space(alg, j, s, d) != mul_space_elem(alg, s, d, j):
            j_normal = False
            break
    ideal = two_sided_ideal_slices(alg, [j], max_degree)
    is_ideal = all(ideal[d] == radical[d] for d in range(max_degree + 1))
    contained = None
    if hopf_rife:
        left = left_ideal_slices(alg, [j], max_degree)
        contained = all(radical[d] <= left[d] for d in range(max_degree + 1))
    return RifeData(hopf_rife, j_normal, is_ideal,
                    hopf_rife and j_normal and is_ideal, contained)


# ---------------------------------------------------------------------------
# dis-radical and the principal generator


@dataclass
class DisRadicalData:
    dims: list[int]
    first_degree: int | None
    generator: Elem | None
    principal: bool


def dis_radical(
    alg: GradedAlgebra,
    radical: list[Subspace],
    fixed_slices: list[Subspace],
    max_degree: int,
) -> DisRadicalData:
    """Slice-wise intersection of the radical with the fixed ring and a
    search for a single principal generator."""
    slices = [radical[d].intersect(fixed_slices[d]) for d in range(max_degree + 1)]
    dims = [s.dim for s in slices]
    first = next((d for d in range(max_degree + 1) if dims[d]), None)
    if first is None:
        return DisRadicalData(dims, None, None, False)
    if dims[first] != 1:
        return DisRadicalData(dims, first, None, False)
    vec = slices[first].basis()[0]
    lead = min(vec)
    gen = Elem(alg, first, {k: c / vec[lead] for k, c in vec.items()})
    principal = True
    for d in range(max_degree + 1):
        if d < first:
            continue
        got = Subspace.span(
            alg.dim(d),
            [alg.mul(gen.vec, first, b, d - first)
             for b in fixed_slices[d - first].basis()],
        )
        if got != slices[d]:
            principal = False
            break
    return DisRadicalData(dims, first, gen, principal)


@dataclass
class PrincipalRadicalData:
    generator: Elem | None
    normal: bool | None
    reason: str


def principal_radical(
    alg: GradedAlgebra, radical: list[Subspace], max_degree: int
) -> PrincipalRadicalData:
    """If the lowest nonzero radical slice is a line spanned by w, test
    that w is normal and that (w) matches the radical slice-for-slice."""
    first = next((d for d in range(max_degree + 1) if radical[d].dim), None)
    if first is None:
        return PrincipalRadicalData(None, None, "radical is zero up to the bound")
    if radical[first].dim != 1:
        return PrincipalRadicalData(
            None, None,
            f"lowest nonzero slice (degree {first}) has dimension "
            f"{radical[first].dim}",
        )
    vec = radical[first].basis()[0]
    lead = min(vec)
    w = Elem(alg, first, {k: c / vec[lead] for k, c in vec.items()})
    normal = True
    for d in range(max_degree - first + 1):
        s = alg.slice_space(d)
        if mul_elem_space(alg, w, s, d) != mul_space_elem(alg, s, d, w):
            normal = False
            break
    if not normal:
        return PrincipalRadicalData(w, False, "lowest generator is not normal")
    ideal = two_sided_ideal_slices(alg, [w], max_degree)
    for d in range(max_degree + 1):
        if ideal[d] != radical[d]:
            return PrincipalRadicalData(
                w, True, f"(w) differs from the radical in degree {d}"
            )
    return PrincipalRadicalData(w, True, "")


# ---------------------------------------------------------------------------
# constrained left ideals (matrix-block analysis of the pertinency ideal)


def constrained_left_ideal(
    action: HopfAction,
    terms: list[tuple[Vec, Vec]],
    max_degree: int,
) -> list[Subspace]:
    """Slices of {w : w = Σ b (n·a), 0 = Σ b (z·a)} where each summand
    runs over one (n, z) pair of H-elements and arbitrary a, b in A.

    Per degree this is the image of the combined bilinear map intersected
    with (A_d, 0); the b-factor makes every slice family a left ideal.
    """
    alg = action.alg
    out: list[Subspace] = []
    for d in range(max_degree + 1):
        dim = alg.dim(d)
        paired = Subspace(2 * dim)
        for n, z in terms:
            for f in range(d + 1):
                e = d - f
                for a in range(alg.dim(f)):
                    na = action.act(n, {a: ONE}, f)
                    za = action.act(z, {a: ONE}, f)
                    for b in range(alg.dim(e)):
                        top = alg.mul({b: ONE}, e, na, f)
                        bot = alg.mul({b: ONE}, e, za, f)
                        vec = dict(top)
                        for k, c in bot.items():
                            vec[dim + k] = c
                        paired.add(vec)
        window = Subspace.span(2 * dim, [{k: ONE} for k in range(dim)])
        inter = paired.intersect(window)
        out.append(Subspace.span(dim, [dict(v) for v in inter.basis()]))
    return out

"""Invariants of a graded algebra under a semisimple Hopf action.

Everything here is computed degree by degree, exactly:

* the character components A_g (simultaneous eigenspaces of the action),
* the fixed subring R with detected generator degrees and a polynomiality
  certificate on its Hilbert series,
* the homological determinant by two independent routes (the top of the
  Koszul-type complex on free tensor slices, and the Hilbert-series
  argument through the component generators) which must agree,
* the Jacobian, the arrangement element, and the discriminant,
* the covariant quotients A / A R_+, A / R_+ A and A / (R_+).

Components are returned as lists of subspaces indexed [character][degree].
Minimal component generators f_g are normalised so the coefficient of the
first basis word is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .hopf import Character, CharacterGroup, HopfAction
from .linalg import Matrix, Subspace, Vec, express, vec_from_dense
from .ncalg import (
    Elem,
    GradedAlgebra,
    augmentation_module_slices,
    mul_elem_space,
    mul_space_elem,
    two_sided_ideal_slices,
)
from .scalars import Cyc, ONE, ZERO


# ---------------------------------------------------------------------------
# character components


def graded_components(
    action: HopfAction, chars: CharacterGroup, max_degree: int
) -> list[list[Subspace]]:
    """slices[i][d] = {a in A_d : h.a = chars[i](h) a for all h}."""
    alg = action.alg
    out: list[list[Subspace]] = []
    if action.kind == "dual_group":
        # character i is evaluation at group element i, so the component
        # is the span of the basis words of that G-degree
        for i in range(len(chars)):
            slices = []
            for d in range(max_degree + 1):
                gdeg = action.word_gdeg(d)
                s = Subspace(alg.dim(d))
                for k, g in enumerate(gdeg):
                    if g == i:
                        s.add({k: ONE})
                slices.append(s)
            out.append(slices)
        return out

    if action.kind == "group":
        probes = action.group.generating_set()
    else:
        probes = list(range(action.hopf.dim))
    for ch in chars.chars:
        slices = []
        for d in range(max_degree + 1):
            dim = alg.dim(d)
            rows: list[list[Cyc]] = []
            for h in probes:
                m = action.matrix(h, d)
                lam = ch.values[h]
                for r in range(dim):
                    row = list(m.rows[r])
                    row[r] = row[r] - lam
                    rows.append(row)
            if rows:
                kernel = Matrix(rows).kernel()
                slices.append(Subspace.span(dim, [vec_from_dense(v) for v in kernel]))
            else:  # no constraints (trivial group): the whole slice
                slices.append(alg.slice_space(d))
        out.append(slices)
    return out


def check_component_multiplicativity(
    alg: GradedAlgebra,
    chars: CharacterGroup,
    comps: list[list[Subspace]],
    max_degree: int,
) -> list[str]:
    """A_g * A_h must land in A_{gh}."""
    bad = []
    g0 = chars.group
    n = len(chars)
    for i in range(n):
        for j in range(n):
            k = g0.table[i][j]
            for e in range(max_degree + 1):
                for f in range(max_degree + 1 - e):
                    target = comps[k][e + f]
                    for u in comps[i][e].basis():
                        for v in comps[j][f].basis():
                            if not target.contains(alg.mul(u, e, v, f)):
                                bad.append(
                                    f"A_{g0.labels[i]} * A_{g0.labels[j]} leaves "
                                    f"A_{g0.labels[k]} in degree {e + f}"
                                )
                                break
                        else:
                            continue
                        break
    return bad


def minimal_component_generator(
    alg: GradedAlgebra, slices: list[Subspace], is_identity: bool
) -> tuple[Elem | None, str]:
    """The minimal-degree element of a component, normalised; or None with
    a reason ('zero' if the component vanishes, 'ambiguous' if the minimal
    slice has dimension > 1)."""
    start = 0 if is_identity else 1
    for d in range(start, len(slices)):
        dim = slices[d].dim
        if dim == 0:
            continue
        if dim > 1:
            return None, f"minimal slice (degree {d}) has dimension {dim}"
        vec = slices[d].basis()[0]
        lead = min(vec)
        scale = vec[lead].inverse()
        return Elem(alg, d, {k: c * scale for k, c in vec.items()}), ""
    return None, "component is zero up to the degree bound"


@dataclass
class ComponentReport:
    chars: CharacterGroup
    slices: list[list[Subspace]]
    f: list[Elem | None]
    f_reasons: list[str]
    freeness: list[bool | None]  # None when f is undefined
    freeness_failures: list[str]


def component_report(
    action: HopfAction, chars: CharacterGroup, max_degree: int
) -> ComponentReport:
    alg = action.alg
    comps = graded_components(action, chars, max_degree)
    identity = chars.group.identity
    f: list[Elem | None] = []
    reasons: list[str] = []
    for i, slices in enumerate(comps):
        elem, reason = minimal_component_generator(alg, slices, i == identity)
        f.append(elem)
        reasons.append(reason)
    r_slices = comps[identity]
    freeness: list[bool | None] = []
    failures: list[str] = []
    for i, slices in enumerate(comps):
        fi = f[i]
        if fi is None:
            freeness.append(None)
            continue
        ok = True
        for d in range(max_degree + 1):
            lower = d - fi.degree
            if lower < 0:
                if slices[d].dim:
                    ok = False
                    failures.append(
                        f"A_{chars.group.labels[i]} is nonzero below its generator"
                    )
                    break
                continue
            left = mul_space_elem(alg, r_slices[lower], lower, fi)
            right = mul_elem_space(alg, fi, r_slices[lower], lower)
            if not (
                slices[d].dim == r_slices[lower].dim
                and left == slices[d]
                and right == slices[d]
            ):
                ok = False
                failures.append(
                    f"A_{chars.group.labels[i]} is not freely spanned by its "
                    f"generator in degree {d}"
                )
                break
        freeness.append(ok)
    return ComponentReport(chars, comps, f, reasons, freeness, failures)


# ---------------------------------------------------------------------------
# the fixed subring


@dataclass
class FixedRing:
    slices: list[Subspace]
    dims: list[int]
    gen_degrees: list[int]
    gens: list[Elem]
    polynomial: bool
    commutative: bool
    integral_projection_agrees: bool


def fixed_ring(
    action: HopfAction,
    chars: CharacterGroup,
    comps: list[list[Subspace]],
    max_degree: int,
) -> FixedRing:
    alg = action.alg
    identity = chars.group.identity
    slices = comps[identity]
    dims = [s.dim for s in slices]

    # cross-check: R_d must equal the image of the integral's projection
    lam = action.hopf.integral()
    agrees = True
    for d in range(max_degree + 1):
        dim = alg.dim(d)
        image = Subspace(dim)
        for k in range(dim):
            image.add(action.act(lam, {k: ONE}, d))
        if image != slices[d]:
            agrees = False
            break

    gen_degrees: list[int] = []
    gens: list[Elem] = []
    products: list[Subspace] = []
    for d in range(max_degree + 1):
        span = Subspace(alg.dim(d))
        for e in range(1, d):
            for u in slices[e].basis():
                for v in slices[d - e].basis():
                    span.add(alg.mul(u, e, v, d - e))
        products.append(span)
        if d >= 1:
            for vec in slices[d].basis():
                if span.add(vec):
                    gen_degrees.append(d)
                    lead = min(vec)
                    gens.append(
                        Elem(alg, d, {k: c * vec[lead].inverse() for k, c in vec.items()})
                    )

    polynomial = hilbert_poly_certificate(dims, gen_degrees, max_degree)

    commutative = True
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            if a.degree + b.degree <= max_degree and a * b != b * a:
                commutative = False

    return FixedRing(slices, dims, gen_degrees, gens, polynomial, commutative, agrees)


def hilbert_poly_certificate(dims: Sequence[int], gen_degrees: Sequence[int], D: int) -> bool:
    """True iff hilbert(R) * prod (1 - t^d_i) = 1 up to degree D."""
    series = [Fraction(x) for x in dims]
    for d in gen_degrees:
        series = [series[k] - (series[k - d] if k >= d else 0) for k in range(D + 1)]
    return series[0] == 1 and all(x == 0 for x in series[1:])


def series_quotient(num: Sequence[int], den: Sequence[int], D: int) -> list[Fraction]:
    """Power-series division num/den (den[0] must be nonzero)."""
    out: list[Fraction] = []
    for d in range(D + 1):
        acc = Fraction(num[d]) if d < len(num) else Fraction(0)
        for e in range(1, d + 1):
            if e < len(den):
                acc -= den[e] * out[d - e]
        out.append(acc / den[0])
    return out


def series_is_polynomial(coeffs: Sequence[Fraction]) -> tuple[bool, int]:
    """(is a nonnegative-integer polynomial with a zero tail, top degree)."""
    top = -1
    for d, c in enumerate(coeffs):
        if c != 0:
            top = d
        if c != int(c) or c < 0:
            return False, -1
    if top == len(coeffs) - 1:
        return False, -1  # still nonzero at the boundary: can't tell
    return True, top


# ---------------------------------------------------------------------------
# homological determinant


@dataclass
class HDetResult:
    char_index: int
    routes: dict[str, int]
    koszul_top: int | None
    koszul_dims: list[int]
    notes: list[str]


def _free_slice_index(ngens: int, length: int):
    words = []

    def rec(prefix):
        if len(prefix) == length:
            words.append(tuple(prefix))
            return
        for i in range(ngens):
            prefix.append(i)
            rec(prefix)
            prefix.pop()

    rec([])
    return words, {w: i for i, w in enumerate(words)}


def koszul_route(
    action: HopfAction, chars: CharacterGroup, max_degree: int
) -> tuple[int, int, list[int]] | tuple[None, None, list[int]]:
    """Homological determinant from the top of the Koszul-type complex:
    W_s = intersection of V^i (x) Rel (x) V^(s-N-i) inside V^(x s); at the
    smallest s with dim W_s = 1 and dim W_{s+1} = 0, H acts on the line W_s
    through the homological determinant (a diagonal scaling, for instance,
    multiplies the commutation relation of a skew plane by its ordinary
    determinant).

    Returns (char index of hdet, s, dims); (None, None, dims) when the
    route does not apply.
    """
    alg = action.alg
    if any(w != 1 for w in alg.weights):
        return None, None, []
    degrees = set(alg.relation_degrees)
    if len(degrees) != 1:
        return None, None, []
    n = degrees.pop()
    ngens = alg.ngens

    rel_vecs = []
    words_n, index_n = _free_slice_index(ngens, n)
    for rel in alg.relations:
        rel_vecs.append({index_n[w]: c for w, c in rel.items()})
    rel_space = Subspace.span(len(words_n), rel_vecs)

    dims: list[int] = []
    top_s = None
    top_space: Subspace | None = None
    prev: Subspace | None = None
    for s in range(n, max_degree + 1):
        words, index = _free_slice_index(ngens, s)
        total = ngens ** s
        spaces = []
        for i in range(s - n + 1):
            sp = Subspace(total)
            # V^i (x) Rel (x) V^(s-n-i)
            left_words, _ = _free_slice_index(ngens, i)
            right_words, _ = _free_slice_index(ngens, s - n - i)
            for lw in left_words:
                for rv in rel_space.basis():
                    for rw in right_words:
                        sp.add({index[lw + words_n[m] + rw]: c for m, c in rv.items()})
            spaces.append(sp)
        cur = spaces[0]
        for sp in spaces[1:]:
            cur = cur.intersect(sp)
        dims.append(cur.dim)
        if prev is not None and prev.dim == 1 and cur.dim == 0:
            top_s = s - 1
            top_space = prev
            break
        if cur.dim == 0:
            break  # the chain can only shrink from here
        prev = cur
    if top_s is None or top_space is None:
        return None, None, dims

    words, index = _free_slice_index(ngens, top_s)
    w_vec = top_space.basis()[0]
    w_poly = {words[k]: c for k, c in w_vec.items()}
    values = []
    lead = min(w_vec)
    for h in range(action.hopf.dim):
        img = action.act_free(h, w_poly)
        img_vec = {index[word]: c for word, c in img.items()}
        scale = img_vec.get(lead, ZERO)
        check = {k: c * scale for k, c in w_vec.items() if not (c * scale).is_zero()}
        if img_vec != check:
            raise ValueError("H does not act by a scalar on the Koszul top")
        values.append(scale)
    hdet = Character(action.hopf, values)
    if not hdet.is_algebra_map():
        raise ValueError("Koszul top scalars do not form a character")
    return chars.index_of(hdet), top_s, dims


def hilbert_route(
    chars: CharacterGroup,
    comp: ComponentReport,
    fixed: FixedRing,
    hA: Sequence[int],
    max_degree: int,
) -> tuple[int | None, str]:
    """hdet^{-1} is the unique character whose component generator sits in
    the top degree of xi = hilbert(A)/hilbert(R)."""
    if not fixed.polynomial:
        return None, "fixed ring is not polynomial up to the degree bound"
    xi = series_quotient(hA, fixed.dims, max_degree)
    ok, top = series_is_polynomial(xi)
    if not ok:
        return None, "xi is not a polynomial up to the degree bound"
    if any(f is None for f in comp.f):
        return None, "some component generators are undefined"
    hits = [i for i, f in enumerate(comp.f) if f.degree == top]
    if len(hits) != 1:
        return None, f"{len(hits)} component generators have degree {top}"
    inv = chars.group.inverse[hits[0]]
    return inv, ""


def homological_determinant(
    action: HopfAction,
    chars: CharacterGroup,
    comp: ComponentReport,
    fixed: FixedRing,
    max_degree: int,
    supplied: int | None = None,
) -> HDetResult:
    alg = action.alg
    hA = alg.hilbert(max_degree)
    routes: dict[str, int] = {}
    notes: list[str] = []

    k_idx, k_top, k_dims = koszul_route(action, chars, max_degree)
    if k_idx is not None:
        routes["koszul"] = k_idx
    else:
        notes.append("koszul route unavailable")

    h_idx, h_reason = hilbert_route(chars, comp, fixed, hA, max_degree)
    if h_idx is not None:
        routes["hilbert"] = h_idx
    else:
        notes.append(f"hilbert route unavailable: {h_reason}")

    if not routes:
        raise ValueError("no route to the homological determinant applies")
    values = set(routes.values())
    if len(values) != 1:
        labels = {name: chars.group.labels[i] for name, i in routes.items()}
        raise ValueError(f"homological determinant routes disagree: {labels}")
    got = values.pop()
    if supplied is not None and supplied != got:
        raise ValueError(
            f"supplied homological determinant {chars.group.labels[supplied]} "
            f"!= computed {chars.group.labels[got]}"
        )
    return HDetResult(got, routes, k_top, k_dims, notes)


# ---------------------------------------------------------------------------
# jacobian, arrangement element, discriminant


@dataclass
class JacobianData:
    j: Elem
    a: Elem
    delta_left: Elem
    delta_right: Elem
    deltas_proportional: bool
    delta_in_fixed_ring: bool
    a_divides_j_left: bool
    a_divides_j_right: bool


def jacobian_data(
    alg: GradedAlgebra,
    chars: CharacterGroup,
    comp: ComponentReport,
    fixed: FixedRing,
    hdet_index: int,
) -> JacobianData:
    inv = chars.group.inverse[hdet_index]
    j = comp.f[inv]
    a = comp.f[hdet_index]
    if j is None or a is None:
        raise ValueError("component generators at the homological determinant are undefined")
    dl = a * j
    dr = j * a
    prop = proportional(dl, dr)
    d = dl.degree
    in_r = d <= len(fixed.slices) - 1 and fixed.slices[d].contains(dl.vec) and fixed.slices[
        d
    ].contains(dr.vec)
    left = _divides(alg, a, j, side="left")
    right = _divides(alg, a, j, side="right")
    return JacobianData(j, a, dl, dr, prop, in_r, left, right)


def proportional(x: Elem, y: Elem) -> bool:
    if x.is_zero() or y.is_zero():
        return x.is_zero() and y.is_zero()
    if x.degree != y.degree or set(x.vec) != set(y.vec):
        return False
    k = min(x.vec)
    ratio = y.vec[k] / x.vec[k]
    return all(y.vec[k2] == c * ratio for k2, c in x.vec.items())


def _divides(alg: GradedAlgebra, d: Elem, m: Elem, side: str) -> bool:
    """Does d divide m on the given side (m = d*q or m = q*d)?"""
    qdeg = m.degree - d.degree
    if qdeg < 0:
        return False
    dim = alg.dim(qdeg)
    gens = []
    for k in range(dim):
        if side == "left":
            gens.append(alg.mul(d.vec, d.degree, {k: ONE}, qdeg))
        else:
            gens.append(alg.mul({k: ONE}, qdeg, d.vec, d.degree))
    return express(alg.dim(m.degree), gens, m.vec) is not None


# ---------------------------------------------------------------------------
# covariant quotients


@dataclass
class CovariantData:
    left_dims: list[int]
    right_dims: list[int]
    algebra_dims: list[int]
    tepid: bool
    frobenius: str  # "yes" | "no" | "undetermined"
    frobenius_reason: str


def covariant_data(
    alg: GradedAlgebra, fixed: FixedRing, max_degree: int
) -> CovariantData:
    left = augmentation_module_slices(alg, fixed.slices, max_degree)  # A * R_+
    right = _right_augmentation(alg, fixed.slices, max_degree)  # R_+ * A
    two = two_sided_ideal_slices(alg, fixed.gens, max_degree)
    # (R_+) as a two-sided ideal equals the ideal generated by the R-gens
    dims = [alg.dim(d) for d in range(max_degree + 1)]
    left_dims = [dims[d] - left[d].dim for d in range(max_degree + 1)]
    right_dims = [dims[d] - right[d].dim for d in range(max_degree + 1)]
    alg_dims = [dims[d] - two[d].dim for d in range(max_degree + 1)]
    tepid = all(left[d] == right[d] for d in range(max_degree + 1))
    frob, reason = _graded_frobenius(alg, two, alg_dims, max_degree)
    return CovariantData(left_dims, right_dims, alg_dims, tepid, frob, reason)


def _right_augmentation(
    alg: GradedAlgebra, sub_slices: Sequence[Subspace], max_degree: int
) -> list[Subspace]:
    out: list[Subspace] = []
    for d in range(max_degree + 1):
        acc = Subspace(alg.dim(d))
        if 1 <= d < len(sub_slices):
            for v in sub_slices[d].basis():
                acc.add(v)
        for i, w in enumerate(alg.weights):
            if w <= d:
                cols = alg.right_letter(i, d - w)
                for v in out[d - w].basis():
                    acc.add(alg.apply_cols(cols, v))
        out.append(acc)
    return out


def _graded_frobenius(
    alg: GradedAlgebra,
    ideal: Sequence[Subspace],
    qdims: Sequence[int],
    max_degree: int,
) -> tuple[str, str]:
    """Is the covariant algebra graded Frobenius (perfect pairing into its
    one-dimensional top degree)?"""
    if qdims[max_degree] != 0:
        return "undetermined", "covariant algebra still nonzero at the degree bound"
    top = max((d for d in range(max_degree + 1) if qdims[d]), default=0)
    if qdims[top] != 1:
        return "no", f"top degree {top} has dimension {qdims[top]}"
    reps = [_quotient_lifts(alg, ideal[d], d) for d in range(top + 1)]
    # every reduced vector in the 1-dimensional top quotient is a multiple
    # of the reduced image of the chosen top representative
    tv = ideal[top].reduce(reps[top][0])
    lead = min(tv)
    for d in range(top + 1):
        e = top - d
        if qdims[d] != qdims[e]:
            return "no", f"dimensions in degrees {d} and {e} differ"
        rows = []
        for u in reps[d]:
            row = []
            for v in reps[e]:
                red = ideal[top].reduce(alg.mul(u, d, v, e))
                row.append(red.get(lead, ZERO) / tv[lead])
            rows.append(row)
        if rows and Matrix(rows).rank() != qdims[d]:
            return "no", f"pairing degenerates in degree {d}"
    return "yes", ""


def _quotient_lifts(alg: GradedAlgebra, ideal_slice: Subspace, d: int) -> list[Vec]:
    """Standard-basis lifts of a basis of A_d / ideal_slice."""
    span = Subspace(alg.dim(d))
    for v in ideal_slice.basis():
        span.add(v)
    out = []
    for k in range(alg.dim(d)):
        if span.add({k: ONE}):
            out.append({k: ONE})
    return out

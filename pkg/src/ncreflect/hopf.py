"""Finite-dimensional Hopf algebras, their characters, and their actions.

A Hopf algebra is stored by structure constants over a fixed basis:
multiplication and antipode as sparse vectors, comultiplication as a list
of (left, right, coefficient) triples per basis element.  ``verify``
re-checks every axiom and reports witnesses instead of trusting input.

Characters (one-dimensional representations) form a group under the
convolution product; they grade the invariant theory downstream.  The
central idempotent attached to a character is recovered from the integral
by a winding endomorphism and is verified before use.

Actions on a graded algebra come in three flavours: explicit generator
matrices per basis element, matrices for the generators of a group (the
group algebra case, extended and consistency-checked over the Cayley
graph), and a grading of the generators by a finite group (the dual group
algebra case, where basis words act diagonally).
"""

from __future__ import annotations

from itertools import product as iproduct
from typing import Iterable, Sequence

from .exprs import FreePoly, Word, p_addto, p_mul
from .linalg import Matrix, Vec, vec_addto
from .ncalg import GradedAlgebra
from .scalars import Cyc, ONE, ZERO, zeta


# ---------------------------------------------------------------------------
# finite groups


class Group:
    """A finite group given by its multiplication table (validated)."""

    def __init__(self, labels: Sequence[str], table: Sequence[Sequence[int]]):
        self.labels = list(labels)
        self.table = [list(row) for row in table]
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate group element labels")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("multiplication table has the wrong shape")
        if any(x < 0 or x >= n for row in self.table for x in row):
            raise ValueError("multiplication table entry out of range")
        identity = None
        for e in range(n):
            if all(self.table[e][g] == g and self.table[g][e] == g for g in range(n)):
                identity = e
                break
        if identity is None:
            raise ValueError("no identity element")
        self.identity = identity
        self.inverse = [-1] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == identity:
                    self.inverse[g] = h
            if self.inverse[g] < 0 or self.table[self.inverse[g]][g] != identity:
                raise ValueError(f"element {self.labels[g]} has no two-sided inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                        raise ValueError("multiplication table is not associative")

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def power(self, g: int, k: int) -> int:
        out = self.identity
        if k < 0:
            g, k = self.inverse[g], -k
        for _ in range(k):
            out = self.table[out][g]
        return out

    def element_order(self, g: int) -> int:
        k, cur = 1, g
        while cur != self.identity:
            cur = self.table[cur][g]
            k += 1
        return k

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_abelian(self) -> bool:
        return all(
            self.table[a][b] == self.table[b][a]
            for a in range(self.order)
            for b in range(self.order)
        )

    def closure(self, gens: Iterable[int]) -> set[int]:
        out = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            g = frontier.pop()
            for s in gens:
                t = self.table[s][g]
                if t not in out:
                    out.add(t)
                    frontier.append(t)
        return out

    def generating_set(self) -> list[int]:
        gens: list[int] = []
        have = {self.identity}
        for g in range(self.order):
            if g not in have:
                gens.append(g)
                have = self.closure(gens)
        return gens

    @staticmethod
    def cyclic(n: int, prefix: str = "g") -> "Group":
        labels = ["e"] + [f"{prefix}{k}" if k > 1 else prefix for k in range(1, n)]
        table = [[(a + b) % n for b in range(n)] for a in range(n)]
        return Group(labels, table)

    @staticmethod
    def direct_product(a: "Group", b: "Group") -> "Group":
        labels = []
        for i in range(a.order):
            for j in range(b.order):
                if i == a.identity and j == b.identity:
                    labels.append("e")
                elif i == a.identity:
                    labels.append(b.labels[j])
                elif j == b.identity:
                    labels.append(a.labels[i])
                else:
                    labels.append(f"{a.labels[i]}.{b.labels[j]}")
        n = b.order

        def idx(i, j):
            return i * n + j

        table = [
            [idx(a.table[i][k], b.table[j][l]) for k in range(a.order) for l in range(b.order)]
            for i in range(a.order)
            for j in range(b.order)
        ]
        return Group(labels, table)


# ---------------------------------------------------------------------------
# Hopf algebras by structure constants


class HopfAlgebra:
    def __init__(
        self,
        labels: Sequence[str],
        unit: Vec,
        mult: Sequence[Sequence[Vec]],
        comult: Sequence[Sequence[tuple[int, int, Cyc]]],
        counit: Sequence[Cyc],
        antipode: Sequence[Vec],
    ):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.unit = dict(unit)
        self.mult = [[dict(v) for v in row] for row in mult]
        self.comult = [list(t) for t in comult]
        self.counit = list(counit)
        self.antipode = [dict(v) for v in antipode]
        self._integral: Vec | None = None

    # -- operations on coordinate vectors --------------------------------

    def mul_vec(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                vec_addto(out, row[j], a * b)
        return out

    def comult_vec(self, u: Vec) -> dict[tuple[int, int], Cyc]:
        out: dict[tuple[int, int], Cyc] = {}
        for i, a in u.items():
            for j, k, c in self.comult[i]:
                key = (j, k)
                cur = out.get(key)
                new = a * c if cur is None else cur + a * c
                if new.is_zero():
                    if cur is not None:
                        del out[key]
                else:
                    out[key] = new
        return out

    def counit_vec(self, u: Vec) -> Cyc:
        acc = ZERO
        for i, a in u.items():
            acc = acc + a * self.counit[i]
        return acc

    def antipode_vec(self, u: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            vec_addto(out, self.antipode[i], a)
        return out

    def basis_vec(self, i: int) -> Vec:
        return {i: ONE}

    def tensor_mul(self, s: dict, t: dict) -> dict:
        out: dict[tuple[int, int], Cyc] = {}
        for (a, b), x in s.items():
            for (c, d), y in t.items():
                left = self.mult[a][c]
                right = self.mult[b][d]
                coeff = x * y
                for p, xp in left.items():
                    for q, xq in right.items():
                        key = (p, q)
                        add = coeff * xp * xq
                        cur = out.get(key)
                        new = add if cur is None else cur + add
                        if new.is_zero():
                            if cur is not None:
                                del out[key]
                        else:
                            out[key] = new
        return out

    # -- verification ------------------------------------------------------

    def verify(self) -> list[str]:
        """Re-check every Hopf axiom; returns failure witnesses."""
        bad: list[str] = []
        rng = range(self.dim)
        lab = self.labels

        for i in rng:
            if self.mul_vec(self.unit, self.basis_vec(i)) != self.basis_vec(i):
                bad.append(f"unit: 1*{lab[i]} != {lab[i]}")
            if self.mul_vec(self.basis_vec(i), self.unit) != self.basis_vec(i):
                bad.append(f"unit: {lab[i]}*1 != {lab[i]}")

        for i in rng:
            for j in rng:
                for k in rng:
                    lhs = self.mul_vec(self.mult[i][j], self.basis_vec(k))
                    rhs = self.mul_vec(self.basis_vec(i), self.mult[j][k])
                    if lhs != rhs:
                        bad.append(f"associativity: ({lab[i]}*{lab[j]})*{lab[k]}")

        for i in rng:
            left: dict[tuple[int, int, int], Cyc] = {}
            right: dict[tuple[int, int, int], Cyc] = {}
            for j, k, c in self.comult[i]:
                for a, b, d in self.comult[j]:
                    _tensor3_add(left, (a, b, k), c * d)
                for a, b, d in self.comult[k]:
                    _tensor3_add(right, (j, a, b), c * d)
            if left != right:
                bad.append(f"coassociativity: {lab[i]}")

        for i in rng:
            lvec: Vec = {}
            rvec: Vec = {}
            for j, k, c in self.comult[i]:
                vec_addto(lvec, self.basis_vec(k), c * self.counit[j])
                vec_addto(rvec, self.basis_vec(j), c * self.counit[k])
            if lvec != self.basis_vec(i) or rvec != self.basis_vec(i):
                bad.append(f"counit: {lab[i]}")

        unit_tensor = {}
        for i, a in self.unit.items():
            for j, b in self.unit.items():
                unit_tensor[(i, j)] = a * b
        if self.comult_vec(self.unit) != unit_tensor:
            bad.append("comultiplication: unit is not grouplike")
        if self.counit_vec(self.unit) != ONE:
            bad.append("counit: counit(1) != 1")

        for i in rng:
            for j in rng:
                got = self.comult_vec(self.mult[i][j])
                want = self.tensor_mul(
                    dict(self.comult_vec(self.basis_vec(i))),
                    dict(self.comult_vec(self.basis_vec(j))),
                )
                if got != want:
                    bad.append(f"comultiplication is not multiplicative: {lab[i]}*{lab[j]}")
                eps = self.counit_vec(self.mult[i][j])
                if eps != self.counit[i] * self.counit[j]:
                    bad.append(f"counit is not multiplicative: {lab[i]}*{lab[j]}")

        for i in rng:
            left_vec: Vec = {}
            right_vec: Vec = {}
            for j, k, c in self.comult[i]:
                vec_addto(left_vec, self.mul_vec(self.antipode[j], self.basis_vec(k)), c)
                vec_addto(right_vec, self.mul_vec(self.basis_vec(j), self.antipode[k]), c)
            want = vec_scale_vec(self.unit, self.counit[i])
            if left_vec != want:
                bad.append(f"antipode (left): {lab[i]}")
            if right_vec != want:
                bad.append(f"antipode (right): {lab[i]}")

        return bad

    # -- integral -----------------------------------------------------------

    def integral(self) -> Vec:
        """The two-sided integral normalised by counit(Λ) = 1."""
        if self._integral is not None:
            return dict(self._integral)
        rows: list[list[Cyc]] = []
        for i in range(self.dim):
            block = [[ZERO] * self.dim for _ in range(self.dim)]
            for c in range(self.dim):
                img = self.mult[i][c]
                for r, x in img.items():
                    block[r][c] = x
                block[c][c] = block[c][c] - self.counit[i]
            rows.extend(block)
        kernel = Matrix(rows).kernel()
        if not kernel:
            raise ValueError("no left integral found")
        lam = vec_from_list(kernel[0])
        eps = self.counit_vec(lam)
        if eps.is_zero():
            raise ValueError("integral is killed by the counit (algebra not semisimple?)")
        lam = vec_scale_vec(lam, eps.inverse())
        for i in range(self.dim):
            want = vec_scale_vec(lam, self.counit[i])
            if self.mul_vec(self.basis_vec(i), lam) != want:
                raise ValueError("computed integral is not a left integral")
            if self.mul_vec(lam, self.basis_vec(i)) != want:
                raise ValueError("integral is not two-sided")
        if self.mul_vec(lam, lam) != lam:
            raise ValueError("normalised integral is not idempotent")
        self._integral = lam
        return dict(lam)

    def show_vec(self, v: Vec) -> str:
        from .exprs import show

        return show({(k,): c for k, c in v.items()}, self.labels) if v else "0"


def _tensor3_add(acc: dict, key: tuple[int, int, int], c: Cyc) -> None:
    cur = acc.get(key)
    new = c if cur is None else cur + c
    if new.is_zero():
        if cur is not None:
            del acc[key]
    else:
        acc[key] = new


def vec_scale_vec(v: Vec, c: Cyc) -> Vec:
    if c.is_zero():
        return {}
    return {k: x * c for k, x in v.items()}


def vec_from_list(xs: Sequence[Cyc]) -> Vec:
    return {k: x for k, x in enumerate(xs) if not x.is_zero()}


def apply_columns(cols: Sequence[Vec], v: Vec) -> Vec:
    out: Vec = {}
    for k, c in v.items():
        vec_addto(out, cols[k], c)
    return out


# ---------------------------------------------------------------------------
# group and dual-group Hopf algebras


def group_algebra(group: Group) -> HopfAlgebra:
    n = group.order
    mult = [[{group.table[i][j]: ONE} for j in range(n)] for i in range(n)]
    comult = [[(i, i, ONE)] for i in range(n)]
    counit = [ONE] * n
    antipode = [{group.inverse[i]: ONE} for i in range(n)]
    return HopfAlgebra(group.labels, {group.identity: ONE}, mult, comult, counit, antipode)


def dual_group_algebra(group: Group) -> HopfAlgebra:
    n = group.order
    mult = [[{i: ONE} if i == j else {} for j in range(n)] for i in range(n)]
    comult: list[list[tuple[int, int, Cyc]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            comult[group.table[a][b]].append((a, b, ONE))
    counit = [ONE if i == group.identity else ZERO for i in range(n)]
    antipode = [{group.inverse[i]: ONE} for i in range(n)]
    unit = {i: ONE for i in range(n)}
    return HopfAlgebra(group.labels, unit, mult, comult, counit, antipode)


# ---------------------------------------------------------------------------
# characters


class Character:
    """An algebra map H -> k, stored by its values on the basis."""

    __slots__ = ("hopf", "values", "label")

    def __init__(self, hopf: HopfAlgebra, values: Sequence[Cyc], label: str = ""):
        self.hopf = hopf
        self.values = list(values)
        self.label = label

    def __call__(self, v) -> Cyc:
        if isinstance(v, int):
            return self.values[v]
        acc = ZERO
        for i, c in v.items():
            acc = acc + c * self.values[i]
        return acc

    def key(self) -> tuple:
        return tuple(c.key() for c in self.values)

    def is_algebra_map(self) -> bool:
        h = self.hopf
        if self(h.unit) != ONE:
            return False
        for i in range(h.dim):
            for j in range(h.dim):
                if self(h.mult[i][j]) != self.values[i] * self.values[j]:
                    return False
        return True

    def convolve(self, other: "Character") -> "Character":
        h = self.hopf
        vals = []
        for i in range(h.dim):
            acc = ZERO
            for j, k, c in h.comult[i]:
                acc = acc + c * self.values[j] * other.values[k]
            vals.append(acc)
        return Character(h, vals)

    def inverse(self) -> "Character":
        h = self.hopf
        return Character(h, [self(h.antipode[i]) for i in range(h.dim)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.values == other.values

    def __repr__(self) -> str:
        return f"Character({self.label or self.key()})"


class CharacterGroup:
    """The group of algebra characters of H under convolution."""

    def __init__(self, hopf: HopfAlgebra, chars: Sequence[Character]):
        self.hopf = hopf
        self.chars = list(chars)
        for ch in self.chars:
            if not ch.is_algebra_map():
                raise ValueError(f"character {ch.label!r} is not an algebra map")
        keys = {ch.key(): i for i, ch in enumerate(self.chars)}
        if len(keys) != len(self.chars):
            raise ValueError("duplicate characters")
        n = len(self.chars)
        table = [[-1] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                prod = self.chars[i].convolve(self.chars[j])
                got = keys.get(prod.key())
                if got is None:
                    raise ValueError(
                        f"characters are not closed under convolution: "
                        f"{self.chars[i].label} * {self.chars[j].label}"
                    )
                table[i][j] = got
        for i, ch in enumerate(self.chars):
            if keys.get(ch.inverse().key()) is None:
                raise ValueError(f"character group is missing the inverse of {ch.label}")
        self.group = Group([ch.label for ch in self.chars], table)

    def __len__(self) -> int:
        return len(self.chars)

    def index_of(self, ch: Character) -> int:
        key = ch.key()
        for i, c in enumerate(self.chars):
            if c.key() == key:
                return i
        raise ValueError("character not in group")


def dual_group_characters(hopf: HopfAlgebra, group: Group) -> CharacterGroup:
    """For H = (kG)^*: evaluation at g, labelled by g."""
    chars = []
    for g in range(group.order):
        values = [ONE if i == g else ZERO for i in range(group.order)]
        chars.append(Character(hopf, values, group.labels[g]))
    return CharacterGroup(hopf, chars)


def group_linear_characters(hopf: HopfAlgebra, group: Group) -> CharacterGroup:
    """For H = kG: group homomorphisms G -> k^x, found by assigning roots
    of unity to a generating set and propagating over the Cayley graph."""
    gens = group.generating_set()
    orders = [group.element_order(g) for g in gens]
    found: dict[tuple, list[Cyc]] = {}
    for combo in iproduct(*[range(o) for o in orders]):
        gen_vals = {g: zeta(o, k) for g, o, k in zip(gens, orders, combo)}
        values: list[Cyc | None] = [None] * group.order
        values[group.identity] = ONE
        frontier = [group.identity]
        ok = True
        while frontier and ok:
            h = frontier.pop()
            for g in gens:
                t = group.table[g][h]
                val = gen_vals[g] * values[h]
                if values[t] is None:
                    values[t] = val
                    frontier.append(t)
                elif values[t] != val:
                    ok = False
                    break
        if not ok or any(v is None for v in values):
            continue
        # reject assignments that are inconsistent on non-tree edges
        if any(
            values[group.table[a][b]] != values[a] * values[b]
            for a in range(group.order)
            for b in range(group.order)
        ):
            continue
        key = tuple(v.key() for v in values)
        if key not in found:
            found[key] = values
    chars = [Character(hopf, values) for values in found.values()]
    chars.sort(key=lambda ch: ch.key())
    for i, ch in enumerate(chars):
        ch.label = "triv" if all(v == ONE for v in ch.values) else f"chi{i}"
    return CharacterGroup(hopf, chars)


# ---------------------------------------------------------------------------
# winding endomorphisms and central idempotents


def winding_right_cols(hopf: HopfAlgebra, ch: Character) -> list[Vec]:
    """Columns of h -> sum h_(1) ch(h_(2))."""
    cols = []
    for i in range(hopf.dim):
        out: Vec = {}
        for j, k, c in hopf.comult[i]:
            vec_addto(out, {j: ONE}, c * ch.values[k])
        cols.append(out)
    return cols


def winding_left_cols(hopf: HopfAlgebra, ch: Character) -> list[Vec]:
    """Columns of h -> sum ch(h_(1)) h_(2)."""
    cols = []
    for i in range(hopf.dim):
        out: Vec = {}
        for j, k, c in hopf.comult[i]:
            vec_addto(out, {k: ONE}, c * ch.values[j])
        cols.append(out)
    return cols


def central_idempotents(hopf: HopfAlgebra, chars: CharacterGroup) -> list[Vec]:
    """p_ch = winding of the integral by ch^{-1}; verified before returning."""
    lam = hopf.integral()
    out = []
    for ch in chars.chars:
        p = apply_columns(winding_right_cols(hopf, ch.inverse()), lam)
        out.append(p)
    for i, p in enumerate(out):
        if hopf.mul_vec(p, p) != p:
            raise ValueError(f"projector for {chars.chars[i].label} is not idempotent")
        for b in range(hopf.dim):
            if hopf.mul_vec(p, hopf.basis_vec(b)) != hopf.mul_vec(hopf.basis_vec(b), p):
                raise ValueError(f"projector for {chars.chars[i].label} is not central")
        for j, q in enumerate(out):
            if i < j and hopf.mul_vec(p, q):
                raise ValueError("projectors are not orthogonal")
        for j, ch in enumerate(chars.chars):
            want = ONE if i == j else ZERO
            if ch(p) != want:
                raise ValueError(
                    f"character {ch.label} takes the wrong value on the "
                    f"projector for {chars.chars[i].label}"
                )
    if len(chars) == hopf.dim:
        total: Vec = {}
        for p in out:
            vec_addto(total, p)
        if total != hopf.unit:
            raise ValueError("projectors do not sum to 1")
    return out


# ---------------------------------------------------------------------------
# actions


class HopfAction:
    """An action of H on a graded algebra, specified on the generators.

    ``gen_images[h][i]`` is the image of generator x_i under the h-th basis
    element, as a coordinate vector in the slice of degree w_i.  Higher
    slices act through the comultiplication:
    h . (x_i * u) = sum (h_(1) . x_i) * (h_(2) . u).

    For a dual group algebra the action is the diagonal one determined by
    a G-degree for each generator, and columns are computed directly.
    """

    def __init__(
        self,
        hopf: HopfAlgebra,
        alg: GradedAlgebra,
        kind: str,
        gen_images: list[list[Vec]] | None = None,
        group: Group | None = None,
        grading: list[int] | None = None,
    ):
        self.hopf = hopf
        self.alg = alg
        self.kind = kind
        self.group = group
        self.grading = grading
        if kind == "dual_group":
            if group is None or grading is None:
                raise ValueError("dual group action needs the group and a grading")
            gen_images = []
            for h in range(hopf.dim):
                row = []
                for i in range(alg.ngens):
                    img = alg.nf_word((i,)) if grading[i] == h else {}
                    row.append(img)
                gen_images.append(row)
        if gen_images is None:
            raise ValueError("action needs generator images")
        self.gen_images = gen_images
        self._cols: dict[tuple[int, int], list[Vec]] = {}
        self._word_gdeg: list[list[int]] = []
        self._free_cache: dict[tuple[int, Word], FreePoly] = {}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def from_matrices(hopf: HopfAlgebra, alg: GradedAlgebra, images: list[list[Vec]]) -> "HopfAction":
        if len(images) != hopf.dim or any(len(row) != alg.ngens for row in images):
            raise ValueError("generator image table has the wrong shape")
        return HopfAction(hopf, alg, "matrices", gen_images=images)

    @staticmethod
    def from_group_matrices(
        hopf: HopfAlgebra,
        alg: GradedAlgebra,
        group: Group,
        assigned: dict[int, Matrix],
    ) -> "HopfAction":
        """Extend matrices given on group generators over the Cayley graph,
        failing loudly if two products disagree."""
        for g, m in assigned.items():
            if m.nrows != alg.ngens or m.ncols != alg.ngens:
                raise ValueError(f"matrix for {group.labels[g]} has the wrong shape")
            for i in range(alg.ngens):
                for j in range(alg.ngens):
                    if alg.weights[i] != alg.weights[j] and not m.rows[i][j].is_zero():
                        raise ValueError("action matrix mixes generator degrees")
        if group.closure(assigned.keys()) != set(range(group.order)):
            raise ValueError("assigned matrices do not generate the group")
        mats: dict[int, Matrix] = {group.identity: Matrix.identity(alg.ngens)}
        frontier = [group.identity]
        while frontier:
            h = frontier.pop()
            for s, ms in assigned.items():
                t = group.table[s][h]
                prod = ms @ mats[h]
                if t in mats:
                    if mats[t] != prod:
                        raise ValueError(
                            f"inconsistent action: two routes to {group.labels[t]} disagree"
                        )
                else:
                    mats[t] = prod
                    frontier.append(t)
        letters = [alg.nf_word((i,)) for i in range(alg.ngens)]
        images = []
        for g in range(group.order):
            row = []
            for j in range(alg.ngens):
                out: Vec = {}
                for i in range(alg.ngens):
                    vec_addto(out, letters[i], mats[g].rows[i][j])
                row.append(out)
            images.append(row)
        act = HopfAction(hopf, alg, "group", gen_images=images, group=group)
        act.matrices = mats
        return act

    @staticmethod
    def from_grading(hopf: HopfAlgebra, alg: GradedAlgebra, group: Group, grading: list[int]) -> "HopfAction":
        if len(grading) != alg.ngens:
            raise ValueError("grading must assign a group element to every generator")
        return HopfAction(hopf, alg, "dual_group", group=group, grading=grading)

    # -- the action ------------------------------------------------------------

    def word_gdeg(self, degree: int) -> list[int]:
        """G-degree of every basis word (dual group actions only)."""
        if self.kind != "dual_group":
            raise ValueError("word G-degrees only exist for dual group actions")
        while len(self._word_gdeg) <= degree:
            d = len(self._word_gdeg)
            table = self.group.table
            out = []
            for w in self.alg.basis_words(d):
                g = self.group.identity
                for letter in w:
                    g = table[g][self.grading[letter]]
                out.append(g)
            self._word_gdeg.append(out)
        return self._word_gdeg[degree]

    def columns(self, h: int, degree: int) -> list[Vec]:
        """Columns of the action of basis element h on the degree-d slice."""
        key = (h, degree)
        got = self._cols.get(key)
        if got is not None:
            return got
        if self.kind == "dual_group":
            gdeg = self.word_gdeg(degree)
            cols = [{k: ONE} if gdeg[k] == h else {} for k in range(self.alg.dim(degree))]
        elif degree == 0:
            cols = [{0: self.hopf.counit[h]} if not self.hopf.counit[h].is_zero() else {}]
        else:
            alg = self.alg
            cols = []
            for w in alg.basis_words(degree):
                i = w[0]
                rest = w[1:]
                rest_deg = degree - alg.weights[i]
                rest_idx = alg.word_index(rest_deg, rest)
                out: Vec = {}
                for p, q, c in self.hopf.comult[h]:
                    left = self.gen_images[p][i]
                    if not left:
                        continue
                    right = self.columns(q, rest_deg)[rest_idx]
                    if not right:
                        continue
                    vec_addto(out, alg.mul(left, alg.weights[i], right, rest_deg), c)
                cols.append(out)
        self._cols[key] = cols
        return cols

    def act(self, h, vec: Vec, degree: int) -> Vec:
        """Apply h (a basis index or a coordinate vector on H) to vec."""
        if isinstance(h, int):
            return apply_columns(self.columns(h, degree), vec)
        out: Vec = {}
        for i, c in h.items():
            vec_addto(out, apply_columns(self.columns(i, degree), vec), c)
        return out

    def matrix(self, h: int, degree: int) -> Matrix:
        cols = self.columns(h, degree)
        dim = self.alg.dim(degree)
        return Matrix([[cols[j].get(i, ZERO) for j in range(dim)] for i in range(dim)])

    # -- action on the free algebra ---------------------------------------------

    def gen_image_free(self, h: int, i: int) -> FreePoly:
        """Image of generator x_i under basis element h, as a free polynomial."""
        vec = self.gen_images[h][i]
        words = self.alg.basis_words(self.alg.weights[i])
        return {words[k]: c for k, c in vec.items()}

    def act_free_word(self, h: int, word: Word) -> FreePoly:
        key = (h, word)
        got = self._free_cache.get(key)
        if got is not None:
            return got
        if not word:
            c = self.hopf.counit[h]
            out: FreePoly = {} if c.is_zero() else {(): c}
        else:
            i = word[0]
            out = {}
            for p, q, c in self.hopf.comult[h]:
                left = self.gen_image_free(p, i)
                if not left:
                    continue
                right = self.act_free_word(q, word[1:])
                if not right:
                    continue
                p_addto(out, p_mul(left, right), c)
        self._free_cache[key] = out
        return out

    def act_free(self, h: int, poly: FreePoly) -> FreePoly:
        out: FreePoly = {}
        for w, c in poly.items():
            p_addto(out, self.act_free_word(h, w), c)
        return out

    # -- verification -------------------------------------------------------------

    def verify(self) -> list[str]:
        """Check the module-algebra laws on generators and relations."""
        bad: list[str] = []
        alg, hopf = self.alg, self.hopf
        lab = hopf.labels
        for j in range(alg.ngens):
            w = alg.weights[j]
            xj = alg.nf_word((j,))
            if self.act(hopf.unit, xj, w) != xj:
                bad.append(f"unit does not act as identity on {alg.gen_names[j]}")
            for a in range(hopf.dim):
                for b in range(hopf.dim):
                    via_product = self.act(hopf.mult[a][b], xj, w)
                    nested = self.act(a, self.act(b, xj, w), w)
                    if via_product != nested:
                        bad.append(
                            f"action is not an H-module: ({lab[a]}*{lab[b]})"
                            f" on {alg.gen_names[j]}"
                        )
        for h in range(hopf.dim):
            for r, rel in enumerate(alg.relations):
                image = self.act_free(h, rel)
                _, vec = alg.nf(image) if image else (None, {})
                if vec:
                    bad.append(f"{lab[h]} does not preserve relation {r}")
        return bad

"""Exact linear algebra over cyclotomic scalars.

Two layers:

* ``Matrix`` — small dense matrices (action matrices on graded slices,
  eigenspace kernels).  Column convention: ``M[i][j]`` is the coefficient
  of basis vector *i* in the image of basis vector *j*.

* ``SparseEch`` / ``Subspace`` — a row-reduced sparse span keyed by pivot
  column.  This is the hot path: ideal slices and smash-product spans are
  built by inserting thousands of mostly-sparse vectors, so the echelon is
  maintained eagerly (every stored row has pivot coefficient 1 and is
  reduced against every other pivot).  Intersections use the Zassenhaus
  doubled-coordinate trick, which keeps everything sparse.

Vectors are ``dict[int, Cyc]`` with no zero entries.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import Cyc, ONE, ZERO, coerce

Vec = dict  # dict[int, Cyc], zero entries omitted


# ---------------------------------------------------------------------------
# sparse vector helpers


def vec_addto(acc: Vec, v: Vec, c: Cyc = ONE) -> None:
    """In-place acc += c * v, pruning entries that cancel to zero."""
    if c.is_zero():
        return
    for k, x in v.items():
        cur = acc.get(k)
        new = x * c if cur is None else cur + x * c
        if new.is_zero():
            if cur is not None:
                del acc[k]
        else:
            acc[k] = new


def vec_scale(v: Vec, c: Cyc) -> Vec:
    if c.is_zero():
        return {}
    return {k: x * c for k, x in v.items()}


def vec_from_dense(xs: Sequence) -> Vec:
    out = {}
    for k, x in enumerate(xs):
        x = coerce(x)
        if not x.is_zero():
            out[k] = x
    return out


def vec_to_dense(v: Vec, dim: int) -> list:
    out = [ZERO] * dim
    for k, x in v.items():
        out[k] = x
    return out


# ---------------------------------------------------------------------------
# sparse row-echelon engine


class SparseEch:
    """Eagerly row-reduced sparse span of vectors in dimension ``dim``.

    ``rows`` maps pivot column -> row; each row has coefficient 1 at its
    pivot and no entry at any other pivot column, so reducing a vector is
    a single pass over its pivot-column entries.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, Vec] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vec) -> Vec:
        """vec minus its projection onto the span (a fresh dict)."""
        v = dict(vec)
        rows = self.rows
        hits = [k for k in v if k in rows]
        while hits:
            for p in hits:
                c = v.get(p)
                if c is None:
                    continue
                del v[p]
                row = rows[p]
                for k, x in row.items():
                    if k == p:
                        continue
                    cur = v.get(k)
                    new = -x * c if cur is None else cur - x * c
                    if new.is_zero():
                        if cur is not None:
                            del v[k]
                    else:
                        v[k] = new
            hits = [k for k in v if k in rows]
        return v

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: Vec) -> bool:
        """Add vec to the span; True if the rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        row = {k: x * inv for k, x in v.items()}
        row[p] = ONE
        for r in self.rows.values():
            c = r.get(p)
            if c is not None:
                del r[p]
                for k, x in row.items():
                    if k == p:
                        continue
                    cur = r.get(k)
                    new = -x * c if cur is None else cur - x * c
                    if new.is_zero():
                        if cur is not None:
                            del r[k]
                    else:
                        r[k] = new
        self.rows[p] = row
        return True

    def basis(self) -> list[Vec]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]


# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of k^dim with a canonical reduced-echelon basis.

    Two subspaces are equal iff their canonical bases coincide, so ``==``
    is genuine subspace equality.
    """

    __slots__ = ("_ech",)

    def __init__(self, dim: int):
        self._ech = SparseEch(dim)

    @classmethod
    def span(cls, dim: int, vecs: Iterable[Vec]) -> "Subspace":
        s = cls(dim)
        for v in vecs:
            s.add(v)
        return s

    @property
    def ambient(self) -> int:
        return self._ech.dim

    @property
    def dim(self) -> int:
        return self._ech.rank

    def add(self, vec: Vec) -> bool:
        return self._ech.insert(vec)

    def contains(self, vec: Vec) -> bool:
        return self._ech.contains(vec)

    def reduce(self, vec: Vec) -> Vec:
        return self._ech.reduce(vec)

    def basis(self) -> list[Vec]:
        return self._ech.basis()

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self._ech.rows.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self._ech.rows == other._ech.rows

    def __hash__(self):
        raise TypeError("subspaces are unhashable")

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        s = Subspace(self.ambient)
        for v in self._ech.rows.values():
            s.add(v)
        for v in other._ech.rows.values():
            s.add(v)
        return s

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce rows (u|u) and (v|0); pivots in the right
        block have zero left block, and their right parts span U ∩ V."""
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        n = self.ambient
        work = SparseEch(2 * n)
        for u in self._ech.rows.values():
            doubled = dict(u)
            for k, x in u.items():
                doubled[k + n] = x
            work.insert(doubled)
        for v in other._ech.rows.values():
            work.insert(dict(v))
        out = Subspace(n)
        for p, row in work.rows.items():
            if p >= n:
                out.add({k - n: x for k, x in row.items()})
        return out

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def intersect_all(spaces: Sequence[Subspace]) -> Subspace:
    if not spaces:
        raise ValueError("empty intersection")
    acc = spaces[0]
    for s in spaces[1:]:
        acc = acc.intersect(s)
    return acc


# ---------------------------------------------------------------------------


class Expressor:
    """Writes targets as linear combinations of a fixed generator list.

    Generators are stored with tracking coordinates appended; reducing an
    augmented target leaves the negated combination coefficients in the
    tracking block whenever the target lies in the span.
    """

    __slots__ = ("dim", "count", "_ech")

    def __init__(self, dim: int, gens: Sequence[Vec]):
        self.dim = dim
        self.count = len(gens)
        self._ech = SparseEch(dim + self.count)
        for i, g in enumerate(gens):
            row = dict(g)
            row[dim + i] = ONE
            self._ech.insert(row)

    def coeffs(self, target: Vec) -> list | None:
        """Coefficients c with target = sum c_i * gens[i], or None."""
        v = self._ech.reduce(dict(target))
        if any(k < self.dim for k in v):
            return None
        out = [ZERO] * self.count
        for k, x in v.items():
            out[k - self.dim] = -x
        return out


def express(dim: int, gens: Sequence[Vec], target: Vec) -> list | None:
    return Expressor(dim, gens).coeffs(target)


# ---------------------------------------------------------------------------
# dense matrices


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[coerce(x) for x in row] for row in rows]
        width = {len(r) for r in self.rows}
        if len(width) > 1:
            raise ValueError("ragged matrix")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix([[ZERO] * ncols for _ in range(nrows)])

    @staticmethod
    def from_cols(cols: Sequence[Sequence]) -> "Matrix":
        if not cols:
            return Matrix([])
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    def col(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        raise TypeError("matrices are unhashable")

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "Matrix":
        c = coerce(c)
        return Matrix([[a * c for a in row] for row in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = other.ncols
        out = []
        for row in self.rows:
            nz = [(k, a) for k, a in enumerate(row) if not a.is_zero()]
            acc = [ZERO] * cols
            for k, a in nz:
                orow = other.rows[k]
                for j in range(cols):
                    if not orow[j].is_zero():
                        acc[j] = acc[j] + a * orow[j]
            out.append(acc)
        return Matrix(out)

    def apply(self, vec: Sequence) -> list:
        out = []
        for row in self.rows:
            acc = ZERO
            for a, x in zip(row, vec):
                if not a.is_zero():
                    acc = acc + a * coerce(x)
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)])

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row-echelon form and the pivot column list."""
        m = [list(row) for row in self.rows]
        nrows, ncols = len(m), self.ncols
        pivots: list[int] = []
        r = 0
        for col in range(ncols):
            if r == nrows:
                break
            hit = next((i for i in range(r, nrows) if not m[i][col].is_zero()), None)
            if hit is None:
                continue
            m[r], m[hit] = m[hit], m[r]
            inv = m[r][col].inverse()
            m[r] = [x * inv for x in m[r]]
            for i in range(nrows):
                if i != r and not m[i][col].is_zero():
                    f = m[i][col]
                    m[i] = [x - f * y for x, y in zip(m[i], m[r])]
            pivots.append(col)
            r += 1
        return Matrix(m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list]:
        """Basis of the right kernel, one dense vector per free column."""
        red, pivots = self.rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        out = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for i, p in enumerate(pivots):
                v[p] = -red.rows[i][f]
            out.append(v)
        return out

    def solve(self, b: Sequence) -> list | None:
        """One solution of M x = b, or None if inconsistent."""
        aug = Matrix([list(row) + [coerce(x)] for row, x in zip(self.rows, b)])
        red, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [ZERO] * self.ncols
        for i, p in enumerate(pivots):
            x[p] = red.rows[i][self.ncols]
        return x

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.rows for x in row)

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols})"

"""Exact linear algebra over the rationals and Gaussian rationals.

Everything here is decided by exact arithmetic: reduced row echelon form
with first-nonzero pivot selection (deterministic across platforms),
kernels and column spans, the subspace lattice, Sylvester inertia by
symmetric congruence, and induced maps on quotients.  A subspace is stored
as the RREF of a basis, which makes subspace equality plain value equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatchError,
    NotInvariantError,
    NotInvertibleError,
    NotSymmetricError,
)
from .scalars import GaussianRational, Scalar, conjugate_scalar

Vector = tuple


def _coerce(x) -> Scalar:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (Fraction, GaussianRational)):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"unsupported scalar {x!r}")


def _promote_rows(rows: list[list[Scalar]]) -> list[list[Scalar]]:
    """Lift a whole grid to GaussianRational if any entry is complex."""
    if any(isinstance(x, GaussianRational) for row in rows for x in row):
        return [[GaussianRational.of(x) for x in row] for row in rows]
    return rows


def coerce_vector(entries: Sequence) -> Vector:
    vals = [_coerce(x) for x in entries]
    if any(isinstance(x, GaussianRational) for x in vals):
        vals = [GaussianRational.of(x) for x in vals]
    return tuple(vals)


def conjugate_vector(v: Sequence) -> Vector:
    return tuple(conjugate_scalar(x) for x in v)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with exact entries, stored row-major."""

    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise DimensionMismatchError("negative matrix dimensions")
        if len(self.entries) != self.nrows or any(
            len(row) != self.ncols for row in self.entries
        ):
            raise DimensionMismatchError("ragged entry grid")

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_rows(rows: Iterable[Sequence]) -> "Matrix":
        grid = [[_coerce(x) for x in row] for row in rows]
        if not grid:
            raise ValueError("from_rows needs at least one row; use Matrix.empty")
        grid = _promote_rows(grid)
        return Matrix(len(grid), len(grid[0]), tuple(tuple(r) for r in grid))

    @staticmethod
    def empty(ncols: int) -> "Matrix":
        return Matrix(0, ncols, ())

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(
            n,
            n,
            tuple(
                tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
                for i in range(n)
            ),
        )

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        zero = Fraction(0)
        return Matrix(nrows, ncols, tuple(tuple(zero for _ in range(ncols)) for _ in range(nrows)))

    @staticmethod
    def from_columns(cols: Sequence[Sequence]) -> "Matrix":
        cols = [coerce_vector(c) for c in cols]
        if not cols:
            raise ValueError("from_columns needs at least one column")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise DimensionMismatchError("columns of unequal length")
        return Matrix.from_rows([[c[i] for c in cols] for i in range(n)])

    # -- views -------------------------------------------------------------

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i][j] for i in range(self.nrows))

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    @property
    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    @property
    def has_gaussian_entries(self) -> bool:
        return any(isinstance(x, GaussianRational) for row in self.entries for x in row)

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(
            r1 - r0,
            c1 - c0,
            tuple(tuple(self.entries[i][j] for j in range(c0, c1)) for i in range(r0, r1)),
        )

    # -- arithmetic ----------------------------------------------------------

    def _lists(self) -> list[list[Scalar]]:
        return [list(row) for row in self.entries]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return _rebuild(
            self.nrows,
            self.ncols,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return _rebuild(
            self.nrows,
            self.ncols,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self) -> "Matrix":
        return _rebuild(self.nrows, self.ncols, [[-x for x in row] for row in self.entries])

    def scale(self, s) -> "Matrix":
        s = _coerce(s)
        return _rebuild(self.nrows, self.ncols, [[s * x for x in row] for row in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        bt = list(zip(*other.entries)) if other.nrows else [()] * other.ncols
        out = []
        for row in self.entries:
            out.append([sum(a * b for a, b in zip(row, col)) or Fraction(0) for col in bt])
        return _rebuild(self.nrows, other.ncols, out)

    def apply(self, v: Sequence) -> Vector:
        v = coerce_vector(v)
        if len(v) != self.ncols:
            raise DimensionMismatchError("vector length does not match column count")
        out = [sum(a * b for a, b in zip(row, v)) or Fraction(0) for row in self.entries]
        vals = _promote_rows([out])[0]
        return tuple(vals)

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatchError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def transpose(self) -> "Matrix":
        if self.nrows == 0:
            return Matrix(self.ncols, 0, tuple(() for _ in range(self.ncols)))
        return Matrix(self.ncols, self.nrows, tuple(zip(*self.entries)))

    def conjugate(self) -> "Matrix":
        return _rebuild(
            self.nrows, self.ncols, [[conjugate_scalar(x) for x in row] for row in self.entries]
        )

    def _same_shape(self, other: "Matrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise DimensionMismatchError("matrix shapes differ")

    # -- solved forms ----------------------------------------------------------

    def rank(self) -> int:
        return rref(self)[1]

    def determinant(self) -> Scalar:
        """Exact determinant by fraction elimination with row swaps."""
        if not self.is_square:
            raise DimensionMismatchError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return Fraction(1)
        a = self._lists()
        det = Fraction(1)
        for c in range(n):
            p = None
            for r in range(c, n):
                if a[r][c] != 0:
                    p = r
                    break
            if p is None:
                return Fraction(0)
            if p != c:
                a[c], a[p] = a[p], a[c]
                det = -det
            det = det * a[c][c]
            inv = a[c][c]
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    f = a[r][c] / inv
                    ar, ac = a[r], a[c]
                    for j in range(c, n):
                        ar[j] = ar[j] - f * ac[j]
        return det

    def inverse(self) -> "Matrix":
        if not self.is_square:
            raise DimensionMismatchError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
               for i, row in enumerate(self.entries)]
        aug = _promote_rows(aug)
        pivots = _rref_in_place(aug)
        if len(pivots) < n or any(p >= n for p in pivots):
            raise NotInvertibleError("matrix is singular")
        return _rebuild(n, n, [row[n:] for row in aug])

    def __repr__(self):
        rows = "; ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.entries)
        return f"Matrix({self.nrows}x{self.ncols}: {rows})"


def _rebuild(nrows: int, ncols: int, grid: list[list[Scalar]]) -> Matrix:
    grid = _promote_rows(grid)
    return Matrix(nrows, ncols, tuple(tuple(row) for row in grid))


def _rref_in_place(rows: list[list[Scalar]]) -> list[int]:
    """Reduce a grid to RREF in place and return its pivot columns.

    The pivot is always the first row with a nonzero entry in the current
    column, so the output is reproducible.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    nrows = len(rows)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        prow = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                prow = i
                break
        if prow is None:
            continue
        if prow != r:
            rows[r], rows[prow] = rows[prow], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        rr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row echelon form and rank.  Idempotent: rref(rref(m)) = rref(m)."""
    grid = m._lists()
    pivots = _rref_in_place(grid)
    return _rebuild(m.nrows, m.ncols, grid), len(pivots)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace, canonically represented by the RREF of a basis.

    Because the representative is canonical, two Subspace values are equal
    exactly when they describe the same subspace.
    """

    ambient_dim: int
    basis: Matrix  # rows form the canonical basis; 0 rows for the zero space

    def __post_init__(self):
        if self.basis.ncols != self.ambient_dim:
            raise DimensionMismatchError("basis width does not match ambient dimension")

    @staticmethod
    def from_rows(ambient_dim: int, rows: Iterable[Sequence]) -> "Subspace":
        grid = [[_coerce(x) for x in row] for row in rows]
        for row in grid:
            if len(row) != ambient_dim:
                raise DimensionMismatchError("spanning vector of wrong length")
        grid = _promote_rows(grid)
        pivots = _rref_in_place(grid)
        kept = grid[: len(pivots)]
        return Subspace(ambient_dim, _rebuild(len(kept), ambient_dim, kept))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.empty(ambient_dim))

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def is_zero(self) -> bool:
        return self.basis.nrows == 0

    def basis_rows(self) -> tuple:
        return self.basis.entries

    def _pivots(self) -> list[int]:
        out = []
        for row in self.basis.entries:
            for j, x in enumerate(row):
                if x != 0:
                    out.append(j)
                    break
        return out

    def contains_vector(self, v: Sequence) -> bool:
        v = coerce_vector(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError("vector length does not match ambient dimension")
        work = list(v)
        for row, p in zip(self.basis.entries, self._pivots()):
            f = work[p]
            if f != 0:
                for j in range(p, self.ambient_dim):
                    work[j] = work[j] - f * row[j]
        return all(x == 0 for x in work)

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatchError("ambient dimensions differ")
        return all(self.contains_vector(row) for row in other.basis.entries)

    def complexify(self) -> "Subspace":
        """The same subspace with its basis lifted to Gaussian rationals."""
        if self.dim == 0:
            return self
        rows = [[GaussianRational.of(x) for x in row] for row in self.basis.entries]
        return Subspace(self.ambient_dim, _rebuild(self.dim, self.ambient_dim, rows))

    def conjugate(self) -> "Subspace":
        # Conjugating an RREF basis keeps it in RREF, so this is canonical.
        if self.dim == 0:
            return self
        return Subspace(self.ambient_dim, self.basis.conjugate())

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def kernel(m: Matrix) -> Subspace:
    """The right null space {x : m.x = 0}; dim = ncols - rank."""
    grid = m._lists()
    pivots = _rref_in_place(grid)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    rows = []
    for fc in free:
        v = [Fraction(0)] * m.ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -grid[r][fc]
        rows.append(v)
    return Subspace.from_rows(m.ncols, rows)


def image(m: Matrix) -> Subspace:
    """The column span of m; dim = rank."""
    if m.nrows == 0:
        return Subspace.zero(0)
    cols = [m.column(j) for j in range(m.ncols)]
    return Subspace.from_rows(m.nrows, cols)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection, via the null space of the stacked bases."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(a.ambient_dim)
    # Solve u.A = v.B: kernel of the n x (p+q) matrix [A^T | -B^T].
    n = a.ambient_dim
    cols = [list(row) for row in a.basis.entries] + [[-x for x in row] for row in b.basis.entries]
    stacked = Matrix.from_rows([[col[i] for col in cols] for i in range(n)])
    rows = []
    for w in kernel(stacked).basis.entries:
        u = w[: a.dim]
        x = [Fraction(0)] * n
        for coeff, row in zip(u, a.basis.entries):
            if coeff != 0:
                for j in range(n):
                    x[j] = x[j] + coeff * row[j]
        rows.append(x)
    return Subspace.from_rows(n, rows)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    """Span of the union of the two bases."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError("ambient dimensions differ")
    return Subspace.from_rows(a.ambient_dim, list(a.basis.entries) + list(b.basis.entries))


def inertia(g: Matrix) -> tuple[int, int, int]:
    """Counts (n_plus, n_zero, n_minus) of a symmetric rational matrix.

    Diagonalizes by simultaneous row/column operations (a congruence, so
    Sylvester's law makes the counts well defined).  When a diagonal pivot
    vanishes but the row does not, the off-diagonal entry is folded onto the
    diagonal by adding one row/column pair to another; no eigenvalues and no
    floating point anywhere.
    """
    if not g.is_square:
        raise NotSymmetricError("inertia requires a square matrix")
    if g.has_gaussian_entries:
        raise NotSymmetricError("inertia requires rational entries")
    if not g.is_symmetric:
        raise NotSymmetricError("inertia requires a symmetric matrix")
    n = g.nrows
    a = g._lists()
    n_plus = n_zero = n_minus = 0

    def swap(i, j):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    def add_row_col(i, j):
        for c in range(n):
            a[i][c] = a[i][c] + a[j][c]
        for r in range(n):
            a[r][i] = a[r][i] + a[r][j]

    for i in range(n):
        if a[i][i] == 0:
            j = None
            for c in range(i + 1, n):
                if a[i][c] != 0:
                    j = c
                    break
            if j is None:
                n_zero += 1
                continue
            if a[j][j] != 0:
                swap(i, j)
            else:
                add_row_col(i, j)  # diagonal becomes 2*a[i][j] != 0
        d = a[i][i]
        for r in range(i + 1, n):
            if a[r][i] != 0:
                f = a[r][i] / d
                for c in range(n):
                    a[r][c] = a[r][c] - f * a[i][c]
                for c in range(n):
                    a[c][r] = a[c][r] - f * a[c][i]
        if d > 0:
            n_plus += 1
        else:
            n_minus += 1
    return n_plus, n_zero, n_minus


def solve_in_span(basis_vectors: Sequence[Sequence], targets: Sequence[Sequence]):
    """Coordinates of each target in the span of the given vectors.

    Returns a list of coordinate tuples (one per target), or None when some
    target lies outside the span.  The basis vectors must be independent.
    """
    k = len(basis_vectors)
    if k == 0:
        return [() for _ in targets] if all(all(x == 0 for x in t) for t in targets) else None
    n = len(basis_vectors[0])
    m = len(targets)
    aug = [[_coerce(basis_vectors[c][i]) for c in range(k)]
           + [_coerce(targets[t][i]) for t in range(m)]
           for i in range(n)]
    aug = _promote_rows(aug)
    pivots = _rref_in_place(aug)
    if any(p >= k for p in pivots):
        return None
    coords = []
    for t in range(m):
        x = [Fraction(0)] * k
        for r, p in enumerate(pivots):
            x[p] = aug[r][k + t]
        coords.append(tuple(x))
    return coords


def complement_in(sub: Subspace, within: Subspace) -> list:
    """A deterministic complement basis of `sub` inside `within`.

    Walks the canonical basis rows of `within` in order and keeps those not
    already in the running span.  Returns the kept rows (vectors of the
    ambient space); their classes form a basis of within/sub.
    """
    if not within.contains(sub):
        raise NotInvariantError("complement_in requires sub to lie inside within")
    reduced: list[tuple[int, list]] = []  # (pivot column, echelon row)

    def reduce_against(v):
        work = list(v)
        for p, row in reduced:
            f = work[p]
            if f != 0:
                for j in range(p, len(work)):
                    work[j] = work[j] - f * row[j]
        return work

    def insert(work):
        for j, x in enumerate(work):
            if x != 0:
                row = [y / x for y in work]
                reduced.append((j, row))
                reduced.sort(key=lambda t: t[0])
                return True
        return False

    for row in sub.basis.entries:
        insert(reduce_against(row))
    chosen = []
    for row in within.basis.entries:
        work = reduce_against(row)
        if insert(work):
            chosen.append(row)
    return chosen


def induced_map_between_quotients(
    m: Matrix,
    src_sub: Subspace,
    src_quot: Subspace,
    dst_sub: Subspace,
    dst_quot: Subspace,
) -> Matrix:
    """The map src_quot/src_sub -> dst_quot/dst_sub induced by m.

    Requires m to send src_quot into dst_quot and src_sub into dst_sub;
    both are verified exactly and a violation raises NotInvariantError.
    The quotients are expressed in the deterministic complement bases of
    ``complement_in``.
    """
    for v in src_quot.basis.entries:
        if not dst_quot.contains_vector(m.apply(v)):
            raise NotInvariantError("map does not send the source space into the target space")
    for v in src_sub.basis.entries:
        if not dst_sub.contains_vector(m.apply(v)):
            raise NotInvariantError("map does not send the source subspace into the target subspace")
    c_src = complement_in(src_sub, src_quot)
    c_dst = complement_in(dst_sub, dst_quot)
    t_src, t_dst = len(c_src), len(c_dst)
    if t_src == 0:
        return Matrix.empty(0) if t_dst == 0 else Matrix.zeros(t_dst, 0)
    images = [m.apply(c) for c in c_src]
    span = list(dst_sub.basis.entries) + list(c_dst)
    coords = solve_in_span(span, images)
    if coords is None:  # unreachable given the checks above
        raise NotInvariantError("image escaped the target space")
    k = dst_sub.dim
    cols = [coord[k:] for coord in coords]
    if t_dst == 0:
        return Matrix.zeros(0, t_src)
    return Matrix.from_rows([[cols[j][i] for j in range(t_src)] for i in range(t_dst)])


def induced_map_on_quotient(m: Matrix, sub: Subspace, quot_of: Subspace) -> Matrix:
    """The endomorphism of quot_of/sub induced by m (must preserve both)."""
    if not quot_of.contains(sub):
        raise NotInvariantError("sub is not contained in quot_of")
    return induced_map_between_quotients(m, sub, quot_of, sub, quot_of)

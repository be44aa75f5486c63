"""Exact dense linear algebra over the rationals.

Everything in this package reduces to rank/kernel/solve computations over Q.
Scalars are ``fractions.Fraction``; matrices are immutable row-major grids.
The elimination core clears denominators and works on integer rows (plain
Python ints are much faster than Fraction arithmetic), then normalizes back
to monic-pivot reduced row echelon form over Q.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    """Coerce ints, strings like "2/3", and Fractions to Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(entries: Iterable) -> Vector:
    return tuple(frac(x) for x in entries)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


class Matrix:
    """An immutable rows x cols matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        self.rows: tuple[Vector, ...] = tuple(vector(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged rows")

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([unit_vector(n, i) for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int) -> "Matrix":
        return Matrix([zero_vector(ncols) for _ in range(nrows)])

    @staticmethod
    def from_columns(cols: Sequence[Sequence[Fraction]]) -> "Matrix":
        if not cols:
            return Matrix([])
        return Matrix([[col[i] for col in cols] for i in range(len(cols[0]))])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return "Matrix[%s]" % body

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [add_vectors(r, s) for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(
                "shape mismatch: %dx%d @ %dx%d"
                % (self.nrows, self.ncols, other.nrows, other.ncols)
            )
        ocols = other.ncols
        out = []
        for r in self.rows:
            acc = [Fraction(0)] * ocols
            for k, a in enumerate(r):
                if a:
                    orow = other.rows[k]
                    for j in range(ocols):
                        if orow[j]:
                            acc[j] += a * orow[j]
            out.append(acc)
        return Matrix(out)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """Matrix-vector product (v as a column)."""
        if len(v) != self.ncols:
            raise ValueError("vector length %d != %d columns" % (len(v), self.ncols))
        return tuple(
            sum((a * x for a, x in zip(r, v) if a), Fraction(0)) for r in self.rows
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), Fraction(0))

    def power(self, k: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base_needed = k >> 1
            if base_needed:
                base = base @ base
            k = base_needed
        return result

    def flatten(self) -> Vector:
        """Row-major vectorization."""
        return tuple(x for r in self.rows for x in r)

    @staticmethod
    def unflatten(v: Sequence[Fraction], nrows: int, ncols: int) -> "Matrix":
        if len(v) != nrows * ncols:
            raise ValueError("cannot reshape %d entries to %dx%d" % (len(v), nrows, ncols))
        return Matrix([v[i * ncols : (i + 1) * ncols] for i in range(nrows)])

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(r) + list(unit_vector(n, i)) for i, r in enumerate(self.rows)]
        rref, rank, pivots = _rref(aug, 2 * n)
        if rank < n or pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([row[n:] for row in rref])

    def _same_shape(self, other: "Matrix"):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row/column index (i, p) maps to i*b.nrows + p."""
    out = []
    for i in range(a.nrows):
        for p in range(b.nrows):
            row = []
            for j in range(a.ncols):
                aij = a.rows[i][j]
                row.extend(aij * x for x in b.rows[p])
            out.append(row)
    return Matrix(out)


# ---------------------------------------------------------------------------
# Elimination core (integer rows for speed)
# ---------------------------------------------------------------------------

def _int_row(row: Sequence[Fraction]) -> list[int]:
    """Clear denominators and divide by the content; sign of leading entry > 0."""
    denom_lcm = 1
    for x in row:
        if x:
            d = x.denominator
            denom_lcm = denom_lcm // gcd(denom_lcm, d) * d
    ints = [int(x * denom_lcm) for x in row]
    g = 0
    for v in ints:
        if v:
            g = gcd(g, v)
            if g == 1:
                break
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return ints


def _leading(row: Sequence[int]) -> int:
    for j, v in enumerate(row):
        if v:
            return j
    return -1


def _echelon(rows: Iterable[Sequence[Fraction]], ncols: int):
    """Incremental integer echelon form.

    Returns a dict pivot_column -> integer row. Rows are combined with exact
    cross-multiplication, so no fractions ever appear during elimination.
    """
    pivots: dict[int, list[int]] = {}
    for raw in rows:
        row = _int_row(raw)
        while True:
            lead = _leading(row)
            if lead < 0:
                break
            prow = pivots.get(lead)
            if prow is None:
                g = 0
                for v in row:
                    if v:
                        g = gcd(g, v)
                        if g == 1:
                            break
                if g > 1:
                    row = [v // g for v in row]
                if row[lead] < 0:
                    row = [-v for v in row]
                pivots[lead] = row
                break
            a, b = prow[lead], row[lead]
            row = [a * x - b * y for x, y in zip(row, prow)]
    return pivots


def _rref(rows: Iterable[Sequence[Fraction]], ncols: int):
    """Reduced row echelon form.

    Returns (rref_rows as lists of Fractions, rank, pivot column list).
    """
    pivots = _echelon(rows, ncols)
    cols = sorted(pivots)
    # eliminate above pivots, bottom-up, still on integer rows
    for idx in range(len(cols) - 1, -1, -1):
        c = cols[idx]
        prow = pivots[c]
        for c2 in cols[:idx]:
            target = pivots[c2]
            if target[c]:
                a, b = prow[c], target[c]
                new = [a * x - b * y for x, y in zip(target, prow)]
                g = 0
                for v in new:
                    if v:
                        g = gcd(g, v)
                        if g == 1:
                            break
                if g > 1:
                    new = [v // g for v in new]
                pivots[c2] = new
    out = []
    for c in cols:
        row = pivots[c]
        lead = Fraction(row[c])
        out.append([Fraction(v) / lead for v in row])
    return out, len(cols), cols


def row_reduce(m: Matrix):
    """Unique reduced row echelon form of ``m``.

    Returns (rref: Matrix, rank: int, pivots: tuple of column indices).
    """
    rref_rows, rank, pivots = _rref(m.rows, m.ncols)
    padded = rref_rows + [list(zero_vector(m.ncols)) for _ in range(m.nrows - rank)]
    return Matrix(padded), rank, tuple(pivots)


def kernel_basis(m: Matrix) -> "Subspace":
    """Canonical basis of the right kernel {v : m v = 0}."""
    return kernel_of_rows(m.rows, m.ncols)


def kernel_of_rows(rows: Iterable[Sequence[Fraction]], ncols: int) -> "Subspace":
    """Kernel of the linear map given by an (implicit) stack of rows.

    Streams rows through the integer echelon, so callers can assemble large
    constraint systems lazily.
    """
    rref_rows, rank, pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[j] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rref_rows[r][j]
        basis.append(v)
    return Subspace._from_canonical(basis, ncols) if _is_canonical(basis, ncols) else Subspace.span(basis, ncols)


def _is_canonical(rows, ncols) -> bool:
    """Check rows are already in RREF with monic pivots (cheap test)."""
    last = -1
    pivcols = []
    for r in rows:
        lead = -1
        for j, v in enumerate(r):
            if v:
                lead = j
                break
        if lead < 0 or lead <= last or r[lead] != 1:
            return False
        last = lead
        pivcols.append(lead)
    for c in pivcols:
        count = sum(1 for r in rows if r[c])
        if count != 1:
            return False
    return True


def solve(m: Matrix, b: Sequence[Fraction]) -> Optional[Vector]:
    """Some solution x of m x = b, or None when inconsistent.

    Free variables are set to 0, so the answer is deterministic.
    """
    if len(b) != m.nrows:
        raise ValueError("right-hand side length %d != %d rows" % (len(b), m.nrows))
    b = vector(b)
    aug = [list(r) + [bv] for r, bv in zip(m.rows, b)]
    rref_rows, rank, pivots = _rref(aug, m.ncols + 1)
    if m.ncols in pivots:
        return None
    x = [Fraction(0)] * m.ncols
    for r, c in enumerate(pivots):
        x[c] = rref_rows[r][m.ncols]
    return tuple(x)


class Subspace:
    """A subspace of Q^n held in canonical (RREF) form.

    Two subspaces are equal iff they have the same row set, so equality of
    the canonical form is equality of subspaces.
    """

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, *_):
        raise TypeError("use Subspace.span / Subspace.zero / Subspace.full")

    @classmethod
    def _make(cls, rows, ambient, pivots):
        self = object.__new__(cls)
        self.ambient_dim = ambient
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        return self

    @classmethod
    def _from_canonical(cls, rows, ambient):
        pivots = [_leading([int(bool(x)) for x in r]) for r in rows]
        return cls._make([vector(r) for r in rows], ambient, pivots)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vecs = [vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length != ambient dimension")
        rref_rows, rank, pivots = _rref(vecs, ambient_dim)
        return cls._make(rref_rows, ambient_dim, pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls._make([], ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls._make(
            [unit_vector(ambient_dim, i) for i in range(ambient_dim)],
            ambient_dim,
            list(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.rows)

    def is_zero(self) -> bool:
        return not self.rows

    def is_full(self) -> bool:
        return len(self.rows) == self.ambient_dim

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """Residue of v after elimination against the canonical basis."""
        v = list(vector(v))
        for row, c in zip(self.rows, self.pivots):
            coeff = v[c]
            if coeff:
                for j in range(c, self.ambient_dim):
                    if row[j]:
                        v[j] -= coeff * row[j]
        return tuple(v)

    def contains(self, v: Sequence[Fraction]) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def coordinates(self, v: Sequence[Fraction]) -> Optional[Vector]:
        """Coefficients of v in the canonical basis, or None if outside."""
        v = list(vector(v))
        coeffs = []
        for row, c in zip(self.rows, self.pivots):
            coeff = v[c]
            coeffs.append(coeff)
            if coeff:
                for j in range(c, self.ambient_dim):
                    if row[j]:
                        v[j] -= coeff * row[j]
        if any(x != 0 for x in v):
            return None
        return tuple(coeffs)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.span(list(self.rows) + list(other.rows), self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked coefficient system."""
        self._check_ambient(other)
        if self.is_full():
            return other
        if other.is_full():
            return self
        # x in both spans: x = sum u_i a_i = sum v_j b_j;
        # solve [A^T | -B^T] (u; v) = 0 and map the u-part through A.
        a, b = self.rows, other.rows
        if not a or not b:
            return Subspace.zero(self.ambient_dim)
        stacked = [
            [ (a[i][r] if i < len(a) else -b[i - len(a)][r]) for i in range(len(a) + len(b)) ]
            for r in range(self.ambient_dim)
        ]
        ker = kernel_of_rows(stacked, len(a) + len(b))
        vecs = []
        for k in ker.rows:
            u = k[: len(a)]
            vecs.append([
                sum((u[i] * a[i][r] for i in range(len(a)) if u[i]), Fraction(0))
                for r in range(self.ambient_dim)
            ])
        return Subspace.span(vecs, self.ambient_dim)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self):
        return "Subspace(dim %d of Q^%d)" % (self.dim, self.ambient_dim)

    def _check_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")

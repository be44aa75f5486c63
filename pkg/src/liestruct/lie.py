"""Finite-dimensional Lie algebras over Q given by structure constants.

An algebra is a validated, immutable table c[i][j] of bracket coordinate
vectors. Construction goes through :func:`build`, which checks antisymmetry
by construction and the Jacobi identity on every basis triple, so downstream
code can assume it is working with an actual Lie algebra.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import JacobiError, NotAnIdealError
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    frac,
    kernel_of_rows,
    row_reduce,
    unit_vector,
    vector,
    zero_vector,
)

__all__ = ["LieAlgebra", "build", "from_dict", "to_dict"]


class LieAlgebra:
    """Immutable Lie algebra with a fixed ordered basis.

    ``table[i][j]`` is the coordinate vector of [e_i, e_j]. Instances are
    hashable and compare by structure table and basis names, which lets
    expensive invariants be memoized per algebra.
    """

    __slots__ = ("dim", "names", "table", "_cache")

    def __init__(self, names: Sequence[str], table):
        self.names = tuple(names)
        self.dim = len(self.names)
        self.table = tuple(tuple(vector(row_j) for row_j in row_i) for row_i in table)
        self._cache = {}
        if len(self.table) != self.dim or any(
            len(r) != self.dim or any(len(v) != self.dim for v in r) for r in self.table
        ):
            raise ValueError("structure table shape does not match dimension")

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.names == other.names
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.names, self.table))

    def __repr__(self):
        return "LieAlgebra(dim %d, basis %s)" % (self.dim, ", ".join(self.names))

    # -- bracket and adjoint -----------------------------------------------

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """[x, y] for coordinate vectors x, y."""
        n = self.dim
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, v in enumerate(row[j]):
                    if v:
                        out[k] += c * v
        return tuple(out)

    def ad(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of y -> [x, y]; column j holds the coordinates of [x, e_j]."""
        n = self.dim
        cols = []
        for j in range(n):
            col = [Fraction(0)] * n
            for i, xi in enumerate(x):
                if xi:
                    for k, v in enumerate(self.table[i][j]):
                        if v:
                            col[k] += xi * v
            cols.append(col)
        return Matrix.from_columns(cols) if n else Matrix([])

    def ad_basis(self, i: int) -> Matrix:
        return self.ad(unit_vector(self.dim, i))

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    # -- invariant subspaces -------------------------------------------------

    def full_space(self) -> Subspace:
        return Subspace.full(self.dim)

    def center(self) -> Subspace:
        """z(g) = {x : [x, y] = 0 for all y}, the kernel of x -> ad(x)."""
        if "center" not in self._cache:
            n = self.dim

            def rows():
                # constraint for each (j, k): sum_i x_i c[i][j][k] = 0
                for j in range(n):
                    for k in range(n):
                        row = [self.table[i][j][k] for i in range(n)]
                        if any(row):
                            yield row

            self._cache["center"] = kernel_of_rows(rows(), n)
        return self._cache["center"]

    def bracket_span(self, s: Subspace, t: Subspace) -> Subspace:
        """Subspace spanned by all [u, v], u in s, v in t."""
        vecs = [self.bracket(u, v) for u in s.rows for v in t.rows]
        return Subspace.span(vecs, self.dim)

    def commutator_algebra(self) -> Subspace:
        """[g, g], the derived subalgebra."""
        if "commutator" not in self._cache:
            full = self.full_space()
            self._cache["commutator"] = self.bracket_span(full, full)
        return self._cache["commutator"]

    def derived_series(self) -> list[Subspace]:
        """g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ ..., stopping when it stabilizes."""
        series = [self.full_space()]
        while True:
            nxt = self.bracket_span(series[-1], series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def lower_central_series(self) -> list[Subspace]:
        """g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ..., stopping when it stabilizes."""
        series = [self.full_space()]
        full = self.full_space()
        while True:
            nxt = self.bracket_span(full, series[-1])
            if nxt == series[-1]:
                return series
            series.append(nxt)

    def killing_form(self) -> Matrix:
        """kappa(i, j) = tr(ad e_i ad e_j)."""
        if "killing" not in self._cache:
            ads = [self.ad_basis(i) for i in range(self.dim)]
            n = self.dim
            rows = []
            for i in range(n):
                row = []
                for j in range(n):
                    if j < i:
                        row.append(rows[j][i])
                    else:
                        row.append((ads[i] @ ads[j]).trace())
                rows.append(row)
            self._cache["killing"] = Matrix(rows) if n else Matrix([])
        return self._cache["killing"]

    # -- structural flags ----------------------------------------------------

    def flags(self) -> dict:
        """Boolean structure flags, all decided by exact rank computations."""
        if "flags" in self._cache:
            return dict(self._cache["flags"])
        comm = self.commutator_algebra()
        center = self.center()
        abelian = comm.is_zero()
        solvable = self.derived_series()[-1].is_zero()
        nilpotent = self.lower_central_series()[-1].is_zero()
        perfect = comm.is_full()
        centerfree = center.is_zero()
        _, killing_rank, _ = row_reduce(self.killing_form())
        semisimple = killing_rank == self.dim
        reductive = False
        if semisimple or abelian:
            reductive = True
        elif center.dim + comm.dim == self.dim and center.sum(comm).is_full():
            comm_alg = self.restrict_to(comm)
            _, r, _ = row_reduce(comm_alg.killing_form())
            reductive = r == comm_alg.dim
        simple = False
        if semisimple and not abelian:
            from .decompose import indecompose

            simple = len(indecompose(self).ideals) == 1
        out = {
            "abelian": abelian,
            "nilpotent": nilpotent,
            "solvable": solvable,
            "perfect": perfect,
            "centerfree": centerfree,
            "semisimple": semisimple,
            "reductive": reductive,
            "simple": simple,
        }
        self._cache["flags"] = out
        return dict(out)

    # -- derived algebras ------------------------------------------------------

    def restrict_to(self, s: Subspace, names: Optional[Sequence[str]] = None) -> "LieAlgebra":
        """The subalgebra on the canonical basis of s.

        Raises ValueError when s is not closed under the bracket.
        """
        k = s.dim
        table = [[None] * k for _ in range(k)]
        for a in range(k):
            for b in range(k):
                w = self.bracket(s.rows[a], s.rows[b])
                coords = s.coordinates(w)
                if coords is None:
                    raise ValueError(
                        "subspace is not closed under the bracket "
                        "(product of basis vectors %d and %d escapes)" % (a, b)
                    )
                table[a][b] = coords
        if names is None:
            names = ["s%d" % a for a in range(k)]
        return LieAlgebra(names, table)

    def quotient(self, ideal: Subspace, check: bool = True) -> "LieAlgebra":
        """g / ideal on the images of the basis vectors outside the pivots.

        Raises NotAnIdealError naming a basis vector and an ideal generator
        whose bracket escapes the ideal.
        """
        if check:
            for i in range(self.dim):
                for v in ideal.rows:
                    w = self.bracket(unit_vector(self.dim, i), v)
                    if not ideal.contains(w):
                        raise NotAnIdealError(i, v)
        if ideal.is_zero():
            return self
        pivot_set = set(ideal.pivots)
        complement = [j for j in range(self.dim) if j not in pivot_set]
        k = len(complement)
        # residues after reduction vanish on pivot columns, so the surviving
        # coordinates are exactly the complement coordinates
        table = [[None] * k for _ in range(k)]
        for a, ia in enumerate(complement):
            for b, ib in enumerate(complement):
                w = ideal.reduce(self.table[ia][ib])
                table[a][b] = [w[j] for j in complement]
        names = [self.names[j] + "~" for j in complement]
        return LieAlgebra(names, table)

    def permuted(self, perm: Sequence[int]) -> "LieAlgebra":
        """Relabel the basis: new basis vector a is old basis vector perm[a]."""
        if sorted(perm) != list(range(self.dim)):
            raise ValueError("not a permutation of 0..%d" % (self.dim - 1))
        inv = [0] * self.dim
        for a, p in enumerate(perm):
            inv[p] = a
        table = [
            [
                [self.table[perm[a]][perm[b]][k] for k in perm]
                for b in range(self.dim)
            ]
            for a in range(self.dim)
        ]
        names = [self.names[p] for p in perm]
        return LieAlgebra(names, table)


def build(
    dim: int,
    brackets: Mapping[tuple[int, int], Mapping[int, object]],
    names: Optional[Sequence[str]] = None,
    validate: bool = True,
) -> LieAlgebra:
    """Construct and validate a Lie algebra from sparse structure constants.

    ``brackets[(i, j)]`` with i < j maps a basis index k to the coefficient
    of e_k in [e_i, e_j]; omitted pairs bracket to zero. The table is
    completed antisymmetrically, and the Jacobi identity is checked on all
    C(dim, 3) basis triples; the first failure raises JacobiError carrying
    the triple and the defect vector.
    """
    if names is None:
        names = ["e%d" % i for i in range(dim)]
    if len(names) != dim:
        raise ValueError("expected %d basis names, got %d" % (dim, len(names)))
    table = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
    for (i, j), value in brackets.items():
        if not (0 <= i < j < dim):
            raise ValueError(
                "bracket key (%r, %r) must satisfy 0 <= left < right < dim" % (i, j)
            )
        for k, coeff in value.items():
            c = frac(coeff)
            table[i][j][int(k)] = c
            table[j][i][int(k)] = -c
    algebra = LieAlgebra(names, table)
    if validate:
        _check_jacobi(algebra)
    return algebra


def _check_jacobi(g: LieAlgebra):
    for i, j, k in itertools.combinations(range(g.dim), 3):
        ei, ej, ek = (unit_vector(g.dim, t) for t in (i, j, k))
        defect = g.bracket(g.bracket(ei, ej), ek)
        defect = add_vectors(defect, g.bracket(g.bracket(ej, ek), ei))
        defect = add_vectors(defect, g.bracket(g.bracket(ek, ei), ej))
        if any(defect):
            raise JacobiError((i, j, k), defect)


# ---------------------------------------------------------------------------
# JSON-facing serialization
# ---------------------------------------------------------------------------

def to_dict(g: LieAlgebra) -> dict:
    """Plain-dict form: sparse brackets for i < j, coefficients as strings."""
    brackets = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            value = {
                str(k): str(c) for k, c in enumerate(g.table[i][j]) if c
            }
            if value:
                brackets.append({"left": i, "right": j, "value": value})
    return {"dim": g.dim, "basis": list(g.names), "brackets": brackets}


def from_dict(data: Mapping, validate: bool = True) -> LieAlgebra:
    """Inverse of :func:`to_dict`; validates Jacobi unless told otherwise."""
    dim = int(data["dim"])
    names = data.get("basis") or ["e%d" % i for i in range(dim)]
    brackets = {}
    for entry in data.get("brackets", []):
        i, j = int(entry["left"]), int(entry["right"])
        brackets[(i, j)] = {int(k): frac(v) for k, v in entry["value"].items()}
    return build(dim, brackets, names=names, validate=validate)

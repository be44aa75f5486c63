"""Spaces of endomorphisms attached to a Lie algebra.

Derivations, inner derivations, the centroid, the two-sided annihilator
space J(g), and commutants of matrix families. Each space is computed as the
exact kernel of an explicitly assembled linear system over the dim^2 matrix
entries (row-major flattening, columns are images of basis vectors).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import PreconditionError
from .lie import LieAlgebra
from .linalg import Matrix, Subspace, kernel_of_rows
from .poly import jordan_chevalley

__all__ = [
    "EndoSpace",
    "derivations",
    "inner_derivations",
    "centroid",
    "j_space",
    "module_commutant",
    "split_centroid",
]


class EndoSpace:
    """A linear space of n x n matrices, stored as a subspace of Q^(n^2)."""

    __slots__ = ("kind", "n", "space")

    def __init__(self, kind: str, n: int, space: Subspace):
        if space.ambient_dim != n * n:
            raise ValueError("flattened dimension mismatch")
        self.kind = kind
        self.n = n
        self.space = space

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_matrices(self) -> list[Matrix]:
        return [Matrix.unflatten(r, self.n, self.n) for r in self.space.rows]

    def contains(self, m: Matrix) -> bool:
        return self.space.contains(m.flatten())

    def coordinates(self, m: Matrix):
        return self.space.coordinates(m.flatten())

    def __eq__(self, other):
        return (
            isinstance(other, EndoSpace)
            and self.kind == other.kind
            and self.n == other.n
            and self.space == other.space
        )

    def __hash__(self):
        return hash((self.kind, self.n, self.space))

    def __repr__(self):
        return "EndoSpace(%s, dim %d on Q^%d)" % (self.kind, self.dim, self.n)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "dim": self.dim,
            "basis": [[str(x) for x in row] for row in self.space.rows],
        }


def _idx(n: int, k: int, l: int) -> int:
    return k * n + l


@lru_cache(maxsize=None)
def derivations(g: LieAlgebra) -> EndoSpace:
    """Der(g) = {D : D[x,y] = [Dx,y] + [x,Dy]}.

    One constraint row per basis pair i < j and output coordinate m.
    """
    n = g.dim
    c = g.table

    def rows():
        for i in range(n):
            for j in range(i + 1, n):
                cij = c[i][j]
                for m in range(n):
                    row = [Fraction(0)] * (n * n)
                    for l in range(n):
                        if cij[l]:
                            row[_idx(n, m, l)] += cij[l]
                    for k in range(n):
                        ckj = c[k][j][m]
                        if ckj:
                            row[_idx(n, k, i)] -= ckj
                        cik = c[i][k][m]
                        if cik:
                            row[_idx(n, k, j)] -= cik
                    if any(row):
                        yield row

    return EndoSpace("derivations", n, kernel_of_rows(rows(), n * n))


@lru_cache(maxsize=None)
def inner_derivations(g: LieAlgebra) -> EndoSpace:
    """Span of the adjoint maps; dim = dim g - dim z(g)."""
    n = g.dim
    span = Subspace.span([g.ad_basis(i).flatten() for i in range(n)], n * n)
    return EndoSpace("inner", n, span)


@lru_cache(maxsize=None)
def centroid(g: LieAlgebra) -> EndoSpace:
    """Cent(g) = {f : f ad_x = ad_x f for all x}; contains the identity."""
    n = g.dim
    ads = [g.ad_basis(i) for i in range(n)]

    def rows():
        for ad in ads:
            a = ad.rows
            for r in range(n):
                for cc in range(n):
                    row = [Fraction(0)] * (n * n)
                    for k in range(n):
                        if a[r][k]:
                            row[_idx(n, k, cc)] += a[r][k]
                        if a[k][cc]:
                            row[_idx(n, r, k)] -= a[k][cc]
                    if any(row):
                        yield row

    return EndoSpace("centroid", n, kernel_of_rows(rows(), n * n))


@lru_cache(maxsize=None)
def j_space(g: LieAlgebra) -> EndoSpace:
    """J(g) = {phi : ad_x phi = 0 = phi ad_x for all x}.

    Equals Hom(g/[g,g], z(g)) viewed inside End(g); always sits inside the
    centroid, with which it is intersected for good measure.
    """
    n = g.dim
    ads = [g.ad_basis(i) for i in range(n)]

    def rows():
        for ad in ads:
            a = ad.rows
            for r in range(n):
                for cc in range(n):
                    left = [Fraction(0)] * (n * n)
                    right = [Fraction(0)] * (n * n)
                    for k in range(n):
                        if a[r][k]:
                            left[_idx(n, k, cc)] += a[r][k]
                        if a[k][cc]:
                            right[_idx(n, r, k)] += a[k][cc]
                    if any(left):
                        yield left
                    if any(right):
                        yield right

    ker = kernel_of_rows(rows(), n * n)
    return EndoSpace("j_space", n, ker.intersect(centroid(g).space))


def module_commutant(rep: Sequence[Matrix]) -> EndoSpace:
    """Commutant {T : T rho = rho T for every rho in rep}."""
    rep = list(rep)
    if not rep:
        raise ValueError("empty representation; ambient size unknown")
    n = rep[0].nrows
    for m in rep:
        if not m.is_square() or m.nrows != n:
            raise ValueError("representation matrices must be square of one size")

    def rows():
        for m in rep:
            a = m.rows
            for r in range(n):
                for cc in range(n):
                    row = [Fraction(0)] * (n * n)
                    for k in range(n):
                        if a[k][cc]:
                            row[_idx(n, r, k)] += a[k][cc]
                        if a[r][k]:
                            row[_idx(n, k, cc)] -= a[r][k]
                    if any(row):
                        yield row

    return EndoSpace("commutant", n, kernel_of_rows(rows(), n * n))


def check_abelian(space: EndoSpace):
    """Raise PreconditionError naming the first noncommuting basis pair."""
    mats = space.basis_matrices()
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                raise PreconditionError(
                    "%s is not commutative: basis elements %d and %d do not commute"
                    % (space.kind, i, j)
                )


@lru_cache(maxsize=None)
def split_centroid(g: LieAlgebra) -> tuple[EndoSpace, EndoSpace]:
    """Split an abelian centroid into nilpotent and semisimple parts.

    Applies the Jordan-Chevalley decomposition to each centroid basis
    element; N = span of the nilpotent parts, S = span of the semisimple
    parts. For an abelian centroid these are subalgebras with N + S = Cent
    as a direct sum.
    """
    cent = centroid(g)
    check_abelian(cent)
    n = g.dim
    nil_parts = []
    semi_parts = []
    for m in cent.basis_matrices():
        s, nil = jordan_chevalley(m)
        semi_parts.append(s.flatten())
        nil_parts.append(nil.flatten())
    nspace = EndoSpace("nilpotent_part", n, Subspace.span(nil_parts, n * n))
    sspace = EndoSpace("semisimple_part", n, Subspace.span(semi_parts, n * n))
    total = nspace.space.sum(sspace.space)
    if total != cent.space or total.dim != nspace.dim + sspace.dim:
        raise PreconditionError(
            "nilpotent/semisimple parts do not split the centroid "
            "(is the centroid really abelian?)"
        )
    return nspace, sspace

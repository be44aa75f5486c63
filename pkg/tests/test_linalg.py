"""Exact linear algebra: row reduction, kernels, solving, subspaces."""

from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liestruct.linalg import (
    Matrix,
    Subspace,
    kernel_basis,
    kernel_of_rows,
    kron,
    row_reduce,
    solve,
    vector,
)


def M(rows):
    return Matrix(tuple(vector(r) for r in rows))


# ---------------------------------------------------------------------------
# row_reduce
# ---------------------------------------------------------------------------


def test_row_reduce_proportional_rows():
    rref, rank, pivots = row_reduce(M([[1, 2], [2, 4]]))
    assert rank == 1
    assert pivots == (0,)
    assert rref.rows[0] == vector([1, 2])
    assert rref.rows[1] == vector([0, 0])


def test_row_reduce_identity_fixed_point():
    ident = Matrix.identity(3)
    rref, rank, pivots = row_reduce(ident)
    assert rref == ident
    assert rank == 3
    assert pivots == (0, 1, 2)


def test_row_reduce_permutation_matrix():
    rref, rank, pivots = row_reduce(M([[0, 1], [1, 0]]))
    assert rref == Matrix.identity(2)
    assert rank == 2


def test_row_reduce_fractions_normalized():
    rref, rank, _ = row_reduce(M([[F(1, 2), F(1, 3)], [F(3), F(2)]]))
    # second row is 6x the first: rank 1, leading entry scaled to 1
    assert rank == 1
    assert rref.rows[0] == vector([1, F(2, 3)])


# ---------------------------------------------------------------------------
# kernel_basis / kernel_of_rows
# ---------------------------------------------------------------------------


def test_kernel_of_identity_is_zero():
    assert kernel_basis(Matrix.identity(2)).is_zero()


def test_kernel_of_zero_matrix_is_full():
    assert kernel_basis(Matrix.zero(2, 3)) == Subspace.full(3)


def test_kernel_single_equation():
    ker = kernel_basis(M([[1, 1]]))
    assert ker == Subspace.span([vector([1, -1])], 2)
    assert ker.dim == 1
    assert ker.contains(vector([1, -1]))


def test_kernel_of_rows_streams_generator():
    rows = (vector(r) for r in [[1, 0, 1], [0, 1, 1]])
    ker = kernel_of_rows(rows, 3)
    assert ker.dim == 1
    assert ker.contains(vector([-1, -1, 1]))


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def test_solve_identity():
    b = vector([3, -5])
    assert solve(Matrix.identity(2), b) == b


def test_solve_free_variables_set_to_zero():
    assert solve(M([[1, 1]]), vector([2])) == vector([2, 0])


def test_solve_inconsistent_returns_none():
    assert solve(M([[1], [1]]), vector([1, 2])) is None


def test_solve_rectangular_exact():
    m = M([[2, 1, 0], [0, 3, 1]])
    x = solve(m, vector([1, 1]))
    assert x is not None
    assert m.apply(x) == vector([1, 1])


# ---------------------------------------------------------------------------
# Subspace canonicity and lattice operations
# ---------------------------------------------------------------------------


def test_subspace_equality_is_representation_independent():
    a = Subspace.span([vector([1, 1, 0]), vector([0, 0, 1])], 3)
    b = Subspace.span([vector([2, 2, 2]), vector([1, 1, 1]), vector([0, 0, 5])], 3)
    assert a == b
    assert hash(a) == hash(b)


def test_subspace_sum_and_intersection():
    e1 = Subspace.span([vector([1, 0, 0])], 3)
    plane = Subspace.span([vector([1, 0, 0]), vector([0, 1, 0])], 3)
    line = Subspace.span([vector([1, 1, 0])], 3)
    assert e1.sum(line) == plane
    assert plane.intersect(line) == line
    assert e1.intersect(line).is_zero()


def test_subspace_reduce_and_coordinates():
    s = Subspace.span([vector([1, 0, 1]), vector([0, 1, 1])], 3)
    inside = vector([2, 3, 5])
    assert s.contains(inside)
    assert s.reduce(inside) == vector([0, 0, 0])
    coords = s.coordinates(inside)
    assert coords == vector([2, 3])
    outside = vector([1, 0, 0])
    assert not s.contains(outside)
    assert s.coordinates(outside) is None


def test_subspace_direct_construction_rejected():
    with pytest.raises(TypeError):
        Subspace((vector([1, 0]),), 2)


# ---------------------------------------------------------------------------
# Matrix arithmetic
# ---------------------------------------------------------------------------


def test_matrix_inverse_and_power():
    m = M([[1, 1], [0, 1]])
    minv = m.inverse()
    assert minv == M([[1, -1], [0, 1]])
    assert m @ minv == Matrix.identity(2)
    assert m.power(3) == M([[1, 3], [0, 1]])
    assert m.power(0) == Matrix.identity(2)


def test_matrix_inverse_singular_raises():
    with pytest.raises(Exception):
        M([[1, 2], [2, 4]]).inverse()


def test_matrix_flatten_unflatten_roundtrip():
    m = M([[1, 2], [3, 4]])
    assert Matrix.unflatten(m.flatten(), 2, 2) == m


def test_kron_block_structure():
    a = M([[2, 0], [0, 3]])
    b = M([[0, 1], [1, 0]])
    k = kron(a, b)
    assert k.nrows == 4 and k.ncols == 4
    # (i,p) index = i*2 + p: the (0,0) block is 2*b
    assert k.rows[0] == vector([0, 2, 0, 0])
    assert k.rows[2] == vector([0, 0, 0, 3])
    # multiplicativity on a sample
    c = M([[1, 1], [0, 1]])
    d = M([[1, 0], [2, 1]])
    assert kron(a, b) @ kron(c, d) == kron(a @ c, b @ d)


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

small_entries = st.integers(min_value=-6, max_value=6)


def matrices(max_dim=5, square=False):
    def build_matrix(draw_rows, draw_cols):
        return st.builds(
            lambda rows: M(rows),
            st.lists(
                st.lists(small_entries, min_size=draw_cols, max_size=draw_cols),
                min_size=draw_rows,
                max_size=draw_rows,
            ),
        )

    if square:
        return st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda n: build_matrix(n, n)
        )
    return st.tuples(
        st.integers(min_value=1, max_value=max_dim),
        st.integers(min_value=1, max_value=max_dim),
    ).flatmap(lambda shape: build_matrix(*shape))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_property_rref_idempotent_and_rank_consistent(m):
    rref, rank, pivots = row_reduce(m)
    again, rank2, pivots2 = row_reduce(rref)
    assert again == rref and rank2 == rank and pivots2 == pivots
    assert len(pivots) == rank
    assert tuple(sorted(pivots)) == pivots


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_property_kernel_vectors_annihilated(m):
    ker = kernel_basis(m)
    assert ker.dim == m.ncols - row_reduce(m)[1]
    zero = vector([0] * m.nrows)
    for row in ker.rows:
        assert m.apply(row) == zero


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=4), st.randoms(use_true_random=False))
def test_property_subspace_canonical_under_respanning(m, rng):
    rows = [r for r in m.rows]
    s = Subspace.span(rows, m.ncols)
    # random invertible-ish recombination: shuffle + add multiples of others
    recombined = list(rows)
    rng.shuffle(recombined)
    if len(recombined) >= 2:
        recombined[0] = vector(
            [a + 3 * b for a, b in zip(recombined[0], recombined[1])]
        )
    recombined.append(vector([0] * m.ncols))
    assert Subspace.span(recombined, m.ncols) == s

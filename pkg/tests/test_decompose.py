"""Indecomposable-ideal decomposition, idempotents, complex structures."""

from __future__ import annotations

import itertools
from fractions import Fraction as F

import pytest

from liestruct import (
    build,
    classical,
    current_algebra,
    direct_sum,
    endo,
    point_functions,
    quadratic_extension,
    truncated_poly,
)
from liestruct.decompose import (
    centroid_radical,
    complex_structure,
    indecompose,
    primitive_idempotents,
)
from liestruct.errors import LiestructError, PreconditionError
from liestruct.linalg import Matrix, Subspace, unit_vector, vector


# ---------------------------------------------------------------------------
# centroid_radical
# ---------------------------------------------------------------------------


def test_radical_of_scalar_centroid_is_zero(sl2, two_dim):
    for g in (sl2, two_dim):
        cent = endo.centroid(g)
        assert centroid_radical(cent).is_zero()


def test_radical_of_jet_current_algebra(sl2):
    g = current_algebra(sl2, truncated_poly(1, 3))
    cent = endo.centroid(g)
    rad = centroid_radical(cent)
    assert rad.dim == 2  # multiplications by t and t^2
    # every radical element is nilpotent
    from liestruct.poly import is_nilpotent_matrix

    for coords in rad.rows:
        mat = Matrix.zero(g.dim, g.dim)
        mats = cent.basis_matrices()
        for c, b in zip(coords, mats):
            mat = mat + b.scale(c)
        assert is_nilpotent_matrix(mat)


def test_radical_of_heisenberg_centroid(heisenberg3):
    assert centroid_radical(endo.centroid(heisenberg3)).dim == 2


# ---------------------------------------------------------------------------
# primitive_idempotents
# ---------------------------------------------------------------------------


def test_idempotents_scalar_centroid(sl2):
    idems, status = primitive_idempotents(endo.centroid(sl2))
    assert status == "split"
    assert len(idems.projections) == 1
    assert idems.projections[0] == Matrix.identity(3)


def test_idempotents_two_blocks(sl2):
    g = direct_sum([sl2, sl2])
    idems, status = primitive_idempotents(endo.centroid(g))
    assert status == "split"
    ps = idems.projections
    assert len(ps) == 2
    for p in ps:
        assert p @ p == p
    assert (ps[0] @ ps[1]).is_zero()
    assert ps[0] + ps[1] == Matrix.identity(6)


def test_idempotents_complex_model_does_not_split(sl2_complex_model):
    idems, status = primitive_idempotents(endo.centroid(sl2_complex_model))
    assert status == "nonsplit_real"
    assert len(idems.projections) == 1
    assert idems.projections[0] == Matrix.identity(6)


def test_idempotents_real_quadratic_extension_unknown(sl2):
    g = current_algebra(sl2, quadratic_extension(F(2)))
    idems, status = primitive_idempotents(endo.centroid(g))
    assert status == "nonsplit_unknown"
    assert len(idems.projections) == 1


# ---------------------------------------------------------------------------
# indecompose
# ---------------------------------------------------------------------------


def test_indecompose_simple_algebra(sl2):
    report = indecompose(sl2)
    assert len(report.ideals) == 1
    assert report.ideals[0].is_full()
    assert report.status == "split"
    assert report.j_dims == (0,)
    assert report.is_unique()


def test_indecompose_two_copies(sl2):
    g = direct_sum([sl2, sl2])
    report = indecompose(g)
    assert sorted(i.dim for i in report.ideals) == [3, 3]
    assert report.blocks == ((1, 0), (0, 1))
    assert report.is_unique()
    # ideals bracket to zero against each other
    for a, b in itertools.combinations(report.ideals, 2):
        assert g.bracket_span(a, b).is_zero()


def test_indecompose_point_functions(sl2):
    g = current_algebra(sl2, point_functions(3))
    report = indecompose(g)
    assert len(report.ideals) == 3
    assert all(i.dim == 3 for i in report.ideals)
    # each ideal is a copy of sl2
    for ideal in report.ideals:
        piece = g.restrict_to(ideal)
        assert piece.flags()["semisimple"]
        assert piece.flags()["simple"]


def test_indecompose_mixed_sum(sl2, heisenberg3):
    g = direct_sum([sl2, sl2, heisenberg3])
    report = indecompose(g)
    assert sorted(i.dim for i in report.ideals) == [3, 3, 3]
    ps = report.idempotents.projections
    for i, p in enumerate(ps):
        for j, q in enumerate(ps):
            assert p @ q == (p if i == j else Matrix.zero(9, 9))
    total = Matrix.zero(9, 9)
    for p in ps:
        total = total + p
    assert total == Matrix.identity(9)


def test_indecompose_non_unique_blocks(two_dim, heisenberg3):
    # Hom(two_dim/[,], z(h3)) = Q, so one off-diagonal block is nonzero and
    # the decomposition exists but is not unique
    g = direct_sum([two_dim, heisenberg3])
    report = indecompose(g)
    assert sorted(i.dim for i in report.ideals) == [2, 3]
    flat = sorted(x for row in report.blocks for x in row)
    assert sum(flat) == endo.centroid(g).dim
    assert not report.is_unique()


def test_indecompose_refuses_central_complement(sl2, abelian1):
    g = direct_sum([sl2, abelian1])  # center not inside the commutator
    with pytest.raises(LiestructError):
        indecompose(g)


def test_indecompose_permutation_stability(sl2, heisenberg3):
    g = direct_sum([sl2, sl2, heisenberg3])
    base = indecompose(g)
    perm = (4, 7, 0, 2, 8, 5, 1, 3, 6)
    h = g.permuted(perm)
    other = indecompose(h)
    # map the permuted ideals back through the relabeling and compare as sets
    def pull_back(space):
        rows = [
            vector(row[perm.index(t)] for t in range(9)) for row in space.rows
        ]
        return Subspace.span(rows, 9)

    base_set = {s for s in base.ideals}
    other_set = {pull_back(s) for s in other.ideals}
    assert base_set == other_set


# ---------------------------------------------------------------------------
# complex_structure
# ---------------------------------------------------------------------------


def test_complex_structure_absent_rationally(sl2):
    assert complex_structure(sl2) is None


def test_complex_structure_on_complexified_model(sl2_complex_model):
    cs = complex_structure(sl2_complex_model)
    assert cs is not None
    j = cs.J
    assert j @ j == Matrix.identity(6).scale(F(-1))
    assert endo.centroid(sl2_complex_model).contains(j)


def test_complex_structure_rejects_decomposable(abelian2):
    with pytest.raises(PreconditionError):
        complex_structure(abelian2)


def test_complex_structure_real_quadratic_splits_over_r(sl2):
    g = current_algebra(sl2, quadratic_extension(F(2)))
    with pytest.raises(LiestructError) as exc:
        complex_structure(g)
    assert "split" in str(exc.value).lower() or "real" in str(exc.value).lower()


def test_complex_structure_irrational_imaginary_part(sl2):
    # centroid is Q[r]/(r^2+3): a complex structure exists over R but J = r/b
    # needs b = sqrt(3), which is not rational
    g = current_algebra(sl2, quadratic_extension(F(-3)))
    with pytest.raises(LiestructError) as exc:
        complex_structure(g)
    assert "rational" in str(exc.value).lower() or "square" in str(exc.value).lower()


def test_complex_structure_of_decomposable_current(sl2):
    g = current_algebra(sl2, point_functions(2))
    with pytest.raises(LiestructError):
        complex_structure(g)

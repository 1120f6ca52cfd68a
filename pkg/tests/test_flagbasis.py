"""Tests for the e-basis of V^{ij}, the R-maps and the quadratic relations."""

import pytest

from qflag.core.errors import CellError, NotInSpanError
from qflag.core.flagbasis import (
    annihilator,
    cell_vector,
    check_closure,
    check_k_eigen,
    check_normal_form_signs,
    check_relation_count,
    e_vector,
    pair_dual,
    quadratic_relations,
    r_map,
    r_map_scaled,
    span_basis,
    verify_intertwiner,
)
from qflag.core.orthocell import dim_formula, make_cell
from qflag.core.scalars import ONE, Q
from qflag.core.uqrep import TensorVector, module_dimension
from qflag.core.weyl import PositiveRoot

SL3_PAIRS = [(1, 1), (1, 2), (2, 1), (2, 2)]
SL4_PAIRS = [(i, j) for i in range(1, 4) for j in range(1, 4)]


def test_e_vector_for_sl2():
    cell = make_cell(2, [PositiveRoot(1, 2)], (1, 2))
    # e^1_{s w} ⊗ e^1_w + q·e^1_w ⊗ e^1_{s w}
    expected = TensorVector.basis((1, 1), ((2,), (1,))) + TensorVector.basis(
        (1, 1), ((1,), (2,)), Q
    )
    assert e_vector(cell, 1, 1).vector == expected
    assert cell_vector(make_cell(2, [], (2, 1)), 1, 1) == TensorVector.basis((1, 1), ((2,), (2,)))


def test_e_vector_rejects_unsuitable_cells():
    with pytest.raises(CellError):
        e_vector(make_cell(3, [PositiveRoot(1, 3)], (1, 2, 3)), 1, 2)
    with pytest.raises(CellError):
        e_vector(make_cell(3, [PositiveRoot(1, 2)], (1, 2, 3)), 2, 2)


@pytest.mark.parametrize(("i", "j"), SL3_PAIRS)
def test_span_rank_for_sl3(i, j):
    basis = span_basis(3, i, j)
    assert basis.rank == dim_formula(3, i, j)
    assert len(basis.cells) == dim_formula(3, i, j)


@pytest.mark.slow
@pytest.mark.parametrize(("i", "j"), SL4_PAIRS)
def test_span_rank_for_sl4(i, j):
    assert span_basis(4, i, j).rank == dim_formula(4, i, j)


@pytest.mark.parametrize(("i", "j"), SL3_PAIRS)
def test_closure_and_k_eigenvalues_for_sl3(i, j):
    report = check_closure(3, i, j)
    assert report.passed, report.failures[:5]
    assert check_k_eigen(3, i, j).passed


@pytest.mark.parametrize(("i", "j"), SL3_PAIRS)
def test_intertwiner_for_sl3(i, j):
    report = verify_intertwiner(3, i, j)
    assert report.passed, report.failures[:5]


@pytest.mark.slow
@pytest.mark.parametrize(("i", "j"), [(1, 2), (2, 1), (1, 3), (2, 3)])
def test_intertwiner_for_sl4(i, j):
    assert verify_intertwiner(4, i, j).passed


def test_r_map_sends_e_vectors_to_e_vectors():
    source, target = span_basis(3, 2, 1), span_basis(3, 1, 2)
    for src, dst in zip(source.vectors, target.vectors):
        assert r_map(3, 1, 2, src) == dst
        num, den = r_map_scaled(3, 1, 2, src)
        assert den == ONE
        assert num == dst


def test_r_map_rejects_vectors_outside_the_span():
    relation = annihilator(3, 2, 1)[0]
    key, _ = relation.items()[0]
    outside = TensorVector.basis((2, 1), key)
    with pytest.raises(NotInSpanError):
        r_map(3, 1, 2, outside)


def test_r_map_is_identity_on_equal_levels():
    v = span_basis(3, 1, 1).vectors[0]
    assert r_map(3, 1, 1, v) == v
    assert r_map_scaled(3, 1, 1, v) == (v, ONE)


def test_r_map_on_equal_levels_rejects_vectors_outside_the_span():
    basis = span_basis(3, 1, 1)
    outside = next(rel for rel in annihilator(3, 1, 1) if not basis.contains(rel))
    with pytest.raises(NotInSpanError):
        r_map(3, 1, 1, outside)
    with pytest.raises(NotInSpanError):
        r_map_scaled(3, 1, 1, TensorVector.basis((1, 1), ((1,), (2,))))


@pytest.mark.parametrize(("n", "i", "j"), [(2, 1, 1), (3, 1, 2), (3, 2, 2), (4, 1, 1)])
def test_relation_count(n, i, j):
    assert len(annihilator(n, i, j)) == module_dimension(n, (i, j)) - dim_formula(n, i, j)
    assert check_relation_count(n, i, j).passed


def test_sl2_relation_is_the_quantum_plane():
    relations = quadratic_relations(2, 1, 1)
    assert relations.render() == ["x⊗y − q·y⊗x"]
    assert relations.type_two_is_identity


def test_type_two_matrix_is_identity_for_mixed_levels():
    relations = quadratic_relations(3, 1, 2)
    assert len(relations.type_one) == 1
    assert relations.type_two_is_identity
    data = relations.to_dict()
    assert set(data) == {"n", "levels", "cells", "typeI", "typeII"}
    assert len(data["typeII"]) == 8


def test_relations_annihilate_the_span():
    for rel in annihilator(3, 1, 2):
        for vec in span_basis(3, 1, 2).vectors:
            assert not pair_dual(rel, vec)


def test_pair_dual_without_overlap_is_zero():
    rel = TensorVector.basis((1, 1), ((1,), (1,)))
    assert pair_dual(rel, TensorVector.basis((1, 1), ((2,), (2,)))) == 0


@pytest.mark.parametrize(("i", "j"), [(1, 2), (2, 1), (1, 1), (2, 3)])
def test_normal_form_signs_for_sl4(i, j):
    assert check_normal_form_signs(4, i, j).passed

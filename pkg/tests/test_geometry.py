"""Tests for points of E(C), Plücker vectors and sampled Segre images."""

import random
from collections import Counter
from fractions import Fraction

import pytest

from qflag.core.geometry import (
    CellPoint,
    QValue,
    check_spanned,
    component_ratios,
    gluing_check,
    imagep_expansion,
    in_evaluated_span,
    pluecker,
    sample_point,
    segre_pair,
    sigma,
)
from qflag.core.orthocell import effective_indices, enumerate_monogressive, make_cell
from qflag.core.uqrep import TensorVector
from qflag.core.weyl import PositiveRoot

SL2_CELL = make_cell(2, [PositiveRoot(1, 2)], (1, 2))


@pytest.mark.parametrize("value", [0, 1, -1, "1/1"])
def test_q_value_rejects_roots_of_unity(value):
    with pytest.raises(ValueError):
        QValue(Fraction(value))


def test_q_value_parses_fractions():
    assert QValue.parse("3/2").value == Fraction(3, 2)
    assert str(QValue.parse("-2")) == "-2"


def test_cell_point_validation():
    with pytest.raises(ValueError):
        CellPoint(SL2_CELL, ())
    with pytest.raises(ValueError):
        CellPoint(SL2_CELL, ((0, 0),))


def test_cell_point_json_encoding():
    point = CellPoint(SL2_CELL, ((Fraction(1, 2), -3),))
    data = point.to_dict()
    assert data["coords"] == [["1/2", "-3"]]
    assert CellPoint.from_dict(data) == point


def test_pluecker_vector_of_sl2_point():
    point = CellPoint(SL2_CELL, ((3, 5),))
    assert pluecker(point, 1) == TensorVector((1,), {((1,),): Fraction(3), ((2,),): Fraction(5)})


def test_sigma_scales_the_moving_coordinate():
    q = QValue(Fraction(2))
    assert sigma(CellPoint(SL2_CELL, ((3, 5),)), 1, q).coords == ((Fraction(3), Fraction(10)),)


def test_segre_image_of_sl2_point_lies_in_the_span():
    q = QValue(Fraction(2))
    point = CellPoint(SL2_CELL, ((3, 5),))
    image = segre_pair(point, 1, 1, q)
    assert in_evaluated_span(image, 2, 1, 1, q)
    assert imagep_expansion(point, 1, 1, q) == image


def test_sample_points_are_reproducible():
    cell = enumerate_monogressive(4, 2)[0]
    first = sample_point(cell, random.Random(7))
    second = sample_point(cell, random.Random(7))
    assert first == second
    assert all(x or y for x, y in first.coords)


@pytest.mark.parametrize(("n", "i", "j"), [(2, 1, 1), (3, 1, 2), (3, 2, 1), (3, 2, 2)])
def test_sampled_images_are_spanned(n, i, j):
    report = check_spanned(n, i, j, samples=5, seed=42, q=QValue(Fraction(2)))
    assert report.passed, report.failures[:5]


def test_sampling_with_another_q():
    assert check_spanned(3, 1, 2, samples=3, seed=1, q=QValue(Fraction(-3, 2))).passed


@pytest.mark.slow
@pytest.mark.parametrize(("i", "j"), [(1, 2), (2, 3), (1, 3), (2, 2)])
def test_sampled_images_are_spanned_for_sl4(i, j):
    assert check_spanned(4, i, j, samples=3, seed=42, q=QValue(Fraction(2))).passed


def test_component_ratios_for_sl3():
    q = QValue(Fraction(5))
    one, five = Fraction(1), Fraction(5)
    assert component_ratios(q) == Counter({(one, five): 3, (five, one): 3, (five, five): 2})


@pytest.mark.parametrize("n", [3, 4])
def test_gluing_for_every_monogressive_cell(n):
    for cell in enumerate_monogressive(n):
        for i in range(1, n):
            assert gluing_check(cell, i).passed, (cell, i)


def _rescale(point, k, factor):
    coords = list(point.coords)
    x, y = coords[k]
    coords[k] = (factor * x, factor * y)
    return CellPoint(point.cell, tuple(coords))


@pytest.mark.parametrize("n", [3, 4])
def test_pluecker_vectors_are_projective(n):
    rng = random.Random(11)
    factor = Fraction(-7, 3)
    q = QValue(Fraction(2))
    for cell in enumerate_monogressive(n):
        point = sample_point(cell, rng)
        for k in range(cell.rank):
            scaled = _rescale(point, k, factor)
            for i in range(1, n):
                expected = factor if k in effective_indices(cell, i) else 1
                assert pluecker(scaled, i) == pluecker(point, i).scale(expected), (cell, k, i)
                assert sigma(scaled, i, q) == _rescale(sigma(point, i, q), k, factor)

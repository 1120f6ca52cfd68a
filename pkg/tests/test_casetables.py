"""Tests for the closed-form generator actions on e-vectors."""

import pytest

from qflag.core.casetables import ImpossibleCase, predict, verify_case_tables
from qflag.core.orthocell import make_cell
from qflag.core.scalars import ONE, Q
from qflag.core.weyl import PositiveRoot


def test_root_of_the_cell_gives_case_four():
    cell = make_cell(2, [PositiveRoot(1, 2)], (1, 2))
    prediction = predict(cell, 1, 1, 1)
    assert prediction.subcase == "IV"
    (x,), (y,) = prediction.x, prediction.y
    assert x.coefficient == Q * Q + ONE
    assert x.roots == ()
    assert x.w == (1, 2)
    assert y.w == (2, 1)


def test_simple_root_inside_both_blocks_is_annihilated():
    cell = make_cell(4, [PositiveRoot(3, 4)], (1, 2, 3, 4))
    prediction = predict(cell, 2, 2, 1)
    assert prediction.subcase == "III (0,0)"
    assert prediction.x == ()
    assert prediction.y == ()


@pytest.mark.parametrize(("i", "j"), [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_tables_for_sl3(i, j):
    report = verify_case_tables(3, i, j)
    assert report.passed, report.failures[:5]
    assert report.checked > 0


def test_tables_record_subcase_counts():
    report = verify_case_tables(3, 1, 2)
    cases = {note.split(":")[0] for note in report.notes}
    assert "III" in cases


@pytest.mark.slow
@pytest.mark.parametrize(("i", "j"), [(i, j) for i in range(1, 4) for j in range(1, 4)])
def test_tables_for_sl4(i, j):
    report = verify_case_tables(4, i, j)
    assert report.passed, report.failures[:5]
    assert not any(note.startswith("I.3") for note in report.notes)


def test_impossible_case_is_an_exception():
    assert issubclass(ImpossibleCase, Exception)

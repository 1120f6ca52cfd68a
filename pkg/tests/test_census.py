"""Tests for the counting checks and the dimension table."""

from fractions import Fraction

import pytest
from deal import PreContractError

from qflag.core.census import (
    KNOWN_COUNTS,
    check_component_ratios,
    check_criterion_equivalence,
    check_dimension,
    check_known_counts,
    check_normal_counts,
    check_recursion,
    check_sl2_relation,
    dimension_row,
    dimension_table,
    monogressive_counts,
)
from qflag.core.geometry import QValue
from qflag.core.outcome import CheckReport, combine


def test_dimension_table_for_sl3():
    rows = dimension_table(3)
    assert [(r.i, r.j, r.expected) for r in rows] == [(1, 1, 6), (1, 2, 8), (2, 2, 6)]
    assert all(r.matches for r in rows)


def test_dimension_row_encoding():
    row = dimension_row(3, 1, 2)
    assert row.to_dict() == {"i": 1, "j": 2, "D": 8, "cells": 8, "rank": 8, "match": True}


def test_dimension_row_wants_ordered_levels():
    with pytest.raises(PreContractError):
        dimension_row(3, 2, 1)


def test_dimension_check_accepts_either_order():
    assert check_dimension(3, 2, 1).passed
    assert check_dimension(3, 2, 1).checked == 2


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_normal_counts(n):
    assert check_normal_counts(n).passed


@pytest.mark.parametrize("n", [3, 4, 5])
def test_recursion(n):
    report = check_recursion(n)
    assert report.passed, report.failures
    assert report.checked == n * (n - 1) // 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_criterion_equivalence(n):
    assert check_criterion_equivalence(n).passed


@pytest.mark.parametrize("n", sorted(KNOWN_COUNTS))
def test_known_counts(n):
    report = check_known_counts(n)
    assert report.passed, report.failures
    assert report.notes


def test_monogressive_counts_for_sl2_and_sl4():
    assert monogressive_counts(2) == {0: 2, 1: 1}
    counts = monogressive_counts(4)
    assert counts[1] == 58
    assert counts[2] == 11


def test_known_counts_beyond_the_table_only_notes():
    report = check_known_counts(5)
    assert report.checked == 0
    assert report.passed
    assert report.notes[0].startswith("rank 0:")


@pytest.mark.parametrize("q", [Fraction(2), Fraction(-1, 3)])
def test_component_ratios(q):
    assert check_component_ratios(QValue(q)).passed


def test_sl2_relation():
    assert check_sl2_relation().passed


def test_reports_combine():
    failing = CheckReport("b")
    failing.tick(False, "broken")
    total = combine("ab", [CheckReport("a", 3), failing])
    assert total.checked == 4
    assert total.failures == ["b: broken"]
    assert not total.passed

"""
Counting checks: how many cells exist, how large V^{ij} is, and the
published values they must reproduce.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from deal import post, pre

from qflag.core.flagbasis import SpanBasis, cell_vector, quadratic_relations
from qflag.core.geometry import QValue, component_ratios
from qflag.core.orthocell import (
    count_ij_normal,
    dim_formula,
    enumerate_effective,
    enumerate_monogressive,
    enumerate_orthocells,
    is_monogressive,
    is_monogressive_by_array,
)
from qflag.core.outcome import CheckReport

# Monogressive cells by rank; ranks not listed have none.
KNOWN_COUNTS: dict[int, dict[int, int]] = {
    2: {0: 2, 1: 1},
    3: {0: 6, 1: 8, 2: 0},
    4: {1: 58, 2: 11},
}

SL2_RELATION = "x⊗y − q·y⊗x"


@dataclass(frozen=True)
class DimensionRow:
    """One row of the dimension table."""

    i: int
    j: int
    expected: int
    cells: int
    rank: int

    @property
    def matches(self) -> bool:
        return self.cells == self.expected and self.rank == self.expected

    def to_dict(self) -> dict[str, Any]:
        return {
            "i": self.i,
            "j": self.j,
            "D": self.expected,
            "cells": self.cells,
            "rank": self.rank,
            "match": self.matches,
        }


@pre(lambda n, i, j: 1 <= i <= j <= n - 1)
def dimension_row(n: int, i: int, j: int) -> DimensionRow:
    """
    Cell count and span rank of the e^{ij} against D_{n;i,j}.

    >>> dimension_row(2, 1, 1).to_dict()
    {'i': 1, 'j': 1, 'D': 3, 'cells': 3, 'rank': 3, 'match': True}
    """
    cells = tuple(enumerate_effective(n, i, j))
    basis = SpanBasis(n, (i, j), cells, tuple(cell_vector(c, i, j) for c in cells))
    return DimensionRow(i, j, dim_formula(n, i, j), len(cells), basis.rank)


def dimension_table(n: int) -> list[DimensionRow]:
    """Rows for 1 ≤ i ≤ j ≤ n−1; (j, i) has the same dimension."""
    return [dimension_row(n, i, j) for i in range(1, n) for j in range(i, n)]


def check_dimension(n: int, i: int, j: int) -> CheckReport:
    report = CheckReport(f"dimension n={n} ij={i}{j}")
    row = dimension_row(n, min(i, j), max(i, j))
    report.tick(row.cells == row.expected, f"{row.cells} cells, expected {row.expected}")
    report.tick(row.rank == row.expected, f"span rank {row.rank}, expected {row.expected}")
    return report


def _count(n: int, i: int, j: int) -> int:
    """count_ij_normal with levels outside [0, n] counted as empty."""
    if not (0 <= i <= n and 0 <= j <= n):
        return 0
    return count_ij_normal(n, i, j)


@pre(lambda n: n >= 2)
def check_normal_counts(n: int) -> CheckReport:
    """
    Direct ij-normal counts equal D_{n;i,j} for all levels 0 ≤ i ≤ j ≤ n.

    >>> check_normal_counts(3).passed
    True
    """
    report = CheckReport(f"normal-count n={n}")
    for i in range(n + 1):
        for j in range(i, n + 1):
            found, expected = count_ij_normal(n, i, j), dim_formula(n, i, j)
            report.tick(found == expected, f"ij={i}{j}: {found} normal arrays, D = {expected}")
    return report


@pre(lambda n: n >= 3)
def check_recursion(n: int) -> CheckReport:
    """
    D_{n;i,j} = D_{n−1;i−1,j−1} + D_{n−1;i−1,j} + D_{n−1;i,j−1} + D_{n−1;i,j}
    on computed counts, for 1 ≤ i < j ≤ n.

    >>> check_recursion(4).passed
    True
    """
    report = CheckReport(f"recursion n={n}")
    m = n - 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            left = _count(n, i, j)
            right = (
                _count(m, i - 1, j - 1) + _count(m, i - 1, j) + _count(m, i, j - 1) + _count(m, i, j)
            )
            report.tick(left == right, f"ij={i}{j}: {left} ≠ {right}")
    return report


@pre(lambda n: n >= 2)
def check_criterion_equivalence(n: int) -> CheckReport:
    """The length test and the array criterion agree on every canonical orthocell."""
    report = CheckReport(f"criterion n={n}")
    for cell in enumerate_orthocells(n):
        report.tick(
            is_monogressive(cell) == is_monogressive_by_array(cell),
            f"{cell}: criteria disagree",
        )
    return report


@post(lambda result: all(v >= 0 for v in result.values()))
def monogressive_counts(n: int) -> dict[int, int]:
    """
    Number of monogressive cells by rank.

    >>> monogressive_counts(3)
    {0: 6, 1: 8}
    """
    counts = Counter(cell.rank for cell in enumerate_monogressive(n))
    return dict(sorted(counts.items()))


def check_known_counts(n: int) -> CheckReport:
    """Monogressive counts against the tabulated values; nothing to compare past n = 4."""
    report = CheckReport(f"counts n={n}")
    counts = monogressive_counts(n)
    for rank, expected in KNOWN_COUNTS.get(n, {}).items():
        found = counts.get(rank, 0)
        report.tick(found == expected, f"rank {rank}: {found} cells, expected {expected}")
    report.notes.append(", ".join(f"rank {d}: {c}" for d, c in counts.items()))
    return report


def check_component_ratios(q: QValue) -> CheckReport:
    """σ-scaling pattern of the eight rank-1 components for n = 3."""
    report = CheckReport(f"component-ratios q0={q}")
    one, q0 = Fraction(1), q.value
    expected = Counter({(one, q0): 3, (q0, one): 3, (q0, q0): 2})
    found = component_ratios(q)
    report.tick(found == expected, f"ratios {dict(found)} ≠ {dict(expected)}")
    return report


def check_sl2_relation() -> CheckReport:
    """
    n = 2 has one relation, x⊗y − q·y⊗x, and R^{11} is the identity.

    >>> check_sl2_relation().passed
    True
    """
    report = CheckReport("sl2-relation")
    relations = quadratic_relations(2, 1, 1)
    rendered = relations.render()
    report.tick(rendered == [SL2_RELATION], f"relations {rendered}")
    report.tick(relations.type_two_is_identity, "type II matrix is not the identity")
    return report

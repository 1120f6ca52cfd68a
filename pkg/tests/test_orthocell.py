"""Tests for orthocells, monogressivity and the ij-normal counts."""

import pytest
from deal import PreContractError

from qflag.core.errors import CellError, OrthogonalityError
from qflag.core.orthocell import (
    Orthocell,
    coset_elements,
    count_ij_normal,
    dim_formula,
    enumerate_effective,
    enumerate_monogressive,
    enumerate_orthocells,
    ij_normalize,
    is_ij_effective,
    is_monogressive,
    is_monogressive_by_array,
    make_cell,
    subcells,
)
from qflag.core.weyl import PositiveRoot, length


@pytest.mark.parametrize(
    ("n", "rank", "expected"),
    [(3, 1, 8), (3, 2, 0), (4, 1, 58), (4, 2, 11), (2, 1, 1)],
)
def test_monogressive_counts(n, rank, expected):
    assert len(enumerate_monogressive(n, rank)) == expected


def test_cell_across_the_middle_is_not_monogressive():
    cell = make_cell(3, [PositiveRoot(1, 3)], (1, 2, 3))
    assert cell.w == (1, 2, 3)
    assert not is_monogressive(cell)
    assert not is_monogressive_by_array(cell)
    assert cell not in enumerate_monogressive(3, 1)


def test_make_cell_picks_shortest_element():
    cell = make_cell(2, [PositiveRoot(1, 2)], (2, 1))
    assert cell.w == (1, 2)
    cell = make_cell(4, [PositiveRoot(1, 3), PositiveRoot(2, 4)], (4, 3, 2, 1))
    assert length(cell.w) == min(length(w) for w in coset_elements(cell))


@pytest.mark.parametrize(
    "roots",
    [
        [PositiveRoot(1, 2), PositiveRoot(2, 3)],
        [PositiveRoot(1, 2), PositiveRoot(1, 2)],
        [PositiveRoot(1, 5)],
    ],
)
def test_make_cell_rejects_bad_roots(roots):
    with pytest.raises(OrthogonalityError):
        make_cell(4, roots, (1, 2, 3, 4))


def test_make_cell_requires_a_permutation():
    with pytest.raises(PreContractError):
        make_cell(3, [], (1, 1, 2))


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_array_criterion_matches_length_criterion(n):
    for cell in enumerate_orthocells(n):
        assert is_monogressive(cell) == is_monogressive_by_array(cell), cell


def test_enumeration_is_sorted_and_unique():
    cells = enumerate_monogressive(4)
    assert cells == sorted(set(cells), key=Orthocell.sort_key)
    assert all(is_monogressive(c) for c in cells)


@pytest.mark.parametrize(
    ("n", "i", "j", "expected"),
    [(2, 1, 1, 3), (3, 1, 1, 6), (3, 1, 2, 8), (4, 1, 1, 10), (4, 2, 2, 20), (4, 1, 3, 15)],
)
def test_dim_formula(n, i, j, expected):
    assert dim_formula(n, i, j) == expected
    assert dim_formula(n, j, i) == expected


def test_dim_formula_trivial_levels():
    assert dim_formula(4, 0, 0) == 1
    assert dim_formula(4, 0, 2) == 6
    assert dim_formula(4, 4, 4) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_normal_counts_match_formula(n):
    for i in range(n + 1):
        for j in range(n + 1):
            assert count_ij_normal(n, i, j) == dim_formula(n, i, j), (i, j)


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_effective_classes_match_formula(n):
    for i in range(1, n):
        for j in range(1, n):
            assert len(enumerate_effective(n, i, j)) == dim_formula(n, i, j), (i, j)


def test_normal_form_is_idempotent():
    for cell in enumerate_monogressive(4):
        for i, j in [(1, 2), (2, 3), (1, 3), (2, 2)]:
            if not is_ij_effective(cell, i, j):
                continue
            normal = ij_normalize(cell, i, j)
            assert ij_normalize(normal, i, j) == normal
            assert normal.roots == cell.roots


def test_normal_form_rejects_unsuitable_cells():
    not_effective = make_cell(3, [PositiveRoot(1, 2)], (1, 2, 3))
    assert is_monogressive(not_effective)
    with pytest.raises(CellError):
        ij_normalize(not_effective, 2, 2)
    with pytest.raises(CellError):
        ij_normalize(make_cell(3, [PositiveRoot(1, 3)], (1, 2, 3)), 1, 2)


def test_level_preconditions():
    cell = make_cell(3, [], (1, 2, 3))
    with pytest.raises(PreContractError):
        is_ij_effective(cell, 0, 1)
    with pytest.raises(PreContractError):
        enumerate_effective(3, 1, 3)


def test_subcells_of_rank_one_cell():
    cell = make_cell(2, [PositiveRoot(1, 2)], (1, 2))
    assert [str(c) for c in subcells(cell)] == ["C(;[12])", "C(;[21])", "C((1,2);[12])"]


def test_cell_json_encoding():
    cell = make_cell(4, [PositiveRoot(1, 3), PositiveRoot(2, 4)], (2, 4, 1, 3))
    assert cell.to_dict() == {"n": 4, "roots": [[1, 3], [2, 4]], "w": [2, 4, 1, 3]}
    assert Orthocell.from_dict(cell.to_dict()) == cell


def test_root_order_does_not_matter():
    a = make_cell(4, [PositiveRoot(2, 4), PositiveRoot(1, 3)], (3, 1, 4, 2))
    b = make_cell(4, [PositiveRoot(1, 3), PositiveRoot(2, 4)], (3, 1, 4, 2))
    assert a == b
    assert a.roots == (PositiveRoot(1, 3), PositiveRoot(2, 4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_canonical_form_is_independent_of_the_coset_element(n):
    for cell in enumerate_orthocells(n):
        for u in coset_elements(cell):
            assert make_cell(n, list(reversed(cell.roots)), u) == cell, (cell, u)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_subcells_of_monogressive_cells_are_monogressive(n):
    for cell in enumerate_monogressive(n):
        for sub in subcells(cell):
            assert is_monogressive(sub), (cell, sub)

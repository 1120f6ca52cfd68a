"""Tests for W^{ijk} and the braid relation of the R-maps."""

import pytest
from deal import PreContractError

from qflag.core.braid import (
    braid_sides,
    check_cyclic,
    cyclic_submodule,
    verify_braid,
    w_submodule,
)
from qflag.core.errors import NotInSpanError
from qflag.core.uqrep import TensorVector, highest_vector

SL3_TRIPLES = [(i, j, k) for i in (1, 2) for j in (1, 2) for k in (1, 2)]
SL4_TRIPLES = [(i, j, k) for i in (1, 2, 3) for j in (1, 2, 3) for k in (1, 2, 3)]


@pytest.mark.parametrize(("n", "levels", "dim"), [(2, (1, 1, 1), 4), (3, (1, 1, 1), 10)])
def test_w_submodule_is_the_symmetric_cube(n, levels, dim):
    assert len(w_submodule(n, *levels)) == dim
    assert len(cyclic_submodule(n, levels)) == dim


def test_w_submodule_dimension_for_mixed_levels():
    assert len(w_submodule(3, 1, 2, 1)) == 15
    assert len(cyclic_submodule(3, (1, 2, 1))) == 15


def test_cyclic_module_starts_at_the_highest_vector():
    basis = cyclic_submodule(3, (1, 2, 1))
    assert basis[0] == highest_vector((1, 2, 1))


@pytest.mark.parametrize(("i", "j", "k"), SL3_TRIPLES)
def test_braid_relation_for_sl3(i, j, k):
    report = verify_braid(3, i, j, k)
    assert report.passed, report.failures[:5]
    assert report.checked == len(w_submodule(3, k, j, i))


@pytest.mark.parametrize("levels", SL3_TRIPLES)
def test_cyclic_generation_for_sl3(levels):
    assert check_cyclic(3, levels).passed


@pytest.mark.slow
@pytest.mark.parametrize(("i", "j", "k"), SL4_TRIPLES)
def test_braid_relation_for_sl4(i, j, k):
    assert verify_braid(4, i, j, k).passed


def test_braid_levels_must_be_nontrivial():
    with pytest.raises(PreContractError):
        verify_braid(3, 0, 1, 1)


def test_flips_on_equal_levels_check_span_membership():
    outside = TensorVector.basis((1, 1, 1), ((1,), (2,), (1,)))
    with pytest.raises(NotInSpanError):
        braid_sides(3, outside)


@pytest.mark.parametrize("levels", [(1, 2, 1), (2, 1, 2), (1, 1, 2)])
def test_braid_sides_agree_for_repeated_levels(levels):
    for v in w_submodule(3, *levels):
        (left, dl), (right, dr) = braid_sides(3, v)
        assert left.scale(dr) == right.scale(dl)

"""Tests for fraction-free elimination over the Laurent ring and the rationals."""

import random
from fractions import Fraction as F

import pytest

from qflag.core.errors import DependentBasisError
from qflag.core.linalg import Echelon, express, kernel_basis, primitive, span_rank
from qflag.core.scalars import ONE, Q, ZERO, LaurentScalar, lp_gcd


def _dot(row, x):
    total = ZERO if hasattr(row[0], "terms") else F(0)
    for a, b in zip(row, x):
        total = total + a * b
    return total


def test_rank_over_rationals():
    assert span_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert span_rank([[F(1), F(0), F(1)], [F(0), F(1), F(1)], [F(1), F(1), F(2)]]) == 2


def test_rank_over_laurent_ring():
    assert span_rank([[ONE, Q], [Q, ONE]]) == 2
    assert span_rank([[ONE, Q], [Q, Q * Q]]) == 1


def test_express_over_rationals():
    assert express([F(2), F(3)], [[F(1), F(0)], [F(1), F(1)]]) == [F(-1), F(3)]
    assert express([F(0), F(1)], [[F(1), F(0)]]) is None


def test_express_over_laurent_ring():
    coords = express([ONE + Q, ONE + Q], [[ONE, Q], [Q, ONE]])
    assert [c.as_laurent() for c in coords] == [ONE, ONE]


def test_express_needs_independent_basis():
    echelon = Echelon.build([[F(1), F(0)], [F(2), F(0)]])
    assert not echelon.independent
    with pytest.raises(DependentBasisError):
        echelon.express([F(1), F(0)])


def test_membership():
    echelon = Echelon.build([[ONE, Q, ZERO], [ZERO, ONE, Q]])
    assert echelon.rank == 2
    assert echelon.contains([ONE, Q + ONE, Q])
    assert not echelon.contains([ZERO, ZERO, ONE])


def test_kernel_of_zero_matrix_is_everything():
    assert kernel_basis([[F(0), F(0)]], 2, F(1)) == [[F(1), F(0)], [F(0), F(1)]]


def test_kernel_vectors_are_annihilated_and_primitive():
    rows = [[ONE, Q, Q * Q]]
    basis = kernel_basis(rows, 3, ONE)
    assert len(basis) == 2
    for x in basis:
        assert not _dot(rows[0], x)
        nonzero = [e for e in x if e]
        g = ZERO
        for e in nonzero:
            g = lp_gcd(g, e)
        assert g == ONE


def test_kernel_dimension_matches_rank():
    rows = [[ONE, Q, ONE, ZERO], [Q, ONE, ZERO, ONE]]
    basis = kernel_basis(rows, 4, ONE)
    assert len(basis) == 4 - span_rank(rows)
    for x in basis:
        assert all(not _dot(row, x) for row in rows)


def test_primitive_strips_content():
    assert primitive([Q * Q + Q, 2 * Q]) == [Q + 1, 2 * ONE]
    assert primitive([F(2), F(4)]) == [F(2), F(4)]


def _random_laurent(rng):
    return LaurentScalar.from_ascending(
        [F(rng.randint(-3, 3)) for _ in range(rng.randint(1, 3))], offset=rng.randint(-1, 1)
    )


def _unitriangular_basis(rng, size, width, entry, one, zero):
    basis = []
    for k in range(size):
        row = [zero] * width
        row[k] = one
        for c in range(k + 1, width):
            row[c] = entry(rng)
        basis.append(row)
    return basis


def _combine(coefficients, basis, zero):
    out = [zero] * len(basis[0])
    for c, b in zip(coefficients, basis):
        out = [x + c * y for x, y in zip(out, b)]
    return out


@pytest.mark.parametrize("seed", range(15))
def test_express_recovers_rational_coefficients(seed):
    rng = random.Random(seed)
    basis = _unitriangular_basis(rng, 3, 5, lambda r: F(r.randint(-4, 4)), F(1), F(0))
    # Shuffle rows so elimination has work to do.
    rng.shuffle(basis)
    coefficients = [F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in basis]
    assert express(_combine(coefficients, basis, F(0)), basis) == coefficients


@pytest.mark.parametrize("seed", range(15))
def test_express_recovers_laurent_coefficients(seed):
    rng = random.Random(seed)
    basis = _unitriangular_basis(rng, 3, 4, _random_laurent, ONE, ZERO)
    rng.shuffle(basis)
    coefficients = [_random_laurent(rng) for _ in basis]
    coordinates = express(_combine(coefficients, basis, ZERO), basis)
    assert [c.as_laurent() for c in coordinates] == coefficients

"""
Exact linear algebra by fraction-free Gauss-Jordan elimination.

Vectors are dense sequences of ring elements. The same code runs over the
Laurent ring (LaurentScalar, exact division) and over the rationals
(Fraction), since both support ``+ - *`` and exact ``/``.

After elimination every pivot row carries the same pivot value ``det`` and
zeros in all other pivot columns; the optional transform block records
how each pivot row is built from the input rows.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any

from deal import post, pre

from qflag.core.errors import DependentBasisError
from qflag.core.scalars import ZERO, LaurentFraction, LaurentScalar, lp_gcd, q_power

Entry = Any  # LaurentScalar or Fraction
Vector = Sequence[Entry]


def _support_size(x: Entry) -> int:
    return len(x.terms) if isinstance(x, LaurentScalar) else 1


def _zero_like(x: Entry) -> Entry:
    return x - x


def _one_like(x: Entry) -> Entry:
    if isinstance(x, LaurentScalar):
        return LaurentScalar.constant(1)
    return Fraction(1)


@dataclass
class _Reduction:
    rows: list[list[Entry]]
    pivots: list[tuple[int, int]]  # (row index, column), in column order
    det: Entry | None


def _reduce(rows: list[list[Entry]], search_width: int) -> _Reduction:
    """Fraction-free Gauss-Jordan over the first ``search_width`` columns."""
    m = [list(r) for r in rows]
    pivots: list[tuple[int, int]] = []
    used: set[int] = set()
    prev: Entry | None = None
    for col in range(search_width):
        if len(used) == len(m):
            break
        candidates = [r for r in range(len(m)) if r not in used and m[r][col]]
        if not candidates:
            continue
        r = min(candidates, key=lambda k: (_support_size(m[k][col]), k))
        p = m[r][col]
        pivot_row = m[r]
        for k in range(len(m)):
            if k == r:
                continue
            a = m[k][col]
            if prev is None:
                m[k] = [p * x - a * y for x, y in zip(m[k], pivot_row)] if a else [p * x for x in m[k]]
            elif a:
                m[k] = [(p * x - a * y) / prev for x, y in zip(m[k], pivot_row)]
            elif p != prev:
                m[k] = [(p * x) / prev for x in m[k]]
        prev = p
        used.add(r)
        pivots.append((r, col))
    return _Reduction(m, pivots, prev)


@post(lambda result: result >= 0)
def span_rank(vectors: Sequence[Vector]) -> int:
    """
    Rank over the fraction field.

    >>> from qflag.core.scalars import Q, ONE, ZERO
    >>> span_rank([[ONE, ZERO], [ZERO, ONE]])
    2
    >>> span_rank([[ONE, Q], [Q, Q * Q]])
    1
    >>> span_rank([])
    0
    """
    if not vectors:
        return 0
    return len(_reduce([list(v) for v in vectors], len(vectors[0])).pivots)


@dataclass(frozen=True)
class Echelon:
    """Reduced form of a list of basis (or spanning) vectors, ready for membership tests."""

    width: int
    count: int
    rows: tuple[tuple[Entry, ...], ...]  # pivot rows, sorted by pivot column
    pivots: tuple[int, ...]
    transform: tuple[tuple[Entry, ...], ...]  # transform[k] @ basis == rows[k]
    det: Entry | None

    @classmethod
    def build(cls, vectors: Sequence[Vector], width: int | None = None) -> Echelon:
        vectors = [list(v) for v in vectors]
        if not vectors:
            return cls(width or 0, 0, (), (), (), None)
        width = len(vectors[0]) if width is None else width
        zero, one = _zero_like(vectors[0][0]), _one_like(vectors[0][0])
        m = len(vectors)
        augmented = [v + [one if c == r else zero for c in range(m)] for r, v in enumerate(vectors)]
        red = _reduce(augmented, width)
        rows = tuple(tuple(red.rows[r][:width]) for r, _ in red.pivots)
        transform = tuple(tuple(red.rows[r][width:]) for r, _ in red.pivots)
        pivots = tuple(c for _, c in red.pivots)
        return cls(width, m, rows, pivots, transform, red.det)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def independent(self) -> bool:
        return self.rank == self.count

    def residual(self, v: Vector) -> list[Entry]:
        """det·v minus its projection; zero iff v lies in the span."""
        if self.det is None:
            return list(v)
        out = [self.det * x for x in v]
        for row, col in zip(self.rows, self.pivots):
            c = v[col]
            if c:
                out = [x - c * y for x, y in zip(out, row)]
        return out

    def contains(self, v: Vector) -> bool:
        return not any(self.residual(v))

    def scaled_coordinates(self, v: Vector) -> tuple[list[Entry], Entry] | None:
        """(N, det) with v = Σ_l (N_l / det)·basis_l, or None outside the span."""
        if not self.independent:
            raise DependentBasisError(
                f"basis of {self.count} vectors has rank {self.rank}"
            )
        if not self.contains(v):
            return None
        if self.det is None:
            return [], None
        zero = _zero_like(self.det)
        numerators = [zero] * self.count
        for a_row, col in zip(self.transform, self.pivots):
            c = v[col]
            if c:
                numerators = [n + c * a for n, a in zip(numerators, a_row)]
        return numerators, self.det

    def express(self, v: Vector) -> list[Any] | None:
        """
        Coordinates of v in the basis, in lowest terms.

        LaurentFraction entries over the Laurent ring, Fraction over the rationals.

        >>> from qflag.core.scalars import Q, ONE, ZERO
        >>> [str(c) for c in Echelon.build([[ONE, Q]]).express([Q, Q * Q])]
        ['q']
        >>> Echelon.build([[ZERO, ONE]]).express([ONE, ZERO]) is None
        True
        """
        scaled = self.scaled_coordinates(v)
        if scaled is None:
            return None
        numerators, det = scaled
        if isinstance(det, LaurentScalar):
            return [LaurentFraction.reduced(n, det) for n in numerators]
        return [n / det for n in numerators]


@pre(lambda v, basis: all(len(b) == len(v) for b in basis))
def express(v: Vector, basis: Sequence[Vector]) -> list[Any] | None:
    """
    One-shot coordinates of v in ``basis``; None when v is outside the span.

    >>> from qflag.core.scalars import Q, ONE, ZERO
    >>> [str(c) for c in express([ZERO, ZERO], [[ONE, Q]])]
    ['0']
    """
    return Echelon.build(basis, len(v)).express(v)


def kernel_basis(rows: Sequence[Vector], width: int, one: Entry) -> list[list[Entry]]:
    """
    Basis of {x : M·x = 0} for the matrix with the given rows.

    Each vector has ``det`` at its free column and ``-R[k][f]`` at the pivot
    columns, reduced to a primitive vector over the Laurent ring.

    >>> from fractions import Fraction as F
    >>> kernel_basis([[F(1), F(1)]], 2, F(1))
    [[Fraction(-1, 1), Fraction(1, 1)]]
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return identity_basis(width, one)
    red = _reduce(rows, width)
    pivot_rows = {c: red.rows[r] for r, c in red.pivots}
    zero = _zero_like(rows[0][0])
    basis: list[list[Entry]] = []
    for free in range(width):
        if free in pivot_rows:
            continue
        x = [zero] * width
        x[free] = red.det
        for col, row in pivot_rows.items():
            x[col] = -row[free]
        basis.append(primitive(x))
    return basis


def identity_basis(width: int, one: Entry) -> list[list[Entry]]:
    zero = _zero_like(one)
    return [[one if c == r else zero for c in range(width)] for r in range(width)]


def primitive(vector: list[Entry]) -> list[Entry]:
    """
    Strip the content of a Laurent vector: divide by the gcd of its entries
    and by the lowest common power of q. Rational vectors come back unchanged.
    """
    nonzero = [x for x in vector if x]
    if not nonzero or not isinstance(nonzero[0], LaurentScalar):
        return vector
    g = reduce(lp_gcd, nonzero, ZERO)
    shift = min(x.min_exponent for x in nonzero)
    unit = g * q_power(shift)
    return [x / unit for x in vector]


def normalize_leading(vector: list[Entry]) -> list[Entry]:
    """Scale so the first nonzero entry is 1, when that entry is a unit."""
    lead = next((x for x in vector if x), None)
    if lead is None:
        return vector
    if isinstance(lead, LaurentScalar):
        if lead.is_monomial:
            return [x / lead for x in vector]
        return [x / LaurentScalar.constant(lead.terms[-1][1]) for x in vector]
    return [x / lead for x in vector]

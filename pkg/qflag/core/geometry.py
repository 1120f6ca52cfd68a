"""
Points of E(C) and their images: Plücker vectors, the automorphisms σ_i as
coordinate scalings, Segre pairs, and sampled membership in V^{ij}.

All coordinates are exact rationals; q is specialized to a rational q0 that
is neither 0 nor ±1.
"""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from deal import pre

from qflag.core.flagbasis import _cell_vector, annihilator, block_keys, pair_dual, span_basis, split_by_weight
from qflag.core.linalg import Echelon
from qflag.core.orthocell import (
    Orthocell,
    effective_indices,
    enumerate_monogressive,
    subsets,
)
from qflag.core.outcome import CheckReport
from qflag.core.uqrep import TensorVector, signed_basis
from qflag.core.weyl import PositiveRoot, multiply, pairing

Coordinate = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class QValue:
    """Rational specialization of q; never a root of unity."""

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value in (0, 1, -1):
            raise ValueError(f"q0 = {self.value} is 0 or a root of unity")

    @classmethod
    def parse(cls, text: str) -> QValue:
        return cls(Fraction(text))

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class CellPoint:
    """Point of E(C) in homogeneous coordinates (x_k : y_k), one pair per root."""

    cell: Orthocell
    coords: tuple[Coordinate, ...]

    def __post_init__(self) -> None:
        coords = tuple((Fraction(x), Fraction(y)) for x, y in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.cell.rank:
            raise ValueError(f"{self.cell} needs {self.cell.rank} coordinate pairs")
        if any(x == 0 and y == 0 for x, y in coords):
            raise ValueError("a homogeneous coordinate pair cannot be (0:0)")

    def to_dict(self) -> dict[str, Any]:
        return {"cell": self.cell.to_dict(), "coords": [[str(x), str(y)] for x, y in self.coords]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CellPoint:
        return cls(
            Orthocell.from_dict(data["cell"]),
            tuple((Fraction(x), Fraction(y)) for x, y in data["coords"]),
        )


def _product(values: Sequence[Fraction]) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def pluecker(p: CellPoint, i: int) -> TensorVector:
    """
    Σ_{L ⊆ eff_i} x_L̄ y_L e^i_{s_L w}, with L̄ the complement of L in eff_i.

    >>> from qflag.core.orthocell import make_cell
    >>> from qflag.core.weyl import PositiveRoot
    >>> cell = make_cell(2, [PositiveRoot(1, 2)], (1, 2))
    >>> str(pluecker(CellPoint(cell, ((3, 5),)), 1))
    '(3)·e_1 + (5)·e_2'
    """
    cell = p.cell
    eff = effective_indices(cell, i)
    total = TensorVector((i,))
    for sub in subsets(len(eff)):
        chosen = [eff[k] for k in sub]
        others = [k for k in eff if k not in chosen]
        coeff = _product([p.coords[k][0] for k in others]) * _product(
            [p.coords[k][1] for k in chosen]
        )
        if not coeff:
            continue
        indices, sign = signed_basis(cell.element(chosen), i)
        total = total + TensorVector((i,), {(indices,): coeff * sign})
    return total


def sigma(p: CellPoint, i: int, q: QValue) -> CellPoint:
    """(x_k : y_k) ↦ (x_k : q0·y_k) on the roots that move wω_i."""
    eff = set(effective_indices(p.cell, i))
    return CellPoint(
        p.cell,
        tuple((x, y * q.value) if k in eff else (x, y) for k, (x, y) in enumerate(p.coords)),
    )


def segre_pair(p: CellPoint, i: int, j: int, q: QValue) -> TensorVector:
    """Pl^i(p) ⊗ Pl^j(σ_i p)."""
    return pluecker(p, i).tensor(pluecker(sigma(p, i, q), j))


def _block_sign(roots: Sequence[PositiveRoot], members: set[int]) -> int:
    """(−1) to the number of roots with both ends in ``members``."""
    count = sum(1 for r in roots if r.a in members and r.b in members)
    return -1 if count % 2 else 1


def imagep_expansion(p: CellPoint, i: int, j: int, q: QValue) -> TensorVector:
    """
    The Segre image written as a combination of e-vectors of subcells:
    Σ q0^{|J|} x²_{rest} x_I y_I y²_J (x or y on one-sided roots) · e(α_I; s_J s_L′ s_M′ w).

    Roots effective for only one level contribute a reflection inside the
    other factor's block; the sign tracks those swaps.
    """
    cell, q0 = p.cell, q.value
    eff_i, eff_j = set(effective_indices(cell, i)), set(effective_indices(cell, j))
    both = sorted(eff_i & eff_j)
    i_only = sorted(eff_i - eff_j)
    j_only = sorted(eff_j - eff_i)
    s_i, t_j = set(cell.w[:i]), set(cell.w[:j])
    x = [c[0] for c in p.coords]
    y = [c[1] for c in p.coords]
    total = TensorVector((i, j))
    for mask in range(3 ** len(both)):
        tags, m = [], mask
        for _ in both:
            tags.append(m % 3)  # 0: neither, 1: in I, 2: in J
            m //= 3
        part_i = [k for k, t in zip(both, tags) if t == 1]
        part_j = [k for k, t in zip(both, tags) if t == 2]
        rest = [k for k, t in zip(both, tags) if t == 0]
        base = (
            q0 ** len(part_j)
            * _product([x[k] ** 2 for k in rest])
            * _product([x[k] * y[k] for k in part_i])
            * _product([y[k] ** 2 for k in part_j])
        )
        if not base:
            continue
        for sub_l in subsets(len(i_only)):
            l_prime = [i_only[k] for k in sub_l]
            coeff_l = _product([y[k] if k in l_prime else x[k] for k in i_only])
            if not coeff_l:
                continue
            for sub_m in subsets(len(j_only)):
                m_prime = [j_only[k] for k in sub_m]
                coeff = base * coeff_l * _product([y[k] if k in m_prime else x[k] for k in j_only])
                if not coeff:
                    continue
                sign = _block_sign([cell.roots[k] for k in m_prime], s_i) * _block_sign(
                    [cell.roots[k] for k in l_prime], t_j
                )
                u = multiply([cell.roots[k] for k in part_j + l_prime + m_prime], cell.w)
                vec = _cell_vector(cell.n, [cell.roots[k] for k in part_i], u, i, j)
                total = total + vec.evaluate(q0).scale(coeff * sign)
    return total


@lru_cache(maxsize=64)
def _rational_blocks(n: int, i: int, j: int, q0: Fraction) -> dict[tuple[int, ...], tuple[list, Echelon]]:
    basis = span_basis(n, i, j)
    keyed = block_keys(n, (i, j))
    out = {}
    for weight, block in basis.blocks.items():
        keys = keyed[weight]
        rows = [
            basis.vectors[m].evaluate(q0).coordinates(keys, Fraction(0)) for m in block.members
        ]
        out[weight] = (keys, Echelon.build(rows, len(keys)))
    return out


def in_evaluated_span(v: TensorVector, n: int, i: int, j: int, q: QValue) -> bool:
    """Exact membership of a rational vector in the e-span specialized at q0."""
    blocks = _rational_blocks(n, i, j, q.value)
    for weight, part in split_by_weight(v, n).items():
        if weight not in blocks:
            return False
        keys, echelon = blocks[weight]
        if not echelon.contains(part.coordinates(keys, Fraction(0))):
            return False
    return True


def sample_point(cell: Orthocell, rng: random.Random) -> CellPoint:
    """Integer coordinates in [−9, 9], (0, 0) rejected."""
    coords = []
    for _ in range(cell.rank):
        while True:
            x, y = rng.randint(-9, 9), rng.randint(-9, 9)
            if x or y:
                break
        coords.append((Fraction(x), Fraction(y)))
    return CellPoint(cell, tuple(coords))


@pre(lambda n, i, j, samples, seed, q, with_relations=True: samples >= 1 and 1 <= i < n and 1 <= j < n)
def check_spanned(
    n: int, i: int, j: int, samples: int, seed: int, q: QValue, with_relations: bool = True
) -> CheckReport:
    """
    Sampled Segre images of every monogressive cell lie in V^{ij} at q0, agree
    with their subcell expansion, and are killed by every type I relation.
    """
    report = CheckReport(f"spanned n={n} ij={i}{j} q0={q}")
    relations = (
        [rel.evaluate(q.value) for rel in annihilator(n, i, j)] if with_relations else []
    )
    for idx, cell in enumerate(enumerate_monogressive(n)):
        rng = random.Random(seed * 1_000_003 + idx)
        for sample in range(samples if cell.rank else 1):
            p = sample_point(cell, rng)
            image = segre_pair(p, i, j, q)
            label = f"{cell} sample {sample} {[tuple(map(str, c)) for c in p.coords]}"
            report.tick(in_evaluated_span(image, n, i, j, q), f"{label}: outside the span")
            report.tick(imagep_expansion(p, i, j, q) == image, f"{label}: expansion differs")
            for r, rel in enumerate(relations):
                report.tick(not pair_dual(rel, image), f"{label}: relation {r} does not vanish")
    return report


def component_ratios(q: QValue) -> Counter[tuple[Fraction, Fraction]]:
    """
    (σ_1, σ_2) scaling factors on the eight rank-1 components for n = 3.

    >>> sorted(component_ratios(QValue(2)).items())
    [((Fraction(1, 1), Fraction(2, 1)), 3), ((Fraction(2, 1), Fraction(1, 1)), 3), ((Fraction(2, 1), Fraction(2, 1)), 2)]
    """
    ratios: Counter[tuple[Fraction, Fraction]] = Counter()
    for cell in enumerate_monogressive(3, 1):
        factors = tuple(
            q.value if effective_indices(cell, level) else Fraction(1) for level in (1, 2)
        )
        ratios[factors] += 1
    return ratios


def gluing_check(cell: Orthocell, i: int) -> CheckReport:
    """
    For every subcell C(s_L w; α′...), pairing(s_L w, i, α′) = pairing(w, i, α′).

    >>> from qflag.core.orthocell import make_cell
    >>> from qflag.core.weyl import PositiveRoot
    >>> gluing_check(make_cell(4, [PositiveRoot(1, 2), PositiveRoot(3, 4)], (1, 2, 3, 4)), 1).passed
    True
    """
    report = CheckReport(f"gluing {cell} i={i}")
    for sub in subsets(cell.rank):
        base = cell.element(sub)
        retained = [r for k, r in enumerate(cell.roots) if k not in sub]
        for root in retained:
            report.tick(
                pairing(base, i, root) == pairing(cell.w, i, root),
                f"root {tuple(root)} at base {base}",
            )
    return report

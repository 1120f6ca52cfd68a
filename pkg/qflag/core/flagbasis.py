"""
The vectors e_C^{ij}, the submodules V^{ij} they span, closure under
U_q(sl_n), the R-maps V^{ji} → V^{ij} and the quadratic relations.

All spans are handled one weight block at a time: every tensor basis element
and every e_C^{ij} is a weight vector, so membership and coordinates split
over weights.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any

from deal import pre

from qflag.core.errors import CellError, NotInSpanError, RankDeficiencyError
from qflag.core.linalg import Echelon, kernel_basis, normalize_leading, primitive
from qflag.core.orthocell import (
    Orthocell,
    dim_formula,
    enumerate_effective,
    enumerate_monogressive,
    ij_normalize,
    is_ij_effective,
    is_monogressive,
    subsets,
)
from qflag.core.outcome import CheckReport
from qflag.core.scalars import ONE, ZERO, LaurentFraction, LaurentScalar, lp_exact_div, lp_gcd, q_power
from qflag.core.uqrep import (
    BasisKey,
    Generator,
    GeneratorKind,
    TensorVector,
    act_tensor,
    generators,
    module_dimension,
    pure_tensor,
    tensor_basis,
    weight_blocks,
    weight_of,
)
from qflag.core.weyl import Permutation, PositiveRoot, multiply, pairing, root_pairing, simple_root

Weight = tuple[int, ...]


def _cell_vector(
    n: int, roots: Sequence[PositiveRoot], w: Permutation, i: int, j: int
) -> TensorVector:
    """Σ_L q^{|L|} e^i_{s_L̄ w} ⊗ e^j_{s_L w}, with no validation of the cell."""
    d = len(roots)
    total = TensorVector((i, j))
    for sub in subsets(d):
        chosen = [roots[k] for k in sub]
        rest = [roots[k] for k in range(d) if k not in sub]
        term = pure_tensor([multiply(rest, w), multiply(chosen, w)], (i, j))
        total = total + term.scale(q_power(len(sub)))
    return total


def cell_vector(cell: Orthocell, i: int, j: int) -> TensorVector:
    return _cell_vector(cell.n, cell.roots, cell.w, i, j)


@dataclass(frozen=True)
class FlagBasisVector:
    cell: Orthocell
    levels: tuple[int, int]
    vector: TensorVector

    def to_dict(self) -> dict[str, Any]:
        return {
            "cell": self.cell.to_dict(),
            "levels": list(self.levels),
            "vector": self.vector.to_dict(),
        }


def e_vector(cell: Orthocell, i: int, j: int) -> FlagBasisVector:
    """
    e_C^{ij} for a monogressive ij-effective cell.

    >>> from qflag.core.orthocell import make_cell
    >>> from qflag.core.weyl import PositiveRoot
    >>> str(e_vector(make_cell(2, [PositiveRoot(1, 2)], (1, 2)), 1, 1).vector)
    '(q)·e_1⊗e_2 + (1)·e_2⊗e_1'
    """
    if not is_monogressive(cell):
        raise CellError(f"{cell} is not monogressive")
    if not (1 <= i < cell.n and 1 <= j < cell.n and is_ij_effective(cell, i, j)):
        raise CellError(f"{cell} is not {i}{j}-effective")
    return FlagBasisVector(cell, (i, j), cell_vector(cell, i, j))


@lru_cache(maxsize=64)
def block_keys(n: int, levels: tuple[int, ...]) -> dict[Weight, list[BasisKey]]:
    """Tensor basis keys of V^{i_1} ⊗ ... grouped by weight."""
    return dict(weight_blocks(tensor_basis(n, levels), n))


def vector_weight(v: TensorVector, n: int) -> Weight:
    weights = {weight_of(key, n) for key in v.terms}
    if len(weights) != 1:
        raise ValueError("not a weight vector")
    return weights.pop()


def split_by_weight(v: TensorVector, n: int) -> dict[Weight, TensorVector]:
    parts: dict[Weight, dict[BasisKey, Any]] = {}
    for key, coeff in v.terms.items():
        parts.setdefault(weight_of(key, n), {})[key] = coeff
    return {wt: TensorVector(v.levels, terms) for wt, terms in parts.items()}


@dataclass(frozen=True)
class _Block:
    keys: list[BasisKey]
    members: tuple[int, ...]  # indices into SpanBasis.cells
    echelon: Echelon


@dataclass(frozen=True)
class SpanBasis:
    """The e_C^{ij} over the normal monogressive ij-effective cells."""

    n: int
    levels: tuple[int, int]
    cells: tuple[Orthocell, ...]
    vectors: tuple[TensorVector, ...] = field(repr=False)

    @cached_property
    def blocks(self) -> dict[Weight, _Block]:
        keyed = block_keys(self.n, self.levels)
        grouped: dict[Weight, list[int]] = {}
        for idx, vec in enumerate(self.vectors):
            grouped.setdefault(vector_weight(vec, self.n), []).append(idx)
        out = {}
        for weight, members in grouped.items():
            keys = keyed[weight]
            rows = [self.vectors[m].coordinates(keys, ZERO) for m in members]
            out[weight] = _Block(keys, tuple(members), Echelon.build(rows, len(keys)))
        return out

    @property
    def rank(self) -> int:
        return sum(b.echelon.rank for b in self.blocks.values())

    def _parts(self, v: TensorVector) -> dict[Weight, TensorVector] | None:
        parts = split_by_weight(v, self.n)
        if any(weight not in self.blocks for weight in parts):
            return None
        return parts

    def contains(self, v: TensorVector) -> bool:
        parts = self._parts(v)
        if parts is None:
            return False
        return all(
            self.blocks[wt].echelon.contains(part.coordinates(self.blocks[wt].keys, ZERO))
            for wt, part in parts.items()
        )

    def scaled_coordinates(
        self, v: TensorVector
    ) -> list[tuple[tuple[int, ...], list[LaurentScalar], LaurentScalar]] | None:
        """Per weight block: (cell indices, numerators, det); None outside the span."""
        parts = self._parts(v)
        if parts is None:
            return None
        out = []
        for wt, part in sorted(parts.items()):
            block = self.blocks[wt]
            scaled = block.echelon.scaled_coordinates(part.coordinates(block.keys, ZERO))
            if scaled is None:
                return None
            numerators, det = scaled
            out.append((block.members, numerators, det))
        return out

    def express(self, v: TensorVector) -> list[LaurentFraction] | None:
        """Coordinates of v in the e-basis, cell by cell, in lowest terms."""
        scaled = self.scaled_coordinates(v)
        if scaled is None:
            return None
        coeffs = [LaurentFraction.of(ZERO)] * len(self.cells)
        for members, numerators, det in scaled:
            for m, num in zip(members, numerators):
                coeffs[m] = LaurentFraction.reduced(num, det)
        return coeffs


@lru_cache(maxsize=64)
def span_basis(n: int, i: int, j: int) -> SpanBasis:
    """
    >>> span_basis(2, 1, 1).rank
    3
    """
    cells = tuple(enumerate_effective(n, i, j))
    basis = SpanBasis(n, (i, j), cells, tuple(cell_vector(c, i, j) for c in cells))
    expected = dim_formula(n, i, j)
    if len(cells) != expected or basis.rank != expected:
        raise RankDeficiencyError(
            f"V^{{{i}{j}}} for n={n}: {len(cells)} cells of rank {basis.rank}, expected {expected}"
        )
    return basis


@pre(lambda n, i, j: 1 <= i <= n - 1 and 1 <= j <= n - 1)
def check_closure(n: int, i: int, j: int) -> CheckReport:
    """Every generator maps every e_C^{ij} into the span, with Laurent coefficients."""
    basis = span_basis(n, i, j)
    report = CheckReport(f"closure n={n} ij={i}{j}")
    for g in generators(n):
        for cell, vec in zip(basis.cells, basis.vectors):
            coeffs = basis.express(act_tensor(g, vec, n))
            if coeffs is None:
                report.fail(f"{g}·e_{cell} leaves V^{i}{j}")
            else:
                report.tick(
                    all(c.is_laurent for c in coeffs),
                    f"{g}·e_{cell} needs non-Laurent coefficients",
                )
    return report


def k_exponent_formula(cell: Orthocell, i: int, j: int, c: int) -> int:
    """(w(ω_i+ω_j)|β) − Σ_k (α_k|β)."""
    beta = simple_root(c)
    return (
        pairing(cell.w, i, beta)
        + pairing(cell.w, j, beta)
        - sum(root_pairing(alpha, beta) for alpha in cell.roots)
    )


def k_eigen_check(cell: Orthocell, i: int, j: int, c: int) -> bool:
    """
    >>> from qflag.core.orthocell import make_cell
    >>> from qflag.core.weyl import PositiveRoot
    >>> k_eigen_check(make_cell(2, [PositiveRoot(1, 2)], (1, 2)), 1, 1, 1)
    True
    """
    vec = e_vector(cell, i, j).vector
    expected = vec.scale(q_power(k_exponent_formula(cell, i, j, c)))
    return act_tensor(Generator(GeneratorKind.K, c), vec, cell.n) == expected


@pre(lambda n, i, j: 1 <= i <= n - 1 and 1 <= j <= n - 1)
def check_k_eigen(n: int, i: int, j: int) -> CheckReport:
    report = CheckReport(f"k-eigen n={n} ij={i}{j}")
    for cell in span_basis(n, i, j).cells:
        for c in range(1, n):
            report.tick(k_eigen_check(cell, i, j, c), f"K_{c} on e_{cell}")
    return report


def _lcm(a: LaurentScalar, b: LaurentScalar) -> LaurentScalar:
    return lp_exact_div(a * b, lp_gcd(a, b))


def _normalize_den(den: LaurentScalar) -> tuple[LaurentScalar, LaurentScalar]:
    """Split den = unit · monic part; returns (unit, monic part)."""
    unit = LaurentScalar.monomial(den.min_exponent, den.terms[-1][1])
    return unit, lp_exact_div(den, unit)


def r_map_scaled(n: int, i: int, j: int, v: TensorVector) -> tuple[TensorVector, LaurentScalar]:
    """
    R^{ji}(v) as (numerator, denominator) with a monic denominator.

    Raises NotInSpanError when v is outside V^{ji}.
    """
    source = span_basis(n, j, i)
    scaled = source.scaled_coordinates(v)
    if scaled is None:
        raise NotInSpanError(f"vector is not in V^{{{j}{i}}} for n={n}")
    if i == j:
        return v, ONE
    target = span_basis(n, i, j)
    parts: list[tuple[TensorVector, LaurentScalar]] = []
    for members, numerators, det in scaled:
        unit, monic = _normalize_den(det)
        image = TensorVector((i, j))
        for m, num in zip(members, numerators):
            if num:
                image = image + target.vectors[m].scale(lp_exact_div(num, unit))
        if not image:
            continue
        g = _content_gcd(image, monic)
        if g != ONE:
            image = image.divide_exact(g)
            monic = lp_exact_div(monic, g)
        parts.append((image, monic))
    return combine_scaled((i, j), parts)


def _content_gcd(v: TensorVector, den: LaurentScalar) -> LaurentScalar:
    g = den
    for coeff in v.terms.values():
        g = lp_gcd(g, coeff)
        if g == ONE:
            break
    return g


def combine_scaled(
    levels: tuple[int, ...], parts: Sequence[tuple[TensorVector, LaurentScalar]]
) -> tuple[TensorVector, LaurentScalar]:
    """Σ num_k / den_k over a common (lcm) denominator."""
    common = ONE
    for _, den in parts:
        if den != ONE:
            common = _lcm(common, den)
    total = TensorVector(levels)
    for num, den in parts:
        total = total + (num if den == common else num.scale(lp_exact_div(common, den)))
    return total, common


def r_map(n: int, i: int, j: int, v: TensorVector) -> TensorVector:
    """
    The module map V^{ji} → V^{ij} with e_C^{ji} ↦ e_C^{ij}.

    >>> basis = span_basis(2, 1, 1)
    >>> r_map(2, 1, 1, basis.vectors[2]) == basis.vectors[2]
    True
    """
    num, den = r_map_scaled(n, i, j, v)
    return num if den == ONE else num.divide_exact(den)


@pre(lambda n, i, j: 1 <= i <= n - 1 and 1 <= j <= n - 1)
def verify_intertwiner(n: int, i: int, j: int) -> CheckReport:
    """r_map ∘ g = g ∘ r_map on the e^{ji} basis, for every generator g."""
    source, target = span_basis(n, j, i), span_basis(n, i, j)
    report = CheckReport(f"intertwiner n={n} ij={i}{j}")
    for cell, src, dst in zip(source.cells, source.vectors, target.vectors):
        report.tick(r_map(n, i, j, src) == dst, f"R(e_{cell}) ≠ e_{cell}")
        for g in generators(n):
            try:
                ok = r_map(n, i, j, act_tensor(g, src, n)) == act_tensor(g, dst, n)
            except NotInSpanError:
                ok = False
            report.tick(ok, f"{g} on e_{cell}")
    return report


@pre(lambda n, i, j: 1 <= i <= n - 1 and 1 <= j <= n - 1)
def check_normal_form_signs(n: int, i: int, j: int) -> CheckReport:
    """e_C^{ij} = ± e^{ij} of its normal form, and normalizing twice changes nothing."""
    report = CheckReport(f"normal-form n={n} ij={i}{j}")
    for cell in enumerate_monogressive(n):
        if not is_ij_effective(cell, i, j):
            continue
        normal = ij_normalize(cell, i, j)
        vec, ref = cell_vector(cell, i, j), cell_vector(normal, i, j)
        report.tick(vec == ref or vec == -ref, f"e_{cell} vs e_{normal}")
        report.tick(ij_normalize(normal, i, j) == normal, f"normal form of {normal} moves")
    return report


@dataclass(frozen=True)
class RelationSet:
    """Quadratic relations of the shape algebra in degree ω_i + ω_j."""

    n: int
    levels: tuple[int, int]
    type_one: tuple[TensorVector, ...]  # dual vectors annihilating V^{ij}
    type_two: tuple[tuple[LaurentScalar, ...], ...]  # R^{ji} on the e-basis, rows by source cell
    cells: tuple[Orthocell, ...]

    @property
    def type_two_is_identity(self) -> bool:
        return all(
            entry == (ONE if r == c else ZERO)
            for r, row in enumerate(self.type_two)
            for c, entry in enumerate(row)
        )

    def render(self) -> list[str]:
        return [format_relation(rel, self.n) for rel in self.type_one]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "levels": list(self.levels),
            "cells": [c.to_dict() for c in self.cells],
            "typeI": [rel.to_dict() for rel in self.type_one],
            "typeII": [[entry.to_dict() for entry in row] for row in self.type_two],
        }


def _annihilator_rows(
    basis: SpanBasis, weight: Weight, keys: list[BasisKey]
) -> list[list[LaurentScalar]]:
    block = basis.blocks.get(weight)
    if block is None:
        return []
    return [basis.vectors[m].coordinates(keys, ZERO) for m in block.members]


@lru_cache(maxsize=64)
def annihilator(n: int, i: int, j: int) -> tuple[TensorVector, ...]:
    """Basis of the dual vectors vanishing on V^{ij}, weight by weight."""
    basis = span_basis(n, i, j)
    relations = []
    for weight, keys in block_keys(n, (i, j)).items():
        rows = _annihilator_rows(basis, weight, keys)
        for x in kernel_basis(rows, len(keys), ONE):
            x = normalize_leading(primitive(x))
            relations.append(TensorVector((i, j), dict(zip(keys, x))))
    return tuple(relations)


@pre(lambda n, i, j: 1 <= i <= n - 1 and 1 <= j <= n - 1)
def quadratic_relations(n: int, i: int, j: int) -> RelationSet:
    """
    Relations of type I (annihilator of V^{ij}) and type II (matrix of R^{ji}).

    >>> quadratic_relations(2, 1, 1).render()
    ['x⊗y − q·y⊗x']
    """
    source, target = span_basis(n, j, i), span_basis(n, i, j)
    rows = []
    for src in source.vectors:
        coeffs = target.express(r_map(n, i, j, src))
        rows.append(tuple(c.as_laurent() for c in coeffs))
    return RelationSet(n, (i, j), annihilator(n, i, j), tuple(rows), target.cells)


def pair_dual(relation: TensorVector, v: TensorVector) -> Any:
    """⟨ξ, v⟩ with ⟨x_S⊗x_T, e_S′⊗e_T′⟩ = δδ; plain 0 when no basis element is shared."""
    total = None
    for key, coeff in relation.terms.items():
        other = v.terms.get(key)
        if other:
            total = coeff * other if total is None else total + coeff * other
    return 0 if total is None else total


def _factor_name(indices: tuple[int, ...], n: int) -> str:
    if n == 2 and len(indices) == 1:
        return "xy"[indices[0] - 1]
    return "x_" + ("".join(map(str, indices)) or "∅")


def format_relation(relation: TensorVector, n: int) -> str:
    """Readable form of a type I relation, e.g. ``x⊗y − q·y⊗x``."""
    pieces = []
    for key, coeff in relation.items():
        name = "⊗".join(_factor_name(s, n) for s in key)
        negative = coeff.terms[-1][1] < 0
        mag = -coeff if negative else coeff
        body = name if mag == ONE else (
            f"{mag}·{name}" if mag.is_monomial else f"({mag})·{name}"
        )
        if not pieces:
            pieces.append(f"−{body}" if negative else body)
        else:
            pieces.append(f"{'−' if negative else '+'} {body}")
    return " ".join(pieces) if pieces else "0"


@pre(lambda n, i, j: 1 <= i <= n - 1 and 1 <= j <= n - 1)
def check_relation_count(n: int, i: int, j: int) -> CheckReport:
    """dim of the type I space is dim(V^i ⊗ V^j) − D_{n;i,j}, and every relation kills every e_C."""
    report = CheckReport(f"relation-count n={n} ij={i}{j}")
    relations = annihilator(n, i, j)
    expected = module_dimension(n, (i, j)) - dim_formula(n, i, j)
    report.tick(len(relations) == expected, f"{len(relations)} type I relations, expected {expected}")
    for rel in relations:
        for cell, vec in zip(span_basis(n, i, j).cells, span_basis(n, i, j).vectors):
            report.tick(not pair_dual(rel, vec), f"relation does not vanish on e_{cell}")
    return report

"""
Triple tensor products: W^{ijk} = (V^{ij} ⊗ V^k) ∩ (V^i ⊗ V^{jk}) and the
braid relation for the R-maps restricted to it.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

from deal import pre

from qflag.core.errors import NotInSpanError
from qflag.core.flagbasis import annihilator, block_keys, combine_scaled, r_map_scaled, split_by_weight
from qflag.core.linalg import Echelon, kernel_basis
from qflag.core.outcome import CheckReport
from qflag.core.scalars import ONE, ZERO, LaurentScalar
from qflag.core.uqrep import (
    BasisKey,
    Generator,
    GeneratorKind,
    TensorVector,
    act_tensor,
    highest_vector,
    module_basis,
)

ScaledVector = tuple[TensorVector, LaurentScalar]


def _lift_relations(n: int, levels: tuple[int, int, int]) -> list[dict[BasisKey, LaurentScalar]]:
    """Dual vectors ξ ⊗ x_U and x_S ⊗ ξ′ cutting out the two subspaces."""
    i, j, k = levels
    rows: list[dict[BasisKey, LaurentScalar]] = []
    for xi in annihilator(n, i, j):
        for u in module_basis(n, k):
            rows.append({key + (u,): c for key, c in xi.terms.items()})
    for xi in annihilator(n, j, k):
        for s in module_basis(n, i):
            rows.append({(s,) + key: c for key, c in xi.terms.items()})
    return rows


@lru_cache(maxsize=128)
def w_submodule(n: int, i: int, j: int, k: int) -> tuple[TensorVector, ...]:
    """
    Basis of W^{ijk}, block by weight, as the joint kernel of both annihilators.

    >>> len(w_submodule(2, 1, 1, 1))
    4
    """
    levels = (i, j, k)
    relations = _lift_relations(n, levels)
    blocks = block_keys(n, levels)
    by_block: dict[tuple[int, ...], list[dict[BasisKey, LaurentScalar]]] = {}
    for row in relations:
        weight = next(iter(split_by_weight(TensorVector(levels, row), n)))
        by_block.setdefault(weight, []).append(row)
    basis: list[TensorVector] = []
    for weight, keys in blocks.items():
        rows = [[row.get(key, ZERO) for key in keys] for row in by_block.get(weight, [])]
        for x in kernel_basis(rows, len(keys), ONE):
            basis.append(TensorVector(levels, dict(zip(keys, x))))
    return tuple(basis)


def cyclic_submodule(n: int, levels: Sequence[int]) -> list[TensorVector]:
    """
    Basis of U_q·(e_1^{i} ⊗ e_1^{j} ⊗ ...), grown from the highest weight
    vector by the lowering operators.
    """
    levels = tuple(levels)
    start = highest_vector(levels)
    found: dict[tuple[int, ...], list[TensorVector]] = {}
    basis: list[TensorVector] = []
    queue = [start]
    lowering = [Generator(GeneratorKind.Y, c) for c in range(1, n)]
    while queue:
        v = queue.pop()
        weight = next(iter(split_by_weight(v, n)))
        keys = block_keys(n, levels)[weight]
        members = found.setdefault(weight, [])
        candidate = [members_vec.coordinates(keys, ZERO) for members_vec in members]
        if Echelon.build(candidate, len(keys)).contains(v.coordinates(keys, ZERO)):
            continue
        members.append(v)
        basis.append(v)
        for g in lowering:
            image = act_tensor(g, v, n)
            if image:
                queue.append(image)
    return basis


def _flip(n: int, position: int, scaled: ScaledVector) -> ScaledVector:
    """R on factors (position, position+1) of a triple, slice by slice."""
    num, den = scaled
    levels = num.levels
    x, y = levels[position], levels[position + 1]
    new_levels = list(levels)
    new_levels[position], new_levels[position + 1] = y, x
    new_levels = tuple(new_levels)
    other = 2 if position == 0 else 0
    slices: dict[tuple[int, ...], dict[BasisKey, LaurentScalar]] = {}
    for key, coeff in num.terms.items():
        pair = key[position : position + 2]
        slices.setdefault(key[other], {})[pair] = coeff
    parts = []
    for fixed, terms in sorted(slices.items()):
        image, d = r_map_scaled(n, y, x, TensorVector((x, y), terms))
        if position == 0:
            lifted = {pair + (fixed,): c for pair, c in image.terms.items()}
        else:
            lifted = {(fixed,) + pair: c for pair, c in image.terms.items()}
        parts.append((TensorVector(new_levels, lifted), d))
    total, common = combine_scaled(new_levels, parts)
    return total, den * common


def braid_sides(n: int, v: TensorVector) -> tuple[ScaledVector, ScaledVector]:
    """
    Both composites W^{kji} → V^i ⊗ V^j ⊗ V^k:
    flips on factors (0,1), (1,2), (0,1) against (1,2), (0,1), (1,2).
    """
    left = right = (v, ONE)
    for position in (0, 1, 0):
        left = _flip(n, position, left)
    for position in (1, 0, 1):
        right = _flip(n, position, right)
    return left, right


@pre(lambda n, i, j, k: all(1 <= x <= n - 1 for x in (i, j, k)))
def verify_braid(n: int, i: int, j: int, k: int) -> CheckReport:
    """
    Braid relation on a basis of W^{kji}. Every intermediate must lie in the
    span its R-map is defined on.

    >>> verify_braid(3, 2, 1, 1).passed
    True
    """
    report = CheckReport(f"braid n={n} ijk={i}{j}{k}")
    for idx, v in enumerate(w_submodule(n, k, j, i)):
        try:
            (left, dl), (right, dr) = braid_sides(n, v)
        except NotInSpanError as exc:
            report.fail(f"basis vector {idx}: {exc}")
            continue
        report.tick(left.scale(dr) == right.scale(dl), f"basis vector {idx}: composites differ")
    return report


def check_cyclic(n: int, levels: Sequence[int]) -> CheckReport:
    """The cyclic module of the highest weight vector has the dimension of W."""
    i, j, k = levels
    report = CheckReport(f"cyclic n={n} ijk={i}{j}{k}")
    w_dim = len(w_submodule(n, i, j, k))
    cyclic = cyclic_submodule(n, levels)
    report.tick(len(cyclic) == w_dim, f"cyclic dimension {len(cyclic)} vs W dimension {w_dim}")
    return report


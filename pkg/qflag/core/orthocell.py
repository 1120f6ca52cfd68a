"""
Orthocells of S_n.

An orthocell is the right coset ⟨s_α1, ..., s_αd⟩w of a subgroup generated by
reflections in pairwise orthogonal positive roots. Cells are stored in
canonical form: roots sorted by (b, a) and w the shortest coset element,
ties broken lexicographically.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Any

from deal import post, pre

from qflag.core.errors import CellError, OrthogonalityError
from qflag.core.weyl import (
    Permutation,
    PositiveRoot,
    all_permutations,
    are_orthogonal,
    is_permutation,
    is_valid_root,
    length,
    multiply,
    pairing,
    positive_roots,
    root_sort_key,
)


@dataclass(frozen=True, order=True)
class Orthocell:
    """Canonical orthocell C(α_1, ..., α_d; w)."""

    roots: tuple[PositiveRoot, ...]
    w: Permutation
    n: int

    @property
    def rank(self) -> int:
        return len(self.roots)

    def sort_key(self) -> tuple[tuple[PositiveRoot, ...], Permutation]:
        return (self.roots, self.w)

    def element(self, subset: Iterable[int]) -> Permutation:
        """s_L w for L a set of root indices."""
        return multiply([self.roots[k] for k in subset], self.w)

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "roots": [r.to_list() for r in self.roots], "w": list(self.w)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Orthocell:
        return make_cell(
            int(data["n"]), [PositiveRoot(*r) for r in data.get("roots", [])], tuple(data["w"])
        )

    def __str__(self) -> str:
        roots = ",".join(f"({r.a},{r.b})" for r in self.roots)
        sep = "" if self.n < 10 else ","
        return f"C({roots};[{sep.join(map(str, self.w))}])"


def subsets(d: int) -> Iterator[tuple[int, ...]]:
    """All subsets of range(d) in binary order of their bitmask."""
    for mask in range(1 << d):
        yield tuple(k for k in range(d) if mask >> k & 1)


@pre(lambda n, roots, w: len(w) == n and is_permutation(w))
def make_cell(n: int, roots: Sequence[PositiveRoot], w: Permutation) -> Orthocell:
    """
    Canonical orthocell of the coset ⟨s_roots⟩w.

    >>> make_cell(2, [PositiveRoot(1, 2)], (2, 1))
    Orthocell(roots=(PositiveRoot(a=1, b=2),), w=(1, 2), n=2)
    >>> str(make_cell(4, [PositiveRoot(3, 4), PositiveRoot(1, 2)], (1, 2, 3, 4)))
    'C((1,2),(3,4);[1234])'
    """
    roots = [PositiveRoot(*r) for r in roots]
    if len(set(roots)) != len(roots):
        raise OrthogonalityError(f"duplicate roots in {roots}")
    if not all(is_valid_root(r, n) for r in roots):
        raise OrthogonalityError(f"roots {roots} are not positive roots of SL({n})")
    if not are_orthogonal(roots):
        raise OrthogonalityError(f"roots {roots} are not pairwise orthogonal")
    ordered = tuple(sorted(roots, key=root_sort_key))
    w = tuple(w)
    best = min(
        (multiply([ordered[k] for k in sub], w) for sub in subsets(len(ordered))),
        key=lambda v: (length(v), v),
    )
    return Orthocell(ordered, best, n)


def coset_elements(cell: Orthocell) -> list[Permutation]:
    """
    s_L w for every L, indexed by L in binary order.

    >>> cell = make_cell(4, [PositiveRoot(1, 2), PositiveRoot(3, 4)], (1, 2, 3, 4))
    >>> coset_elements(cell)
    [(1, 2, 3, 4), (2, 1, 3, 4), (1, 2, 4, 3), (2, 1, 4, 3)]
    """
    return [cell.element(sub) for sub in subsets(cell.rank)]


def is_monogressive(cell: Orthocell) -> bool:
    """
    ℓ(s_L w) = ℓ(w) + |L| for every L.

    >>> is_monogressive(make_cell(3, [PositiveRoot(1, 3)], (1, 2, 3)))
    False
    """
    base = length(cell.w)
    return all(length(cell.element(sub)) == base + len(sub) for sub in subsets(cell.rank))


def is_monogressive_by_array(cell: Orthocell) -> bool:
    """
    Monogressivity read off the array of w.

    >>> is_monogressive_by_array(make_cell(4, [PositiveRoot(1, 3), PositiveRoot(2, 4)], (2, 4, 1, 3)))
    True
    """
    w = cell.w
    position = {v: p for p, v in enumerate(w)}
    partner = {}
    for root in cell.roots:
        partner[root.a] = root.b
        partner[root.b] = root.a
    for root in cell.roots:
        pa, pb = position[root.a], position[root.b]
        if pa > pb:
            return False
        for c in w[pa + 1 : pb]:
            if root.a <= c <= root.b:
                return False
            other = partner.get(c)
            if other is not None and root.a <= other <= root.b:
                return False
    return True


def effective_indices(cell: Orthocell, i: int) -> tuple[int, ...]:
    """Indices k with s_αk w ω_i ≠ w ω_i."""
    return tuple(k for k, root in enumerate(cell.roots) if pairing(cell.w, i, root) != 0)


@pre(lambda cell, i: 1 <= i <= cell.n - 1)
def is_effective(cell: Orthocell, i: int) -> bool:
    return len(effective_indices(cell, i)) == cell.rank


@pre(lambda cell, i, j: 1 <= i <= cell.n - 1 and 1 <= j <= cell.n - 1)
def is_ij_effective(cell: Orthocell, i: int, j: int) -> bool:
    """
    >>> is_ij_effective(make_cell(3, [PositiveRoot(1, 2)], (1, 3, 2)), 1, 2)
    True
    """
    return is_effective(cell, i) and is_effective(cell, j)


def orthogonal_root_sets(n: int, d: int | None = None) -> list[tuple[PositiveRoot, ...]]:
    """Sets of pairwise orthogonal positive roots (partial matchings), canonically sorted."""
    roots = positive_roots(n)
    found: list[tuple[PositiveRoot, ...]] = []

    def extend(start: int, chosen: list[PositiveRoot], used: set[int]) -> None:
        if d is None or len(chosen) == d:
            found.append(tuple(sorted(chosen, key=root_sort_key)))
            if d is not None:
                return
        for idx in range(start, len(roots)):
            root = roots[idx]
            if root.a in used or root.b in used:
                continue
            extend(idx + 1, [*chosen, root], used | {root.a, root.b})

    extend(0, [], set())
    return sorted(found)


@pre(lambda n, d=None: n >= 2 and (d is None or d >= 0))
def enumerate_monogressive(n: int, d: int | None = None) -> list[Orthocell]:
    """
    Monogressive orthocells of rank d (all ranks when d is None), sorted by (roots, w).

    Only the shortest element of a monogressive coset passes the length test,
    so every cell is met exactly once.

    >>> len(enumerate_monogressive(3, 1))
    8
    >>> len(enumerate_monogressive(4, 2))
    11
    """
    cells: list[Orthocell] = []
    perms = all_permutations(n)
    lengths = {w: length(w) for w in perms}
    for roots in orthogonal_root_sets(n, d):
        masks = list(subsets(len(roots)))
        for w in perms:
            base = lengths[w]
            if all(
                lengths[multiply([roots[k] for k in sub], w)] == base + len(sub) for sub in masks
            ):
                cells.append(Orthocell(roots, w, n))
    return sorted(cells, key=Orthocell.sort_key)


@pre(lambda n, d=None: n >= 2 and (d is None or d >= 0))
def enumerate_orthocells(n: int, d: int | None = None) -> list[Orthocell]:
    """Every canonical orthocell of rank d, monogressive or not."""
    cells = {
        make_cell(n, roots, w)
        for roots in orthogonal_root_sets(n, d)
        for w in all_permutations(n)
    }
    return sorted(cells, key=Orthocell.sort_key)


@pre(lambda n, i, j: 1 <= i <= n - 1 and 1 <= j <= n - 1)
def enumerate_effective(n: int, i: int, j: int) -> list[Orthocell]:
    """
    One ij-normal representative per class of monogressive ij-effective cells.

    Replacing w by wπ with π permuting positions inside the blocks
    [1..lo], [lo+1..hi], [hi+1..n] changes e_C^{ij} by a sign only, so the
    classes are what spans V^{ij}.

    >>> [str(c) for c in enumerate_effective(2, 1, 1)]
    ['C(;[12])', 'C(;[21])', 'C((1,2);[12])']
    """
    normal = {
        ij_normalize(cell, i, j)
        for cell in enumerate_monogressive(n)
        if is_ij_effective(cell, i, j)
    }
    return sorted(normal, key=Orthocell.sort_key)


def _binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


@pre(lambda n, i, j: n >= 1 and 0 <= i <= n and 0 <= j <= n)
@post(lambda result: result >= 0)
def dim_formula(n: int, i: int, j: int) -> int:
    """
    D_{n;i,j} = C(n,lo)C(n,hi) − C(n,lo−1)C(n,hi+1) with lo ≤ hi.

    >>> dim_formula(2, 1, 1), dim_formula(3, 1, 2), dim_formula(4, 2, 2)
    (3, 8, 20)
    >>> dim_formula(3, 1, 1)
    6
    """
    lo, hi = min(i, j), max(i, j)
    return _binomial(n, lo) * _binomial(n, hi) - _binomial(n, lo - 1) * _binomial(n, hi + 1)


def ij_normalize(cell: Orthocell, i: int, j: int) -> Orthocell:
    """
    The ij-normal representative of the class of ``cell``.

    Layout of the normal array, with roots ordered by b: the first block
    ends with a_1 ... a_d, the last block starts with b_d ... b_1, and all
    remaining entries are descending within their block.

    >>> str(ij_normalize(make_cell(3, [], (1, 2, 3)), 1, 2))
    'C(;[123])'
    >>> str(ij_normalize(make_cell(4, [], (1, 2, 3, 4)), 2, 2))
    'C(;[2143])'
    """
    lo, hi = min(i, j), max(i, j)
    if not is_monogressive(cell):
        raise CellError(f"{cell} is not monogressive")
    if not (1 <= lo and hi <= cell.n - 1 and is_ij_effective(cell, i, j)):
        raise CellError(f"{cell} is not {i}{j}-effective")
    w = cell.w
    a_values = [r.a for r in cell.roots]
    b_values = [r.b for r in cell.roots]
    head = sorted(set(w[:lo]) - set(a_values), reverse=True)
    middle = sorted(w[lo:hi], reverse=True)
    tail = sorted(set(w[hi:]) - set(b_values), reverse=True)
    normal = tuple(head + a_values + middle + b_values[::-1] + tail)
    return make_cell(cell.n, cell.roots, normal)


def _descending(block: Sequence[int]) -> bool:
    return all(x > y for x, y in zip(block, block[1:]))


@pre(lambda n, i, j: n >= 1 and 0 <= i <= n and 0 <= j <= n)
@post(lambda result: result >= 0)
def count_ij_normal(n: int, i: int, j: int) -> int:
    """
    Number of ij-normal arrays, found by scanning S_n directly.

    >>> count_ij_normal(2, 1, 1), count_ij_normal(3, 1, 2), count_ij_normal(4, 0, 2)
    (3, 8, 6)
    """
    lo, hi = min(i, j), max(i, j)
    count = 0
    for w in all_permutations(n):
        if not _descending(w[lo:hi]):
            continue
        for d in range(min(lo, n - hi) + 1):
            if not (_descending(w[: lo - d]) and _descending(w[hi + d :])):
                continue
            b_block = w[hi : hi + d]
            if not _descending(b_block):
                continue
            roots = [PositiveRoot(w[lo - d + k], w[hi + d - 1 - k]) for k in range(d)]
            if any(r.a >= r.b for r in roots):
                continue
            cell = Orthocell(tuple(sorted(roots, key=root_sort_key)), w, n)
            if is_monogressive(cell):
                count += 1
    return count


def subcells(cell: Orthocell) -> list[Orthocell]:
    """
    Cells C(s_L w; α′...) with the α′ drawn from the roots outside L.

    >>> [str(c) for c in subcells(make_cell(2, [PositiveRoot(1, 2)], (1, 2)))]
    ['C(;[12])', 'C(;[21])', 'C((1,2);[12])']
    """
    found = set()
    for sub in subsets(cell.rank):
        base = cell.element(sub)
        rest = [r for k, r in enumerate(cell.roots) if k not in sub]
        for size in range(len(rest) + 1):
            for chosen in combinations(rest, size):
                found.add(make_cell(cell.n, chosen, base))
    return sorted(found, key=Orthocell.sort_key)

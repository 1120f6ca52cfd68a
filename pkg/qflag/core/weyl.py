"""
Symmetric group S_n as the Weyl group of SL(n).

Permutations are tuples in one-line notation, 1-based. Reflections act on
values from the left, so ``left_multiply((a, b), w)`` swaps the values a and b
wherever they occur in w.
"""

from collections.abc import Iterable
from itertools import permutations
from typing import NamedTuple

from deal import post, pre

# one-line notation [w(1) ... w(n)]
Permutation = tuple[int, ...]

# sorted tuple of distinct values; the weight w·ω_i is the set {w(1), ..., w(i)}
IndexSet = tuple[int, ...]


class PositiveRoot(NamedTuple):
    """Positive root of A_{n-1}, identified with the transposition (a b), a < b."""

    a: int
    b: int

    def swap(self, value: int) -> int:
        """Image of a single value under the transposition (a b)."""
        if value == self.a:
            return self.b
        if value == self.b:
            return self.a
        return value

    @property
    def is_simple(self) -> bool:
        return self.b == self.a + 1

    def to_list(self) -> list[int]:
        return [self.a, self.b]


def root_sort_key(root: PositiveRoot) -> tuple[int, int]:
    """Canonical root order: lexicographic by (b, a)."""
    return (root.b, root.a)


def make_root(x: int, y: int) -> PositiveRoot:
    """Root of the transposition (x y), whichever order the endpoints come in."""
    if x == y:
        raise ValueError(f"a transposition needs two distinct values, got ({x} {y})")
    return PositiveRoot(min(x, y), max(x, y))


def simple_root(c: int) -> PositiveRoot:
    return PositiveRoot(c, c + 1)


def is_valid_root(root: PositiveRoot, n: int) -> bool:
    return 1 <= root.a < root.b <= n


def is_permutation(entries: Iterable[int]) -> bool:
    """
    >>> is_permutation((2, 3, 1))
    True
    >>> is_permutation((1, 1, 2))
    False
    """
    values = tuple(entries)
    return sorted(values) == list(range(1, len(values) + 1))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def all_permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order."""
    return list(permutations(range(1, n + 1)))


def positive_roots(n: int) -> list[PositiveRoot]:
    """All positive roots of SL(n) in canonical (b, a) order."""
    return [PositiveRoot(a, b) for b in range(2, n + 1) for a in range(1, b)]


@post(lambda result: result >= 0)
def length(w: Permutation) -> int:
    """
    Inversion count of w.

    >>> length((1, 2, 3, 4))
    0
    >>> length((3, 2, 1))
    3
    >>> length((3, 4, 1, 2))
    4
    """
    return sum(1 for p in range(len(w)) for r in range(p + 1, len(w)) if w[p] > w[r])


@pre(lambda root, w: is_valid_root(root, len(w)))
def left_multiply(root: PositiveRoot, w: Permutation) -> Permutation:
    """
    s_α ∘ w: swap the values a and b.

    >>> left_multiply(PositiveRoot(1, 3), (1, 2, 3))
    (3, 2, 1)
    >>> left_multiply(PositiveRoot(4, 6), (3, 4, 7, 2, 6, 5, 1))
    (3, 6, 7, 2, 4, 5, 1)
    """
    return tuple(root.swap(v) for v in w)


def multiply(roots: Iterable[PositiveRoot], w: Permutation) -> Permutation:
    """Left-multiply w by the reflections in order, rightmost applied first."""
    result = w
    for root in reversed(tuple(roots)):
        result = tuple(root.swap(v) for v in result)
    return result


@pre(lambda w, root: is_valid_root(root, len(w)))
def bruhat_covers(w: Permutation, root: PositiveRoot) -> bool:
    """
    Array criterion for w ⋖ s_α w.

    >>> bruhat_covers((3, 4, 7, 2, 6, 5, 1), PositiveRoot(4, 6))
    True
    >>> bruhat_covers((7, 4, 1, 5, 6, 2, 3), PositiveRoot(4, 6))
    False
    """
    pa, pb = w.index(root.a), w.index(root.b)
    if pa > pb:
        return False
    return all(not root.a < c < root.b for c in w[pa + 1 : pb])


def weight_set(w: Permutation, i: int) -> IndexSet:
    """The set {w(1), ..., w(i)} as a sorted tuple."""
    return tuple(sorted(w[:i]))


def pairing_on_set(subset: frozenset[int] | set[int], root: PositiveRoot) -> int:
    """(λ|α) for the minuscule weight λ encoded by ``subset``."""
    return (root.a in subset) - (root.b in subset)


@pre(lambda w, i, root: 0 <= i <= len(w) and is_valid_root(root, len(w)))
@post(lambda result: result in (-1, 0, 1))
def pairing(w: Permutation, i: int, root: PositiveRoot) -> int:
    """
    (wω_i | α) computed as [a ∈ S] − [b ∈ S] with S = {w(1..i)}.

    >>> pairing((1, 2, 3), 1, PositiveRoot(1, 2))
    1
    >>> pairing((1, 2, 3), 1, PositiveRoot(2, 3))
    0
    >>> pairing((2, 1), 1, PositiveRoot(1, 2))
    -1
    """
    return pairing_on_set(frozenset(w[:i]), root)


@post(lambda result: result in (-1, 0, 1, 2))
def root_pairing(alpha: PositiveRoot, beta: PositiveRoot) -> int:
    """
    >>> root_pairing(PositiveRoot(1, 2), PositiveRoot(1, 2))
    2
    >>> root_pairing(PositiveRoot(1, 2), PositiveRoot(3, 4))
    0
    >>> root_pairing(PositiveRoot(1, 2), PositiveRoot(2, 3))
    -1
    >>> root_pairing(PositiveRoot(1, 3), PositiveRoot(2, 3))
    1
    """
    if alpha == beta:
        return 2
    if alpha.a == beta.b or alpha.b == beta.a:
        return -1
    if alpha.a == beta.a or alpha.b == beta.b:
        return 1
    return 0


def are_orthogonal(roots: Iterable[PositiveRoot]) -> bool:
    """True iff the supports of the roots are pairwise disjoint."""
    seen: set[int] = set()
    for root in roots:
        if root.a in seen or root.b in seen:
            return False
        seen.update(root)
    return True


@pre(lambda root, w, i: 0 <= i <= len(w) and is_valid_root(root, len(w)))
def reflect_weight(root: PositiveRoot, w: Permutation, i: int) -> IndexSet:
    """
    s_α applied to the set {w(1..i)}.

    >>> reflect_weight(PositiveRoot(2, 4), (1, 2, 3, 4), 2)
    (1, 4)
    >>> reflect_weight(PositiveRoot(1, 2), (1, 2), 2)
    (1, 2)
    """
    return tuple(sorted(root.swap(v) for v in w[:i]))


def conjugate_root(root: PositiveRoot, *reflections: PositiveRoot) -> PositiveRoot:
    """
    The root of s t s^{-1} where s is the product of ``reflections``.

    >>> conjugate_root(PositiveRoot(2, 3), PositiveRoot(1, 2), PositiveRoot(3, 4))
    PositiveRoot(a=1, b=4)
    """
    x, y = root
    for reflection in reversed(reflections):
        x, y = reflection.swap(x), reflection.swap(y)
    return make_root(x, y)

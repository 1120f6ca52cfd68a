"""
The minuscule U_q(sl_n)-modules V^i = Λ^i C^n and their tensor products.

Basis elements are sorted index sets; ``e_w^i`` enters only through
``signed_basis``. Generators are the 4(n−1) elements K, K^{-1}, X, Y attached
to the simple roots (c, c+1). Tensor products are acted on through the
comultiplication ΔX = X⊗1 + K⊗X, ΔY = Y⊗K^{-1} + 1⊗Y, ΔK = K⊗K.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Any, Union

from deal import post, pre

from qflag.core.errors import GeneratorError
from qflag.core.outcome import CheckReport
from qflag.core.scalars import ONE, Q, Q_INV, LaurentScalar, q_power
from qflag.core.weyl import IndexSet, Permutation, PositiveRoot, is_permutation, root_pairing, simple_root

BasisKey = tuple[IndexSet, ...]
Scalar = Union[LaurentScalar, Fraction]


@pre(lambda w, i: is_permutation(w) and 0 <= i <= len(w))
@post(lambda result: result[1] in (1, -1))
def signed_basis(w: Permutation, i: int) -> tuple[IndexSet, int]:
    """
    e_w^i as (sorted index set, sign of the sorting permutation).

    >>> signed_basis((1, 3, 2), 2)
    ((1, 3), 1)
    >>> signed_basis((2, 1, 3), 2)
    ((1, 2), -1)
    >>> signed_basis((3, 2, 1), 3)
    ((1, 2, 3), -1)
    """
    head = w[:i]
    inversions = sum(1 for p in range(i) for r in range(p + 1, i) if head[p] > head[r])
    return tuple(sorted(head)), -1 if inversions % 2 else 1


class GeneratorKind(Enum):
    K = "K"
    KINV = "Kinv"
    X = "X"
    Y = "Y"


@dataclass(frozen=True)
class Generator:
    """Generator attached to the simple root (c, c+1)."""

    kind: GeneratorKind
    c: int

    @property
    def beta(self) -> PositiveRoot:
        return simple_root(self.c)

    @classmethod
    def from_root(cls, kind: GeneratorKind, root: PositiveRoot) -> Generator:
        if not root.is_simple:
            raise GeneratorError(f"{root} is not a simple root")
        return cls(kind, root.a)

    def __str__(self) -> str:
        return f"{self.kind.value}_{self.c}"


def generators(n: int) -> list[Generator]:
    return [Generator(kind, c) for c in range(1, n) for kind in GeneratorKind]


def _coerce(x: Scalar | int) -> Scalar:
    return Fraction(x) if isinstance(x, int) else x


@dataclass
class TensorVector:
    """Sparse vector of V^{i_1} ⊗ ... ⊗ V^{i_m}; one level means a single module."""

    levels: tuple[int, ...]
    terms: dict[BasisKey, Scalar] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.levels = tuple(self.levels)
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def basis(cls, levels: Sequence[int], key: BasisKey, coeff: Scalar = ONE) -> TensorVector:
        return cls(tuple(levels), {tuple(tuple(s) for s in key): coeff})

    @classmethod
    def from_pairs(cls, levels: Sequence[int], pairs: Iterable[tuple[BasisKey, Scalar]]) -> TensorVector:
        acc: dict[BasisKey, Scalar] = {}
        for key, coeff in pairs:
            acc[key] = acc[key] + coeff if key in acc else coeff
        return cls(tuple(levels), acc)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorVector):
            return NotImplemented
        return self.levels == other.levels and self.terms == other.terms

    def __add__(self, other: TensorVector) -> TensorVector:
        acc = dict(self.terms)
        for key, coeff in other.terms.items():
            acc[key] = acc[key] + coeff if key in acc else coeff
        return TensorVector(self.levels, acc)

    def __neg__(self) -> TensorVector:
        return TensorVector(self.levels, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: TensorVector) -> TensorVector:
        return self + (-other)

    def scale(self, factor: Scalar | int) -> TensorVector:
        factor = _coerce(factor)
        return TensorVector(self.levels, {k: v * factor for k, v in self.terms.items()})

    def divide_exact(self, divisor: Scalar) -> TensorVector:
        return TensorVector(self.levels, {k: v / divisor for k, v in self.terms.items()})

    def tensor(self, other: TensorVector) -> TensorVector:
        return TensorVector(
            self.levels + other.levels,
            {a + b: x * y for a, x in self.terms.items() for b, y in other.terms.items()},
        )

    def evaluate(self, q0: Fraction | int) -> TensorVector:
        """Specialize q to the rational q0."""
        return TensorVector(
            self.levels,
            {k: v.evaluate(q0) if isinstance(v, LaurentScalar) else v for k, v in self.terms.items()},
        )

    def coordinates(self, keys: Sequence[BasisKey], zero: Scalar) -> list[Scalar]:
        return [self.terms.get(k, zero) for k in keys]

    def items(self) -> list[tuple[BasisKey, Scalar]]:
        return sorted(self.terms.items())

    def to_dict(self) -> dict[str, Any]:
        def encode(c: Scalar) -> Any:
            return c.to_dict() if isinstance(c, LaurentScalar) else str(c)

        return {
            "levels": list(self.levels),
            "terms": [
                {"basis": [list(s) for s in key], "coeff": encode(c)} for key, c in self.items()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> TensorVector:
        def decode(c: Any) -> Scalar:
            return LaurentScalar.from_dict(c) if isinstance(c, Mapping) else Fraction(c)

        return cls.from_pairs(
            tuple(data["levels"]),
            ((tuple(tuple(s) for s in t["basis"]), decode(t["coeff"])) for t in data["terms"]),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.items():
            name = "⊗".join("e_" + "".join(map(str, s)) if s else "e_∅" for s in key)
            parts.append(f"({coeff})·{name}")
        return " + ".join(parts)


ModuleVector = TensorVector


def basis_vector(w: Permutation, i: int) -> ModuleVector:
    """e_w^i with its sign."""
    indices, sign = signed_basis(w, i)
    return TensorVector.basis((i,), (indices,), LaurentScalar.constant(sign))


def pure_tensor(ws: Sequence[Permutation], levels: Sequence[int]) -> TensorVector:
    """e_{w_1}^{i_1} ⊗ ... with signs resolved."""
    key = []
    sign = 1
    for w, i in zip(ws, levels):
        indices, s = signed_basis(w, i)
        key.append(indices)
        sign *= s
    return TensorVector.basis(levels, tuple(key), LaurentScalar.constant(sign))


def highest_vector(levels: Sequence[int]) -> TensorVector:
    """e_1^{i_1} ⊗ ... with each factor spanned by {1..i}."""
    return TensorVector.basis(levels, tuple(tuple(range(1, i + 1)) for i in levels))


def module_basis(n: int, i: int) -> list[IndexSet]:
    return list(combinations(range(1, n + 1), i))


def tensor_basis(n: int, levels: Sequence[int]) -> list[BasisKey]:
    """
    >>> len(tensor_basis(3, (1, 2)))
    9
    """
    return list(product(*(module_basis(n, i) for i in levels)))


def module_dimension(n: int, levels: Sequence[int]) -> int:
    total = 1
    for i in levels:
        total *= comb(n, i)
    return total


def weight_of(key: BasisKey, n: int) -> tuple[int, ...]:
    """Content vector: how often each of 1..n occurs across the factors."""
    counts = [0] * n
    for indices in key:
        for v in indices:
            counts[v - 1] += 1
    return tuple(counts)


def _exponent(indices: IndexSet, c: int) -> int:
    return (c in indices) - (c + 1 in indices)


def _raise(indices: IndexSet, c: int) -> IndexSet | None:
    """X_c on a single factor: c+1 becomes c when c is absent."""
    if _exponent(indices, c) != -1:
        return None
    return tuple(sorted(c if v == c + 1 else v for v in indices))


def _lower(indices: IndexSet, c: int) -> IndexSet | None:
    if _exponent(indices, c) != 1:
        return None
    return tuple(sorted(c + 1 if v == c else v for v in indices))


def _on_key(g: Generator, key: BasisKey) -> list[tuple[BasisKey, LaurentScalar]]:
    c = g.c
    if g.kind is GeneratorKind.K:
        return [(key, q_power(sum(_exponent(s, c) for s in key)))]
    if g.kind is GeneratorKind.KINV:
        return [(key, q_power(-sum(_exponent(s, c) for s in key)))]
    out = []
    if g.kind is GeneratorKind.X:
        for p, indices in enumerate(key):
            moved = _raise(indices, c)
            if moved is not None:
                before = sum(_exponent(s, c) for s in key[:p])
                out.append((key[:p] + (moved,) + key[p + 1 :], q_power(before)))
    else:
        for p, indices in enumerate(key):
            moved = _lower(indices, c)
            if moved is not None:
                after = sum(_exponent(s, c) for s in key[p + 1 :])
                out.append((key[:p] + (moved,) + key[p + 1 :], q_power(-after)))
    return out


def _check_generator(g: Generator, n: int | None) -> None:
    """c must index a simple root; with n known, of SL(n)."""
    if g.c < 1:
        raise GeneratorError(f"{g} does not name a simple root")
    if n is not None and g.c > n - 1:
        raise GeneratorError(f"{g} does not name a simple root of SL({n})")


def act_tensor(g: Generator, v: TensorVector, n: int | None = None) -> TensorVector:
    """
    Action through (Δ ⊗ id ⊗ ...) ∘ Δ, i.e. X = Σ_p K^{⊗p} ⊗ X ⊗ 1 and
    Y = Σ_p 1 ⊗ Y ⊗ (K^{-1})^{⊗rest}.

    >>> v = TensorVector.basis((1, 1), ((1,), (2,)))
    >>> str(act_tensor(Generator(GeneratorKind.X, 1), v))
    '(q)·e_1⊗e_1'
    >>> str(act_tensor(Generator(GeneratorKind.Y, 1), v))
    '(q)·e_2⊗e_2'
    >>> act_tensor(Generator(GeneratorKind.K, 1), v) == v
    True
    >>> act_tensor(Generator(GeneratorKind.X, 2), v, n=2)
    Traceback (most recent call last):
    ...
    qflag.core.errors.GeneratorError: X_2 does not name a simple root of SL(2)
    """
    _check_generator(g, n)
    return TensorVector.from_pairs(
        v.levels,
        ((new_key, coeff * factor) for key, coeff in v.terms.items() for new_key, factor in _on_key(g, key)),
    )


def act(g: Generator, v: ModuleVector, n: int | None = None) -> ModuleVector:
    """
    Single-module action; same rules as ``act_tensor`` with one factor.

    >>> e1 = TensorVector.basis((1,), ((1,),))
    >>> str(act(Generator(GeneratorKind.K, 1), e1)), str(act(Generator(GeneratorKind.Y, 1), e1))
    ('(q)·e_1', '(1)·e_2')
    >>> act(Generator(GeneratorKind.X, 1), e1)
    TensorVector(levels=(1,), terms={})
    """
    return act_tensor(g, v, n)


def act_word(word: Sequence[Generator], v: TensorVector, n: int | None = None) -> TensorVector:
    """Apply the generators right to left, as operators compose."""
    for g in reversed(word):
        v = act_tensor(g, v, n)
    return v


Grouping = Union[int, tuple["Grouping", "Grouping"]]


def _leaves(node: Grouping) -> list[int]:
    if isinstance(node, int):
        return [node]
    return _leaves(node[0]) + _leaves(node[1])


def _tree_action(
    kind: GeneratorKind, c: int, key: BasisKey, node: Grouping
) -> list[tuple[BasisKey, LaurentScalar]]:
    if isinstance(node, int):
        sub = (key[node],)
        return [
            (key[:node] + new + key[node + 1 :], f)
            for new, f in _on_key(Generator(kind, c), sub)
        ]
    left, right = node
    if kind in (GeneratorKind.K, GeneratorKind.KINV):
        out = []
        for k1, f1 in _tree_action(kind, c, key, left):
            out.extend((k2, f1 * f2) for k2, f2 in _tree_action(kind, c, k1, right))
        return out
    if kind is GeneratorKind.X:
        # X_L ⊗ 1 + K_L ⊗ X_R
        out = list(_tree_action(kind, c, key, left))
        for k1, f1 in _tree_action(GeneratorKind.K, c, key, left):
            out.extend((k2, f1 * f2) for k2, f2 in _tree_action(kind, c, k1, right))
        return out
    # Y_L ⊗ K^{-1}_R + 1 ⊗ Y_R
    out = []
    for k1, f1 in _tree_action(kind, c, key, left):
        out.extend((k2, f1 * f2) for k2, f2 in _tree_action(GeneratorKind.KINV, c, k1, right))
    out.extend(_tree_action(kind, c, key, right))
    return out


def act_grouped(
    g: Generator, v: TensorVector, grouping: Grouping, n: int | None = None
) -> TensorVector:
    """Action through an explicit bracketing of Δ, e.g. ((0, 1), 2) or (0, (1, 2))."""
    _check_generator(g, n)
    if sorted(_leaves(grouping)) != list(range(len(v.levels))):
        raise ValueError(f"grouping {grouping} does not cover {len(v.levels)} factors")
    return TensorVector.from_pairs(
        v.levels,
        (
            (new_key, coeff * factor)
            for key, coeff in v.terms.items()
            for new_key, factor in _tree_action(g.kind, g.c, key, grouping)
        ),
    )


def cartan(b: int, c: int) -> int:
    return root_pairing(simple_root(b), simple_root(c))


def _gen(kind: GeneratorKind, c: int) -> Generator:
    return Generator(kind, c)


@pre(lambda n, levels: n >= 2 and all(0 <= i <= n for i in levels) and 1 <= len(levels) <= 3)
def verify_relations(n: int, levels: Sequence[int]) -> CheckReport:
    """
    Every defining relation of U_q(sl_n), checked as an operator identity on
    the full basis of V^{i_1} ⊗ ... .

    >>> verify_relations(2, (1,)).passed
    True
    """
    K, KINV, X, Y = GeneratorKind.K, GeneratorKind.KINV, GeneratorKind.X, GeneratorKind.Y
    levels = tuple(levels)
    report = CheckReport(f"relations n={n} levels={levels}")
    q_diff = Q - Q_INV
    for key in tensor_basis(n, levels):
        v = TensorVector.basis(levels, key)
        label = "⊗".join("".join(map(str, s)) or "∅" for s in key)

        def check(name: str, lhs: TensorVector, rhs: TensorVector, label: str = label) -> None:
            report.tick(lhs == rhs, f"{name} on {label}")

        for b in range(1, n):
            kb, kib = _gen(K, b), _gen(KINV, b)
            check(f"K{b}Kinv{b}=1", act_word([kb, kib], v, n), v)
            check(f"Kinv{b}K{b}=1", act_word([kib, kb], v, n), v)
            for c in range(1, n):
                a = cartan(b, c)
                kc, xc, yc = _gen(K, c), _gen(X, c), _gen(Y, c)
                xb, yb = _gen(X, b), _gen(Y, b)
                check(f"K{b}K{c}=K{c}K{b}", act_word([kb, kc], v, n), act_word([kc, kb], v, n))
                check(
                    f"K{b}X{c}Kinv{b}",
                    act_word([kb, xc, kib], v, n),
                    act_tensor(xc, v, n).scale(q_power(a)),
                )
                check(
                    f"K{b}Y{c}Kinv{b}",
                    act_word([kb, yc, kib], v, n),
                    act_tensor(yc, v, n).scale(q_power(-a)),
                )
                commutator = act_word([xb, yc], v, n) - act_word([yc, xb], v, n)
                if b == c:
                    expected = (act_tensor(kb, v, n) - act_tensor(kib, v, n)).divide_exact(q_diff)
                else:
                    expected = TensorVector(levels)
                check(f"[X{b},Y{c}]", commutator, expected)
                if b == c:
                    continue
                if abs(b - c) == 1:
                    for gen, name in ((X, "X"), (Y, "Y")):
                        gb, gc = _gen(gen, b), _gen(gen, c)
                        serre = (
                            act_word([gb, gb, gc], v, n)
                            - act_word([gb, gc, gb], v, n).scale(Q + Q_INV)
                            + act_word([gc, gb, gb], v, n)
                        )
                        check(f"Serre {name}{b}{name}{c}", serre, TensorVector(levels))
                else:
                    check(f"X{b}X{c}=X{c}X{b}", act_word([xb, xc], v, n), act_word([xc, xb], v, n))
                    check(f"Y{b}Y{c}=Y{c}Y{b}", act_word([yb, yc], v, n), act_word([yc, yb], v, n))
    return report


@pre(lambda n, levels: n >= 2 and len(levels) == 3)
def check_coassociativity(n: int, levels: Sequence[int]) -> CheckReport:
    """((Δ⊗id)Δ and (id⊗Δ)Δ agree on every basis element of a triple product."""
    levels = tuple(levels)
    report = CheckReport(f"coassociativity n={n} levels={levels}")
    for key in tensor_basis(n, levels):
        v = TensorVector.basis(levels, key)
        for g in generators(n):
            left = act_grouped(g, v, ((0, 1), 2), n)
            right = act_grouped(g, v, (0, (1, 2)), n)
            report.tick(left == right and left == act_tensor(g, v, n), f"{g} on {key}")
    return report


def is_k_eigenvector(v: TensorVector, n: int) -> bool:
    """All terms share one K_β-eigenvalue for every β."""
    if not v:
        return True
    keys = list(v.terms)
    return all(
        len({sum(_exponent(s, c) for s in key) for key in keys}) == 1 for c in range(1, n)
    )


def is_highest_weight(v: TensorVector, n: int) -> bool:
    """
    >>> is_highest_weight(highest_vector((2,)), 3)
    True
    >>> is_highest_weight(TensorVector.basis((1,), ((2,),)), 2)
    False
    """
    return is_k_eigenvector(v, n) and all(
        not act_tensor(Generator(GeneratorKind.X, c), v, n) for c in range(1, n)
    )


def weight_blocks(keys: Iterable[BasisKey], n: int) -> Iterator[tuple[tuple[int, ...], list[BasisKey]]]:
    """Group basis keys by weight, in sorted weight order."""
    blocks: dict[tuple[int, ...], list[BasisKey]] = {}
    for key in keys:
        blocks.setdefault(weight_of(key, n), []).append(key)
    for weight in sorted(blocks):
        yield weight, sorted(blocks[weight])

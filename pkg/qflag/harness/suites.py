"""
Suite registry: named groups of core checks for a given n.

A suite expands to a list of Check items; nothing runs until the runner
calls them.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from functools import partial
from itertools import product

from qflag.core.braid import check_cyclic, verify_braid
from qflag.core.casetables import verify_case_tables
from qflag.core.census import (
    check_component_ratios,
    check_criterion_equivalence,
    check_dimension,
    check_known_counts,
    check_normal_counts,
    check_recursion,
    check_sl2_relation,
)
from qflag.core.flagbasis import (
    check_closure,
    check_k_eigen,
    check_normal_form_signs,
    check_relation_count,
    verify_intertwiner,
)
from qflag.core.geometry import QValue, check_spanned, gluing_check
from qflag.core.orthocell import enumerate_monogressive
from qflag.core.outcome import CheckReport, combine
from qflag.core.uqrep import check_coassociativity, verify_relations
from qflag.harness.config import QFlagConfig

# Suites whose cost is driven by symbolic Laurent arithmetic
ALGEBRAIC_SUITES = frozenset({"relations", "ijinv", "tables", "intertwiner", "braid"})


@dataclass(frozen=True)
class Check:
    """A named, deferred core check."""
    name: str
    run: Callable[[], CheckReport]
    suite: str = ""


SuiteBuilder = Callable[[int, QFlagConfig], Iterator[Check]]


def _levels(n: int) -> range:
    return range(1, n)


def _pairs(n: int) -> Iterator[tuple[int, int]]:
    """Unordered pairs i ≤ j."""
    for i in _levels(n):
        for j in range(i, n):
            yield i, j


def _ordered_pairs(n: int) -> Iterator[tuple[int, int]]:
    return product(_levels(n), repeat=2)


def relations_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    for i in _levels(n):
        yield Check(f"relations n={n} levels=({i})", partial(verify_relations, n, (i,)))
    for i, j in _pairs(n):
        yield Check(f"relations n={n} levels=({i},{j})", partial(verify_relations, n, (i, j)))
    spot = tuple(range(1, min(n, 4)))
    if len(spot) == 3:
        yield Check(f"relations n={n} levels={spot}", partial(verify_relations, n, spot))
    for levels in product(_levels(n), repeat=3):
        yield Check(
            f"coassociativity n={n} levels={levels}", partial(check_coassociativity, n, levels)
        )


def ijinv_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    for i, j in _ordered_pairs(n):
        yield Check(f"closure n={n} ij={i}{j}", partial(check_closure, n, i, j))
        yield Check(f"k-eigen n={n} ij={i}{j}", partial(check_k_eigen, n, i, j))


def tables_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    for i, j in _ordered_pairs(n):
        yield Check(f"case-tables n={n} ij={i}{j}", partial(verify_case_tables, n, i, j))


def intertwiner_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    for i, j in _ordered_pairs(n):
        yield Check(f"intertwiner n={n} ij={i}{j}", partial(verify_intertwiner, n, i, j))
        yield Check(f"relation-count n={n} ij={i}{j}", partial(check_relation_count, n, i, j))


def braid_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    for i, j, k in product(_levels(n), repeat=3):
        yield Check(f"braid n={n} ijk={i}{j}{k}", partial(verify_braid, n, i, j, k))
        if n <= 3:
            yield Check(f"cyclic n={n} ijk={i}{j}{k}", partial(check_cyclic, n, (i, j, k)))


def spanned_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    q = QValue(config.q0)
    for i, j in _ordered_pairs(n):
        yield Check(
            f"spanned n={n} ij={i}{j}",
            partial(check_spanned, n, i, j, config.samples, config.seed, q),
        )


def _gluing_all(n: int, i: int) -> CheckReport:
    reports = [gluing_check(cell, i) for cell in enumerate_monogressive(n)]
    return combine(f"gluing n={n} i={i}", reports)


def gluing_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    for i in _levels(n):
        yield Check(f"gluing n={n} i={i}", partial(_gluing_all, n, i))


def normalform_suite(n: int, config: QFlagConfig) -> Iterator[Check]:
    yield Check(f"normal-count n={n}", partial(check_normal_counts, n))
    if n >= 3:
        yield Check(f"recursion n={n}", partial(check_recursion, n))
    yield Check(f"criterion n={n}", partial(check_criterion_equivalence, n))
    for i, j in _pairs(n):
        yield Check(f"dimension n={n} ij={i}{j}", partial(check_dimension, n, i, j))
    for i, j in _ordered_pairs(n):
        yield Check(f"normal-form n={n} ij={i}{j}", partial(check_normal_form_signs, n, i, j))


SUITES: dict[str, SuiteBuilder] = {
    "relations": relations_suite,
    "ijinv": ijinv_suite,
    "tables": tables_suite,
    "intertwiner": intertwiner_suite,
    "braid": braid_suite,
    "spanned": spanned_suite,
    "gluing": gluing_suite,
    "normalform": normalform_suite,
}

SUITE_CHOICES = [*SUITES, "all"]


def build_checks(suite: str, n: int, config: QFlagConfig) -> list[Check]:
    """Expand a suite name (or ``all``) into its checks, tagged with the suite."""
    names = list(SUITES) if suite == "all" else [suite]
    checks = []
    for name in names:
        for check in SUITES[name](n, config):
            checks.append(Check(check.name, check.run, name))
    return checks


def report_extras(n: int, config: QFlagConfig) -> list[Check]:
    """Extra checks the report command adds on top of ``all``."""
    extras = [Check(f"counts n={n}", partial(check_known_counts, n), "report")]
    if n == 3:
        q = QValue(config.q0)
        extras.append(Check(f"component-ratios q0={q}", partial(check_component_ratios, q), "report"))
    if n == 2:
        extras.append(Check("sl2-relation", check_sl2_relation, "report"))
    return extras

"""Tests for the suite registry and the runner."""

import logging

import pytest

from qflag.core.outcome import CheckReport
from qflag.harness.config import QFlagConfig
from qflag.harness.models import CheckStatus
from qflag.harness.runner import SuiteRunner
from qflag.harness.suites import SUITE_CHOICES, SUITES, Check, build_checks, report_extras


def _ok(name: str) -> Check:
    return Check(name, lambda: CheckReport(name, 1))


def _raises() -> CheckReport:
    raise RuntimeError("exploded")


def test_suite_choices():
    assert SUITE_CHOICES[-1] == "all"
    assert set(SUITES) == {
        "relations",
        "ijinv",
        "tables",
        "intertwiner",
        "braid",
        "spanned",
        "gluing",
        "normalform",
    }


def test_checks_are_tagged_with_their_suite():
    checks = build_checks("all", 3, QFlagConfig())
    assert {check.suite for check in checks} == set(SUITES)
    names = [check.name for check in checks]
    assert len(names) == len(set(names))
    assert "recursion n=3" in names
    assert "cyclic n=3 ijk=121" in names


def test_normalform_suite_for_sl2_has_no_recursion():
    names = [check.name for check in build_checks("normalform", 2, QFlagConfig())]
    assert "recursion n=2" not in names
    assert "dimension n=2 ij=11" in names


def test_report_extras():
    assert [c.name for c in report_extras(2, QFlagConfig())] == ["counts n=2", "sl2-relation"]
    assert [c.name for c in report_extras(3, QFlagConfig())] == [
        "counts n=3",
        "component-ratios q0=2",
    ]


def test_exception_becomes_error_result(caplog):
    runner = SuiteRunner(QFlagConfig())
    with caplog.at_level(logging.WARNING, logger="qflag"):
        result = runner.run_check(Check("boom", _raises))
    assert result.status == CheckStatus.ERROR
    assert "RuntimeError: exploded" in result.detail
    assert "boom raised RuntimeError" in caplog.text


@pytest.mark.parametrize("workers", [1, 4])
def test_results_are_sorted_by_name(workers):
    runner = SuiteRunner(QFlagConfig(workers=workers))
    results = runner.run_checks([_ok(name) for name in ["c", "a", "d", "b"]])
    assert [r.name for r in results] == ["a", "b", "c", "d"]
    assert all(r.passed for r in results)


def test_run_suite_for_sl2():
    report = SuiteRunner(QFlagConfig(samples=3)).run_suite("spanned", 2)
    assert report.command == "verify"
    assert report.passed
    assert report.parameters == {"n": 2, "suite": "spanned"}
    assert [c.name for c in report.checks] == ["spanned n=2 ij=11"]


def test_run_report_for_sl2():
    report = SuiteRunner(QFlagConfig(samples=2, workers=2)).run_report(2)
    assert report.command == "report"
    assert report.passed, [c.detail for c in report.failed_checks]
    assert report.started_at is not None
    assert "sl2-relation" in [c.name for c in report.checks]


def test_heavy_algebraic_run_warns(caplog):
    runner = SuiteRunner(QFlagConfig(algebraic_warn_n=1))
    with caplog.at_level(logging.WARNING, logger="qflag"):
        runner.run_suite("gluing", 2)
        assert "may take a very long time" not in caplog.text
        runner.run_suite("relations", 2)
    assert "may take a very long time" in caplog.text

"""
Suite runner: executes checks, sequentially or on a worker pool, and
aggregates them into a RunReport.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor, as_completed
from datetime import datetime
from typing import Any

from qflag.harness.config import QFlagConfig
from qflag.harness.models import CheckResult, RunReport
from qflag.harness.suites import ALGEBRAIC_SUITES, Check, build_checks, report_extras

logger = logging.getLogger(__name__)


class SuiteRunner:
    """Runs core checks and collects their verdicts."""

    def __init__(self, config: QFlagConfig, show_progress: bool = False) -> None:
        self.config = config
        self.show_progress = show_progress

    def run_check(self, check: Check) -> CheckResult:
        """Run one check; an escaping exception becomes an ERROR result."""
        start = time.perf_counter()
        try:
            report = check.run()
        except Exception as exc:
            elapsed = time.perf_counter() - start
            logger.warning("%s raised %s: %s", check.name, type(exc).__name__, exc)
            return CheckResult.from_error(check.name, exc, elapsed)
        elapsed = time.perf_counter() - start
        result = CheckResult.from_report(report, elapsed, self.config.failure_cap)
        if not result.passed:
            logger.warning("%s: %d failure(s)", check.name, result.failure_count)
        else:
            logger.debug("%s passed in %.2fs", check.name, elapsed)
        return result

    def run_checks(self, checks: Sequence[Check]) -> list[CheckResult]:
        """Run ``checks`` and return results ordered by check name."""
        if self.show_progress:
            from qflag.harness.display import ProgressDisplay

            with ProgressDisplay(len(checks)) as display:
                results = self._execute(checks, display.mark_completed)
        else:
            results = self._execute(checks, None)
        return sorted(results, key=lambda r: r.name)

    def _execute(
        self, checks: Sequence[Check], on_done: Callable[[CheckResult], None] | None
    ) -> list[CheckResult]:
        results: list[CheckResult] = []

        def record(result: CheckResult) -> None:
            results.append(result)
            if on_done is not None:
                on_done(result)

        if not self.config.parallel:
            # Sequential execution
            for check in checks:
                record(self.run_check(check))
            return results

        with ThreadPoolExecutor(max_workers=self.config.workers) as executor:
            future_to_check = {executor.submit(self.run_check, check): check for check in checks}
            for future in as_completed(future_to_check):
                check = future_to_check[future]
                try:
                    result = future.result()
                except Exception as exc:
                    result = CheckResult.from_error(check.name, exc)
                record(result)
        return results

    def run_suite(self, suite: str, n: int, parameters: dict[str, Any] | None = None) -> RunReport:
        """Run a named suite (or ``all``) at n."""
        self._warn_if_heavy(suite, n)
        checks = build_checks(suite, n, self.config)
        return self._run("verify", checks, parameters or {"n": n, "suite": suite}, suite)

    def run_report(self, n: int, parameters: dict[str, Any] | None = None) -> RunReport:
        """Every suite plus the enumeration and special-case checks."""
        self._warn_if_heavy("all", n)
        checks = build_checks("all", n, self.config) + report_extras(n, self.config)
        return self._run("report", checks, parameters or {"n": n}, "report")

    def _run(
        self, command: str, checks: list[Check], parameters: dict[str, Any], label: str
    ) -> RunReport:
        report = RunReport(command=command, parameters=parameters, started_at=datetime.now())
        logger.info("%s: %d check(s), %d worker(s)", label, len(checks), self.config.workers)
        start = time.perf_counter()
        report.checks = self.run_checks(checks)
        report.elapsed = time.perf_counter() - start
        logger.info("%s finished in %.2fs: %s", label, report.elapsed, report.status)
        return report

    def _warn_if_heavy(self, suite: str, n: int) -> None:
        algebraic = suite == "all" or suite in ALGEBRAIC_SUITES
        if algebraic and self.config.algebraic_heavy(n):
            logger.warning(
                "algebraic suite %r at n=%d (above %d) may take a very long time",
                suite,
                n,
                self.config.algebraic_warn_n,
            )

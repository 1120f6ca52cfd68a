"""
Verdict value returned by every verification operation in the core.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckReport:
    """Outcome of one identity check over a finite family of cases."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def tick(self, ok: bool, failure: str | None = None) -> bool:
        """Count one case; record ``failure`` when it did not hold."""
        self.checked += 1
        if not ok:
            self.failures.append(failure or f"case {self.checked}")
        return ok

    def fail(self, message: str) -> None:
        self.checked += 1
        self.failures.append(message)

    def merge(self, other: CheckReport) -> CheckReport:
        self.checked += other.checked
        self.failures.extend(f"{other.name}: {f}" for f in other.failures)
        self.notes.extend(other.notes)
        return self

    def summary(self) -> str:
        status = "pass" if self.passed else f"{len(self.failures)} failure(s)"
        return f"{self.name}: {self.checked} case(s), {status}"


def combine(name: str, reports: list[CheckReport]) -> CheckReport:
    """
    >>> a = CheckReport("a", 2)
    >>> b = CheckReport("b", 1, ["x"])
    >>> combine("ab", [a, b]).summary()
    'ab: 3 case(s), 1 failure(s)'
    """
    total = CheckReport(name)
    for report in reports:
        total.merge(report)
    return total

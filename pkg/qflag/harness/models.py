"""
Data models for verification runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any

from qflag.core.outcome import CheckReport


class CheckStatus(Enum):
    """Outcome of one named check."""
    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"  # The check raised


@dataclass
class CheckResult:
    """Result of running one check."""
    name: str
    status: CheckStatus
    detail: str = ""
    cases: int = 0
    failures: list[str] = field(default_factory=list)  # Capped; see failure_count
    failure_count: int = 0
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0  # Seconds

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @classmethod
    def from_report(cls, report: CheckReport, elapsed: float, failure_cap: int = 20) -> CheckResult:
        """Wrap a core verdict, keeping at most ``failure_cap`` failure messages."""
        status = CheckStatus.PASS if report.passed else CheckStatus.FAIL
        return cls(
            name=report.name,
            status=status,
            detail=report.summary(),
            cases=report.checked,
            failures=report.failures[:failure_cap],
            failure_count=len(report.failures),
            notes=list(report.notes),
            elapsed=elapsed,
        )

    @classmethod
    def from_error(cls, name: str, error: BaseException, elapsed: float = 0.0) -> CheckResult:
        message = f"{type(error).__name__}: {error}"
        return cls(
            name=name,
            status=CheckStatus.ERROR,
            detail=message,
            failures=[message],
            failure_count=1,
            elapsed=elapsed,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "status": self.status.value,
            "detail": self.detail,
            "cases": self.cases,
            "failures": self.failures,
            "failure_count": self.failure_count,
            "notes": self.notes,
            "elapsed": round(self.elapsed, 3),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> CheckResult:
        return cls(
            name=data["name"],
            status=CheckStatus(data["status"]),
            detail=data.get("detail", ""),
            cases=data.get("cases", 0),
            failures=data.get("failures", []),
            failure_count=data.get("failure_count", 0),
            notes=data.get("notes", []),
            elapsed=data.get("elapsed", 0.0),
        )


@dataclass
class RunReport:
    """All checks of one CLI invocation."""
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)
    started_at: datetime | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def failed_checks(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    @property
    def total_cases(self) -> int:
        return sum(check.cases for check in self.checks)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "checks": [check.to_dict() for check in self.checks],
            "total_cases": self.total_cases,
            "started_at": self.started_at.isoformat() if self.started_at else None,
            "elapsed": round(self.elapsed, 3),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RunReport:
        started = data.get("started_at")
        return cls(
            command=data["command"],
            parameters=data.get("parameters", {}),
            checks=[CheckResult.from_dict(c) for c in data.get("checks", [])],
            started_at=datetime.fromisoformat(started) if started else None,
            elapsed=data.get("elapsed", 0.0),
        )

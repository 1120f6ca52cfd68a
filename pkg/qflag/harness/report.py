"""
Markdown rendering of a RunReport.
"""

from __future__ import annotations

from pathlib import Path

from returns.result import Failure, Result, Success

from qflag.harness.display import format_time
from qflag.harness.models import RunReport


def generate_markdown(report: RunReport) -> str:
    """
    Render ``report`` as markdown: header, summary, checks table, failures.
    """
    lines = []

    # Header
    lines.append(f"# qflag {report.command} report")
    lines.append("")
    if report.started_at:
        lines.append(f"**Started:** {report.started_at.isoformat(timespec='seconds')}")
    params = ", ".join(f"{k}={v}" for k, v in report.parameters.items())
    lines.append(f"**Parameters:** {params or 'none'}")
    lines.append("")

    # Summary
    lines.append("## Summary")
    lines.append("")
    lines.append(f"- **Status:** {report.status.upper()}")
    lines.append(f"- **Checks:** {len(report.checks)} ({len(report.failed_checks)} failing)")
    lines.append(f"- **Cases:** {report.total_cases}")
    lines.append(f"- **Elapsed:** {format_time(report.elapsed)}")
    lines.append("")

    # Checks table
    lines.append("## Checks")
    lines.append("")
    lines.append("| Check | Status | Cases | Failures | Time |")
    lines.append("|-------|--------|------:|---------:|-----:|")
    for check in report.checks:
        lines.append(
            f"| {check.name} | {check.status.value} | {check.cases} | "
            f"{check.failure_count} | {format_time(check.elapsed)} |"
        )
    lines.append("")

    noted = [check for check in report.checks if check.notes]
    if noted:
        lines.append("## Notes")
        lines.append("")
        for check in noted:
            lines.append(f"- **{check.name}:** {'; '.join(check.notes)}")
        lines.append("")

    if report.failed_checks:
        lines.append("## Failures")
        lines.append("")
        for check in report.failed_checks:
            lines.append(f"### {check.name}")
            lines.append("")
            for failure in check.failures:
                lines.append(f"- `{failure}`")
            hidden = check.failure_count - len(check.failures)
            if hidden > 0:
                lines.append(f"- ... {hidden} more")
            lines.append("")

    return "\n".join(lines)


def write_markdown(report: RunReport, path: Path) -> Result[Path, str]:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(generate_markdown(report), encoding="utf-8")
    except OSError as e:
        return Failure(f"Cannot write {path}: {e}")
    return Success(path)

"""
Rich rendering for qflag: progress while suites run, tables afterwards.
"""

from __future__ import annotations

from rich.console import Console
from rich.panel import Panel
from rich.progress import (
    BarColumn,
    Progress,
    SpinnerColumn,
    TaskID,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table

from qflag.core.census import DimensionRow
from qflag.core.flagbasis import RelationSet
from qflag.core.orthocell import Orthocell
from qflag.harness.models import CheckResult, CheckStatus, RunReport

STATUS_STYLE = {
    CheckStatus.PASS: "[green]✓ pass[/green]",
    CheckStatus.FAIL: "[red]✗ fail[/red]",
    CheckStatus.ERROR: "[red]! error[/red]",
}


class ProgressDisplay:
    """Progress bar on stderr; stdout stays clean for JSON."""

    def __init__(self, total: int, console: Console | None = None) -> None:
        self.console = console or Console(stderr=True)
        self.total = total
        self.failed = 0
        self.progress = Progress(
            SpinnerColumn(),
            TextColumn("[bold blue]{task.description}"),
            BarColumn(bar_width=40),
            TextColumn("({task.completed}/{task.total})"),
            TimeElapsedColumn(),
            console=self.console,
            transient=True,
        )
        self.main_task: TaskID | None = None

    def __enter__(self) -> ProgressDisplay:
        self.progress.start()
        self.main_task = self.progress.add_task("checks", total=self.total)
        return self

    def __exit__(self, *args: object) -> None:
        self.progress.stop()

    def mark_completed(self, result: CheckResult) -> None:
        if not result.passed:
            self.failed += 1
        if self.main_task is not None:
            label = f"checks [red]{self.failed} failing[/red]" if self.failed else "checks"
            self.progress.update(self.main_task, advance=1, description=label)


def format_time(seconds: float) -> str:
    if seconds < 60:
        return f"{seconds:.2f}s"
    return f"{seconds / 60:.1f}m"


def cells_table(cells: list[Orthocell], title: str) -> Table:
    table = Table(title=title, show_header=True, header_style="bold", border_style="blue")
    table.add_column("#", justify="right", style="dim")
    table.add_column("Cell", style="cyan")
    table.add_column("Rank", justify="right")
    table.add_column("Roots")
    table.add_column("w")
    for idx, cell in enumerate(cells, 1):
        table.add_row(
            str(idx),
            str(cell),
            str(cell.rank),
            " ".join(f"({r.a},{r.b})" for r in cell.roots) or "[dim]--[/dim]",
            "".join(map(str, cell.w)) if cell.n < 10 else ",".join(map(str, cell.w)),
        )
    return table


def dims_table(n: int, rows: list[DimensionRow]) -> Table:
    table = Table(title=f"dim V^ij for n={n}", header_style="bold", border_style="blue")
    for column in ("i", "j", "D", "cells", "rank"):
        table.add_column(column, justify="right")
    table.add_column("match", justify="center")
    for row in rows:
        table.add_row(
            str(row.i),
            str(row.j),
            str(row.expected),
            str(row.cells),
            str(row.rank),
            "[green]✓[/green]" if row.matches else "[red]✗[/red]",
        )
    return table


def relations_table(relations: RelationSet) -> Table:
    i, j = relations.levels
    table = Table(
        title=f"type I relations, n={relations.n} ij={i}{j} ({len(relations.type_one)})",
        header_style="bold",
        border_style="blue",
    )
    table.add_column("#", justify="right", style="dim")
    table.add_column("Relation")
    for idx, text in enumerate(relations.render(), 1):
        table.add_row(str(idx), text)
    return table


def report_table(report: RunReport) -> Table:
    table = Table(
        title=f"qflag {report.command}", show_header=True, header_style="bold", border_style="blue"
    )
    table.add_column("Check", style="cyan")
    table.add_column("Status")
    table.add_column("Cases", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Time", justify="right")
    for check in report.checks:
        table.add_row(
            check.name,
            STATUS_STYLE[check.status],
            str(check.cases),
            str(check.failure_count) if check.failure_count else "[dim]--[/dim]",
            format_time(check.elapsed),
        )
    return table


def print_report(report: RunReport, console: Console | None = None) -> None:
    """Checks table, the first failures of each failing check, then a summary panel."""
    console = console or Console()
    console.print(report_table(report))
    for check in report.failed_checks:
        console.print(f"\n[bold red]{check.name}[/bold red]")
        for failure in check.failures:
            console.print(f"  • {failure}", markup=False, highlight=False)
        hidden = check.failure_count - len(check.failures)
        if hidden > 0:
            console.print(f"  [dim]... {hidden} more[/dim]")
    params = " ".join(f"{k}={v}" for k, v in report.parameters.items())
    style = "green" if report.passed else "red"
    console.print(
        Panel(
            f"[bold]{report.status.upper()}[/bold]  {len(report.checks)} check(s), "
            f"{report.total_cases} case(s) in {format_time(report.elapsed)}\n[dim]{params}[/dim]",
            border_style=style,
        )
    )

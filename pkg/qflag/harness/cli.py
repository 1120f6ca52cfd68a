"""
Command-line entry point: ``qflag <subcommand> ...``.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import logging
import os
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from deal import PreContractError
from returns.result import Failure
from rich.console import Console
from rich.markup import escape

from qflag.core.census import dimension_table
from qflag.core.errors import QFlagError
from qflag.core.flagbasis import quadratic_relations
from qflag.core.orthocell import enumerate_effective, enumerate_monogressive, enumerate_orthocells
from qflag.harness import display
from qflag.harness.config import QFlagConfig, load_config
from qflag.harness.export import (
    cells_document,
    dims_document,
    dumps,
    relations_document,
    report_document,
    write_json,
)
from qflag.harness.log import setup_logging
from qflag.harness.models import RunReport
from qflag.harness.report import write_markdown
from qflag.harness.runner import SuiteRunner
from qflag.harness.suites import SUITE_CHOICES

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

FILTERS = ["all", "monogressive", "effective"]


class UsageError(Exception):
    """Parameters are well-formed for argparse but invalid for qflag."""


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["json", "table"],
        default="table",
        help="Output format (default: table)",
    )
    common.add_argument(
        "--output",
        type=Path,
        help="Also write the JSON document to this path",
    )
    common.add_argument(
        "--workers",
        type=int,
        help="Worker threads for suites (default: 1, sequential)",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="-v for progress logging, -vv for debug",
    )
    common.add_argument(
        "--n",
        type=int,
        required=True,
        help="Rank parameter n of SL(n)",
    )

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, help="Sampled points per cell (default: 100)")
    sampling.add_argument("--seed", type=int, help="Sampling seed (default: 42)")
    sampling.add_argument(
        "--q",
        dest="q0",
        help="Rational specialization of q as NUM/DEN (default: 2)",
    )

    parser = argparse.ArgumentParser(
        prog="qflag",
        description="Orthocells, flag modules and quadratic relations for quantum SL(n)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cells = sub.add_parser("orthocells", parents=[common], help="List orthocells")
    cells.add_argument("--rank", type=int, help="Only cells with this many roots")
    cells.add_argument(
        "--filter",
        choices=FILTERS,
        help="Which cells to list (default: effective when --i/--j are given, else monogressive)",
    )
    cells.add_argument("--i", type=int, help="First level for --filter effective")
    cells.add_argument("--j", type=int, help="Second level for --filter effective")

    sub.add_parser("dims", parents=[common], help="Compare span ranks with D_{n;i,j}")

    verify = sub.add_parser("verify", parents=[common, sampling], help="Run a verification suite")
    verify.add_argument(
        "--suite",
        choices=SUITE_CHOICES,
        required=True,
        help="Suite to run",
    )

    rel = sub.add_parser("relations", parents=[common], help="Quadratic relations in degree ω_i+ω_j")
    rel.add_argument("--i", type=int, required=True, help="First level")
    rel.add_argument("--j", type=int, required=True, help="Second level")

    report = sub.add_parser("report", parents=[common, sampling], help="Run everything")
    report.add_argument("--markdown", type=Path, help="Also write a markdown summary here")

    return parser


def _check_n(n: int, config: QFlagConfig) -> None:
    if not 2 <= n <= config.max_n:
        raise UsageError(f"--n must be in [2, {config.max_n}], got {n}")


def _check_level(name: str, value: int | None, n: int) -> int:
    if value is None:
        raise UsageError(f"--{name} is required here")
    if not 1 <= value <= n - 1:
        raise UsageError(f"--{name} must be in [1, {n - 1}], got {value}")
    return value


def _emit(
    args: argparse.Namespace, console: Console, document: dict[str, Any], table: Any
) -> None:
    if args.format == "json":
        print(dumps(document))
    else:
        console.print(table)
    if args.output:
        saved = write_json(document, args.output)
        if isinstance(saved, Failure):
            raise OSError(saved.failure())
        logger.info("wrote %s", saved.unwrap())


def cmd_orthocells(args: argparse.Namespace, config: QFlagConfig, console: Console) -> int:
    n = args.n
    if args.rank is not None and args.rank < 0:
        raise UsageError(f"--rank must be non-negative, got {args.rank}")
    has_levels = args.i is not None or args.j is not None
    filter_name = args.filter or ("effective" if has_levels else "monogressive")
    levels = None
    if filter_name == "effective":
        levels = (_check_level("i", args.i, n), _check_level("j", args.j, n))
        cells = enumerate_effective(n, *levels)
        if args.rank is not None:
            cells = [c for c in cells if c.rank == args.rank]
    elif filter_name == "all":
        cells = enumerate_orthocells(n, args.rank)
    else:
        cells = enumerate_monogressive(n, args.rank)
    title = f"{len(cells)} {filter_name} orthocell(s), n={n}"
    if args.rank is not None:
        title += f", rank {args.rank}"
    document = cells_document(n, cells, args.rank, filter_name, levels)
    _emit(args, console, document, display.cells_table(cells, title))
    return EXIT_PASS


def cmd_dims(args: argparse.Namespace, config: QFlagConfig, console: Console) -> int:
    rows = dimension_table(args.n)
    _emit(args, console, dims_document(args.n, rows), display.dims_table(args.n, rows))
    return EXIT_PASS if all(row.matches for row in rows) else EXIT_FAILURE


def cmd_relations(args: argparse.Namespace, config: QFlagConfig, console: Console) -> int:
    i, j = _check_level("i", args.i, args.n), _check_level("j", args.j, args.n)
    relations = quadratic_relations(args.n, i, j)
    _emit(args, console, relations_document(relations), display.relations_table(relations))
    return EXIT_PASS


def _finish(args: argparse.Namespace, console: Console, report: RunReport) -> int:
    if args.format == "json":
        print(dumps(report_document(report)))
    else:
        display.print_report(report, console)
    if args.output:
        saved = write_json(report_document(report), args.output)
        if isinstance(saved, Failure):
            raise OSError(saved.failure())
    markdown = getattr(args, "markdown", None)
    if markdown:
        written = write_markdown(report, markdown)
        if isinstance(written, Failure):
            raise OSError(written.failure())
    return EXIT_PASS if report.passed else EXIT_FAILURE


def _sampling_parameters(config: QFlagConfig) -> dict[str, Any]:
    return {"q0": str(config.q0), "seed": config.seed, "samples": config.samples}


def cmd_verify(args: argparse.Namespace, config: QFlagConfig, console: Console) -> int:
    runner = SuiteRunner(config, show_progress=args.format == "table" and console.is_terminal)
    parameters = {"n": args.n, "suite": args.suite, **_sampling_parameters(config)}
    return _finish(args, console, runner.run_suite(args.suite, args.n, parameters))


def cmd_report(args: argparse.Namespace, config: QFlagConfig, console: Console) -> int:
    runner = SuiteRunner(config, show_progress=args.format == "table" and console.is_terminal)
    parameters = {"n": args.n, **_sampling_parameters(config)}
    return _finish(args, console, runner.run_report(args.n, parameters))


COMMANDS = {
    "orthocells": cmd_orthocells,
    "dims": cmd_dims,
    "verify": cmd_verify,
    "relations": cmd_relations,
    "report": cmd_report,
}


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging(args.verbose)
    console = Console()
    err = Console(stderr=True)

    overrides = {
        "q0": getattr(args, "q0", None),
        "seed": getattr(args, "seed", None),
        "samples": getattr(args, "samples", None),
        "workers": args.workers,
    }
    loaded = load_config(os.environ, overrides)
    if isinstance(loaded, Failure):
        err.print(f"[red]error:[/red] {escape(loaded.failure())}")
        return EXIT_USAGE
    config = loaded.unwrap()

    try:
        _check_n(args.n, config)
        return COMMANDS[args.command](args, config, console)
    except (UsageError, PreContractError) as e:
        err.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        return EXIT_USAGE
    except QFlagError as e:
        err.print(f"[red]failed:[/red] {type(e).__name__}: {escape(str(e))}", highlight=False)
        return EXIT_FAILURE
    except OSError as e:
        err.print(f"[red]error:[/red] {escape(str(e))}", highlight=False)
        return EXIT_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())

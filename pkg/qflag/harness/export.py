"""
JSON documents for every qflag command, file export, and decoders back to
core values.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from returns.result import Failure, Result, Success

from qflag.core.census import DimensionRow
from qflag.core.flagbasis import RelationSet
from qflag.core.orthocell import Orthocell
from qflag.core.scalars import LaurentScalar
from qflag.core.uqrep import TensorVector
from qflag.harness.models import RunReport

SCHEMA_VERSION = 1


def cells_document(
    n: int, cells: list[Orthocell], rank: int | None, filter_name: str, levels: tuple[int, int] | None
) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "command": "orthocells",
        "n": n,
        "rank": rank,
        "filter": filter_name,
        "levels": list(levels) if levels else None,
        "count": len(cells),
        "cells": [cell.to_dict() for cell in cells],
    }


def dims_document(n: int, rows: list[DimensionRow]) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "command": "dims",
        "n": n,
        "status": "pass" if all(r.matches for r in rows) else "fail",
        "rows": [row.to_dict() for row in rows],
    }


def relations_document(relations: RelationSet) -> dict[str, Any]:
    return {
        "schema": SCHEMA_VERSION,
        "command": "relations",
        **relations.to_dict(),
        "rendered": relations.render(),
        "typeII_is_identity": relations.type_two_is_identity,
    }


def report_document(report: RunReport) -> dict[str, Any]:
    return {"schema": SCHEMA_VERSION, **report.to_dict()}


def dumps(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False)


def write_json(document: dict[str, Any], path: Path) -> Result[Path, str]:
    """Write ``document`` to ``path``, creating parent directories."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(document) + "\n", encoding="utf-8")
    except OSError as e:
        return Failure(f"Cannot write {path}: {e}")
    return Success(path)


def read_json(path: Path) -> Result[dict[str, Any], str]:
    try:
        return Success(json.loads(path.read_text(encoding="utf-8")))
    except FileNotFoundError:
        return Failure(f"File not found: {path}")
    except json.JSONDecodeError as e:
        return Failure(f"Invalid JSON in {path}: {e}")


def decode_cell(data: dict[str, Any]) -> Orthocell:
    return Orthocell.from_dict(data)


def decode_scalar(data: dict[str, Any]) -> LaurentScalar:
    return LaurentScalar.from_dict(data)


def decode_vector(data: dict[str, Any]) -> TensorVector:
    return TensorVector.from_dict(data)


def decode_cells(document: dict[str, Any]) -> list[Orthocell]:
    return [decode_cell(c) for c in document.get("cells", [])]


def decode_report(document: dict[str, Any]) -> RunReport:
    return RunReport.from_dict(document)


def load_report(path: Path) -> Result[RunReport, str]:
    """Read a saved report document back into a RunReport."""
    document = read_json(path)
    if isinstance(document, Failure):
        return document
    data = document.unwrap()
    try:
        return Success(decode_report(data))
    except (KeyError, ValueError) as e:
        return Failure(f"{path} is not a report document: {e}")

"""Tests for JSON documents, file export and markdown reports."""

import json
from fractions import Fraction

from returns.result import Failure

from qflag.core.census import dimension_table
from qflag.core.flagbasis import quadratic_relations
from qflag.core.orthocell import enumerate_monogressive
from qflag.core.outcome import CheckReport
from qflag.core.scalars import ONE, Q
from qflag.core.uqrep import TensorVector
from qflag.harness.export import (
    SCHEMA_VERSION,
    cells_document,
    decode_cells,
    decode_scalar,
    decode_vector,
    dims_document,
    dumps,
    load_report,
    relations_document,
    report_document,
    write_json,
)
from qflag.harness.models import CheckResult, RunReport
from qflag.harness.report import generate_markdown, write_markdown


def _report() -> RunReport:
    broken = CheckReport("closure n=3 ij=12")
    broken.tick(False, "X_1 leaves the span")
    noted = CheckReport("counts n=3", 3, notes=["rank 0: 6, rank 1: 8"])
    return RunReport(
        command="report",
        parameters={"n": 3, "q0": "2"},
        checks=[
            CheckResult.from_report(noted, 0.2),
            CheckResult.from_report(broken, 0.1, failure_cap=0),
        ],
        elapsed=2.0,
    )


def test_cells_document_decodes_back():
    cells = enumerate_monogressive(3, 1)
    document = cells_document(3, cells, 1, "monogressive", None)
    assert document["schema"] == SCHEMA_VERSION
    assert document["count"] == 8
    assert decode_cells(json.loads(dumps(document))) == cells


def test_dims_document():
    document = dims_document(3, dimension_table(3))
    assert document["status"] == "pass"
    assert [row["D"] for row in document["rows"]] == [6, 8, 6]


def test_relations_document():
    document = relations_document(quadratic_relations(2, 1, 1))
    assert document["rendered"] == ["x⊗y − q·y⊗x"]
    assert document["typeII_is_identity"]
    assert document["levels"] == [1, 1]


def test_scalar_and_vector_decoders():
    scalar = Q * Q + ONE
    assert decode_scalar(scalar.to_dict()) == scalar
    vector = TensorVector.basis((1, 1), ((2,), (1,)), Q) + TensorVector.basis(
        (1, 1), ((1,), (2,)), ONE
    )
    assert decode_vector(json.loads(json.dumps(vector.to_dict()))) == vector
    rational = TensorVector((1,), {((1,),): Fraction(3, 4)})
    assert decode_vector(rational.to_dict()) == rational


def test_report_round_trip_through_a_file(tmp_path):
    path = tmp_path / "out" / "report.json"
    saved = write_json(report_document(_report()), path)
    assert saved.unwrap() == path
    loaded = load_report(path).unwrap()
    assert loaded.status == "fail"
    assert loaded.checks[1].failure_count == 1


def test_load_report_failures(tmp_path):
    assert isinstance(load_report(tmp_path / "missing.json"), Failure)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert isinstance(load_report(bad), Failure)
    wrong = tmp_path / "wrong.json"
    wrong.write_text("{}")
    assert isinstance(load_report(wrong), Failure)


def test_markdown_report():
    text = generate_markdown(_report())
    assert text.startswith("# qflag report report")
    assert "**Parameters:** n=3, q0=2" in text
    assert "- **Status:** FAIL" in text
    assert "| counts n=3 | pass | 3 | 0 |" in text
    assert "- **counts n=3:** rank 0: 6, rank 1: 8" in text
    assert "### closure n=3 ij=12" in text
    assert "- ... 1 more" in text


def test_write_markdown(tmp_path):
    path = tmp_path / "nested" / "report.md"
    assert write_markdown(_report(), path).unwrap() == path
    assert path.read_text(encoding="utf-8").startswith("# qflag")

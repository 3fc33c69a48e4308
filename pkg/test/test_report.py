from __future__ import annotations

import csv
import io
from decimal import Decimal
from pathlib import Path

import export_csv
import reference_table
from certificate import BoundRecord, Certificate, DecimalEnclosure, Verdict
from interval import Interval
from report import Report
from solver import DimensionResult
from reference_table import HEADER, RowOutcome


def _cert(verdict: Verdict = Verdict.VERIFIED) -> Certificate:
    cert = Certificate(statementId="mq-gap", verdict=verdict, inputs={"q": "6", "which": "two_pow_gap"})
    cert.bounds.append(BoundRecord("mq_gap.two_pow_gap", "q=6", DecimalEnclosure(Decimal("0.90"), Decimal("0.91")), "< 0.96", "below"))
    cert.notes["recheck"] = "mpmath agrees"
    return cert


def _outcomes() -> list[RowOutcome]:
    rows = reference_table.load()
    return [
        RowOutcome(rows[0], DimensionResult(Interval(0.53128, 0.5312806)), 0.5),
        RowOutcome(rows[1], DimensionResult(Interval(0.40, 0.41)), 0.5),
    ]


def test_csv_rows() -> None:
    out = io.StringIO()
    export_csv.write(out, _outcomes())
    lines = list(csv.reader(io.StringIO(out.getvalue())))
    assert lines[0] == HEADER
    assert len(lines) == 3
    assert lines[1][0] == "{1,2}" and lines[1][5] == "pass"
    assert lines[2][5] == "FAIL"


def test_csv_bounds() -> None:
    out = io.StringIO()
    export_csv.write_bounds(out, _cert())
    lines = list(csv.reader(io.StringIO(out.getvalue())))
    assert lines[0] == ["name", "inputs", "lo", "hi", "claim", "verdict"]
    assert lines[1] == ["mq_gap.two_pow_gap", "q=6", "0.90", "0.91", "< 0.96", "below"]


def test_report_verdict_combines_everything() -> None:
    assert Report("r", [_cert()]).verdict == Verdict.VERIFIED
    assert Report("r", [_cert(), _cert(Verdict.INCONCLUSIVE)]).verdict == Verdict.INCONCLUSIVE
    assert Report("r", [_cert()], _outcomes()).verdict == Verdict.FAILED


def test_report_html(tmp_path: Path) -> None:
    path = tmp_path / "report.html"
    Report("Certificates", [_cert()], _outcomes()).saveTo(str(path))
    html = path.read_text()
    assert html.startswith("<!DOCTYPE html>")
    assert "<title>Certificates</title>" in html
    assert "mq-gap: verified" in html
    assert "Reference table: 1/2 rows pass" in html
    assert "mq_gap.two_pow_gap" in html
    assert "mpmath agrees" in html

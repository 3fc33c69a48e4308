from __future__ import annotations

import csv
import io
from pathlib import Path

from click.testing import CliRunner

from app import cli
from certificate import Certificate, Verdict

FAST_FLAGS = ["--mesh", "48", "--depth", "10"]


def _run(*args: str):
    return CliRunner().invoke(cli, list(args))


def test_dim_prints_enclosure() -> None:
    result = _run("dim", "explicit:[1,2]", *FAST_FLAGS)
    assert result.exit_code == 0, result.output
    assert "0.5312" in result.output


def test_dim_bad_alphabet_is_usage_error() -> None:
    result = _run("dim", "explicit:[1;2]")
    assert result.exit_code == 2
    assert "cannot parse alphabet" in result.output


def test_certify_and_verify(tmp_path: Path) -> None:
    path = tmp_path / "mq11.cert"
    result = _run("certify", "mq-upper", "--q", "11", "--out", str(path))
    assert result.exit_code == 0, result.output
    assert "verdict: verified" in result.output
    cert = Certificate.load(str(path))
    assert cert.statementId == "mq-upper" and cert.verdict == Verdict.VERIFIED
    result = _run("verify", str(path))
    assert result.exit_code == 0, result.output


def test_verify_detects_tampering(tmp_path: Path) -> None:
    path = tmp_path / "critical.cert"
    assert _run("certify", "critical-bp", "--q", "11", "--out", str(path)).exit_code == 0
    text = path.read_text().replace("criticalBreakPoint: 22", "criticalBreakPoint: 24")
    path.write_text(text)
    result = _run("verify", str(path))
    assert result.exit_code == 1
    assert "notes.criticalBreakPoint" in result.output


def test_certify_json_output() -> None:
    result = _run("certify", "critical-bp", "--q", "11", "--json")
    assert result.exit_code == 0, result.output
    assert '"statementId": "critical-bp"' in result.output


def test_certify_errors() -> None:
    result = _run("certify", "nonsense")
    assert result.exit_code == 2
    assert "unknown statement" in result.output
    result = _run("certify", "thm2", "--q", "2", "--k", "1")
    assert result.exit_code == 1
    assert "no gap" in result.output
    result = _run("certify", "thm2", "--q", "3")
    assert result.exit_code == 1
    assert "--k" in result.output


def test_bounds_csv(tmp_path: Path) -> None:
    path = tmp_path / "bounds.csv"
    result = _run("bounds", "--no-recheck", "--csv", str(path))
    assert result.exit_code == 0, result.output
    lines = path.read_text().splitlines()
    assert lines[0] == "name,inputs,lo,hi,claim,verdict"
    assert any(line.startswith("tau,") for line in lines)


def test_table_unknown_row() -> None:
    result = _run("table", "{1,7}")
    assert result.exit_code == 1
    assert "unknown reference rows" in result.output


def test_table_writes_csv_and_html(tmp_path: Path) -> None:
    csvPath = tmp_path / "table.csv"
    htmlPath = tmp_path / "table.html"
    result = _run("table", "{1,2}", "--fast", "--csv", str(csvPath), "--html", str(htmlPath))
    assert result.exit_code in (0, 1), result.output
    assert "rows pass" in result.output
    rows = list(csv.reader(io.StringIO(csvPath.read_text())))
    assert rows[1][0] == "{1,2}"
    assert "Reference table regression" in htmlPath.read_text()


def test_breakpoint_command() -> None:
    result = _run("breakpoint", "family:P_q_star(q=2,count=1)", "explicit:[1]", "0.3", *FAST_FLAGS)
    assert result.exit_code == 0, result.output
    assert "strict break point 8" in result.output


def test_greedy_command() -> None:
    result = _run("greedy", "family:M_q(q=1,count=1)", "0.7", "--rounds", "1", "--fast", *FAST_FLAGS)
    assert result.exit_code == 0, result.output
    assert "round 1" in result.output


def test_scan_command() -> None:
    result = _run("scan", "explicit:[1,2,3]", "--grid", "0.5313", "--max-size", "2", "--fast", *FAST_FLAGS)
    assert result.exit_code == 0, result.output
    assert "1/1 grid values attained" in result.output
    result = _run("scan", "explicit:[1,2,3]", "--grid", "half")
    assert result.exit_code == 2


def test_report_command(tmp_path: Path) -> None:
    certPath = tmp_path / "mq5.cert"
    htmlPath = tmp_path / "report.html"
    assert _run("certify", "mq-upper", "--q", "5", "--out", str(certPath)).exit_code == 0
    result = _run("report", "--output", str(htmlPath), str(certPath))
    assert result.exit_code == 0, result.output
    assert "mq-upper: verified" in htmlPath.read_text()

from __future__ import annotations

import json
from decimal import Decimal
from pathlib import Path

import pytest

from certificate import BoundRecord, Certificate, DecimalEnclosure, Verdict, compare
from errors import SchemaError
from interval import Interval

from .helpers import tampered


def _sample() -> Certificate:
    cert = Certificate(statementId="thm2", verdict=Verdict.VERIFIED, inputs={"q": "3", "k": "1"}, config={"meshSize": "200"})
    cert.addResult("nu", Interval(0.4544871, 0.4544899))
    cert.addResult("mu", Interval(0.38, 0.39))
    cert.bounds.append(BoundRecord("pstar_gap_gamma.refined_q3k1", "q=3, k=1", DecimalEnclosure(Decimal("0.85"), Decimal("0.86")), "< 0.899", "below"))
    cert.notes["truncation"] = "12"
    cert.timings["total"] = "1.204"
    return cert


def test_verdict_exit_codes_and_combination() -> None:
    assert [v.exitCode for v in Verdict] == [0, 2, 1]
    assert Verdict.combine([Verdict.VERIFIED, Verdict.INCONCLUSIVE]) == Verdict.INCONCLUSIVE
    assert Verdict.combine([Verdict.INCONCLUSIVE, Verdict.FAILED]) == Verdict.FAILED
    assert Verdict.combine([]) == Verdict.VERIFIED


def test_decimal_enclosure_rounds_outward() -> None:
    e = DecimalEnclosure.from_interval(Interval(0.12345678901234, 0.12345678909999), digits=10)
    assert e == DecimalEnclosure(Decimal("0.1234567890"), Decimal("0.1234567891"))
    assert e.to_interval().lo <= 0.12345678901234
    assert str(e) == "[0.1234567890, 0.1234567891]"


def test_decimal_enclosure_parse_errors() -> None:
    with pytest.raises(SchemaError):
        DecimalEnclosure.parse("0.1, 0.2")
    with pytest.raises(SchemaError):
        DecimalEnclosure.parse("[0.1; 0.2]")
    with pytest.raises(SchemaError):
        DecimalEnclosure.parse("[abc, 0.2]")


def test_text_layout() -> None:
    text = _sample().dumps()
    lines = text.splitlines()
    assert lines[:3] == ["schema_version: 1", "statement_id: thm2", "verdict: verified"]
    assert "inputs:" in lines and "  k: 1" in lines
    # keys inside a block are sorted
    assert lines.index("  k: 1") < lines.index("  q: 3")
    assert "  - pstar_gap_gamma.refined_q3k1 | q=3, k=1 | [0.85, 0.86] | < 0.899 | below" in lines


def test_text_round_trip_is_exact() -> None:
    cert = _sample()
    again = Certificate.loads(cert.dumps())
    assert again == cert
    assert again.dumps() == cert.dumps()


def test_body_excludes_timings() -> None:
    cert = _sample()
    other = _sample()
    other.timings["total"] = "9.9"
    assert cert.body() == other.body()
    assert "timings" not in cert.body()


def test_json_round_trip(tmp_path: Path) -> None:
    cert = _sample()
    path = tmp_path / "thm2.json"
    cert.saveTo(str(path), asJson=True)
    raw = json.loads(path.read_text())
    assert raw["statementId"] == "thm2" and raw["results"]["nu"].startswith("[0.454487")
    assert Certificate.load(str(path)) == cert


def test_text_file_round_trip(tmp_path: Path) -> None:
    cert = _sample()
    path = tmp_path / "thm2.cert"
    cert.saveTo(str(path))
    assert Certificate.load(str(path)) == cert


@pytest.mark.parametrize("text", [
    "schema_version: 2\nstatement_id: x\nverdict: verified\n",
    "statement_id: x\nverdict: verified\n",
    "schema_version: 1\nstatement_id: x\nverdict: maybe\n",
    "schema_version: 1\nstatement_id: x\nverdict: verified\nextras:\n  a: b\n",
    "schema_version: 1\nstatement_id: x\nverdict: verified\n  a: b\n",
    "schema_version: 1\nstatement_id: x\nverdict: verified\nbounds:\n  - a | b\n",
])
def test_malformed_certificates(text: str) -> None:
    with pytest.raises(SchemaError):
        Certificate.loads(text)


def test_compare_exact_detects_tampering() -> None:
    cert = _sample()
    assert compare(cert, Certificate.loads(cert.dumps()), exact=True) == []
    diff = compare(cert, tampered(cert, "nu", "0.4544900"), exact=True)
    assert len(diff) == 1 and diff[0].startswith("results.nu")


def test_compare_refined_accepts_tighter_enclosure() -> None:
    cert = _sample()
    fresh = Certificate.loads(cert.dumps())
    fresh.results["mu"] = DecimalEnclosure(Decimal("0.385"), Decimal("0.386"))
    fresh.notes["truncation"] = "24"
    assert compare(cert, fresh, exact=False) == []
    assert compare(cert, fresh, exact=True) != []
    fresh.results["mu"] = DecimalEnclosure(Decimal("0.375"), Decimal("0.386"))
    assert any("not inside" in d for d in compare(cert, fresh, exact=False))


def test_compare_verdict_and_statement() -> None:
    cert = _sample()
    fresh = Certificate.loads(cert.dumps())
    fresh.verdict = Verdict.INCONCLUSIVE
    fresh.statementId = "dim"
    diff = compare(cert, fresh, exact=True)
    assert any(d.startswith("verdict") for d in diff)
    assert any(d.startswith("statement_id") for d in diff)

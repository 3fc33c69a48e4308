# pyright: strict
'''Machine-checkable certificates and their canonical text format.

A certificate is a flat set of blocks:

    schema_version: 1
    statement_id: thm2
    verdict: verified
    inputs:
      k: 1
      q: 3
    config:
      meshSize: 200
    results:
      mu: [0.4012345678, 0.4012345912]
    bounds:
      - pstar_gap_gamma.refined_q3k1 | q=3, k=1, s=[...] | [0.89, 0.90] | 0.899 | below
    notes:
      truncation: 12
    timings:
      total: 1.204

Keys inside a block are sorted, bound lines keep their order, and every value
is kept as text so that parsing and printing round-trip exactly.
'''
from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal
from enum import StrEnum
from typing import Any, Self

from errors import SchemaError
from interval import Interval, down, up

SCHEMA_VERSION = 1
DIGITS = 10
SLACK = Decimal("1e-12")

class Verdict(StrEnum):
    VERIFIED = "verified"
    INCONCLUSIVE = "inconclusive"
    FAILED = "failed"

    @property
    def exitCode(self) -> int:
        match self:
            case Verdict.VERIFIED:
                return 0
            case Verdict.INCONCLUSIVE:
                return 2
            case Verdict.FAILED:
                return 1

    @classmethod
    def combine(cls, verdicts: list[Verdict]) -> Verdict:
        if any(v == Verdict.FAILED for v in verdicts):
            return Verdict.FAILED
        if any(v == Verdict.INCONCLUSIVE for v in verdicts):
            return Verdict.INCONCLUSIVE
        return Verdict.VERIFIED

@dataclass(frozen=True)
class DecimalEnclosure:
    """An enclosure printed to a fixed number of decimals, lo rounded down and hi up."""
    lo: Decimal
    hi: Decimal

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"DecimalEnclosure needs lo <= hi, got [{self.lo}, {self.hi}]")

    @classmethod
    def from_interval(cls, x: Interval, digits: int = DIGITS) -> Self:
        quantum = Decimal(1).scaleb(-digits)
        return cls(Decimal(x.lo).quantize(quantum, rounding=ROUND_FLOOR), Decimal(x.hi).quantize(quantum, rounding=ROUND_CEILING))

    @classmethod
    def parse(cls, text: str) -> Self:
        t = text.strip()
        if not (t.startswith("[") and t.endswith("]")) or "," not in t:
            raise SchemaError(f"Malformed enclosure {text!r}")
        lo, hi = t[1:-1].split(",", 1)
        try:
            return cls(Decimal(lo.strip()), Decimal(hi.strip()))
        except ArithmeticError as e:
            raise SchemaError(f"Malformed enclosure {text!r}") from e

    def to_interval(self) -> Interval:
        lo = float(self.lo)
        hi = float(self.hi)
        return Interval(lo if Decimal(lo) <= self.lo else down(lo), hi if Decimal(hi) >= self.hi else up(hi))

    def contains(self, other: DecimalEnclosure, slack: Decimal = SLACK) -> bool:
        return self.lo - slack <= other.lo and other.hi <= self.hi + slack

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"

@dataclass(frozen=True)
class BoundRecord:
    """The serialised form of a checked inequality."""
    name: str
    inputs: str
    value: DecimalEnclosure
    threshold: str
    verdict: str

    def line(self) -> str:
        return " | ".join([self.name, self.inputs, str(self.value), self.threshold, self.verdict])

    @classmethod
    def parse(cls, line: str) -> Self:
        parts = line.split(" | ")
        if len(parts) != 5:
            raise SchemaError(f"Malformed bound line {line!r}")
        return cls(parts[0], parts[1], DecimalEnclosure.parse(parts[2]), parts[3], parts[4])

_BLOCKS = ("inputs", "config", "results", "bounds", "notes", "timings")

@dataclass
class Certificate:
    statementId: str
    verdict: Verdict
    inputs: dict[str, str] = field(default_factory=dict[str, str])
    config: dict[str, str] = field(default_factory=dict[str, str])
    results: dict[str, DecimalEnclosure] = field(default_factory=dict[str, DecimalEnclosure])
    bounds: list[BoundRecord] = field(default_factory=list[BoundRecord])
    notes: dict[str, str] = field(default_factory=dict[str, str])
    timings: dict[str, str] = field(default_factory=dict[str, str])
    schemaVersion: int = SCHEMA_VERSION

    def addResult(self, name: str, x: Interval) -> None:
        self.results[name] = DecimalEnclosure.from_interval(x)

    def dumps(self, includeTimings: bool = True) -> str:
        lines = [
            f"schema_version: {self.schemaVersion}",
            f"statement_id: {self.statementId}",
            f"verdict: {self.verdict.value}",
        ]
        blocks: dict[str, dict[str, str]] = {
            "inputs": self.inputs,
            "config": self.config,
            "results": {k: str(v) for k, v in self.results.items()},
            "notes": self.notes,
            "timings": self.timings if includeTimings else {},
        }
        for name in _BLOCKS:
            if name == "timings" and not includeTimings:
                continue
            lines.append(f"{name}:")
            if name == "bounds":
                lines.extend(f"  - {b.line()}" for b in self.bounds)
                continue
            for k in sorted(blocks[name]):
                v = blocks[name][k]
                assert "\n" not in v and ": " not in k, f"unserialisable entry {k!r}"
                lines.append(f"  {k}: {v}")
        return "\n".join(lines) + "\n"

    def body(self) -> str:
        """The deterministic part of the certificate, timings excluded."""
        return self.dumps(includeTimings=False)

    @classmethod
    def loads(cls, text: str) -> Self:
        header: dict[str, str] = {}
        blocks: dict[str, dict[str, str]] = {b: {} for b in _BLOCKS if b != "bounds"}
        bounds: list[BoundRecord] = []
        current: str | None = None
        for raw in text.splitlines():
            if raw.strip() == "":
                continue
            if not raw.startswith(" "):
                key, sep, value = raw.partition(":")
                if sep == "":
                    raise SchemaError(f"Malformed line {raw!r}")
                if value == "":
                    if key not in _BLOCKS:
                        raise SchemaError(f"Unknown block {key!r}")
                    current = key
                else:
                    header[key] = value.strip()
                    current = None
                continue
            if current is None:
                raise SchemaError(f"Indented line outside a block: {raw!r}")
            entry = raw[2:]
            if current == "bounds":
                if not entry.startswith("- "):
                    raise SchemaError(f"Malformed bound entry {raw!r}")
                bounds.append(BoundRecord.parse(entry[2:]))
            else:
                key, sep, value = entry.partition(": ")
                if sep == "":
                    raise SchemaError(f"Malformed entry {raw!r}")
                blocks[current][key] = value
        try:
            version = int(header["schema_version"])
            statementId = header["statement_id"]
            verdict = Verdict(header["verdict"])
        except (KeyError, ValueError) as e:
            raise SchemaError(f"Certificate header incomplete or invalid: {e}") from e
        if version != SCHEMA_VERSION:
            raise SchemaError(f"Certificate schema_version {version} is not supported (expected {SCHEMA_VERSION})")
        return cls(
            statementId=statementId,
            verdict=verdict,
            inputs=blocks["inputs"],
            config=blocks["config"],
            results={k: DecimalEnclosure.parse(v) for k, v in blocks["results"].items()},
            bounds=bounds,
            notes=blocks["notes"],
            timings=blocks["timings"],
            schemaVersion=version,
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "schemaVersion": self.schemaVersion,
            "statementId": self.statementId,
            "verdict": self.verdict.value,
            "inputs": dict(sorted(self.inputs.items())),
            "config": dict(sorted(self.config.items())),
            "results": {k: str(v) for k, v in sorted(self.results.items())},
            "bounds": [
                {"name": b.name, "inputs": b.inputs, "value": str(b.value), "threshold": b.threshold, "verdict": b.verdict}
                for b in self.bounds
            ],
            "notes": dict(sorted(self.notes.items())),
            "timings": dict(sorted(self.timings.items())),
        }

    @classmethod
    def from_json(cls, o: dict[str, Any]) -> Self:
        if o.get("schemaVersion") != SCHEMA_VERSION:
            raise SchemaError(f"Certificate schemaVersion {o.get('schemaVersion')} is not supported (expected {SCHEMA_VERSION})")
        return cls(
            statementId=o["statementId"],
            verdict=Verdict(o["verdict"]),
            inputs=dict(o["inputs"]),
            config=dict(o["config"]),
            results={k: DecimalEnclosure.parse(v) for k, v in o["results"].items()},
            bounds=[BoundRecord(b["name"], b["inputs"], DecimalEnclosure.parse(b["value"]), b["threshold"], b["verdict"]) for b in o["bounds"]],
            notes=dict(o["notes"]),
            timings=dict(o["timings"]),
        )

    def saveTo(self, path: str, asJson: bool = False) -> None:
        with open(path, "w") as f:
            if asJson:
                json.dump(self.to_json(), f, sort_keys=True, indent=4, separators=(',', ': '))
            else:
                f.write(self.dumps())

    @classmethod
    def load(cls, path: str) -> Self:
        with open(path, "r") as f:
            text = f.read()
        if text.lstrip().startswith("{"):
            return cls.from_json(json.loads(text))
        return cls.loads(text)

def compare(stored: Certificate, fresh: Certificate, exact: bool) -> list[str]:
    '''Differences between a stored certificate and a recomputation of it.

    With `exact` (same configuration) every entry must match verbatim. Otherwise
    each recomputed enclosure must lie inside the stored one, up to SLACK.
    '''
    diff: list[str] = []
    if stored.statementId != fresh.statementId:
        diff.append(f"statement_id: {stored.statementId} != {fresh.statementId}")
    if stored.verdict != fresh.verdict:
        diff.append(f"verdict: stored {stored.verdict.value}, recomputed {fresh.verdict.value}")
    for k in sorted(set(stored.results) | set(fresh.results)):
        a = stored.results.get(k)
        b = fresh.results.get(k)
        if a is None or b is None:
            diff.append(f"results.{k}: present in only one certificate")
        elif exact and a != b:
            diff.append(f"results.{k}: stored {a}, recomputed {b}")
        elif not exact and not a.contains(b):
            diff.append(f"results.{k}: recomputed {b} not inside stored {a}")
    if len(stored.bounds) != len(fresh.bounds):
        diff.append(f"bounds: stored {len(stored.bounds)} entries, recomputed {len(fresh.bounds)}")
    for a, b in zip(stored.bounds, fresh.bounds):
        if (a.name, a.inputs if exact else "", a.threshold, a.verdict) != (b.name, b.inputs if exact else "", b.threshold, b.verdict):
            diff.append(f"bounds: stored '{a.line()}', recomputed '{b.line()}'")
        elif exact and a.value != b.value:
            diff.append(f"bounds.{a.name}: stored {a.value}, recomputed {b.value}")
    if exact and stored.notes != fresh.notes:
        for k in sorted(set(stored.notes) | set(fresh.notes)):
            if stored.notes.get(k) != fresh.notes.get(k):
                diff.append(f"notes.{k}: stored {stored.notes.get(k)!r}, recomputed {fresh.notes.get(k)!r}")
    return diff

__all__ = [
    "BoundRecord",
    "Certificate",
    "DecimalEnclosure",
    "Verdict",
    "compare",
    "SCHEMA_VERSION",
]

# pyright: strict
'''The shipped reference dimension bands and the regression run against them.'''
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from functools import cache
from pathlib import Path
from typing import Any, Iterable, Self

from alphabets import Alphabet
from errors import ParameterError, SchemaError
from interval import Interval
from solver import DimensionResult, SolverConfig, dimension

DATA = Path(__file__).resolve().parents[1] / "data" / "reference_table.json"

# a row passes when the computed enclosure meets the band and is at most this wide
MAX_WIDTH = 1e-4

@dataclass(frozen=True)
class Row:
    name: str
    alphabet: str
    band: tuple[str, str]

    @property
    def bandInterval(self) -> Interval:
        return Interval(Interval.decimal(self.band[0]).lo, Interval.decimal(self.band[1]).hi)

    def parsedAlphabet(self) -> Alphabet:
        return Alphabet.from_text(self.alphabet)

    @classmethod
    def from_json(cls, o: dict[str, Any]) -> Self:
        try:
            lo, hi = o["band"]
            return cls(o["name"], o["alphabet"], (str(lo), str(hi)))
        except (KeyError, ValueError, TypeError) as e:
            raise SchemaError(f"malformed reference row {o!r}") from e

    def to_json(self) -> dict[str, Any]:
        return {"name": self.name, "alphabet": self.alphabet, "band": list(self.band)}

@cache
def load(path: Path = DATA) -> tuple[Row, ...]:
    with open(path, "r") as f:
        data = json.load(f)
    return tuple(Row.from_json(r) for r in data["rows"])

def select(rows: Iterable[Row], selector: Iterable[str]) -> list[Row]:
    '''Rows named by the selector, in table order; "all" selects every row.'''
    rows = list(rows)
    wanted = list(selector)
    if not wanted or "all" in wanted:
        return rows
    names = {r.name for r in rows}
    unknown = [w for w in wanted if w not in names]
    if unknown:
        raise ParameterError(f"unknown reference rows {unknown}; known: {', '.join(r.name for r in rows)}")
    return [r for r in rows if r.name in wanted]

def band(name: str) -> Interval:
    for r in load():
        if r.name == name:
            return r.bandInterval
    raise ParameterError(f"no reference row {name!r}")

@dataclass(frozen=True)
class RowOutcome:
    row: Row
    result: DimensionResult
    seconds: float

    @property
    def intersects(self) -> bool:
        return self.result.enclosure.intersects(self.row.bandInterval)

    @property
    def narrow(self) -> bool:
        return self.result.width <= MAX_WIDTH

    @property
    def passed(self) -> bool:
        return self.intersects and self.narrow

    def cells(self) -> list[str]:
        e = self.result.enclosure
        return [
            self.row.name,
            self.row.alphabet,
            f"[{self.row.band[0]}, {self.row.band[1]}]",
            e.format(6),
            f"{self.result.width:.2e}",
            "pass" if self.passed else "FAIL",
            f"{self.seconds:.2f}",
        ]

HEADER = ["row", "alphabet", "reference", "computed", "width", "status", "seconds"]

def run_row(row: Row, config: SolverConfig) -> RowOutcome:
    """Top level so that a process pool can pickle it."""
    start = time.perf_counter()
    result = dimension(row.parsedAlphabet(), config)
    return RowOutcome(row, result, time.perf_counter() - start)

__all__ = [
    "DATA",
    "HEADER",
    "MAX_WIDTH",
    "Row",
    "RowOutcome",
    "band",
    "load",
    "run_row",
    "select",
]

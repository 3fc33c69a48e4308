from __future__ import annotations

import pytest

import reference_table
from bounds import golden_bounds
from errors import ParameterError, SchemaError
from interval import Interval
from solver import DimensionResult, SolverConfig
from reference_table import HEADER, MAX_WIDTH, Row, RowOutcome

from .helpers import DIM_1_2, FAST


def _first() -> Row:
    return reference_table.load()[0]


def test_shipped_rows() -> None:
    rows = reference_table.load()
    assert len(rows) == 20
    assert len({r.name for r in rows}) == len(rows)
    assert rows[0] == Row("{1,2}", "explicit:[1,2]", ("0.531277", "0.531281"))
    assert reference_table.load() is rows


def test_every_row_parses_and_is_finite() -> None:
    for r in reference_table.load():
        a = r.parsedAlphabet()
        assert not a.infinite
        band = r.bandInterval
        assert 0 < band.lo < band.hi < 1


def test_band_lookup() -> None:
    assert reference_table.band("{1,2}").contains(DIM_1_2)
    assert reference_table.band("{1,2^6}").contains(Interval(0.215370, 0.215371))
    with pytest.raises(ParameterError):
        reference_table.band("{1,7}")


def test_select() -> None:
    rows = reference_table.load()
    assert reference_table.select(rows, []) == list(rows)
    assert reference_table.select(rows, ["all"]) == list(rows)
    picked = reference_table.select(rows, ["{1,3}", "{1,2}"])
    assert [r.name for r in picked] == ["{1,2}", "{1,3}"]
    with pytest.raises(ParameterError):
        reference_table.select(rows, ["{1,7}"])


def test_row_json() -> None:
    r = _first()
    assert Row.from_json(r.to_json()) == r
    with pytest.raises(SchemaError):
        Row.from_json({"name": "x", "alphabet": "explicit:[1]"})
    with pytest.raises(SchemaError):
        Row.from_json({"name": "x", "alphabet": "explicit:[1]", "band": ["0.1"]})


def test_golden_bounds_sandwich_two_letter_rows() -> None:
    for r in reference_table.load():
        a = r.parsedAlphabet()
        if len(a) != 2 or a.gamma != 1:
            continue
        sMinus, sPlus = golden_bounds(a.elements[1])
        assert sMinus <= r.bandInterval.hi, r.name
        assert r.bandInterval.lo <= sPlus, r.name


def test_outcome_pass_needs_overlap_and_width() -> None:
    r = _first()
    good = RowOutcome(r, DimensionResult(Interval(0.53128, 0.5312806)), 0.25)
    assert good.intersects and good.narrow and good.passed
    wide = RowOutcome(r, DimensionResult(Interval(0.5312, 0.5312 + 2 * MAX_WIDTH)), 0.25)
    assert wide.intersects and not wide.narrow and not wide.passed
    off = RowOutcome(r, DimensionResult(Interval(0.5, 0.50001)), 0.25)
    assert not off.intersects and not off.passed


def test_outcome_cells() -> None:
    o = RowOutcome(_first(), DimensionResult(Interval(0.53128, 0.5312806)), 0.25)
    cells = o.cells()
    assert len(cells) == len(HEADER)
    assert cells[0] == "{1,2}" and cells[2] == "[0.531277, 0.531281]"
    assert cells[5] == "pass" and cells[6] == "0.25"


def test_run_row() -> None:
    o = reference_table.run_row(_first(), FAST)
    assert o.intersects
    assert o.seconds >= 0


@pytest.mark.slow
@pytest.mark.parametrize("row", reference_table.load(), ids=lambda r: r.name)
def test_every_row_at_default_settings(row: Row) -> None:
    o = reference_table.run_row(row, SolverConfig())
    assert o.intersects, o.cells()
    assert o.result.width <= 1e-4, o.cells()

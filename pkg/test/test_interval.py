from __future__ import annotations

import math
import sys

import pytest

from errors import DomainError
from interval import Interval, down, power, up


def test_construction_rejects_reversed_and_nan() -> None:
    with pytest.raises(ValueError):
        Interval(1.0, 0.0)
    with pytest.raises(ValueError):
        Interval(math.nan, 1.0)


def test_decimal_encloses_literal() -> None:
    x = Interval.decimal("0.1")
    assert x.lo < x.hi
    assert x.lo <= 0.1 <= x.hi
    assert Interval.decimal("0.5").isPoint()


def test_exact_int_beyond_53_bits() -> None:
    n = 2**60 + 1
    x = Interval.exact_int(n)
    assert not x.isPoint()
    assert x.lo <= n <= x.hi
    assert Interval.exact_int(12).isPoint()


def test_arithmetic_is_outward_rounded() -> None:
    tenth = Interval.point(0.1)
    s = tenth + tenth + tenth
    assert s.lo < s.hi
    assert s.contains(0.1 + 0.1 + 0.1)
    third = Interval.exact_int(1) / 3
    assert third.lo < 1 / 3 < third.hi


def test_mixed_operands() -> None:
    x = Interval(1.0, 2.0)
    assert (2 * x).contains(Interval(2.0, 4.0))
    assert (1 - x).contains(Interval(-1.0, 0.0))
    assert (x - 1).contains(Interval(0.0, 1.0))
    assert (1 / x).contains(Interval(0.5, 1.0))
    assert (-x).contains(Interval(-2.0, -1.0))


def test_multiplication_signs() -> None:
    x = Interval(-1.0, 2.0)
    y = Interval(-3.0, 1.0)
    p = x * y
    assert p.contains(-6.0) and p.contains(3.0)
    assert p.lo <= -6.0 and p.hi >= 3.0


def test_division_by_zero_interval() -> None:
    with pytest.raises(ZeroDivisionError):
        Interval(1.0, 2.0) / Interval(-1.0, 1.0)


def test_sqr_straddling_zero() -> None:
    assert Interval(-2.0, 1.0).sqr().lo == 0.0
    assert Interval(-2.0, 1.0).sqr().hi >= 4.0
    assert Interval(-3.0, -2.0).sqr().contains(Interval(4.0, 9.0))


def test_elementary_functions_enclose_float_values() -> None:
    x = Interval.point(0.7)
    assert x.exp().contains(math.exp(0.7))
    assert x.log().contains(math.log(0.7))
    assert Interval.point(2.0).sqrt().contains(math.sqrt(2.0))
    assert power(2, Interval.point(0.5)).contains(math.sqrt(2.0))


def test_log_and_sqrt_domains() -> None:
    with pytest.raises(DomainError):
        Interval(0.0, 1.0).log()
    with pytest.raises(DomainError):
        Interval(-1.0, 1.0).sqrt()


def test_integer_power_matches_repeated_product() -> None:
    x = Interval(1.5, 1.5)
    assert (x ** 5).contains(1.5 ** 5)
    assert (x ** 0).isPoint() and (x ** 0).lo == 1.0


def test_intersection_and_hull() -> None:
    a = Interval(0.0, 1.0)
    b = Interval(0.5, 2.0)
    c = Interval(3.0, 4.0)
    assert a.intersects(b) and not a.intersects(c)
    assert a.intersect(b) == Interval(0.5, 1.0)
    assert a.intersect(c) is None
    assert Interval.hull([a, b, c]) == Interval(0.0, 4.0)


def test_clamp_and_width() -> None:
    assert Interval(-0.5, 1.5).clamp(0.0, 1.0) == Interval(0.0, 1.0)
    assert Interval(0.25, 0.75).width >= 0.5
    assert Interval(0.25, 0.75).mid == 0.5


def test_format_rounds_outward() -> None:
    x = Interval(0.1234564, 0.1234566)
    assert x.format(6) == "[0.123456, 0.123457]"
    assert Interval(1.0, 2.0).format() == "[1, 2]"


def test_up_down_are_adjacent_floats() -> None:
    assert down(1.0) < 1.0 < up(1.0)
    assert math.nextafter(down(1.0), 2.0) == 1.0


def test_out_of_range_values_saturate() -> None:
    big = Interval.exact_int(10**400)
    assert big.lo == sys.float_info.max and big.hi == math.inf
    assert Interval.exact_int(-(10**400)).lo == -math.inf
    e = Interval(700.0, 800.0).exp()
    assert e.hi == math.inf
    assert 1e304 < e.lo < math.inf
    assert e.format(2).endswith(", inf]")

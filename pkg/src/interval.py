# pyright: strict
'''Outward-rounded interval arithmetic on binary64 floats.

Every operation returns an interval that contains the exact real result of
the operation applied to any reals inside the operands. Field operations
round to nearest and are then widened by one ulp. exp and log come from the
platform libm, whose results are within one ulp, and are widened by two.
'''
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Decimal
from typing import Iterable, Self, Union

from errors import DomainError

LIBM_PAD = 2
_MAX_INT = int(sys.float_info.max)

def down(x: float) -> float:
    return math.nextafter(x, -math.inf)

def up(x: float) -> float:
    return math.nextafter(x, math.inf)

def _padDown(x: float, n: int = LIBM_PAD) -> float:
    for _ in range(n):
        x = down(x)
    return x

def _padUp(x: float, n: int = LIBM_PAD) -> float:
    for _ in range(n):
        x = up(x)
    return x

def _libmExp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf

Operand = Union['Interval', float, int]

@dataclass(frozen=True, slots=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self) -> None:
        # also rejects NaN endpoints
        if not (self.lo <= self.hi):
            raise ValueError(f"Interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    # construction

    @classmethod
    def point(cls, x: float) -> Self:
        return cls(x, x)

    @classmethod
    def exact_int(cls, n: int) -> Self:
        """Tightest float interval around an integer, exact when n fits in 53 bits.
        Integers beyond the float range saturate to an endpoint at infinity."""
        if abs(n) > _MAX_INT:
            return cls(sys.float_info.max, math.inf) if n > 0 else cls(-math.inf, -sys.float_info.max)
        f = float(n)
        exact = int(f)
        if exact == n:
            return cls(f, f)
        if exact > n:
            return cls(down(f), f)
        return cls(f, up(f))

    @classmethod
    def decimal(cls, text: str) -> Self:
        """Tightest float interval around a decimal literal such as "0.52679"."""
        d = Decimal(text)
        f = float(d)
        lo = f if Decimal(f) <= d else down(f)
        hi = f if Decimal(f) >= d else up(f)
        return cls(lo, hi)

    @classmethod
    def hull(cls, items: Iterable[Interval]) -> Self:
        lo = math.inf
        hi = -math.inf
        for i in items:
            lo = min(lo, i.lo)
            hi = max(hi, i.hi)
        return cls(lo, hi)

    @staticmethod
    def of(x: Operand) -> Interval:
        if isinstance(x, Interval):
            return x
        if isinstance(x, int):
            return Interval.exact_int(x)
        return Interval(x, x)

    # queries

    @property
    def width(self) -> float:
        return up(self.hi - self.lo)

    @property
    def mid(self) -> float:
        return self.lo + (self.hi - self.lo) / 2

    def isPoint(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Operand) -> bool:
        other = Interval.of(x)
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersect(self, other: Interval) -> Interval | None:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def clamp(self, lo: float, hi: float) -> Interval:
        """Intersection with [lo, hi]; the caller knows the true value lies there."""
        return Interval(min(max(self.lo, lo), hi), max(min(self.hi, hi), lo))

    # arithmetic

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: Operand) -> Interval:
        o = Interval.of(other)
        return Interval(down(self.lo + o.lo), up(self.hi + o.hi))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> Interval:
        o = Interval.of(other)
        return Interval(down(self.lo - o.hi), up(self.hi - o.lo))

    def __rsub__(self, other: Operand) -> Interval:
        return Interval.of(other) - self

    def __mul__(self, other: Operand) -> Interval:
        o = Interval.of(other)
        if self.lo >= 0 and o.lo >= 0:
            return Interval(down(self.lo * o.lo), up(self.hi * o.hi))
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(down(min(p)), up(max(p)))

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> Interval:
        o = Interval.of(other)
        if o.lo <= 0.0 <= o.hi:
            raise ZeroDivisionError(f"Interval division by {o}, which contains zero")
        q = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(down(min(q)), up(max(q)))

    def __rtruediv__(self, other: Operand) -> Interval:
        return Interval.of(other) / self

    def __pow__(self, e: Operand) -> Interval:
        if isinstance(e, int) and e >= 0:
            result = Interval(1.0, 1.0)
            base = self
            n = e
            while n:
                if n & 1:
                    result = result * base
                n >>= 1
                if n:
                    base = base.sqr()
            return result
        return (self.log() * e).exp()

    def sqr(self) -> Interval:
        if self.lo >= 0:
            return Interval(down(self.lo * self.lo), up(self.hi * self.hi))
        if self.hi <= 0:
            return Interval(down(self.hi * self.hi), up(self.lo * self.lo))
        return Interval(0.0, up(max(self.lo * self.lo, self.hi * self.hi)))

    def exp(self) -> Interval:
        # beyond the float range the upper end saturates to inf, the lower to the largest float
        return Interval(max(0.0, _padDown(_libmExp(self.lo))), _padUp(_libmExp(self.hi)))

    def log(self) -> Interval:
        if self.lo <= 0:
            raise DomainError(f"log of {self}, which is not strictly positive")
        return Interval(_padDown(math.log(self.lo)), _padUp(math.log(self.hi)))

    def sqrt(self) -> Interval:
        if self.lo < 0:
            raise DomainError(f"sqrt of {self}, which is not non-negative")
        return Interval(max(0.0, down(math.sqrt(self.lo))), up(math.sqrt(self.hi)))

    # rendering

    def format(self, digits: int = 6) -> str:
        """Decimal rendering with lo rounded down and hi rounded up to `digits` places."""
        return f"[{_render(self.lo, digits, ROUND_FLOOR)}, {_render(self.hi, digits, ROUND_CEILING)}]"

    def __str__(self) -> str:
        return self.format()

def _render(x: float, digits: int, rounding: str) -> str:
    if math.isinf(x):
        return str(x)
    if x == int(x) and abs(x) < 2**53:
        return str(int(x))
    quantum = Decimal(1).scaleb(-digits)
    return str(Decimal(x).quantize(quantum, rounding=rounding))

def exp(x: Operand) -> Interval:
    return Interval.of(x).exp()

def log(x: Operand) -> Interval:
    return Interval.of(x).log()

def sqrt(x: Operand) -> Interval:
    return Interval.of(x).sqrt()

def power(base: Operand, e: Operand) -> Interval:
    '''base ** e for a strictly positive base, computed as exp(e * log(base)).'''
    return (Interval.of(base).log() * e).exp()

__all__ = [
    "Interval",
    "Operand",
    "down",
    "up",
    "exp",
    "log",
    "sqrt",
    "power",
]

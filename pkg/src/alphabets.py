# pyright: strict, reportUntypedFunctionDecorator=false
'''Alphabets of continued-fraction digits: explicit finite sets and the named
infinite families P_q = {q^n}, P*_q = P_q ∪ {1}, M_q = {n^q}, arithmetic
progressions and the primes.

An infinite family is held as a finite snapshot plus the family tag. The
general shape is `head ∪ {family members > above}`, where the first `count`
members above `above` form the snapshot and the remaining ones are the tail,
only ever touched through a TailMajorant.
'''
from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property
from typing import Any, Iterable, Iterator, Self

import numpy as np
from strongtyping.strong_typing import match_typing # pyright: ignore[reportUnknownVariableType]

from certificate import Certificate, Verdict
from errors import (
    AlphabetSyntaxError,
    ConditionInapplicableError,
    ContainmentError,
    DivergentTailError,
    EmptyAlphabetError,
    ParameterError,
)
from interval import Interval, power

# digits are evaluated in binary64, so every element must convert to a finite float
MAX_ELEMENT = int(sys.float_info.max)

class Family(StrEnum):
    EXPLICIT = "explicit"
    P_Q = "P_q"
    P_Q_STAR = "P_q_star"
    M_Q = "M_q"
    PROGRESSION = "progression"
    PRIMES = "primes"

def iroot(n: int, q: int) -> int:
    """Largest x >= 0 with x**q <= n."""
    if n < 1:
        return 0
    x = int(round(n ** (1.0 / q)))
    while x ** q > n:
        x -= 1
    while (x + 1) ** q <= n:
        x += 1
    return x

def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return [int(p) for p in np.flatnonzero(sieve)]

def _primes_above(above: int, count: int) -> list[int]:
    # upper estimate for the position of the count-th prime past `above`, grown until enough
    limit = max(above + 2 * count + 10, 30)
    while True:
        found = [p for p in primes_up_to(limit) if p > above]
        if len(found) >= count:
            return found[:count]
        limit *= 2

def _checkParams(family: Family, q: int, a: int, b: int) -> None:
    match family:
        case Family.P_Q | Family.P_Q_STAR:
            if q < 2:
                raise ParameterError(f"{family} needs q >= 2, got q={q}")
        case Family.M_Q:
            if q < 1:
                raise ParameterError(f"{family} needs q >= 1, got q={q}")
        case Family.PROGRESSION:
            if not (0 <= a < b):
                raise ParameterError(f"progression needs 0 <= a < b, got a={a}, b={b}")
        case Family.EXPLICIT | Family.PRIMES:
            pass

def members_above(family: Family, above: int, count: int, q: int = 0, a: int = 0, b: int = 0) -> list[int]:
    '''The first `count` members of the family that exceed `above`, increasing.'''
    match family:
        case Family.P_Q | Family.P_Q_STAR:
            out: list[int] = [1] if family == Family.P_Q_STAR and above < 1 else []
            x = q
            while x <= above:
                x *= q
            while len(out) < count:
                out.append(x)
                x *= q
            return out[:count]
        case Family.M_Q:
            n = iroot(above, q) + 1
            return [(n + i) ** q for i in range(count)]
        case Family.PROGRESSION:
            first = above + 1 + ((a - (above + 1)) % b)
            return [first + i * b for i in range(count)]
        case Family.PRIMES:
            return _primes_above(above, count)
        case Family.EXPLICIT:
            raise ParameterError("explicit alphabets have no family members")

def is_member(family: Family, n: int, q: int = 0, a: int = 0, b: int = 0) -> bool:
    if n < 1:
        return False
    match family:
        case Family.P_Q | Family.P_Q_STAR:
            if n == 1:
                return family == Family.P_Q_STAR
            while n % q == 0:
                n //= q
            return n == 1
        case Family.M_Q:
            return iroot(n, q) ** q == n
        case Family.PROGRESSION:
            return n % b == a
        case Family.PRIMES:
            return n >= 2 and all(n % p for p in primes_up_to(math.isqrt(n)))
        case Family.EXPLICIT:
            return False

@dataclass(frozen=True)
class FinitenessParameter:
    """sigma0: infimum of the s with a convergent sum of n^{-2s} over the alphabet."""
    sigma0: float
    exact: bool = True

class TailKind(StrEnum):
    GEOMETRIC = "geometric"
    MONOMIAL = "monomial"
    PROGRESSION = "progression"

class TailMajorant:
    '''Closed-form upper bounds for the part of an operator sum coming from an
    infinite tail T of a family.

    geometric:   T = {q^j : j >= start}
    monomial:    T = {n^q : n >= start}
    progression: T ⊆ {start + step*j : j >= 0}
    '''
    @match_typing
    def __init__(self, kind: TailKind, q: int, start: int, anchor: int, step: int = 1):
        if kind == TailKind.GEOMETRIC and q < 2:
            raise ParameterError(f"geometric tail needs q >= 2, got {q}")
        if kind == TailKind.MONOMIAL and q < 1:
            raise ParameterError(f"monomial tail needs q >= 1, got {q}")
        if start < 1 or step < 1:
            raise ParameterError("tail start and step must be positive")
        self.kind = kind
        self.q = q
        self.start = start
        self.anchor = anchor
        self.step = step
        if self.first <= anchor:
            raise ParameterError(f"tail starts at {self.first}, not above its anchor {anchor}")

    @classmethod
    def geometric(cls, q: int, k: int) -> Self:
        """Tail {q^{k+1}, q^{k+2}, ...} anchored at q^k."""
        return cls(TailKind.GEOMETRIC, q, k + 1, q ** k)

    @classmethod
    def monomial(cls, q: int, m: int) -> Self:
        """Tail {(m+1)^q, (m+2)^q, ...} anchored at m^q."""
        return cls(TailKind.MONOMIAL, q, m + 1, m ** q)

    @cached_property
    def first(self) -> int:
        match self.kind:
            case TailKind.GEOMETRIC:
                return self.q ** self.start
            case TailKind.MONOMIAL:
                return self.start ** self.q
            case TailKind.PROGRESSION:
                return self.start

    @property
    def sigma0(self) -> float:
        match self.kind:
            case TailKind.GEOMETRIC:
                return 0.0
            case TailKind.MONOMIAL:
                return 1 / (2 * self.q)
            case TailKind.PROGRESSION:
                return 0.5

    def checkConvergent(self, s: Interval) -> None:
        match self.kind:
            case TailKind.GEOMETRIC:
                ok = s.lo > 0
            case TailKind.MONOMIAL:
                ok = (Interval.of(2 * self.q) * s).lo > 1
            case TailKind.PROGRESSION:
                ok = (2 * s).lo > 1
        if not ok:
            raise DivergentTailError(f"{self.kind} tail diverges at s={s} (sigma0={self.sigma0})")

    def tail_sum(self, s: Interval | float) -> Interval:
        '''Enclosure of a closed form whose value bounds the sum of m^{-2s} over the tail.'''
        s = Interval.of(s)
        self.checkConvergent(s)
        two_s = 2 * s
        match self.kind:
            case TailKind.GEOMETRIC:
                ratio = power(self.q, -two_s)
                return power(self.q, -two_s * self.start) / (1 - ratio)
            case TailKind.MONOMIAL:
                p = self.q * two_s
                n1 = Interval.exact_int(self.start)
                return power(n1, -p) + power(n1, 1 - p) / (p - 1)
            case TailKind.PROGRESSION:
                t1 = Interval.exact_int(self.start)
                return power(t1, -two_s) + power(t1, 1 - two_s) / (self.step * (two_s - 1))

    def ratio_sum(self, s: Interval | float) -> Interval:
        """Bound on the sum over the tail of ((anchor+x)/(m+x))^{2s}, any x in [0,1]."""
        s = Interval.of(s)
        return power(Interval.exact_int(self.anchor) + 1, 2 * s) * self.tail_sum(s)

    def eigen_weighted(self, s: Interval | float) -> Interval:
        """ratio_sum weighted by the eigenfunction's log-Lipschitz factor e^{2s/anchor}."""
        s = Interval.of(s)
        return (2 * s / Interval.exact_int(self.anchor)).exp() * self.ratio_sum(s)

    def __repr__(self) -> str:
        return f"TailMajorant({self.kind}, q={self.q}, first={self.first}, anchor={self.anchor})"

_PARAMS: dict[Family, tuple[str, ...]] = {
    Family.EXPLICIT: (),
    Family.P_Q: ("q",),
    Family.P_Q_STAR: ("q",),
    Family.M_Q: ("q",),
    Family.PROGRESSION: ("a", "b"),
    Family.PRIMES: (),
}

class Alphabet:
    '''A set of positive integers: `head` plus the family members above `above`.

    For explicit alphabets the head is everything. `elements` is always the
    finite snapshot; `infinite` tells whether a tail lies beyond it.
    '''
    @match_typing
    def __init__(self, head: Iterable[int] = [], family: Family = Family.EXPLICIT, q: int = 0, a: int = 0, b: int = 0, above: int = 0, count: int = 0):
        _checkParams(family, q, a, b)
        self.head = tuple(sorted(set(head)))
        if any(n < 1 for n in self.head):
            raise ParameterError(f"alphabet elements must be positive integers, got {list(self.head)}")
        self.family = family
        self.q = q if family in (Family.P_Q, Family.P_Q_STAR, Family.M_Q) else 0
        self.a = a if family == Family.PROGRESSION else 0
        self.b = b if family == Family.PROGRESSION else 0
        if family == Family.EXPLICIT:
            if above != 0 or count != 0:
                raise ParameterError("explicit alphabets take neither above nor count")
            self.above = 0
            self.count = 0
        else:
            if above < 0 or count < 0:
                raise ParameterError("above and count must be non-negative")
            if self.head and self.head[-1] > above:
                raise ParameterError(f"head elements must not exceed above={above}")
            self.above = above
            self.count = count
        tail = members_above(family, above, count, self.q, self.a, self.b) if self.infinite else []
        self.elements: tuple[int, ...] = self.head + tuple(tail)
        if len(self.elements) == 0:
            raise EmptyAlphabetError("alphabet has no elements")
        if self.elements[-1] > MAX_ELEMENT:
            raise ParameterError(f"alphabet element with {len(str(self.elements[-1]))} digits is beyond the float range")

    @property
    def infinite(self) -> bool:
        return self.family != Family.EXPLICIT

    @property
    def gamma(self) -> int:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, n: object) -> bool:
        return n in self.elements

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self.to_text() == other.to_text()

    def __hash__(self) -> int:
        return hash(self.to_text())

    def __repr__(self) -> str:
        return f"Alphabet({self.to_text()})"

    def _paramText(self) -> list[str]:
        return [f"{p}={getattr(self, p)}" for p in _PARAMS[self.family]]

    def to_text(self) -> str:
        if not self.infinite:
            return "explicit:[" + ",".join(str(n) for n in self.head) + "]"
        if not self.head and self.above == 0:
            params = self._paramText() + [f"count={self.count}"]
            return f"family:{self.family}({','.join(params)})"
        params = self._paramText() + [f"above={self.above}", f"count={self.count}"]
        return "tail:[" + ",".join(str(n) for n in self.head) + f"]+{self.family}({','.join(params)})"

    @classmethod
    def from_text(cls, text: str) -> Self:
        t = "".join(text.split())
        if m := re.fullmatch(r"explicit:\[([0-9,]*)\]", t):
            return cls(_intList(m.group(1)))
        if m := re.fullmatch(r"family:(\w+)\(([^)]*)\)", t):
            return cls._familyFromText([], m.group(1), m.group(2))
        if m := re.fullmatch(r"tail:\[([0-9,]*)\]\+(\w+)\(([^)]*)\)", t):
            return cls._familyFromText(_intList(m.group(1)), m.group(2), m.group(3))
        raise AlphabetSyntaxError(f"cannot parse alphabet {text!r}; expected explicit:[...], family:NAME(...) or tail:[...]+NAME(...)")

    @classmethod
    def _familyFromText(cls, head: list[int], name: str, params: str) -> Self:
        try:
            family = Family(name)
        except ValueError:
            raise AlphabetSyntaxError(f"unknown family {name!r}") from None
        if family == Family.EXPLICIT:
            raise AlphabetSyntaxError("use explicit:[...] for explicit alphabets")
        values: dict[str, int] = {}
        for item in filter(None, params.split(",")):
            key, sep, value = item.partition("=")
            if sep == "" or not re.fullmatch(r"-?[0-9]+", value):
                raise AlphabetSyntaxError(f"bad family parameter {item!r}")
            values[key] = int(value)
        allowed = set(_PARAMS[family]) | {"above", "count"}
        unknown = set(values) - allowed
        if unknown:
            raise AlphabetSyntaxError(f"unknown parameters {sorted(unknown)} for {family}")
        if "count" not in values:
            raise AlphabetSyntaxError(f"{family} needs count=...")
        return cls(head, family, **values)

    def to_json(self) -> dict[str, Any]:
        return {"alphabet": self.to_text()}

    @classmethod
    def from_json(cls, o: dict[str, Any]) -> Self:
        return cls.from_text(o["alphabet"])

    def truncated(self) -> Alphabet:
        """The finite snapshot as an explicit alphabet."""
        return Alphabet(list(self.elements))

    def withCount(self, count: int) -> Alphabet:
        assert self.infinite
        return Alphabet(list(self.head), self.family, self.q, self.a, self.b, self.above, count)

    def withElement(self, n: int) -> Alphabet:
        """Explicit alphabet of the snapshot plus one element."""
        return Alphabet(list(self.elements) + [n])

    def is_member(self, n: int) -> bool:
        if n in self.head:
            return True
        if not self.infinite:
            return False
        return n > self.above and is_member(self.family, n, self.q, self.a, self.b)

    def next_members(self, above: int, count: int) -> list[int]:
        """Members of this alphabet greater than `above`, head included."""
        head = [n for n in self.head if n > above]
        if not self.infinite:
            return head[:count]
        return (head + members_above(self.family, max(above, self.above), count, self.q, self.a, self.b))[:count]

    def finiteness(self) -> FinitenessParameter:
        if not self.infinite:
            return FinitenessParameter(0.0)
        match self.family:
            case Family.P_Q | Family.P_Q_STAR:
                return FinitenessParameter(0.0)
            case Family.M_Q:
                return FinitenessParameter(1 / (2 * self.q))
            case _:
                return FinitenessParameter(0.5)

    def tail_majorant(self) -> TailMajorant:
        '''Majorant for the family members beyond the snapshot.'''
        if not self.infinite:
            raise ParameterError(f"{self.to_text()} has no tail")
        cutoff = max(self.above, self.elements[-1])
        first = members_above(self.family, cutoff, 1, self.q, self.a, self.b)[0]
        match self.family:
            case Family.P_Q | Family.P_Q_STAR:
                return TailMajorant(TailKind.GEOMETRIC, self.q, _ilog(first, self.q), cutoff)
            case Family.M_Q:
                return TailMajorant(TailKind.MONOMIAL, self.q, iroot(first, self.q), cutoff)
            case Family.PROGRESSION:
                return TailMajorant(TailKind.PROGRESSION, 1, first, cutoff, step=self.b)
            case _:
                # primes past 2 are odd
                return TailMajorant(TailKind.PROGRESSION, 1, first, cutoff, step=2 if first > 2 else 1)

def _ilog(n: int, q: int) -> int:
    j = 0
    while n > 1:
        n //= q
        j += 1
    return j

def _intList(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]

def explicit(elements: Iterable[int]) -> Alphabet:
    return Alphabet(list(elements))

def make_family(family: Family, count: int, q: int = 0, a: int = 0, b: int = 0) -> Alphabet:
    '''The first `count` members of a named family.'''
    if family == Family.EXPLICIT:
        raise ParameterError("make_family needs a named family")
    if count < 1:
        raise EmptyAlphabetError("count must be positive")
    return Alphabet([], family, q, a, b, 0, count)

def f_sharp(f: Alphabet, parent: Alphabet, tailCount: int) -> Alphabet:
    '''(f minus max f) together with every parent element above max f.

    The first `tailCount` of those are enumerated; the rest stay a tail.
    '''
    if f.infinite:
        raise ParameterError("f_sharp needs a finite f")
    if not parent.infinite:
        raise ParameterError("f_sharp needs an infinite parent family")
    missing = [n for n in f if not parent.is_member(n)]
    if missing:
        raise ContainmentError(f"{missing} not in {parent.to_text()}")
    top = f.elements[-1]
    return Alphabet(list(f.elements[:-1]), parent.family, parent.q, parent.a, parent.b, top, tailCount)

def alpha_m(a: Alphabet, m: int, s: float | Interval) -> Interval:
    """Sum of a_j^{-2s} over the first m elements."""
    if m > len(a):
        raise ParameterError(f"alpha_m needs {m} elements, snapshot has {len(a)}")
    s = Interval.of(s)
    total = Interval(0.0, 0.0)
    for n in a.elements[:m]:
        total = total + power(Interval.exact_int(n), -2 * s)
    return total

def check_submultiplicative(a: Alphabet, maxIndex: int) -> Certificate:
    '''Check a_n * a_m >= a_{n+m} for 1 <= n <= m, m >= 2, n + m <= maxIndex.'''
    if len(a) < maxIndex:
        raise ParameterError(f"need {maxIndex} enumerated elements, snapshot has {len(a)}")
    if a.gamma == 1:
        raise ConditionInapplicableError("submultiplicativity criterion needs a_1 >= 2")
    e = a.elements
    violations: list[tuple[int, int]] = []
    for m in range(2, maxIndex):
        for n in range(1, min(m, maxIndex - m) + 1):
            if e[n - 1] * e[m - 1] < e[n + m - 1]:
                violations.append((n, m))
    cert = Certificate(
        statementId="submultiplicative",
        verdict=Verdict.FAILED if violations else Verdict.VERIFIED,
        inputs={"alphabet": a.to_text(), "maxIndex": str(maxIndex)},
    )
    cert.notes["violations"] = "none" if not violations else "; ".join(f"(n={n},m={m})" for n, m in violations)
    if a.family == Family.PRIMES:
        cert.notes["kind"] = f"empirical check over the first {maxIndex} primes, not a proof"
    return cert

__all__ = [
    "Alphabet",
    "Family",
    "FinitenessParameter",
    "TailKind",
    "TailMajorant",
    "alpha_m",
    "check_submultiplicative",
    "explicit",
    "f_sharp",
    "is_member",
    "make_family",
    "members_above",
    "primes_up_to",
]

# pyright: reportUnknownMemberType=false, reportUnknownArgumentType=false, reportUnknownVariableType=false
from __future__ import annotations

import math
from decimal import Decimal

from alphabets import Alphabet, Family, explicit, make_family
from certificate import Certificate, DecimalEnclosure, Verdict
from interval import Interval
from solver import DimensionResult, SolverConfig, dimension

# coarse enough to keep a certified dimension of a two-letter alphabet quick
FAST = SolverConfig(meshSize=48, bisectionTol=1e-6, maxDepth=10, powerIters=60)
ESTIMATE = FAST.replace(certified=False)

GOLDEN = (1 + math.sqrt(5)) / 2
DIM_1_2 = 0.5312805062772051


def mk_explicit(*elements: int) -> Alphabet:
    return explicit(list(elements))


def mk_family(family: Family, count: int, *, q: int = 0, a: int = 0, b: int = 0) -> Alphabet:
    return make_family(family, count, q=q, a=a, b=b)


def mk_band(lo: str, hi: str) -> Interval:
    return Interval(Interval.decimal(lo).lo, Interval.decimal(hi).hi)


def dim_of(*elements: int, config: SolverConfig = FAST) -> DimensionResult:
    return dimension(mk_explicit(*elements), config)


def singleton_eigenvalue(mu: int, s: float) -> float:
    lam = (mu + math.sqrt(mu * mu + 4)) / 2
    return lam ** (-2 * s)


def assert_encloses(outer: Interval, inner: Interval | float, slack: float = 0.0) -> None:
    i = Interval.of(inner)
    assert outer.lo - slack <= i.lo and i.hi <= outer.hi + slack, f"{outer} does not enclose {i}"


def assert_meets(x: Interval, band: Interval) -> None:
    assert x.intersects(band), f"{x} misses {band}"


def assert_verdict(cert: Certificate, expected: Verdict) -> None:
    assert cert.verdict == expected, f"{cert.statementId}: {cert.verdict} != {expected}\n{cert.dumps()}"


def tampered(cert: Certificate, key: str, hi: str) -> Certificate:
    '''A copy of `cert` whose result `key` has its upper end replaced.'''
    out = Certificate.loads(cert.dumps())
    out.results[key] = DecimalEnclosure(out.results[key].lo, Decimal(hi))
    return out

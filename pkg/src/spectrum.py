# pyright: strict
'''Structure of dimension spectra: strict break points, the greedy construction
that reaches a given s from below, and the gap and interval certificates for
P*_q and M_q.

Pipeline functions print one tab-indented line per stage.
'''
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum, StrEnum
from typing import Callable, Sequence

import reference_table
from alphabets import Alphabet, Family, explicit, f_sharp, make_family
from bounds import (
    BoundReport,
    GapKind,
    gamma_report,
    mq_crude_upper,
    mq_gap_bounds,
    mq_upper,
    mq_upper_monotonicity,
    pstar_gap_report,
    tau_increasing,
    tau_report,
)
from certificate import Certificate, Verdict
from constants import constant, gamma_checks_for
from errors import ContainmentError, NoBreakPointError, OutOfTheoremRangeError, ParameterError, RangeError
from interval import Interval
from solver import DimensionResult, SolverConfig, dimension

# largest index scanned above max F before giving up on a break point
MAX_BREAK_INDEX = 4096
# largest number of consecutive elements the greedy construction adds in one round
MAX_GROW = 256

class _Position(Enum):
    ABOVE = 1
    BELOW = 2
    STRADDLE = 3

def _position(d: Interval, s: float) -> _Position:
    if d.lo >= s:
        return _Position.ABOVE
    if d.hi < s:
        return _Position.BELOW
    return _Position.STRADDLE

class _Dims:
    '''Memoised dimension enclosures of finite alphabets. A straddling
    enclosure is recomputed once at the refined configuration.'''
    def __init__(self, config: SolverConfig):
        self.config = config.replace(useTail=False, truncation=None)
        self.cache: dict[tuple[int, ...], Interval] = {}

    def __call__(self, elements: Sequence[int]) -> Interval:
        key = tuple(sorted(set(elements)))
        if key not in self.cache:
            self.cache[key] = dimension(explicit(key), self.config).enclosure
        return self.cache[key]

    def position(self, elements: Sequence[int], s: float) -> tuple[_Position, Interval]:
        d = self(elements)
        p = _position(d, s)
        if p == _Position.STRADDLE:
            key = tuple(sorted(set(elements)))
            d = dimension(explicit(key), self.config.refined()).enclosure
            self.cache[key] = d
            p = _position(d, s)
        return p, d

@dataclass(frozen=True)
class BreakPointRecord:
    f: Alphabet
    s: float
    breakElement: int
    strict: bool
    dimF: Interval
    dimFPlus: Interval
    dimNext: Interval | None = None
    nextElement: int | None = None

    def __post_init__(self) -> None:
        if self.breakElement <= self.f.elements[-1]:
            raise ParameterError(f"break element {self.breakElement} must exceed max F = {self.f.elements[-1]}")
        assert self.dimF.hi < self.s, f"dim F {self.dimF} is not below s = {self.s}"
        if self.strict:
            assert self.dimFPlus.lo >= self.s
            assert self.dimNext is not None and self.dimNext.hi < self.s

    @property
    def verdict(self) -> Verdict:
        return Verdict.VERIFIED if self.strict else Verdict.INCONCLUSIVE

    def __str__(self) -> str:
        kind = "strict break point" if self.strict else "unresolved break point"
        return f"{kind} {self.breakElement} for ({self.f.to_text()}, {self.s})"

def _checkInside(parent: Alphabet, f: Alphabet) -> None:
    missing = [n for n in f if not parent.is_member(n)]
    if missing:
        raise ContainmentError(f"{missing} not in {parent.to_text()}")

def _candidates(parent: Alphabet, above: int) -> Callable[[int], int | None]:
    cache: list[int] = []

    def at(i: int) -> int | None:
        if i >= len(cache):
            cache[:] = parent.next_members(above, max(2 * len(cache), i + 1, 16))
        return cache[i] if i < len(cache) else None
    return at

def _breakPoint(parent: Alphabet, f: Alphabet, s: float, dims: _Dims) -> BreakPointRecord:
    base = list(f.elements)
    dimF = dims(base)
    if dimF.hi >= s:
        raise ParameterError(f"dim of {f.to_text()} is {dimF}, not below s = {s}")
    member = _candidates(parent, base[-1])
    seen: dict[int, tuple[_Position, Interval]] = {}

    def locate(i: int) -> tuple[_Position, Interval] | None:
        n = member(i)
        if n is None:
            return None
        if i not in seen:
            seen[i] = dims.position(base + [n], s)
        return seen[i]

    def unresolved(i: int) -> BreakPointRecord:
        n = member(i)
        assert n is not None
        return BreakPointRecord(f, s, n, False, dimF, seen[i][1])

    first = locate(0)
    if first is None or first[0] == _Position.BELOW:
        raise NoBreakPointError(f"no element of {parent.to_text()} lifts dim of {f.to_text()} to s = {s}")
    if first[0] == _Position.STRADDLE:
        return unresolved(0)

    lo, step = 0, 1
    hi: int | None = None
    while hi is None:
        j = lo + step
        if j > MAX_BREAK_INDEX:
            raise NoBreakPointError(f"no crossing of s = {s} among the first {MAX_BREAK_INDEX} elements above {base[-1]}")
        p = locate(j)
        if p is None:
            # finite parent exhausted while still above s
            raise NoBreakPointError(f"every element of {parent.to_text()} above {base[-1]} keeps dim at least {s}")
        match p[0]:
            case _Position.ABOVE:
                lo, step = j, 2 * step
            case _Position.BELOW:
                hi = j
            case _Position.STRADDLE:
                return unresolved(j)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        p = locate(mid)
        assert p is not None
        match p[0]:
            case _Position.ABOVE:
                lo = mid
            case _Position.BELOW:
                hi = mid
            case _Position.STRADDLE:
                return unresolved(mid)
    # the crossing sits between lo and hi = lo + 1
    breakElement = member(lo)
    nextElement = member(lo + 1)
    assert breakElement is not None and nextElement is not None
    return BreakPointRecord(f, s, breakElement, True, dimF, seen[lo][1], seen[lo + 1][1], nextElement)

def find_strict_break_point(parent: Alphabet, f: Alphabet, s: float, config: SolverConfig = SolverConfig()) -> BreakPointRecord:
    '''The element a of parent above max f with dim(f + a) >= s while the next
    parent element gives a dimension below s.

    dim(f + {n}) decreases in n, so the crossing is
    located by galloping followed by bisection over the element index.
    '''
    if f.infinite:
        raise ParameterError("find_strict_break_point needs a finite f")
    _checkInside(parent, f)
    return _breakPoint(parent, f, s, _Dims(config))

# greedy construction

@dataclass
class GreedyConstruction:
    parent: Alphabet
    s: float
    steps: list[tuple[Alphabet, Interval]] = field(default_factory=list[tuple[Alphabet, Interval]])
    breakPoints: list[BreakPointRecord] = field(default_factory=list[BreakPointRecord])
    hypothesisViolation: str | None = None
    unresolved: str | None = None

    @property
    def monotone(self) -> bool:
        los = [d.lo for _, d in self.steps]
        return all(a <= b for a, b in zip(los, los[1:]))

    @property
    def verdict(self) -> Verdict:
        if self.hypothesisViolation is not None or not self.monotone:
            return Verdict.FAILED
        if self.unresolved is not None:
            return Verdict.INCONCLUSIVE
        return Verdict.VERIFIED

def _tailFrom(parent: Alphabet, head: Sequence[int], above: int, count: int) -> Alphabet:
    if not parent.infinite:
        return explicit(list(head) + parent.next_members(above, len(parent)))
    return Alphabet(list(head), parent.family, parent.q, parent.a, parent.b, above, count)

def _hypothesis(parent: Alphabet, f: Alphabet, bp: BreakPointRecord, config: SolverConfig) -> _Position:
    '''Whether dim(f + {parent elements beyond the break point}) reaches s.'''
    nextElement = bp.nextElement
    assert nextElement is not None
    count = 8
    while True:
        a = _tailFrom(parent, f.elements, bp.breakElement, count)
        d = dimension(a, config.replace(useTail=True, truncation=None)).enclosure
        p = _position(d, bp.s)
        print(f"\t\thypothesis with {a.to_text()}: {d.format(6)}")
        if p != _Position.STRADDLE or not parent.infinite or count >= config.maxTruncation:
            return p
        count = min(2 * count, config.maxTruncation)

def greedy_spectrum_construct(parent: Alphabet, s: float, rounds: int, config: SolverConfig = SolverConfig()) -> GreedyConstruction:
    '''Grow F along the parent until dim(F) < s <= dim(F + next), locate the
    strict break point, check that the parent beyond it keeps the dimension at
    least s, and repeat from there.

    The dimension lower ends of the successive F approach s from below. A
    round whose tail check fails is reported as a hypothesis violation, which
    is what happens for s inside a gap of the spectrum.
    '''
    if not 0 < s < 1:
        raise RangeError(f"s must lie in (0, 1), got {s}")
    if rounds < 1:
        raise ParameterError("rounds must be positive")
    dims = _Dims(config)
    out = GreedyConstruction(parent, s)
    current: list[int] = [parent.elements[0]]
    above = current[0]
    for r in range(1, rounds + 1):
        print(f"\tround {r}")
        member = _candidates(parent, above)
        grown = 0
        while True:
            n = member(0)
            if n is None or grown >= MAX_GROW:
                out.unresolved = f"round {r}: parent exhausted before reaching s = {s}"
                return out
            p, d = dims.position(current + [n], s)
            if p == _Position.ABOVE:
                break
            if p == _Position.STRADDLE:
                out.unresolved = f"round {r}: dim of {explicit(current + [n]).to_text()} straddles s = {s}"
                return out
            current.append(n)
            above = n
            member = _candidates(parent, above)
            grown += 1
        f = explicit(current)
        dimF = dims(current)
        out.steps.append((f, dimF))
        print(f"\t\tF = {f.to_text()}: {dimF.format(6)}")
        bp = _breakPoint(parent, f, s, dims)
        out.breakPoints.append(bp)
        print(f"\t\t{bp}")
        if not bp.strict:
            out.unresolved = f"round {r}: {bp}"
            return out
        match _hypothesis(parent, f, bp, config):
            case _Position.BELOW:
                out.hypothesisViolation = f"round {r}: dim of {f.to_text()} with the parent beyond {bp.breakElement} stays below s = {s}"
                return out
            case _Position.STRADDLE:
                out.unresolved = f"round {r}: tail check beyond {bp.breakElement} is undecided"
                return out
            case _Position.ABOVE:
                pass
        # the element right after the break point keeps dim below s
        assert bp.nextElement is not None
        current.append(bp.nextElement)
        above = bp.nextElement
    return out

# gap certificates

@dataclass
class GapCertificate:
    '''left.hi < right.lo separates the two enclosures. For a gap statement this
    certifies that (left.hi, right.lo) holds no dimension of a subset; for a
    comparison it certifies the strict order of the two dimensions.'''
    family: str
    statement: str
    left: Interval
    right: Interval
    supporting: list[BoundReport] = field(default_factory=list[BoundReport])
    notes: dict[str, str] = field(default_factory=dict[str, str])
    leftName: str = "left"
    rightName: str = "right"

    @property
    def separation(self) -> bool:
        return self.left.hi < self.right.lo

    @property
    def margin(self) -> float:
        return self.right.lo - self.left.hi

    @property
    def verdict(self) -> Verdict:
        if any(r.verdict != r.claim and r.verdict != "inconclusive" for r in self.supporting):
            return Verdict.FAILED
        if self.separation and all(r.holds for r in self.supporting):
            return Verdict.VERIFIED
        return Verdict.INCONCLUSIVE

    def record(self, cert: Certificate, prefix: str = "") -> None:
        cert.addResult(prefix + self.leftName, self.left)
        cert.addResult(prefix + self.rightName, self.right)
        cert.bounds.extend(r.record() for r in self.supporting)
        for k, v in self.notes.items():
            cert.notes[prefix + k] = v
        cert.notes[prefix + "statement"] = self.statement

def _separate(label: str, below: Callable[[int], Alphabet], right: Interval, config: SolverConfig) -> tuple[DimensionResult, int]:
    '''Upper enclosure of a family-with-tail dimension, growing the snapshot
    until it clears `right.lo` or the truncation cap is reached.'''
    count = min(8, config.maxTruncation)
    tailConfig = config.replace(useTail=True, truncation=None)
    while True:
        a = below(count)
        d = dimension(a, tailConfig)
        print(f"\t{label} with {count} enumerated elements: {d.enclosure.format(6)}")
        if d.hi < right.lo or count >= config.maxTruncation:
            return d, count
        count = min(2 * count, config.maxTruncation)

def _initialSegment(q: int, k: int) -> Alphabet:
    return explicit([1] + [q ** j for j in range(1, k + 1)])

def _pstarGap(q: int, k: int, config: SolverConfig, statement: str) -> GapCertificate:
    if q < 2 or k < 1:
        raise ParameterError(f"needs q >= 2 and k >= 1, got q={q}, k={k}")
    if (q, k) == (2, 1):
        raise OutOfTheoremRangeError("P*_2 has no gap between mu^1 and nu^1")
    parent = make_family(Family.P_Q_STAR, 1, q=q)
    segment = _initialSegment(q, k)
    finite = config.replace(useTail=False, truncation=None)
    print(f"\tnu^{k} = dim of {segment.to_text()}")
    nu = dimension(segment, finite)
    print(f"\t\t{nu.enclosure.format(6)}")
    mu, count = _separate(f"mu^{k}", lambda c: f_sharp(segment, parent, c), nu.enclosure, config)
    report = pstar_gap_report(q, k, nu.enclosure, _pstarThreshold(q, k))
    print(f"\t{report}")
    notes = {"truncation": str(count), "fSharp": f_sharp(segment, parent, count).to_text()}
    if nu.warning or mu.warning:
        notes["warning"] = "solver tolerance not reached"
    return GapCertificate(parent.to_text(), statement, mu.enclosure, nu.enclosure, [report], notes, "mu", "nu")

def _pstarThreshold(q: int, k: int) -> str:
    if (q, k) == (3, 1):
        return constant("pstar_refined_q3k1").value
    if (q, k) == (2, 2):
        return constant("pstar_refined_q2k2").value
    if q == 3:
        return constant("pstar_q3_k2").value
    if q == 2:
        return constant("pstar_q2_k3").value
    return "1"

def certify_pstar_gap(q: int, k: int, config: SolverConfig = SolverConfig()) -> GapCertificate:
    '''mu^k < nu^k for P*_q, where nu^k = dim{1, q, ..., q^k} and mu^k is the
    dimension of {1, ..., q^{k-1}} together with every q^j, j > k.

    The initial segment I_k is read inside P*_q.
    '''
    return _pstarGap(q, k, config, f"pstar gap q={q} k={k}")

def certify_fsharp_contraction(q: int, config: SolverConfig = SolverConfig()) -> GapCertificate:
    '''dim of {1} plus every q^j, j >= 2, strictly below dim{1, q}.'''
    if q < 3:
        raise RangeError(f"fsharp contraction needs q >= 3, got {q}")
    return _pstarGap(q, 1, config, f"fsharp contraction q={q}")

class StructureKind(StrEnum):
    FULL = "full"
    GAPS = "gaps"
    FINITE_UNION = "finite-union"

@dataclass
class MqStructure:
    q: int
    kind: StructureKind
    gaps: list[GapCertificate] = field(default_factory=list[GapCertificate])
    intervals: list[tuple[Interval, Interval]] = field(default_factory=list[tuple[Interval, Interval]])
    supporting: list[BoundReport] = field(default_factory=list[BoundReport])
    notes: dict[str, str] = field(default_factory=dict[str, str])
    critical: Certificate | None = None
    comparisons: list[GapCertificate] = field(default_factory=list[GapCertificate])
    witnesses: list[GreedyConstruction] = field(default_factory=list[GreedyConstruction])

    @property
    def verdict(self) -> Verdict:
        own = Verdict.VERIFIED if all(r.holds for r in self.supporting) else Verdict.FAILED
        extra = [self.critical.verdict] if self.critical is not None else []
        checks = self.gaps + self.comparisons
        return Verdict.combine([own] + extra + [g.verdict for g in checks] + [w.verdict for w in self.witnesses])

def _mq(q: int, count: int) -> Alphabet:
    return make_family(Family.M_Q, count, q=q)

def _mqWithout(q: int, head: list[int], removed: int, count: int) -> Alphabet:
    return Alphabet(head, Family.M_Q, q, 0, 0, removed, count)

def _mqDim(q: int, config: SolverConfig) -> Interval:
    if q == 1:
        # J_N is the irrationals of (0, 1)
        return Interval(1.0, 1.0)
    count = config.truncation or config.maxTruncation
    d = dimension(_mq(q, count), config.replace(useTail=True, truncation=None))
    print(f"\tdim M_{q} with {count} enumerated elements: {d.enclosure.format(6)}")
    return d.enclosure

def _witness(parent: Alphabet, s: float, rounds: int, config: SolverConfig) -> GreedyConstruction:
    print(f"\tgreedy witness at s = {s:.6f}")
    try:
        return greedy_spectrum_construct(parent, s, rounds, config)
    except NoBreakPointError as e:
        return GreedyConstruction(parent, s, unresolved=str(e))

def _fullSpectrum(q: int, top: Interval, supporting: list[BoundReport], config: SolverConfig, witnessGrid: Sequence[float], witnessRounds: int) -> MqStructure:
    out = MqStructure(q, StructureKind.FULL, intervals=[(Interval(0.0, 0.0), top)], supporting=supporting)
    parent = _mq(q, config.truncation or config.maxTruncation)
    for fraction in witnessGrid:
        out.witnesses.append(_witness(parent, fraction * top.lo, witnessRounds, config))
    if q == 5:
        finite = config.replace(useTail=False, truncation=None)
        small = dimension(explicit([1, 2 ** 5]), finite).enclosure
        wide = dimension(Alphabet.from_text(_row("{1,3^5..100^5}").alphabet), finite).enclosure
        print(f"\tdim{{1,2^5}} = {small.format(6)}, dim{{1,3^5..100^5}} = {wide.format(6)}")
        bands = reference_table.band("{1,2^5}").hi < reference_table.band("{1,3^5..100^5}").lo
        out.comparisons.append(GapCertificate(
            "family:M_q(q=5)",
            "dim{1,2^5} below dim{1,3^5..100^5}",
            small,
            wide,
            notes={"compareBands": str(bands).lower()},
            leftName="dimOneTwoPow",
            rightName="dimThreePowRange",
        ))
    return out

# fractions of dim M_q at which a full spectrum is witnessed by the greedy construction
WITNESS_GRID = (0.25, 0.5, 0.75)
WITNESS_ROUNDS = 2

def certify_mq_structure(q: int, config: SolverConfig = SolverConfig(), witnessGrid: Sequence[float] = WITNESS_GRID, witnessRounds: int = WITNESS_ROUNDS) -> MqStructure:
    '''Gaps and intervals of DS(M_q).

    q <= 5: one interval [0, dim M_q], witnessed at finite resolution by greedy
    constructions reaching each grid fraction of dim M_q; 6..8: one gap; 9, 10:
    two gaps; q >= 11: a finite union of intervals through the critical break
    point.
    '''
    if q < 1:
        raise ParameterError(f"q must be positive, got {q}")
    if q <= 5 and (not witnessGrid or not all(0 < f < 1 for f in witnessGrid)):
        raise ParameterError(f"witness grid must be non-empty fractions in (0, 1), got {list(witnessGrid)}")
    if q >= 11:
        cert = certify_critical_breakpoint(q)
        return MqStructure(q, StructureKind.FINITE_UNION, supporting=_criticalReports(q), notes=dict(cert.notes), critical=cert)

    finite = config.replace(useTail=False, truncation=None)
    supporting = [gamma_report(g) for g in gamma_checks_for(q)]
    if q >= 2:
        supporting.append(mq_crude_upper(q))
    for r in supporting:
        print(f"\t{r}")
    top = _mqDim(q, config)

    if q <= 5:
        return _fullSpectrum(q, top, supporting, config, witnessGrid, witnessRounds)

    out = MqStructure(q, StructureKind.GAPS, supporting=supporting)
    twoPow = dimension(explicit([1, 2 ** q]), finite)
    print(f"\tdim{{1,2^{q}}} = {twoPow.enclosure.format(6)}")
    withoutTwo, c2 = _separate(f"dim M_{q} without 2^{q}", lambda c: _mqWithout(q, [1], 2 ** q, c), twoPow.enclosure, config)
    gap = GapCertificate(
        f"family:M_q(q={q})",
        f"M_q gap q={q} at 2^q",
        withoutTwo.enclosure,
        twoPow.enclosure,
        [mq_gap_bounds(q, GapKind.TWO_POW)],
        {"truncation": str(c2)},
        "dimWithoutTwoPow",
        "dimTwoPow",
    )
    out.gaps.append(gap)
    out.intervals.append((Interval(0.0, 0.0), withoutTwo.enclosure))
    if q <= 8:
        out.intervals.append((twoPow.enclosure, top))
        return out

    threePow = dimension(explicit([1, 2 ** q, 3 ** q]), finite)
    print(f"\tdim{{1,2^{q},3^{q}}} = {threePow.enclosure.format(6)}")
    withoutThree, c3 = _separate(f"dim M_{q} without 3^{q}", lambda c: _mqWithout(q, [1, 2 ** q], 3 ** q, c), threePow.enclosure, config)
    out.gaps.append(GapCertificate(
        f"family:M_q(q={q})",
        f"M_q gap q={q} at 3^q",
        withoutThree.enclosure,
        threePow.enclosure,
        [mq_gap_bounds(q, GapKind.THREE_POW)],
        {"truncation": str(c3)},
        "dimWithoutThreePow",
        "dimThreePow",
    ))
    out.intervals.append((twoPow.enclosure, withoutThree.enclosure))
    out.intervals.append((threePow.enclosure, top))
    return out

def _row(name: str) -> reference_table.Row:
    return next(r for r in reference_table.load() if r.name == name)

def _criticalReports(q: int) -> list[BoundReport]:
    return [tau_report(q), mq_upper_monotonicity(11), mq_upper(q)]

def certify_critical_breakpoint(q: int) -> Certificate:
    '''tau(q) > 1 and dim M_q <= 2/sqrt q, which give M_q the critical break
    point value 2q; DS(M_q) is then a finite union of closed intervals.'''
    if q < 11:
        raise RangeError(f"critical break point certificate needs q >= 11, got {q}")
    reports = _criticalReports(q)
    increasing = tau_increasing(11, q) if q > 11 else True
    ok = all(r.holds for r in reports) and increasing
    cert = Certificate(
        statementId="critical-bp",
        verdict=Verdict.VERIFIED if ok else Verdict.FAILED,
        inputs={"q": str(q)},
    )
    for r in reports:
        print(f"\t{r}")
        cert.bounds.append(r.record())
    cert.notes["criticalBreakPoint"] = str(2 * q)
    cert.notes["tauIncreasing"] = str(increasing).lower()
    return cert

# heuristic scan

@dataclass(frozen=True)
class ScanPoint:
    s: float
    attained: bool
    witness: Alphabet | None
    nearest: float

def scan_spectrum(parent: Alphabet, sGrid: Sequence[float], maxSubsetSize: int, config: SolverConfig = SolverConfig(), tol: float = 5e-3) -> list[ScanPoint]:
    '''For each s, search the finite subsets of the parent snapshot of at most
    `maxSubsetSize` elements for one whose dimension estimate lies within `tol`
    of s. Heuristic; this proves nothing.

    Depth-first in element order. A subset whose dimension already exceeds
    s + tol is not extended, since adding elements only raises the dimension.
    '''
    if maxSubsetSize < 1:
        raise ParameterError("maxSubsetSize must be positive")
    dims = _Dims(config.replace(certified=False))
    pool = list(parent.elements)
    out: list[ScanPoint] = []
    for s in sGrid:
        if not 0 < s < 1:
            raise RangeError(f"grid values must lie in (0, 1), got {s}")
        best: tuple[float, tuple[int, ...]] = (float("inf"), ())

        def visit(subset: tuple[int, ...], start: int) -> bool:
            nonlocal best
            d = dims(subset).mid if len(subset) > 1 else 0.0
            gap = abs(d - s)
            if gap < best[0]:
                best = (gap, subset)
            if gap <= tol:
                return True
            if d > s + tol or len(subset) >= maxSubsetSize:
                return False
            return any(visit(subset + (pool[i],), i + 1) for i in range(start, len(pool)))

        found = any(visit((pool[i],), i + 1) for i in range(len(pool)))
        witness = explicit(best[1]) if found else None
        nearest = dims(best[1]).mid if len(best[1]) > 1 else 0.0
        print(f"\ts = {s}: {'attained by ' + witness.to_text() if witness else 'not attained'}, nearest {nearest:.6f}")
        out.append(ScanPoint(s, found, witness, nearest))
    return out

__all__ = [
    "BreakPointRecord",
    "GapCertificate",
    "GreedyConstruction",
    "MqStructure",
    "ScanPoint",
    "StructureKind",
    "certify_critical_breakpoint",
    "certify_fsharp_contraction",
    "certify_mq_structure",
    "certify_pstar_gap",
    "find_strict_break_point",
    "greedy_spectrum_construct",
    "scan_spectrum",
]

# pyright: strict
'''Certified enclosures of the spectral radius of L_{s,F} and of the Hausdorff
dimension of J_F.

For a strictly positive test function w, every x satisfies

    min (Lw)/w  <=  r(L)  <=  max (Lw)/w

so bounding the ratio over [0, 1] from both sides brackets the spectral
radius. The ratio is enclosed cell by cell in interval arithmetic; each cell
enclosure is the intersection of the naive interval extension and the
mean-value form built from the slope hull of w. Cells are split until the
goal is met or the depth limit is reached.

The dimension is the s with r(L_s) = 1. A floating-point bisection finds an
estimate s*, then the two endpoints s* - d and s* + d are certified with
r >= 1 and r <= 1 respectively, widening d until both hold.
'''
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from enum import Enum
from typing import Any, Self, Sequence

import numpy as np

from alphabets import Alphabet
from certificate import Certificate, Verdict
from errors import ParameterError, UnsupportedError
from interval import Interval, down, up
from transfer import FloatArray, GridFunction, TestFunction, TransferOperator

@dataclass(frozen=True)
class SolverConfig:
    meshSize: int = 200
    bisectionTol: float = 1e-6
    maxDepth: int = 12
    powerIters: int = 100
    certified: bool = True
    useTail: bool = True
    truncation: int | None = None
    maxTruncation: int = 60
    maxWidth: float = 1e-4
    maxCells: int = 400_000

    def __post_init__(self) -> None:
        if self.meshSize < 8:
            raise ParameterError(f"meshSize must be at least 8, got {self.meshSize}")
        if not self.bisectionTol > 0:
            raise ParameterError(f"bisectionTol must be positive, got {self.bisectionTol}")
        if self.maxDepth < 0 or self.powerIters < 1:
            raise ParameterError("maxDepth must be >= 0 and powerIters >= 1")
        if self.truncation is not None and self.truncation < 1:
            raise ParameterError("truncation must be positive")

    def refined(self) -> SolverConfig:
        """Doubled mesh, two more subdivision levels."""
        return dataclasses.replace(self, meshSize=self.meshSize * 2, maxDepth=self.maxDepth + 2)

    def replace(self, **changes: Any) -> SolverConfig:
        return dataclasses.replace(self, **changes)

    def to_json(self) -> dict[str, Any]:
        return dataclasses.asdict(self)

    @classmethod
    def from_json(cls, o: dict[str, Any]) -> Self:
        return cls(**{f.name: o[f.name] for f in dataclasses.fields(cls) if f.name in o})

    def entries(self) -> dict[str, str]:
        """The config as certificate text entries."""
        return {k: ("none" if v is None else str(v).lower() if isinstance(v, bool) else repr(v)) for k, v in self.to_json().items()}

    @classmethod
    def from_entries(cls, entries: dict[str, str]) -> Self:
        o: dict[str, Any] = {}
        for f in dataclasses.fields(cls):
            if f.name not in entries:
                continue
            text = entries[f.name]
            if text == "none":
                o[f.name] = None
            elif text in ("true", "false"):
                o[f.name] = text == "true"
            elif f.name in ("bisectionTol", "maxWidth"):
                o[f.name] = float(text)
            else:
                o[f.name] = int(text)
        return cls(**o)

# fast path

def _discretised(op: TransferOperator, xs: FloatArray) -> tuple[FloatArray, FloatArray]:
    '''Weights (n+x)^{-2s} and image points 1/(n+x), one row per element.'''
    s = op.sInterval.mid
    u = op.elementArray[:, None] + xs[None, :]
    return np.exp(-2 * s * np.log(u)), 1.0 / u

def power_iterate(op: TransferOperator, config: SolverConfig, initial: GridFunction | None = None) -> GridFunction:
    '''Candidate eigenfunction: the discretised operator applied repeatedly with
    sup-norm renormalisation. Carries no accuracy claim.'''
    mesh = GridFunction.uniform_mesh(config.meshSize)
    xs = np.array(mesh)
    weights, points = _discretised(op, xs)
    flat = points.ravel()
    if initial is not None and initial.cells == config.meshSize:
        w = initial.valuesArray.copy()
    else:
        w = np.ones_like(xs)
    for _ in range(config.powerIters):
        v = (weights * np.interp(flat, xs, w).reshape(points.shape)).sum(axis=0)
        w = v / v.max()
    return GridFunction(mesh, w.tolist())

def _ratios(op: TransferOperator, w: TestFunction, xs: FloatArray, withTail: bool) -> FloatArray:
    weights, points = _discretised(op, xs)
    lw = (weights * w.evaluate(points.ravel()).reshape(points.shape)).sum(axis=0)
    if withTail:
        lw = lw + op.tailBound(w)
    return lw / w.evaluate(xs)

def radius_estimate(op: TransferOperator, w: TestFunction, config: SolverConfig, samplesPerCell: int = 4) -> tuple[float, float]:
    '''Floating-point (min, max) of (Lw)/w on a sample grid; not a bound.'''
    xs = np.linspace(0.0, 1.0, config.meshSize * samplesPerCell + 1)
    r = _ratios(op, w, xs, op.tail is not None)
    return float(r.min()), float(r.max())

# certified sandwich

class Side(Enum):
    LOWER = "lower"
    UPPER = "upper"

@dataclass(frozen=True, slots=True)
class _Cell:
    x: Interval
    depth: int
    value: Interval
    atMid: Interval
    tail: float

class _Sandwich:
    def __init__(self, op: TransferOperator, w: TestFunction, withTail: bool):
        self.w = w
        self.minus2S = -2 * op.sInterval
        self.elements = op.elementIntervals
        self.tailNumerator = op.tailBound(w) if withTail else 0.0

    def _numerator(self, X: Interval) -> Interval:
        total = Interval(0.0, 0.0)
        for n in self.elements:
            u = n + X
            total = total + (u.log() * self.minus2S).exp() * self.w.enclose(1 / u)
        return total

    def _tailOver(self, D: Interval) -> float:
        if self.tailNumerator == 0.0:
            return 0.0
        return up(self.tailNumerator / D.lo)

    def cell(self, X: Interval, depth: int) -> _Cell:
        w = self.w
        D = w.enclose(X)
        N = Interval(0.0, 0.0)
        dN = Interval(0.0, 0.0)
        for n in self.elements:
            u = n + X
            p = (u.log() * self.minus2S).exp()
            y = 1 / u
            wy = w.enclose(y)
            N = N + p * wy
            dN = dN + p * (self.minus2S * wy / u - w.slopes(y) / u.sqr())
        naive = N / D
        m = X.mid
        M = Interval(m, m)
        DM = w.enclose(M)
        atMid = self._numerator(M) / DM
        dR = dN / D - N * w.slopes(X) / D.sqr()
        centred = atMid + dR * (X - m)
        value = naive.intersect(centred)
        assert value is not None, f"disjoint enclosures {naive} and {centred} on {X}"
        return _Cell(X, depth, value, atMid, self._tailOver(D))

    def split(self, c: _Cell) -> list[_Cell]:
        m = c.x.mid
        return [self.cell(Interval(c.x.lo, m), c.depth + 1), self.cell(Interval(m, c.x.hi), c.depth + 1)]

def _initialCells(s: _Sandwich, w: TestFunction, config: SolverConfig) -> list[_Cell]:
    mesh = w.mesh if isinstance(w, GridFunction) else GridFunction.uniform_mesh(config.meshSize)
    return [s.cell(Interval(a, b), 0) for a, b in zip(mesh, mesh[1:])]

def _bounds(cells: Sequence[_Cell]) -> Interval:
    return Interval(min(c.value.lo for c in cells), max(up(c.value.hi + c.tail) for c in cells))

def _refineToward(s: _Sandwich, cells: list[_Cell], config: SolverConfig, side: Side, target: float) -> list[_Cell]:
    '''Split only the cells that still straddle the target on the given side.
    Stops early once a cell's midpoint enclosure already lies on the wrong side.'''
    done: list[_Cell] = []
    work = list(cells)
    budget = config.maxCells
    while work:
        c = work.pop()
        if side == Side.LOWER:
            if c.value.lo >= target:
                done.append(c)
                continue
            hopeless = c.atMid.hi < target
        else:
            if up(c.value.hi + c.tail) <= target:
                done.append(c)
                continue
            hopeless = c.atMid.lo > target
        if hopeless or c.depth >= config.maxDepth or budget <= 0:
            return done + [c] + work
        budget -= 2
        work.extend(s.split(c))
    return done

def _refineBoth(s: _Sandwich, cells: list[_Cell], config: SolverConfig) -> list[_Cell]:
    '''Split until every cell that could still move the minimum or the maximum
    is narrower than bisectionTol/4.'''
    tol = config.bisectionTol / 4
    leaves = cells
    budget = config.maxCells
    while budget > 0:
        minUp = min(c.atMid.hi for c in leaves)
        maxLo = max(c.atMid.lo + c.tail for c in leaves)
        keep: list[_Cell] = []
        grow: list[_Cell] = []
        for c in leaves:
            wide = c.value.width >= tol and c.depth < config.maxDepth
            if wide and (c.value.lo < minUp - tol or c.value.hi + c.tail > maxLo + tol):
                grow.append(c)
            else:
                keep.append(c)
        if not grow:
            break
        budget -= 2 * len(grow)
        for c in grow:
            keep.extend(s.split(c))
        leaves = keep
    return leaves

def _enclose(op: TransferOperator, w: TestFunction, config: SolverConfig, withTail: bool, side: Side | None, target: float) -> Interval:
    s = _Sandwich(op, w, withTail)
    cells = _initialCells(s, w, config)
    if side is None:
        return _bounds(_refineBoth(s, cells, config))
    return _bounds(_refineToward(s, cells, config, side, target))

def radius_enclosure(op: TransferOperator, w: TestFunction, config: SolverConfig, side: Side | None = None, target: float = 1.0) -> Interval:
    '''[alpha, beta] with alpha <= min (Lw)/w and beta >= max (Lw)/w, hence
    r(L) in [alpha, beta].

    With `side`, refinement only aims at proving alpha >= target (LOWER) or
    beta <= target (UPPER); the other endpoint is still valid but loose.
    '''
    if op.tail is not None:
        raise UnsupportedError("operator has a tail; use radius_enclosure_with_tail")
    return _enclose(op, w, config, False, side, target)

def radius_enclosure_with_tail(op: TransferOperator, w: TestFunction, config: SolverConfig, side: Side | None = None, target: float = 1.0) -> Interval:
    '''As radius_enclosure for an alphabet with an infinite tail. The lower end
    ignores the tail (a subset has smaller radius); the upper end adds the tail
    majorant times the supremum of w over the tail's image [0, 1/first].'''
    if op.tail is None:
        raise ParameterError("operator has no tail")
    op.tail.checkConvergent(op.sInterval)
    return _enclose(op, w, config, True, side, target)

# dimension

@dataclass(frozen=True)
class DimensionResult:
    enclosure: Interval
    warning: bool = False
    truncation: int | None = None
    tail: bool = False

    @property
    def lo(self) -> float:
        return self.enclosure.lo

    @property
    def hi(self) -> float:
        return self.enclosure.hi

    @property
    def width(self) -> float:
        return self.enclosure.width

def _fastRadius(op: TransferOperator, config: SolverConfig, w: GridFunction | None) -> tuple[float, GridFunction]:
    w = power_iterate(op, config, w)
    r = _ratios(op, w, w.meshArray, op.tail is not None)
    return float((r.min() + r.max()) / 2), w

def _fastRoot(op: TransferOperator, config: SolverConfig, lo: float, hi: float) -> tuple[float, float]:
    '''Bracket [lo, hi] around the s where the estimated radius crosses 1.'''
    w: GridFunction | None = None
    r, w = _fastRadius(op.at(hi), config, w)
    if r > 1:
        return hi, hi
    r, w = _fastRadius(op.at(lo), config, w)
    if r <= 1:
        return lo, lo
    while hi - lo > config.bisectionTol / 8:
        mid = lo + (hi - lo) / 2
        r, w = _fastRadius(op.at(mid), config, w)
        if r > 1:
            lo = mid
        else:
            hi = mid
    return lo, hi

def _certifiedAt(op: TransferOperator, config: SolverConfig, side: Side) -> bool:
    w = power_iterate(op, config)
    lo, hi = radius_estimate(op, w, config)
    margin = lo - 1 if side == Side.LOWER else 1 - hi
    if margin <= (hi - lo) / 4:
        return False
    attempts = [
        (config, w),
        (config, power_iterate(op, config.replace(powerIters=3 * config.powerIters), w)),
        (config.replace(maxDepth=config.maxDepth + 2), w),
    ]
    for cfg, candidate in attempts:
        if op.tail is None:
            r = radius_enclosure(op, candidate, cfg, side)
        else:
            r = radius_enclosure_with_tail(op, candidate, cfg, side)
        if (side == Side.LOWER and r.lo >= 1) or (side == Side.UPPER and r.hi <= 1):
            return True
    return False

def _certifyEndpoint(op: TransferOperator, start: float, side: Side, config: SolverConfig, floor: float, ceil: float) -> tuple[float, bool]:
    '''Move away from the estimate until r >= 1 (LOWER) or r <= 1 (UPPER) is
    certified. Falls back to the trivial bound; the flag reports that fallback.'''
    delta = config.bisectionTol / 2
    while delta < 1:
        s = down(start - delta) if side == Side.LOWER else up(start + delta)
        if side == Side.LOWER and s <= floor:
            return floor, True
        if side == Side.UPPER and s >= ceil:
            return ceil, True
        if _certifiedAt(op.at(s), config, side):
            return s, False
        delta *= 2
    return (floor if side == Side.LOWER else ceil), True

def dimension(a: Alphabet, config: SolverConfig = SolverConfig()) -> DimensionResult:
    '''Enclosure of dim_H(J_a).

    Explicit alphabets are finite. For a family alphabet with useTail, the lower
    end comes from its finite snapshot and the upper end from the snapshot plus
    the tail majorant; without useTail only the snapshot is used.
    '''
    if a.infinite and config.truncation is not None:
        a = a.withCount(config.truncation)
    withTail = a.infinite and config.useTail
    truncation = len(a) if a.infinite else None
    finite = a.truncated()
    sigma0 = a.finiteness().sigma0 if withTail else 0.0
    if len(finite) == 1 and not withTail:
        return DimensionResult(Interval(0.0, 0.0), truncation=truncation)

    lowerOp = TransferOperator(finite, 0.5)
    upperOp = TransferOperator.of(a, 0.5, withTail=True) if withTail else lowerOp
    start = sigma0 + config.bisectionTol if withTail else 0.0

    if len(finite) == 1:
        lowLo, lowHi = 0.0, 0.0
    else:
        lowLo, lowHi = _fastRoot(lowerOp, config, config.bisectionTol / 8, 1.0)
    if withTail:
        upLo, upHi = _fastRoot(upperOp, config, max(start, lowLo), 1.0)
    else:
        upLo, upHi = lowLo, lowHi

    if not config.certified:
        return DimensionResult(Interval(lowLo, max(lowLo, upHi)), truncation=truncation, tail=withTail)

    warnLow = warnHigh = False
    if len(finite) == 1:
        lo = 0.0
    else:
        lo, warnLow = _certifyEndpoint(lowerOp, lowLo, Side.LOWER, config, 0.0, 1.0)
    hi, warnHigh = _certifyEndpoint(upperOp, upHi, Side.UPPER, config, start, 1.0)
    hi = max(hi, lo)
    enclosure = Interval(lo, hi)
    warning = warnLow or warnHigh or enclosure.width > config.maxWidth
    return DimensionResult(enclosure, warning, truncation, withTail)

def dimension_monotonicity_check(a: Alphabet, b: Alphabet, config: SolverConfig = SolverConfig()) -> Certificate:
    '''Monotone bijection check: if the i-th element of b is at least the i-th
    element of a, then dim(J_b) <= dim(J_a), so enclosure(b).lo <= enclosure(a).hi.'''
    if a.infinite or b.infinite or len(a) != len(b):
        raise ParameterError("monotonicity check needs two finite alphabets of equal size")
    if any(y < x for x, y in zip(a, b)):
        raise ParameterError(f"{b.to_text()} does not dominate {a.to_text()} elementwise")
    da = dimension(a, config)
    db = dimension(b, config)
    ok = db.lo <= da.hi
    cert = Certificate(
        statementId="monotonicity",
        verdict=Verdict.VERIFIED if ok else Verdict.FAILED,
        inputs={"a": a.to_text(), "b": b.to_text()},
        config=config.entries(),
    )
    cert.addResult("dimA", da.enclosure)
    cert.addResult("dimB", db.enclosure)
    if not ok:
        cert.notes["violation"] = "dim(b) enclosure lies above dim(a) enclosure; solver defect"
    return cert

def truncation_convergence_scan(a: Alphabet, sizes: Sequence[int], config: SolverConfig = SolverConfig()) -> list[DimensionResult]:
    '''Dimension enclosures of nested truncations of a family.'''
    if any(y <= x for x, y in zip(sizes, sizes[1:])):
        raise ParameterError("sizes must increase strictly")
    if not a.infinite:
        raise ParameterError("truncation scan needs a family alphabet")
    finite = config.replace(useTail=False, truncation=None)
    return [dimension(a.withCount(n), finite) for n in sizes]

__all__ = [
    "DimensionResult",
    "Side",
    "SolverConfig",
    "dimension",
    "dimension_monotonicity_check",
    "power_iterate",
    "radius_enclosure",
    "radius_enclosure_with_tail",
    "radius_estimate",
    "truncation_convergence_scan",
]

# pyright: strict
'''The transfer operator L_{s,F} f(x) = sum over n in F of (n+x)^{-2s} f(1/(n+x)),
the piecewise-linear test functions it acts on, and the closed-form
eigenpairs of singleton alphabets.'''
from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Protocol, Self, Sequence

import numpy as np
import numpy.typing as npt

from alphabets import Alphabet, TailMajorant
from errors import DomainError, ParameterError, PositivityError, RangeError, UnsupportedError
from interval import Interval, power

FloatArray = npt.NDArray[np.float64]
DimParameter = float | Interval

def check_dim_parameter(s: DimParameter) -> None:
    '''0 <= s <= 1; s = 0 is allowed and turns the operator into counting.'''
    si = Interval.of(s)
    if si.lo < 0 or si.hi > 1:
        raise RangeError(f"dimension parameter must lie in [0, 1], got {s}")

class TestFunction(Protocol):
    """What the operator and the sandwich need from a positive function on [0,1]."""
    def at(self, x: float) -> float: ...
    def evaluate(self, xs: FloatArray) -> FloatArray: ...
    def enclose(self, y: Interval) -> Interval: ...
    def slopes(self, y: Interval) -> Interval: ...

class GridFunction:
    '''Strictly positive piecewise-linear function given by its values on a mesh
    0 = x_0 < ... < x_N = 1.'''
    def __init__(self, mesh: Sequence[float], values: Sequence[float]):
        if len(mesh) != len(values):
            raise ParameterError("mesh and values differ in length")
        if len(mesh) < 3:
            raise ParameterError("a grid function needs N >= 2 cells")
        if mesh[0] != 0.0 or mesh[-1] != 1.0 or any(b <= a for a, b in zip(mesh, mesh[1:])):
            raise ParameterError("mesh must increase strictly from 0 to 1")
        if not all(v > 0 for v in values):
            raise PositivityError("grid function values must be strictly positive")
        self.mesh = tuple(float(x) for x in mesh)
        self.values = tuple(float(v) for v in values)
        self.meshArray: FloatArray = np.array(self.mesh)
        self.valuesArray: FloatArray = np.array(self.values)

    @staticmethod
    def uniform_mesh(n: int) -> list[float]:
        return [j / n for j in range(n + 1)]

    @classmethod
    def constant(cls, n: int, value: float = 1.0) -> Self:
        return cls(cls.uniform_mesh(n), [value] * (n + 1))

    @classmethod
    def sample(cls, f: TestFunction, n: int) -> Self:
        mesh = cls.uniform_mesh(n)
        return cls(mesh, [f.at(x) for x in mesh])

    @property
    def cells(self) -> int:
        return len(self.mesh) - 1

    @cached_property
    def _slopes(self) -> list[Interval]:
        m = self.mesh
        v = self.values
        return [(Interval.of(v[k + 1]) - v[k]) / (Interval.of(m[k + 1]) - m[k]) for k in range(self.cells)]

    def _cell(self, y: float) -> int:
        return min(max(bisect_right(self.mesh, y) - 1, 0), self.cells - 1)

    def at(self, x: float) -> float:
        return float(np.interp(x, self.meshArray, self.valuesArray))

    def evaluate(self, xs: FloatArray) -> FloatArray:
        return np.interp(xs, self.meshArray, self.valuesArray)

    def _encloseAt(self, y: float, k: int) -> Interval:
        return self._slopes[k] * (Interval.of(y) - self.mesh[k]) + self.values[k]

    def enclose(self, y: Interval) -> Interval:
        '''Rigorous range of the interpolant over y ∩ [0, 1].'''
        y = y.clamp(0.0, 1.0)
        i = self._cell(y.lo)
        j = self._cell(y.hi)
        parts = [self._encloseAt(y.lo, i), self._encloseAt(y.hi, j)]
        if j > i:
            inner = self.values[i + 1:j + 1]
            parts.append(Interval(min(inner), max(inner)))
        return Interval.hull(parts)

    def slopes(self, y: Interval) -> Interval:
        """Hull of the cell slopes met by y; encloses every difference quotient on y."""
        y = y.clamp(0.0, 1.0)
        return Interval.hull(self._slopes[self._cell(y.lo):self._cell(y.hi) + 1])

    def sup(self, lo: float, hi: float) -> float:
        return self.enclose(Interval(lo, hi)).hi

    def normalised(self) -> GridFunction:
        top = max(self.values)
        return GridFunction(self.mesh, [v / top for v in self.values])

class ClosedFormEigenfunction:
    """v(y) = (lambdaRoot + y)^{-2s}, the exact eigenfunction for a singleton alphabet."""
    def __init__(self, lambdaRoot: Interval, s: Interval):
        self.lambdaRoot = lambdaRoot
        self.s = s

    def at(self, x: float) -> float:
        return math.exp(-2 * self.s.mid * math.log(self.lambdaRoot.mid + x))

    def evaluate(self, xs: FloatArray) -> FloatArray:
        return np.power(self.lambdaRoot.mid + xs, -2 * self.s.mid)

    def enclose(self, y: Interval) -> Interval:
        return power(self.lambdaRoot + y.clamp(0.0, 1.0), -2 * self.s)

    def slopes(self, y: Interval) -> Interval:
        y = y.clamp(0.0, 1.0)
        return -2 * self.s * power(self.lambdaRoot + y, -2 * self.s - 1)

@dataclass(frozen=True)
class ClosedFormEigenpair:
    lambdaRoot: float
    eigenvalue: float
    eigenfunction: ClosedFormEigenfunction

    def enclosures(self) -> tuple[Interval, Interval]:
        """(lambdaRoot, eigenvalue) as certified enclosures."""
        lam = self.eigenfunction.lambdaRoot
        return lam, power(lam, -2 * self.eigenfunction.s)

def closed_form_eigenpair(mu: float | int, s: DimParameter) -> ClosedFormEigenpair:
    '''For F = {mu}: lambda = (mu + sqrt(mu^2 + 4))/2 and L v = lambda^{-2s} v
    with v(x) = (lambda + x)^{-2s}.'''
    if mu <= 0:
        raise ParameterError(f"mu must be positive, got {mu}")
    check_dim_parameter(s)
    m = Interval.of(mu)
    si = Interval.of(s)
    lam = (m + (m.sqr() + 4).sqrt()) / 2
    lamf = (mu + math.sqrt(mu * mu + 4)) / 2
    return ClosedFormEigenpair(lamf, lamf ** (-2 * si.mid), ClosedFormEigenfunction(lam, si))

class TransferOperator:
    """L_{s,F} on the finite snapshot of an alphabet, with an optional tail majorant."""
    def __init__(self, alphabet: Alphabet, s: DimParameter, tail: TailMajorant | None = None):
        check_dim_parameter(s)
        if tail is not None and tail.first <= alphabet.elements[-1]:
            raise ParameterError(f"tail starts at {tail.first}, inside the snapshot of {alphabet.to_text()}")
        self.alphabet = alphabet
        self.elements = alphabet.elements
        self.s = s
        self.tail = tail

    @classmethod
    def of(cls, alphabet: Alphabet, s: DimParameter, withTail: bool = False) -> Self:
        return cls(alphabet, s, alphabet.tail_majorant() if withTail and alphabet.infinite else None)

    def at(self, s: DimParameter) -> TransferOperator:
        return TransferOperator(self.alphabet, s, self.tail)

    @property
    def gamma(self) -> int:
        return self.alphabet.gamma

    @property
    def sInterval(self) -> Interval:
        return Interval.of(self.s)

    @cached_property
    def elementIntervals(self) -> list[Interval]:
        return [Interval.exact_int(n) for n in self.elements]

    @cached_property
    def elementArray(self) -> FloatArray:
        return np.array([float(n) for n in self.elements])

    def tailBound(self, f: TestFunction) -> float:
        '''Upper bound for the tail part of (L f)(x), any x in [0, 1].'''
        if self.tail is None:
            return 0.0
        fmax = f.enclose(Interval(0.0, 1.0) / Interval.exact_int(self.tail.first)).hi
        return (self.tail.tail_sum(self.sInterval) * fmax).hi

def _checkPoint(x: float | Interval) -> None:
    xi = Interval.of(x)
    if xi.lo < 0.0 or xi.hi > 1.0:
        raise DomainError(f"x must lie in [0, 1], got {x}")

def apply(op: TransferOperator, f: TestFunction, x: float | Interval, upper: bool = False) -> float | Interval:
    '''(L f)(x). Returns an enclosure when s or x is an interval.

    With `upper`, a tail majorant, if present, is added as an upper bound.
    '''
    _checkPoint(x)
    if isinstance(op.s, Interval) or isinstance(x, Interval):
        X = Interval.of(x)
        S = op.sInterval
        total = Interval(0.0, 0.0)
        for n in op.elementIntervals:
            u = n + X
            total = total + power(u, -2 * S) * f.enclose(1 / u)
        if upper and op.tail is not None:
            total = Interval(total.lo, (total + op.tailBound(f)).hi)
        return total
    s = op.s
    value = 0.0
    for n in op.elements:
        u = n + x
        value += math.exp(-2 * s * math.log(u)) * f.at(1 / u)
    if upper and op.tail is not None:
        value += op.tailBound(f)
    return value

def apply_squared(op: TransferOperator, f: TestFunction, x: float) -> float:
    '''(L^2 f)(x) summed over pairs, using (theta_a o theta_b)'(x) = (a(b+x)+1)^{-2}.'''
    if op.tail is not None:
        raise UnsupportedError("apply_squared is defined for finite alphabets only")
    if isinstance(op.s, Interval):
        raise UnsupportedError("apply_squared works in floating point only")
    _checkPoint(x)
    s = op.s
    value = 0.0
    for a in op.elements:
        for b in op.elements:
            d = a * (b + x) + 1
            value += math.exp(-2 * s * math.log(d)) * f.at((b + x) / d)
    return value

def log_lipschitz_factor(op: TransferOperator, x: float, y: float) -> float:
    """e^{2s|x-y|/gamma}: v(x) <= v(y) * factor for the true eigenfunction v."""
    _checkPoint(x)
    _checkPoint(y)
    s = op.sInterval.hi
    return math.exp(2 * s * abs(x - y) / op.gamma)

__all__ = [
    "ClosedFormEigenfunction",
    "ClosedFormEigenpair",
    "DimParameter",
    "GridFunction",
    "TestFunction",
    "TransferOperator",
    "apply",
    "apply_squared",
    "check_dim_parameter",
    "closed_form_eigenpair",
    "log_lipschitz_factor",
]

# pyright: strict, reportUnknownMemberType=false, reportUnknownVariableType=false, reportUnknownArgumentType=false
'''Closed-form bounds and the certificate functions of the gap and interval
arguments, each evaluable in certified interval arithmetic.

Every formula is written once against an `Arithmetic` kernel. The float
interval kernel produces the reported enclosure; `BoundReport.recheck` runs
the same formula through mpmath's interval context at 113 bits.
'''
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import StrEnum
from typing import Any, Callable, Protocol

from mpmath import iv
from mpmath.libmp import round_ceiling, round_floor, to_float

import reference_table
from certificate import BoundRecord, DecimalEnclosure
from constants import MQ_CRUDE, THREE_POW_GAP, THREE_POW_K, TWO_POW_GAP, GammaCheck, constant, GAMMA_CHECKS
from errors import DivergentTailError, OutOfTheoremRangeError, ParameterError, RangeError
from interval import Interval

Value = Any

class Arithmetic(Protocol):
    name: str
    def num(self, x: int | str) -> Value: ...
    def interval(self, x: Interval) -> Value: ...
    def exp(self, x: Value) -> Value: ...
    def log(self, x: Value) -> Value: ...
    def sqrt(self, x: Value) -> Value: ...
    def enclosure(self, x: Value) -> Interval: ...

class FloatArithmetic:
    name = "float"

    def num(self, x: int | str) -> Interval:
        return Interval.exact_int(x) if isinstance(x, int) else Interval.decimal(x)

    def interval(self, x: Interval) -> Interval:
        return x

    def exp(self, x: Interval) -> Interval:
        return x.exp()

    def log(self, x: Interval) -> Interval:
        return x.log()

    def sqrt(self, x: Interval) -> Interval:
        return x.sqrt()

    def enclosure(self, x: Interval) -> Interval:
        return x

class MpmathArithmetic:
    '''mpmath.iv at a fixed working precision. Callers wrap evaluation in
    `with kernel:` so the global iv precision is restored afterwards.'''
    name = "mpmath"

    def __init__(self, prec: int = 113):
        self.prec = prec
        self._saved: list[int] = []

    def __enter__(self) -> MpmathArithmetic:
        self._saved.append(iv.prec)
        iv.prec = self.prec
        return self

    def __exit__(self, *args: object) -> None:
        iv.prec = self._saved.pop()

    def num(self, x: int | str) -> Value:
        return iv.mpf(x)

    def interval(self, x: Interval) -> Value:
        return iv.mpf([x.lo, x.hi])

    def exp(self, x: Value) -> Value:
        return iv.exp(x)

    def log(self, x: Value) -> Value:
        return iv.log(x)

    def sqrt(self, x: Value) -> Value:
        return iv.sqrt(x)

    def enclosure(self, x: Value) -> Interval:
        lo, hi = x._mpi_
        return Interval(to_float(lo, rnd=round_floor), to_float(hi, rnd=round_ceiling))

FLOAT = FloatArithmetic()

def _pow(k: Arithmetic, base: Value, e: Value) -> Value:
    return k.exp(e * k.log(base))

def _golden(k: Arithmetic) -> Value:
    return (1 + k.sqrt(k.num(5))) / 2

def _s(k: Arithmetic, s: Interval | str) -> Value:
    return k.num(s) if isinstance(s, str) else k.interval(s)

class BoundVerdict(StrEnum):
    ABOVE = "above"
    BELOW = "below"
    INCONCLUSIVE = "inconclusive"

    @property
    def symbol(self) -> str:
        return {"above": ">", "below": "<"}.get(self.value, "?")

def _text(x: Interval | str | int) -> str:
    if isinstance(x, Interval):
        return x.format(10) if not x.isPoint() else repr(x.lo)
    return str(x)

def _verdictOf(value: Interval, threshold: str) -> BoundVerdict:
    t = Interval.decimal(threshold)
    if value.lo > t.hi:
        return BoundVerdict.ABOVE
    if value.hi < t.lo:
        return BoundVerdict.BELOW
    return BoundVerdict.INCONCLUSIVE

@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict[str, str]
    value: Interval
    threshold: str
    claim: BoundVerdict
    formula: Callable[[Arithmetic], Value] = field(compare=False, repr=False)

    @property
    def verdict(self) -> BoundVerdict:
        return _verdictOf(self.value, self.threshold)

    @property
    def holds(self) -> bool:
        return self.verdict == self.claim

    def recheck(self, prec: int = 113) -> Interval:
        """The same formula in mpmath interval arithmetic."""
        with MpmathArithmetic(prec) as k:
            return k.enclosure(self.formula(k))

    def recheckAgrees(self, prec: int = 113) -> bool:
        return _verdictOf(self.recheck(prec), self.threshold) == self.verdict

    def inputsText(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.inputs.items())

    def record(self) -> BoundRecord:
        return BoundRecord(
            self.name,
            self.inputsText(),
            DecimalEnclosure.from_interval(self.value),
            f"{self.claim.symbol} {self.threshold}",
            self.verdict.value,
        )

    def __str__(self) -> str:
        return f"{self.name}({self.inputsText()}) = {self.value.format(8)}, claim {self.claim.symbol} {self.threshold}: {self.verdict}"

def _report(name: str, inputs: dict[str, Any], formula: Callable[[Arithmetic], Value], threshold: str, claim: BoundVerdict) -> BoundReport:
    return BoundReport(name, {k: _text(v) for k, v in inputs.items()}, FLOAT.enclosure(formula(FLOAT)), threshold, claim, formula)

# dim({1,n}) from the golden-mean eigenfunction

def _sMinusGap(n: int, s: Interval) -> Interval:
    lam = _golden(FLOAT)
    return _pow(FLOAT, lam, -2 * s) + _pow(FLOAT, lam + (n - 1), -2 * s) - 1

def _sPlusGap(n: int, s: Interval) -> Interval:
    lam = _golden(FLOAT)
    return _pow(FLOAT, lam, -2 * s) + _pow(FLOAT, lam / (lam + n), 2 * s) - 1

def golden_bounds(n: int, tol: float = 1e-10, maxIter: int = 200) -> tuple[float, float]:
    '''(s_minus, s_plus) with s_minus <= dim(J_{1,n}) <= s_plus.

    Both functions are strictly decreasing in s; bisection keeps only
    endpoints whose sign is certified, so s_minus may sit slightly below the
    exact root and s_plus slightly above.
    '''
    if n < 2:
        raise ParameterError(f"golden_bounds needs n >= 2, got {n}")

    def root(f: Callable[[Interval], Interval], keepLow: bool) -> float:
        lo, hi = 0.0, 1.0
        for _ in range(maxIter):
            if hi - lo <= tol:
                break
            mid = lo + (hi - lo) / 2
            v = f(Interval.point(mid))
            if v.lo >= 0:
                lo = mid
            elif v.hi < 0:
                hi = mid
            else:
                break
        return lo if keepLow else hi

    sMinus = root(lambda s: _sMinusGap(n, s), True)
    sPlus = root(lambda s: _sPlusGap(n, s), False)
    assert sMinus <= sPlus, f"inconsistent golden bracket for n={n}: {sMinus} > {sPlus}"
    return sMinus, sPlus

def generic_lower(n: int) -> float:
    """0.52679/ln n, a lower bound for dim(J_{1,n}) when n >= 4."""
    if n < 4:
        raise RangeError(f"generic_lower needs n >= 4, got {n}")
    return (constant("generic_lower_c").interval / Interval.exact_int(n).log()).lo

def power_lower_2q(q: int) -> float:
    """1.0571/(q ln 2), a lower bound for dim(J_{1,2^q}) when q >= 12."""
    if q < 12:
        raise RangeError(f"power_lower_2q needs q >= 12, got {q}")
    return (constant("power_lower_c").interval / (q * Interval.exact_int(2).log())).lo

def power_lower_2q_weak(q: int) -> float:
    """The weaker 1.525/q."""
    if q < 12:
        raise RangeError(f"power_lower_2q needs q >= 12, got {q}")
    return (constant("power_lower_weak").interval / q).lo

def _h(k: Arithmetic, x: int, c: str) -> Value:
    s = k.num(c) / k.log(k.num(x))
    lam = _golden(k)
    return _pow(k, lam, -2 * s) + _pow(k, lam + (x - 1), -2 * s)

def h_report(x: int, c: str, threshold: str) -> BoundReport:
    '''h(x) = lambda^{-2s} + (x+lambda-1)^{-2s} at s = c/ln x; h(x) > 1 puts
    c/ln x below s_minus(x).'''
    return _report("h", {"x": x, "c": c}, lambda k: _h(k, x, c), threshold, BoundVerdict.ABOVE)

# M_q

def _mu(k: Arithmetic, q: int) -> Value:
    s = 2 / k.sqrt(k.num(q))
    lam = _golden(k)
    return _pow(k, lam, -2 * s) + _pow(k, lam / k.num(2 ** q), 2 * s) * (1 + 2 / (2 * q * s - 1))

def mq_upper(q: int) -> BoundReport:
    """mu(2/sqrt q) < 1, hence dim(J_{M_q}) <= 2/sqrt q."""
    if q < 11:
        raise RangeError(f"mq_upper needs q >= 11, got {q}")
    return _report("mq_upper", {"q": q, "s": "2/sqrt(q)"}, lambda k: _mu(k, q), "1", BoundVerdict.BELOW)

def _g(k: Arithmetic, x: int) -> Value:
    lam = _golden(k)
    lnLam = k.log(lam)
    r11 = k.sqrt(k.num(11))
    head = _pow(k, lam, -8 / r11) * _pow(k, k.num(2), 4 * k.sqrt(k.num(x)))
    tail = (1 + 2 / (4 * r11 - 1)) * (k.log(k.num(2)) / lnLam * x + 1) + 2 / (lnLam * (16 - 8 / r11))
    return head - tail

def mq_upper_monotonicity(x: int = 11) -> BoundReport:
    """g(x) > 0: the lower bound for the scaled derivative of h in the 2/sqrt q argument."""
    return _report("mq_upper.g", {"x": x}, lambda k: _g(k, x), "0", BoundVerdict.ABOVE)

def _alpha(k: Arithmetic, q: int, s: Value) -> Value:
    lam = _golden(k)
    lam1 = lam + 1
    total = 1 + sum((_pow(k, lam1 / (n ** q + 1), 2 * s) for n in (2, 3, 4)), k.num(0))
    total = total + _pow(k, lam1, 2 * s) / (2 * q * s - 1) * _pow(k, k.num(4), 1 - 2 * q * s)
    return _pow(k, lam, -2 * s) * total

def mq_crude_upper(q: int) -> BoundReport:
    """alpha(q, s_q) below its threshold, hence dim(J_{M_q}) <= s_q."""
    if q not in MQ_CRUDE:
        raise RangeError(f"mq_crude_upper needs 2 <= q <= 10, got {q}")
    s, threshold = MQ_CRUDE[q]
    return _report("mq_crude_upper", {"q": q, "s": s}, lambda k: _alpha(k, q, k.num(s)), threshold, BoundVerdict.BELOW)

def _checkTwoQS(q: int, s: Interval) -> None:
    if (2 * q * s).lo <= 1:
        raise DivergentTailError(f"needs 2qs > 1, got q={q}, s={s}")

def _gammaBreak(k: Arithmetic, q: int, n0: int, s: Value, terms: int) -> Value:
    p = 2 * q * s
    total = k.num(0)
    for i in range(1, terms + 1):
        total = total + _pow(k, k.num(n0) / (n0 + i), p)
    last = n0 + terms + 1
    return total + _pow(k, k.num(n0) / last, p) * last / (p - 1)

def gamma_break(q: int, n0: int, s: float | Interval | str) -> Interval:
    '''gamma(q,n0,s): three explicit terms of the sum over k > n0 of (n0/k)^{2qs}
    plus the integral remainder from n0+4. Decreasing in s, increasing in n0.'''
    si = s if isinstance(s, Interval) else Interval.decimal(s) if isinstance(s, str) else Interval.of(s)
    if q < 1 or n0 < 2:
        raise ParameterError(f"gamma_break needs q >= 1 and n0 >= 2, got q={q}, n0={n0}")
    _checkTwoQS(q, si)
    return _gammaBreak(FLOAT, q, n0, si, 3)

def gamma_prime_break(q: int, n0: int, s: float | Interval | str) -> Interval:
    """The five-term refinement of gamma_break, remainder from n0+6."""
    si = s if isinstance(s, Interval) else Interval.decimal(s) if isinstance(s, str) else Interval.of(s)
    if q < 1 or n0 < 2:
        raise ParameterError(f"gamma_prime_break needs q >= 1 and n0 >= 2, got q={q}, n0={n0}")
    _checkTwoQS(q, si)
    return _gammaBreak(FLOAT, q, n0, si, 5)

def gamma_report(check: GammaCheck) -> BoundReport:
    terms = 5 if check.prime else 3
    _checkTwoQS(check.q, Interval.decimal(check.s))
    name = "gamma_prime_break" if check.prime else "gamma_break"
    return _report(
        name,
        {"q": check.q, "n0": check.n0, "s": check.s},
        lambda k: _gammaBreak(k, check.q, check.n0, k.num(check.s), terms),
        check.threshold,
        BoundVerdict.ABOVE,
    )

def _tau(k: Arithmetic, q: int) -> Value:
    r = k.sqrt(k.num(q))
    return _pow(k, k.num(2 * q + 1) / (2 * q + 2), 4 * r) * (2 * q + 2) / (4 * r - 1)

def tau(q: int) -> Interval:
    """((2q+1)/(2q+2))^{4 sqrt q} (2q+2)/(4 sqrt q - 1)."""
    if q < 11:
        raise RangeError(f"tau needs q >= 11, got {q}")
    return _tau(FLOAT, q)

def tau_report(q: int) -> BoundReport:
    if q < 11:
        raise RangeError(f"tau needs q >= 11, got {q}")
    return _report("tau", {"q": q}, lambda k: _tau(k, q), constant("tau_threshold").value, BoundVerdict.ABOVE)

def tau_increasing(first: int, last: int) -> bool:
    """tau(q) < tau(q+1) certified for every first <= q < last."""
    values = [tau(q) for q in range(first, last + 1)]
    return all(a.hi < b.lo for a, b in zip(values, values[1:]))

# P*_q gaps

class PStarVariant(StrEnum):
    PLAIN = "plain"
    EXP_BOUND = "exp_bound"
    REFINED_Q3K1 = "refined_q3k1"
    REFINED_Q2K2 = "refined_q2k2"

def _pstar(k: Arithmetic, q: int, kk: int, s: Value, variant: PStarVariant) -> Value:
    two_s = 2 * s
    match variant:
        case PStarVariant.PLAIN:
            qk = k.num(q ** kk)
            return k.exp(two_s / qk) * _pow(k, 1 + 1 / qk, two_s) / (_pow(k, k.num(q), two_s) - 1)
        case PStarVariant.EXP_BOUND:
            return k.exp(2 * two_s / k.num(q ** kk)) / (_pow(k, k.num(q), two_s) - 1)
        case PStarVariant.REFINED_Q3K1:
            inner = (
                k.exp(two_s * 2 / 9) * _pow(k, k.num(10), -two_s)
                + k.exp(two_s * 8 / 27) * _pow(k, k.num(28), -two_s)
                + k.exp(two_s / 3) * _pow(k, k.num(27), -two_s) / (_pow(k, k.num(3), two_s) - 1)
            )
            return _pow(k, k.num(4), two_s) * inner
        case PStarVariant.REFINED_Q2K2:
            inner = (
                k.exp(two_s / 8) * _pow(k, k.num(9), -two_s)
                + k.exp(two_s * 3 / 16) * _pow(k, k.num(17), -two_s)
                + k.exp(two_s / 4) * _pow(k, k.num(16), -two_s) / (_pow(k, k.num(2), two_s) - 1)
            )
            return _pow(k, k.num(5), two_s) * inner

def pstar_gap_gamma(q: int, k: int, s: float | Interval | str, variant: PStarVariant = PStarVariant.PLAIN) -> Interval:
    '''Bound on the ratio by which the tail {q^{k+1}, ...} of F# replaces q^k,
    (e^{1/q^k}(1 + 1/q^k))^{2s}/(q^{2s} - 1) in the plain form.'''
    si = s if isinstance(s, Interval) else Interval.decimal(s) if isinstance(s, str) else Interval.of(s)
    if si.lo <= 0:
        raise DivergentTailError(f"geometric tail diverges at s={si}")
    if q < 2 or k < 1:
        raise ParameterError(f"pstar_gap_gamma needs q >= 2 and k >= 1, got q={q}, k={k}")
    if variant == PStarVariant.REFINED_Q3K1 and (q, k) != (3, 1):
        raise ParameterError("refined_q3k1 applies to q=3, k=1 only")
    if variant == PStarVariant.REFINED_Q2K2 and (q, k) != (2, 2):
        raise ParameterError("refined_q2k2 applies to q=2, k=2 only")
    return _pstar(FLOAT, q, k, si, variant)

def pstar_variant_for(q: int, k: int) -> PStarVariant:
    if (q, k) == (2, 1):
        raise OutOfTheoremRangeError("P*_2 has no gap at k = 1")
    if (q, k) == (3, 1):
        return PStarVariant.REFINED_Q3K1
    if (q, k) == (2, 2):
        return PStarVariant.REFINED_Q2K2
    return PStarVariant.EXP_BOUND

def pstar_gap_report(q: int, k: int, s: Interval | str, threshold: str = "1") -> BoundReport:
    '''The contraction check at s = dim(I_k): a value below 1 puts dim of the
    F# set strictly below dim(I_k).'''
    variant = pstar_variant_for(q, k)
    si = Interval.decimal(s) if isinstance(s, str) else s
    pstar_gap_gamma(q, k, si, variant)
    return _report(
        f"pstar_gap_gamma.{variant}",
        {"q": q, "k": k, "s": s},
        lambda kern: _pstar(kern, q, k, _s(kern, s), variant),
        threshold,
        BoundVerdict.BELOW,
    )

def _band(name: str) -> Interval:
    return reference_table.band(name)

def _twoPow(k: Arithmetic, q: int, s: Value) -> Value:
    a = k.num(2 ** q + 1)
    inner = _pow(k, a / (3 ** q + 1), 2 * s) + _pow(k, a / (4 ** q + 1), 2 * s) + _pow(k, a / (4 ** q), 2 * s) * 4 / (2 * s * q - 1)
    return k.exp(2 * s / (2 ** q)) * inner

def _twoPowLarge(k: Arithmetic, q: int) -> Value:
    s = k.num(constant("power_lower_weak").value) / q
    return 2 * k.exp(4 * s / (2 ** q)) / (2 * s * q - 1)

def _threePow(k: Arithmetic, q: int, s: Value, kk: int) -> Value:
    a = k.num(3 ** q + 1)
    total = k.num(0)
    for n in range(4, kk + 1):
        total = total + _pow(k, a / (n ** q + 1), 2 * s)
    total = total + _pow(k, a / (kk ** q), 2 * s) * kk / (2 * s * q - 1)
    return k.exp(2 * s / (3 ** q)) * total

class GapKind(StrEnum):
    TWO_POW = "two_pow_gap"
    THREE_POW = "three_pow_gap"

def mq_gap_bounds(q: int, which: GapKind, s: Interval | None = None) -> BoundReport:
    '''dim(M_q minus {2^q}) < dim({1,2^q}) (two_pow_gap) or
    dim(M_q minus {3^q}) < dim({1,2^q,3^q}) (three_pow_gap), through a
    majorant below 1 at s = the dimension of the finite set.

    `s` defaults to the shipped reference band of that finite set.
    '''
    match which:
        case GapKind.TWO_POW:
            if q < 6:
                raise RangeError(f"two_pow_gap needs q >= 6, got {q}")
            if q >= 12:
                return _report(f"mq_gap.{which}", {"q": q, "s": f"1.525/{q}"}, lambda k: _twoPowLarge(k, q), constant("two_pow_large_q").value, BoundVerdict.BELOW)
            band = s if s is not None else _band(f"{{1,2^{q}}}")
            _checkTwoQS(q, band)
            return _report(f"mq_gap.{which}", {"q": q, "s": band}, lambda k: _twoPow(k, q, k.interval(band)), TWO_POW_GAP[q], BoundVerdict.BELOW)
        case GapKind.THREE_POW:
            if q not in THREE_POW_GAP:
                raise RangeError(f"three_pow_gap needs q in {{9, 10}}, got {q}")
            band = s if s is not None else _band(f"{{1,2^{q},3^{q}}}")
            _checkTwoQS(q, band)
            return _report(
                f"mq_gap.{which}",
                {"q": q, "k": THREE_POW_K, "s": band},
                lambda k: _threePow(k, q, k.interval(band), THREE_POW_K),
                THREE_POW_GAP[q],
                BoundVerdict.BELOW,
            )

# adding one large element to F

@dataclass(frozen=True)
class PerturbationConstants:
    c1: float
    c2: float
    nThreshold: int
    cF: float

    def window(self, sigma: float, n: int) -> tuple[float, float]:
        """[sigma + n^{-2 sigma}/C_F, sigma + C_F n^{-2 sigma}]."""
        t = n ** (-2 * sigma)
        return sigma + t / self.cF, sigma + self.cF * t

def perturbation_constants(fSize: int, sigma: float) -> PerturbationConstants:
    '''Constants of sigma + C_F^{-1} n^{-2 sigma} < dim(F + {n}) < sigma + C_F n^{-2 sigma}
    for n beyond nThreshold, where sigma = dim(F).'''
    if not 0 < sigma < 1:
        raise RangeError(f"sigma must lie in (0, 1), got {sigma}")
    if fSize < 2:
        raise ParameterError(f"perturbation constants need |F| >= 2, got {fSize}")
    c1 = math.e ** 3 / math.log(2) * (1 + 1e-6)
    c2 = sigma / (2 * math.e ** 4 * math.log(fSize + 1))
    n = math.ceil((c1 / (1 - sigma)) ** (1 / (2 * sigma)))
    return PerturbationConstants(c1, c2, n, max(c1, 1 / c2))

# [0, ln 2/(2 ln q)] inside DS(P_q)

def initial_interval_constant(q: int) -> float:
    """ln 2/(2 ln q)."""
    if q < 2:
        raise ParameterError(f"needs q >= 2, got {q}")
    return math.log(2) / (2 * math.log(q))

def _initial(k: Arithmetic, q: int, s: Value) -> Value:
    return 1 / (_pow(k, k.num(q), 2 * s) - 1)

def initial_interval_report(q: int, margin: float = 1e-6) -> BoundReport:
    '''1/(q^{2s} - 1) > 1 just below s = ln 2/(2 ln q): each power's tail
    outweighs the power itself, which is what makes every smaller s attainable.'''
    s = Interval.point(initial_interval_constant(q) * (1 - margin))
    return _report("initial_interval", {"q": q, "s": s}, lambda k: _initial(k, q, k.interval(s)), "1", BoundVerdict.ABOVE)

def reference_checks() -> list[BoundReport]:
    '''Every published scalar inequality, re-derived.'''
    band3 = Interval(constant("pstar_q3_band_lo").interval.lo, constant("pstar_q3_band_hi").interval.hi)
    band2 = Interval(constant("pstar_q2_band_lo").interval.lo, constant("pstar_q2_band_hi").interval.hi)
    reports = [gamma_report(g) for g in GAMMA_CHECKS]
    reports += [
        tau_report(11),
        pstar_gap_report(3, 1, band3, constant("pstar_refined_q3k1").value),
        pstar_gap_report(2, 2, band2, constant("pstar_refined_q2k2").value),
        # every s0 = dim I_k >= 0.454 and every k >= 2 at once: the hull puts e^{4s/9} at s = 1
        pstar_gap_report(3, 2, Interval(constant("pstar_q3_band_lo").interval.lo, 1.0), constant("pstar_q3_k2").value),
        pstar_gap_report(2, 3, band2, constant("pstar_q2_k3").value),
    ]
    reports += [mq_gap_bounds(q, GapKind.TWO_POW) for q in range(6, 13)]
    reports += [mq_gap_bounds(q, GapKind.THREE_POW) for q in (9, 10)]
    reports += [mq_crude_upper(q) for q in range(2, 11)]
    reports += [
        h_report(4, constant("generic_lower_c").value, constant("h4_threshold").value),
        h_report(2 ** 12, constant("power_lower_c").value, constant("h2_12_threshold").value),
        mq_upper_monotonicity(11),
        mq_upper(11),
        initial_interval_report(3),
    ]
    return reports

__all__ = [
    "Arithmetic",
    "BoundReport",
    "BoundVerdict",
    "FloatArithmetic",
    "GapKind",
    "MpmathArithmetic",
    "PStarVariant",
    "PerturbationConstants",
    "gamma_break",
    "gamma_prime_break",
    "gamma_report",
    "generic_lower",
    "golden_bounds",
    "h_report",
    "initial_interval_constant",
    "initial_interval_report",
    "mq_crude_upper",
    "mq_gap_bounds",
    "mq_upper",
    "mq_upper_monotonicity",
    "perturbation_constants",
    "power_lower_2q",
    "power_lower_2q_weak",
    "pstar_gap_gamma",
    "pstar_gap_report",
    "pstar_variant_for",
    "reference_checks",
    "tau",
    "tau_increasing",
]

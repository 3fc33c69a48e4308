from __future__ import annotations

import math

import pytest
from mpmath import iv

from bounds import (
    BoundReport,
    BoundVerdict,
    GapKind,
    MpmathArithmetic,
    PStarVariant,
    gamma_break,
    gamma_prime_break,
    generic_lower,
    golden_bounds,
    h_report,
    initial_interval_constant,
    initial_interval_report,
    mq_crude_upper,
    mq_gap_bounds,
    mq_upper,
    mq_upper_monotonicity,
    perturbation_constants,
    power_lower_2q,
    power_lower_2q_weak,
    pstar_gap_gamma,
    pstar_gap_report,
    pstar_variant_for,
    reference_checks,
    tau,
    tau_increasing,
)
from errors import DivergentTailError, OutOfTheoremRangeError, ParameterError, RangeError
from interval import Interval
from solver import SolverConfig

from .helpers import dim_of


def test_reference_checks_hold() -> None:
    reports = reference_checks()
    assert len(reports) > 30
    failing = [str(r) for r in reports if not r.holds]
    assert failing == []


def test_reference_checks_agree_with_mpmath() -> None:
    disagreeing = [str(r) for r in reference_checks() if not r.recheckAgrees()]
    assert disagreeing == []


def test_recheck_is_at_least_as_tight() -> None:
    r = mq_upper(11)
    again = r.recheck()
    assert again.intersects(r.value)
    assert again.width <= r.value.width * 1.01


def test_mpmath_kernel_restores_precision() -> None:
    before = iv.prec
    with MpmathArithmetic(200):
        assert iv.prec == 200
    assert iv.prec == before


def test_gamma_break_closed_value() -> None:
    g = gamma_break(1, 2, 1)
    assert g.lo - 1e-12 <= 1369 / 900 <= g.hi + 1e-12


def test_gamma_prime_keeps_more_terms() -> None:
    assert gamma_prime_break(1, 2, 1).lo > gamma_break(1, 2, 1).hi
    assert gamma_prime_break(8, 3, "0.192786").lo > 1.004


def test_gamma_break_monotone() -> None:
    assert gamma_break(2, 3, 0.5).lo > gamma_break(2, 3, 0.6).hi
    assert gamma_break(2, 2, 0.5).hi < gamma_break(2, 3, 0.5).lo


def test_gamma_break_errors() -> None:
    with pytest.raises(DivergentTailError):
        gamma_break(1, 2, 0.5)
    with pytest.raises(DivergentTailError):
        gamma_prime_break(2, 3, "0.2")
    with pytest.raises(ParameterError):
        gamma_break(1, 1, 1)


def test_golden_bounds_sandwich_table_values() -> None:
    assert golden_bounds(4)[0] >= 0.379998
    lo, hi = golden_bounds(2)
    assert lo <= 0.531277 and 0.531281 <= hi
    lo, hi = golden_bounds(2 ** 6)
    assert lo <= 0.215370 and 0.215371 <= hi
    with pytest.raises(ParameterError):
        golden_bounds(1)


def test_generic_lower() -> None:
    assert generic_lower(4) == pytest.approx(0.37999, abs=1e-5)
    assert generic_lower(4) <= golden_bounds(4)[0]
    assert generic_lower(2 ** 8) < 0.176544
    assert generic_lower(55) < golden_bounds(55)[1]
    with pytest.raises(RangeError):
        generic_lower(3)


def test_power_lower() -> None:
    assert power_lower_2q(12) == pytest.approx(0.12709, abs=1e-5)
    assert power_lower_2q_weak(20) == pytest.approx(0.07625)
    with pytest.raises(RangeError):
        power_lower_2q(11)


def test_h_checks() -> None:
    r = h_report(4, "0.52679", "1")
    assert r.holds and r.verdict == BoundVerdict.ABOVE
    assert h_report(2 ** 12, "1.0571", "1.005").holds


def test_mq_upper() -> None:
    assert mq_upper(11).holds
    assert mq_upper(100).holds
    assert mq_upper_monotonicity(11).holds
    with pytest.raises(RangeError):
        mq_upper(10)


def test_mq_crude_upper() -> None:
    r = mq_crude_upper(2)
    assert r.holds and r.threshold == "0.986"
    assert mq_crude_upper(10).value.hi < 0.9989
    with pytest.raises(RangeError):
        mq_crude_upper(11)


def test_tau() -> None:
    assert tau(11).lo >= 1.112
    assert tau(12).lo > tau(11).hi
    assert tau(100).lo > 1
    assert tau_increasing(11, 40)
    with pytest.raises(RangeError):
        tau(10)


def test_pstar_gap_gamma_plain_and_refined() -> None:
    assert pstar_gap_gamma(3, 2, "0.454").hi < 0.92
    refined = pstar_gap_gamma(3, 1, Interval(0.454, 0.455), PStarVariant.REFINED_Q3K1)
    assert refined.hi < 0.899
    refined = pstar_gap_gamma(2, 2, Interval(0.669, 0.67), PStarVariant.REFINED_Q2K2)
    assert refined.hi < 0.984


def test_pstar_gap_gamma_errors() -> None:
    with pytest.raises(DivergentTailError):
        pstar_gap_gamma(3, 1, 0.0)
    with pytest.raises(ParameterError):
        pstar_gap_gamma(3, 2, "0.454", PStarVariant.REFINED_Q3K1)
    with pytest.raises(OutOfTheoremRangeError):
        pstar_variant_for(2, 1)
    assert pstar_variant_for(3, 1) == PStarVariant.REFINED_Q3K1
    assert pstar_variant_for(2, 2) == PStarVariant.REFINED_Q2K2
    assert pstar_variant_for(5, 1) == PStarVariant.EXP_BOUND


def test_bound_record_text() -> None:
    r = pstar_gap_report(3, 1, Interval(0.454, 0.455), "0.899")
    rec = r.record()
    assert rec.name == "pstar_gap_gamma.refined_q3k1"
    assert rec.threshold == "< 0.899"
    assert rec.verdict == "below"
    assert "q=3, k=1" in rec.inputs
    assert "claim < 0.899" in str(r)


def test_mq_gap_bounds() -> None:
    r = mq_gap_bounds(6, GapKind.TWO_POW)
    assert r.holds and r.threshold == "0.96"
    assert mq_gap_bounds(12, GapKind.TWO_POW).value.hi <= 0.98
    assert mq_gap_bounds(9, GapKind.THREE_POW).holds
    with pytest.raises(RangeError):
        mq_gap_bounds(5, GapKind.TWO_POW)
    with pytest.raises(RangeError):
        mq_gap_bounds(8, GapKind.THREE_POW)


def test_mq_gap_bounds_with_explicit_band() -> None:
    r = mq_gap_bounds(6, GapKind.TWO_POW, Interval(0.215370, 0.215371))
    assert r.holds


def test_perturbation_constants() -> None:
    c = perturbation_constants(2, 0.5313)
    assert c.c1 == pytest.approx(28.98, abs=0.01)
    assert c.c2 == pytest.approx(0.004428, rel=1e-3)
    assert c.cF == pytest.approx(1 / c.c2)
    lo, hi = c.window(0.5313, 100)
    assert 0.5313 < lo < hi
    wide = perturbation_constants(2, 0.9)
    assert wide.nThreshold == math.ceil((wide.c1 / 0.1) ** (1 / 1.8))
    with pytest.raises(RangeError):
        perturbation_constants(2, 1.0)
    with pytest.raises(ParameterError):
        perturbation_constants(1, 0.5)


def test_initial_interval() -> None:
    assert initial_interval_constant(2) == pytest.approx(0.5)
    assert initial_interval_constant(4) == pytest.approx(0.25)
    assert initial_interval_constant(3) == pytest.approx(math.log(2) / (2 * math.log(3)))
    assert initial_interval_report(3).holds
    assert initial_interval_report(7).holds
    with pytest.raises(ParameterError):
        initial_interval_constant(1)


def test_report_verdicts() -> None:
    def mk(lo: float, hi: float) -> BoundReport:
        return BoundReport("sample", {}, Interval(lo, hi), "1", BoundVerdict.BELOW, lambda k: k.num("0.5"))
    assert mk(0.5, 0.6).verdict == BoundVerdict.BELOW
    assert mk(1.1, 1.2).verdict == BoundVerdict.ABOVE
    assert mk(0.9, 1.1).verdict == BoundVerdict.INCONCLUSIVE
    assert not mk(0.9, 1.1).holds
    assert BoundVerdict.INCONCLUSIVE.symbol == "?"


def test_pstar_three_two_check_covers_the_whole_s_range() -> None:
    worst = pstar_gap_gamma(3, 2, Interval(0.454, 1.0), PStarVariant.EXP_BOUND)
    assert worst.hi == pytest.approx(math.exp(4 / 9) / (3 ** 0.908 - 1), rel=1e-9)
    assert worst.hi < 0.92
    assert worst.hi > pstar_gap_gamma(3, 2, "0.454", PStarVariant.EXP_BOUND).hi
    check = next(r for r in reference_checks() if r.name == "pstar_gap_gamma.exp_bound" and r.inputs["q"] == "3")
    assert check.inputs["s"].endswith(", 1]")
    assert check.holds


@pytest.mark.slow
def test_one_large_element_lands_in_perturbation_window() -> None:
    config = SolverConfig()
    base = dim_of(1, 2, config=config)
    sigma = base.enclosure.mid
    c = perturbation_constants(2, sigma)
    for n in (10, 50, 100, 500):
        lo, hi = c.window(sigma, n)
        d = dim_of(1, 2, n, config=config)
        tol = d.width + base.width
        assert lo - tol <= d.hi, (n, lo, d.enclosure)
        assert d.lo <= hi + tol, (n, hi, d.enclosure)

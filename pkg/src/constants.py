# pyright: strict
'''Every published scalar used by the analytic checks, in one table.

Values are decimal text so that both arithmetic kernels read the literal
itself, not a binary approximation of it. `role` says where the number enters.
'''
from __future__ import annotations

from dataclasses import dataclass

from interval import Interval

@dataclass(frozen=True)
class Constant:
    name: str
    value: str
    role: str

    @property
    def interval(self) -> Interval:
        return Interval.decimal(self.value)

    def __str__(self) -> str:
        return self.value

_TABLE = [
    # lower bounds for dim({1,n})
    Constant("generic_lower_c", "0.52679", "c in dim({1,n}) > c/ln n for n >= 4"),
    Constant("power_lower_c", "1.0571", "c in dim({1,2^q}) >= c/(q ln 2) for q >= 12"),
    Constant("power_lower_weak", "1.525", "c in dim({1,2^q}) >= c/q for q >= 12"),
    Constant("h4_threshold", "1", "h(4) at c = 0.52679 must exceed this"),
    Constant("h2_12_threshold", "1.005", "h(2^12) at c = 1.0571 exceeds this"),
    Constant("golden_lower_14", "0.379998", "certified lower bound of dim({1,4})"),
    # P*_q gaps: contraction of F# below F
    Constant("pstar_q3_k2", "0.92", "exponential bound for q = 3, k >= 2, over s in [0.454, 1]"),
    Constant("pstar_q2_k3", "0.915", "exponential bound for q = 2, k >= 3, at s in [0.669, 0.67]"),
    Constant("pstar_refined_q3k1", "0.899", "three-term tail sum for q = 3, k = 1"),
    Constant("pstar_refined_q2k2", "0.984", "three-term tail sum for q = 2, k = 2"),
    Constant("pstar_q3_band_lo", "0.454", "lower end of the s band used for q = 3, k = 1"),
    Constant("pstar_q3_band_hi", "0.455", "upper end of the s band used for q = 3, k = 1"),
    Constant("pstar_q2_band_lo", "0.669", "lower end of the s band used for q = 2, k = 2"),
    Constant("pstar_q2_band_hi", "0.67", "upper end of the s band used for q = 2, k = 2"),
    # M_q
    Constant("tau_threshold", "1.112", "tau(11) is at least this"),
    Constant("gamma_prime_8", "1.004", "gamma'(8,3,0.192786) exceeds this"),
    Constant("two_pow_large_q", "0.98", "2e^{4s/2^q}/(2sq-1) at s = 1.525/q, q >= 12"),
]

CONSTANTS: dict[str, Constant] = {c.name: c for c in _TABLE}

def constant(name: str) -> Constant:
    return CONSTANTS[name]

# s_q and the threshold of the crude upper bound alpha(q, s_q) < threshold, q = 2..10
MQ_CRUDE: dict[int, tuple[str, str]] = {
    2: ("0.67", "0.986"),
    3: ("0.485", "0.967"),
    4: ("0.38", "0.975"),
    5: ("0.31", "0.995"),
    6: ("0.265", "0.99985"),
    7: ("0.234", "0.9983"),
    8: ("0.21", "0.998"),
    9: ("0.191", "0.998"),
    10: ("0.175", "0.9989"),
}

# gamma(s_q, q) < threshold with s_q = dim({1,2^q}), q = 6..11
TWO_POW_GAP: dict[int, str] = {6: "0.96", 7: "0.85", 8: "0.78", 9: "0.72", 10: "0.67", 11: "0.63"}

# beta(s_q, q, 8) < threshold with s_q = dim({1,2^q,3^q}), q = 9, 10
THREE_POW_GAP: dict[int, str] = {9: "0.99", 10: "0.94"}
THREE_POW_K = 8

@dataclass(frozen=True)
class GammaCheck:
    """gamma(q, n0, s) > threshold; `prime` selects the six-term refinement."""
    q: int
    n0: int
    s: str
    threshold: str
    prime: bool = False

# every strict-break-point estimate used to show that intervals of DS(M_q) are solid
GAMMA_CHECKS: list[GammaCheck] = [
    GammaCheck(1, 2, "1", "1"),
    GammaCheck(2, 3, "0.67", "1.3"),
    GammaCheck(2, 2, "0.4112", "2.5"),
    GammaCheck(3, 3, "0.485", "1.1"),
    GammaCheck(3, 2, "0.334", "1.5"),
    GammaCheck(4, 3, "0.38", "1.01"),
    GammaCheck(4, 2, "0.281", "1.14"),
    GammaCheck(5, 4, "0.31", "1.4"),
    GammaCheck(5, 3, "0.273", "1.25"),
    GammaCheck(6, 4, "0.265", "1.3"),
    GammaCheck(7, 4, "0.234", "1.2"),
    GammaCheck(8, 4, "0.21", "1.2"),
    GammaCheck(6, 3, "0.238626", "1.13"),
    GammaCheck(7, 3, "0.212933", "1.05"),
    GammaCheck(8, 3, "0.192786", "1.004", prime=True),
    GammaCheck(9, 4, "0.191", "1.1"),
    GammaCheck(10, 4, "0.175", "1.1"),
    GammaCheck(9, 3, "0.162510", "1.09"),
    GammaCheck(10, 3, "0.150820", "1.02"),
]

def gamma_checks_for(q: int) -> list[GammaCheck]:
    return [g for g in GAMMA_CHECKS if g.q == q]

__all__ = [
    "CONSTANTS",
    "Constant",
    "GAMMA_CHECKS",
    "GammaCheck",
    "MQ_CRUDE",
    "THREE_POW_GAP",
    "THREE_POW_K",
    "TWO_POW_GAP",
    "constant",
    "gamma_checks_for",
]

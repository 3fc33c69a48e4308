from __future__ import annotations

import pytest

from alphabets import (
    Alphabet,
    Family,
    TailKind,
    TailMajorant,
    alpha_m,
    check_submultiplicative,
    f_sharp,
    members_above,
    primes_up_to,
)
from certificate import Verdict
from errors import (
    AlphabetSyntaxError,
    ConditionInapplicableError,
    ContainmentError,
    DivergentTailError,
    EmptyAlphabetError,
    ParameterError,
)
from interval import Interval

from .helpers import assert_verdict, mk_explicit, mk_family


def test_explicit_sorts_and_dedups() -> None:
    a = mk_explicit(4, 1, 2, 2)
    assert a.elements == (1, 2, 4)
    assert not a.infinite
    assert a.gamma == 1
    assert 4 in a and 3 not in a


def test_explicit_rejects_empty_and_non_positive() -> None:
    with pytest.raises(EmptyAlphabetError):
        mk_explicit()
    with pytest.raises(ParameterError):
        mk_explicit(0, 1)
    with pytest.raises(ParameterError):
        mk_explicit(1, 10**400)
    with pytest.raises(ParameterError):
        Alphabet.from_text("explicit:[1," + "9" * 320 + "]")


def test_family_snapshots() -> None:
    assert mk_family(Family.P_Q, 4, q=2).elements == (2, 4, 8, 16)
    assert mk_family(Family.P_Q_STAR, 4, q=3).elements == (1, 3, 9, 27)
    assert mk_family(Family.M_Q, 4, q=2).elements == (1, 4, 9, 16)
    assert mk_family(Family.PROGRESSION, 3, a=1, b=4).elements == (1, 5, 9)
    assert mk_family(Family.PRIMES, 5).elements == (2, 3, 5, 7, 11)


def test_family_parameter_checks() -> None:
    with pytest.raises(ParameterError):
        mk_family(Family.P_Q, 3, q=1)
    with pytest.raises(ParameterError):
        mk_family(Family.PROGRESSION, 3, a=4, b=4)
    with pytest.raises(EmptyAlphabetError):
        mk_family(Family.M_Q, 0, q=2)


def test_text_round_trip_of_each_form() -> None:
    for text in ["explicit:[1,2,4]", "family:M_q(q=5,count=40)", "tail:[1,3]+P_q(q=2,above=3,count=6)", "family:primes(count=10)"]:
        assert Alphabet.from_text(text).to_text() == text


def test_text_ignores_whitespace() -> None:
    assert Alphabet.from_text(" explicit:[ 1, 2 ] ") == mk_explicit(1, 2)


@pytest.mark.parametrize("text", [
    "1,2",
    "explicit:[1;2]",
    "family:squares(count=3)",
    "family:M_q(q=2)",
    "family:M_q(q=2,count=3,k=1)",
    "family:explicit(count=1)",
])
def test_text_syntax_errors(text: str) -> None:
    with pytest.raises(AlphabetSyntaxError):
        Alphabet.from_text(text)


def test_tail_head_must_stay_below_above() -> None:
    with pytest.raises(ParameterError):
        Alphabet.from_text("tail:[1,9]+P_q(q=2,above=4,count=3)")


def test_membership_beyond_snapshot() -> None:
    m = mk_family(Family.M_Q, 3, q=3)
    assert m.is_member(1000)
    assert not m.is_member(999)
    p = mk_family(Family.P_Q_STAR, 2, q=2)
    assert p.is_member(1) and p.is_member(1024) and not p.is_member(12)
    assert mk_family(Family.PRIMES, 3).is_member(97)


def test_next_members_include_head() -> None:
    a = Alphabet.from_text("tail:[1,3]+M_q(q=2,above=3,count=2)")
    assert a.elements == (1, 3, 4, 9)
    assert a.next_members(1, 4) == [3, 4, 9, 16]
    assert mk_explicit(1, 5, 7).next_members(4, 5) == [5, 7]


def test_members_above() -> None:
    assert members_above(Family.P_Q, 8, 3, q=2) == [16, 32, 64]
    assert members_above(Family.M_Q, 10, 2, q=2) == [16, 25]
    assert members_above(Family.PROGRESSION, 6, 2, a=3, b=5) == [8, 13]


def test_primes_up_to() -> None:
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_up_to(1) == []


def test_finiteness_parameters() -> None:
    assert mk_explicit(1, 2).finiteness().sigma0 == 0.0
    assert mk_family(Family.P_Q, 3, q=2).finiteness().sigma0 == 0.0
    assert mk_family(Family.M_Q, 3, q=4).finiteness().sigma0 == 1 / 8
    assert mk_family(Family.PRIMES, 3).finiteness().sigma0 == 0.5


def test_geometric_tail_sum_closed_form() -> None:
    # sum over j >= 3 of 2^{-j} = 1/4
    t = TailMajorant.geometric(2, 2)
    assert t.first == 8
    assert t.tail_sum(0.5).contains(0.25)


def test_monomial_tail_bounds_partial_sum() -> None:
    t = TailMajorant.monomial(2, 3)
    assert t.first == 16
    s = 0.6
    partial = sum(n ** (-2 * 2 * s) for n in range(4, 20000))
    assert t.tail_sum(s).hi >= partial


def test_tail_divergence() -> None:
    with pytest.raises(DivergentTailError):
        TailMajorant.monomial(2, 3).tail_sum(0.25)
    with pytest.raises(DivergentTailError):
        TailMajorant(TailKind.PROGRESSION, 1, 5, 4, step=2).tail_sum(0.5)


def test_tail_majorant_of_family_starts_after_snapshot() -> None:
    m = mk_family(Family.M_Q, 5, q=2)
    t = m.tail_majorant()
    assert t.kind == TailKind.MONOMIAL
    assert t.first == 36 and t.anchor == 25
    with pytest.raises(ParameterError):
        mk_explicit(1, 2).tail_majorant()


def test_f_sharp_swaps_top_for_parent_tail() -> None:
    parent = mk_family(Family.P_Q_STAR, 1, q=3)
    fs = f_sharp(mk_explicit(1, 3), parent, 3)
    assert fs.elements == (1, 9, 27, 81)
    assert fs.infinite and fs.above == 3


def test_f_sharp_requires_containment() -> None:
    parent = mk_family(Family.P_Q_STAR, 1, q=3)
    with pytest.raises(ContainmentError):
        f_sharp(mk_explicit(1, 2), parent, 3)
    with pytest.raises(ParameterError):
        f_sharp(mk_explicit(1), mk_explicit(1, 3), 3)


def test_alpha_m() -> None:
    a = mk_explicit(1, 4)
    assert alpha_m(a, 2, 0.5).contains(1.25)
    with pytest.raises(ParameterError):
        alpha_m(a, 3, 0.5)
    assert alpha_m(a, 1, Interval(0.2, 0.3)).contains(1.0)


def test_submultiplicative_powers_of_two() -> None:
    assert_verdict(check_submultiplicative(mk_family(Family.P_Q, 12, q=2), 12), Verdict.VERIFIED)


def test_submultiplicative_violation_recorded() -> None:
    cert = check_submultiplicative(mk_explicit(2, 3, 100, 101, 102), 5)
    assert_verdict(cert, Verdict.FAILED)
    assert "(n=1,m=2)" in cert.notes["violations"]


def test_submultiplicative_primes_is_empirical() -> None:
    cert = check_submultiplicative(mk_family(Family.PRIMES, 30), 30)
    assert_verdict(cert, Verdict.VERIFIED)
    assert "empirical" in cert.notes["kind"]


def test_submultiplicative_needs_gamma_above_one() -> None:
    with pytest.raises(ConditionInapplicableError):
        check_submultiplicative(mk_family(Family.M_Q, 10, q=2), 10)
    with pytest.raises(ParameterError):
        check_submultiplicative(mk_family(Family.P_Q, 4, q=2), 10)

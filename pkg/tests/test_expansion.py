"""Decimal expansion parsing, canonicalization and conversions."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dungeonlab import (
    DecimalExpansion,
    DomainError,
    ParseError,
    expansion_of_fraction,
    expansion_of_nat,
    parse_decimal,
)


def expand_digits(value: Fraction, count: int) -> list[int]:
    """Independent oracle: fractional digits by plain long division."""
    rem = value - (value.numerator // value.denominator)
    digits = []
    for _ in range(count):
        rem *= 10
        d = rem.numerator // rem.denominator
        digits.append(d)
        rem -= d
    return digits


class TestParse:
    def test_plain_terminating(self):
        e = parse_decimal("1.1")
        assert e.int_digits == (1,)
        assert e.frac_pre == (1,)
        assert e.frac_period == ()

    def test_pure_periodic(self):
        e = parse_decimal("1.(01)")
        assert (e.int_digits, e.frac_pre, e.frac_period) == ((1,), (), (0, 1))
        assert e.to_fraction() == Fraction(100, 99)

    def test_integer(self):
        assert parse_decimal("17").int_digits == (1, 7)

    def test_leading_zeros_stripped(self):
        assert parse_decimal("007.5") == parse_decimal("7.5")

    @pytest.mark.parametrize(
        "bad",
        ["1", "1.0", "1.(0)", "0.5", "2.(9)", "1.2(99)", "1.2()", "abc", "-3", "2.5.1", "1.(9)"],
    )
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_decimal(bad)


class TestCanonicalization:
    def test_period_minimized(self):
        assert parse_decimal("1.(2323)") == parse_decimal("1.(23)")

    def test_preperiod_absorbed_into_block(self):
        # 1.5(05) spells 1.50505... which is the pure block 1.(50)
        e = parse_decimal("1.5(05)")
        assert (e.frac_pre, e.frac_period) == ((), (5, 0))
        assert str(e) == "1.(50)"

    def test_shifted_block_stays_when_value_differs(self):
        # 1.5(50) spells 1.55050..., genuinely needs the preperiod digit
        e = parse_decimal("1.5(50)")
        assert (e.frac_pre, e.frac_period) == ((5,), (5, 0))

    def test_canonical_forms_agree_with_digit_oracle(self):
        for text in ["1.5(05)", "1.5(50)", "1.23(23)", "2.1(21)", "3.14(15)"]:
            e = parse_decimal(text)
            assert expand_digits(e.to_fraction(), 40) == _digits_from_triple(e, 40)

    def test_all_zero_block_terminates(self):
        e = parse_decimal("1.25(00)")
        assert e == parse_decimal("1.25")

    def test_trailing_zeros_stripped(self):
        assert parse_decimal("1.2500") == parse_decimal("1.25")

    def test_noncanonical_constructor_rejected(self):
        with pytest.raises(DomainError):
            DecimalExpansion((1,), (), (2, 3, 2, 3))
        with pytest.raises(DomainError):
            DecimalExpansion((1,), (5,), (0, 5))
        with pytest.raises(DomainError):
            DecimalExpansion((1,), (2, 0), ())


def _digits_from_triple(e: DecimalExpansion, count: int) -> list[int]:
    digits = list(e.frac_pre)
    while len(digits) < count:
        digits.extend(e.frac_period or [0])
    return digits[:count]


class TestExpansionOfNat:
    def test_small(self):
        assert expansion_of_nat(10).int_digits == (1, 0)

    def test_published_terms(self):
        assert expansion_of_nat(249459).int_digits == (2, 4, 9, 4, 5, 9)
        assert expansion_of_nat(943).int_digits == (9, 4, 3)

    def test_rejects_below_two(self):
        with pytest.raises(DomainError):
            expansion_of_nat(1)

    @given(st.integers(min_value=2, max_value=10**30))
    def test_round_trip(self, n):
        assert expansion_of_fraction(Fraction(n)) == expansion_of_nat(n)
        assert expansion_of_nat(n).to_fraction() == n


@st.composite
def rationals_above_one(draw):
    # the repeating block can be as long as den - 1, so keep den moderate
    num = draw(st.integers(min_value=2, max_value=10**9))
    den = draw(st.integers(min_value=1, max_value=10**4))
    if Fraction(num, den) <= 1:
        num = den + 1 + num % den
    return Fraction(num, den)


class TestFractionBridge:
    @given(rationals_above_one())
    def test_value_round_trip(self, value):
        assert expansion_of_fraction(value).to_fraction() == value

    @given(rationals_above_one())
    def test_text_round_trip_is_canonical(self, value):
        e = expansion_of_fraction(value)
        assert parse_decimal(str(e)) == e

    @given(rationals_above_one())
    def test_block_never_all_nines(self, value):
        e = expansion_of_fraction(value)
        assert not (e.frac_period and all(d == 9 for d in e.frac_period))

    def test_known_values(self):
        assert str(expansion_of_fraction(Fraction(100, 99))) == "1.(01)"
        assert str(expansion_of_fraction(Fraction(10, 9))) == "1.(1)"
        assert str(expansion_of_fraction(Fraction(21, 11))) == "1.(90)"
        assert str(expansion_of_fraction(Fraction(3, 2))) == "1.5"

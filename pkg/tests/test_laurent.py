"""Exact and high-precision evaluation of the digit series."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf

from dungeonlab import (
    DomainError,
    LaurentMap,
    PrecisionExhausted,
    laurent_derivative_eval,
    laurent_eval,
    laurent_eval_approx,
    parse_decimal,
)
from dungeonlab.laurent import poly_eval_fraction


@st.composite
def small_expansions(draw):
    ints = draw(st.lists(st.integers(0, 9), min_size=1, max_size=3))
    ints[0] = max(ints[0], 1)
    pre = draw(st.lists(st.integers(0, 9), min_size=0, max_size=4))
    period = draw(st.lists(st.integers(0, 9), min_size=0, max_size=4))
    text = "".join(map(str, ints))
    if pre or period:
        text += "." + "".join(map(str, pre))
        if period:
            text += "(" + "".join(map(str, period)) + ")"
    try:
        return parse_decimal(text)
    except Exception:
        return parse_decimal("1.7")


class TestExactEval:
    def test_value_at_ten(self):
        assert laurent_eval("1.1", 10) == Fraction(11, 10)

    def test_geometric_tail_closed_form(self):
        assert laurent_eval("1.(01)", 2) == Fraction(4, 3)

    def test_geometric_tail_against_partial_sums(self):
        # independent oracle: truncate the series far enough that the
        # remainder is provably below the gap to any other rational
        x = Fraction(2)
        partial = Fraction(1)
        for m in range(1, 101):
            digit = 1 if m % 2 == 0 else 0
            partial += Fraction(digit, x**m)
        closed = laurent_eval("1.(01)", x)
        assert abs(closed - partial) < Fraction(1, 2**98)

    def test_two_cycle_values(self):
        assert laurent_eval("1.(1)", 10) == Fraction(10, 9)
        assert laurent_eval("1.(1)", Fraction(10, 9)) == 10

    def test_constant_map(self):
        for x in (Fraction(3, 2), Fraction(7), Fraction(100)):
            assert laurent_eval("3", x) == 3

    def test_rejects_points_at_or_below_one(self):
        with pytest.raises(DomainError):
            laurent_eval("1.1", 1)
        with pytest.raises(DomainError):
            laurent_eval("1.1", Fraction(1, 2))

    @given(small_expansions())
    def test_eval_at_ten_recovers_value(self, exp):
        assert laurent_eval(exp, 10) == exp.to_fraction()

    @given(small_expansions())
    def test_value_exceeds_one(self, exp):
        assert laurent_eval(exp, Fraction(7, 5)) > 1

    @given(small_expansions(), st.fractions(min_value=Fraction(11, 10), max_value=50))
    def test_rational_form_matches_eval(self, exp, x):
        lmap = LaurentMap(exp)
        p, q = lmap.rational_form()
        assert poly_eval_fraction(p, x) / poly_eval_fraction(q, x) == lmap.eval_exact(x)

    @given(st.fractions(min_value=Fraction(101, 100), max_value=40),
           st.fractions(min_value=Fraction(101, 100), max_value=40))
    def test_strictly_decreasing_for_fractional_part(self, x1, x2):
        if x1 == x2:
            return
        lo, hi = sorted((x1, x2))
        assert laurent_eval("2.31(7)", lo) > laurent_eval("2.31(7)", hi)


class TestApproxEval:
    def test_simple_value(self):
        got = laurent_eval_approx("1.1", Fraction(11, 10), 28)
        assert abs(got - mpf(21) / 11) < mpf(10) ** -26

    def test_fixed_point_sample(self):
        x = mpf("1.6180339887")
        got = laurent_eval_approx("1.1", x, 28)
        assert abs(got - (1 + 1 / x)) < mpf(10) ** -26

    def test_neutral_sample(self):
        assert abs(laurent_eval_approx("1.04", 2, 28) - 2) < mpf(10) ** -26

    def test_rejects_low_precision(self):
        with pytest.raises(DomainError):
            laurent_eval_approx("1.1", 2, 8)

    def test_precision_exhausted_near_one(self):
        with pytest.raises(PrecisionExhausted):
            laurent_eval_approx("1.(1)", 1 + mpf(10) ** -20, 16)

    @given(
        small_expansions(),
        st.fractions(min_value=Fraction(21, 20), max_value=30),
        st.sampled_from([16, 28, 44]),
    )
    def test_agrees_with_exact_within_documented_bound(self, exp, x, wd):
        exact = laurent_eval(exp, x)
        approx = laurent_eval_approx(exp, x, wd)
        with mp.workdps(wd + 30):
            gap = abs(approx - mpf(exact.numerator) / exact.denominator)
            assert gap < mpf(10) ** (-wd + 2)

    @given(st.fractions(min_value=Fraction(21, 20), max_value=30),
           st.fractions(min_value=Fraction(21, 20), max_value=30))
    def test_monotone_up_to_error(self, x1, x2):
        lo, hi = sorted((x1, x2))
        a, b = laurent_eval_approx("1.3(7)", lo, 24), laurent_eval_approx("1.3(7)", hi, 24)
        assert a >= b - mpf(10) ** -22


class TestDerivative:
    def test_neutral_point_exact(self):
        assert laurent_derivative_eval("1.04", 2) == -1

    def test_terminating_inverse_square(self):
        assert laurent_derivative_eval("1.1", 10) == Fraction(-1, 100)

    def test_periodic_pole_form(self):
        assert laurent_derivative_eval("1.(1)", 10) == Fraction(-1, 81)

    def test_constant_derivative_is_zero(self):
        assert laurent_derivative_eval("7", Fraction(5, 2)) == 0

    @given(small_expansions(), st.fractions(min_value=Fraction(6, 5), max_value=20))
    def test_finite_difference_oracle(self, exp, x):
        h = Fraction(1, 10**12)
        symmetric = (laurent_eval(exp, x + h) - laurent_eval(exp, x - h)) / (2 * h)
        exact = laurent_derivative_eval(exp, x)
        assert abs(symmetric - exact) < Fraction(1, 10**18)

    def test_mp_carrier(self):
        got = laurent_derivative_eval("1.(1)", mpf(10), working_digits=30)
        assert abs(got - mpf(-1) / 81) < mpf(10) ** -28

"""The reinterpretation operator: identities, modular form, bounds."""

import math
from functools import reduce

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dungeonlab import DomainError, lemma3_bounds, reinterpret, reinterpret_mod
from dungeonlab.digits import digit_list_of, eval_digits_in_base, log10_of_nat
from dungeonlab.reinterp import log10_reinterpret


class TestOperator:
    def test_published_steps(self):
        assert reinterpret(10, 11) == 11
        assert reinterpret(12, 13) == 15
        assert reinterpret(11, 15) == 16

    def test_right_unit(self):
        for a in (2, 10, 999, 10**12 + 7):
            assert reinterpret(a, 10) == a

    def test_left_unit(self):
        for b in (2, 10, 999, 10**12 + 7):
            assert reinterpret(10, b) == b

    def test_below_ten_counterexamples(self):
        assert reinterpret(12, 2) == 4
        assert reinterpret(7, 2) == 7
        assert reinterpret(12, 2) < reinterpret(7, 2)
        assert reinterpret(6, 3) == 6 == reinterpret(6, 4)

    def test_rejects_small_operands(self):
        with pytest.raises(DomainError):
            reinterpret(1, 11)
        with pytest.raises(DomainError):
            reinterpret(11, 1)

    @given(st.integers(min_value=2, max_value=10**24), st.integers(min_value=2, max_value=60))
    def test_fast_parse_path_matches_digit_evaluation(self, a, b):
        digits = digit_list_of(a)
        horner = reduce(lambda acc, d: acc * b + d, digits, 0)
        assert reinterpret(a, b) == horner

    @given(st.integers(min_value=2, max_value=10**6), st.integers(min_value=10**6, max_value=10**40))
    def test_huge_base_matches_horner(self, a, b):
        digits = digit_list_of(a)
        horner = reduce(lambda acc, d: acc * b + d, digits, 0)
        assert reinterpret(a, b) == horner

    def test_divide_and_conquer_above_threshold(self):
        digits = [(7 * i + 3) % 10 for i in range(4000)]
        digits[0] = max(digits[0], 1)
        for base in (2, 7, 17, 61, 10**6 + 3):
            expected = reduce(lambda acc, d: acc * base + d, digits, 0)
            assert eval_digits_in_base(digits, base) == expected


class TestModular:
    def test_single_digit_base_residue(self):
        assert reinterpret_mod([1, 1], 5, 10) == 6

    def test_matches_full_route(self):
        assert reinterpret(25, 16) == 37
        assert reinterpret_mod(digit_list_of(25), 16, 100) == 37 % 100

    def test_chained_against_bigint_oracle(self):
        modulus = 10**4
        inner = reinterpret(14, 15)
        got = reinterpret_mod(digit_list_of(13), inner % modulus, modulus)
        assert got == reinterpret(13, inner) % modulus

    def test_rejects_unreduced_residue(self):
        with pytest.raises(DomainError):
            reinterpret_mod([1, 1], 12, 10)
        with pytest.raises(DomainError):
            reinterpret_mod([1, 1], 0, 1)

    @given(
        st.integers(min_value=2, max_value=10**18),
        st.integers(min_value=2, max_value=10**9),
        st.integers(min_value=2, max_value=10**12),
    )
    def test_residue_coherence(self, a, b, modulus):
        got = reinterpret_mod(digit_list_of(a), b % modulus, modulus)
        assert got == reinterpret(a, b) % modulus


class TestLemma3Bounds:
    def test_worked_example(self):
        bounds = lemma3_bounds(25, 16)
        assert bounds.lower_exp == pytest.approx(1.2041199826, abs=1e-9)
        assert bounds.upper_exp == pytest.approx(1.6833599681, abs=1e-6)
        value = reinterpret(25, 16)
        assert 10**bounds.lower_exp <= value <= 10**bounds.upper_exp
        assert 16.0 <= value <= 48.3

    def test_tight_at_powers_of_ten(self):
        bounds = lemma3_bounds(10, 10)
        assert bounds.lower_exp == pytest.approx(1.0)
        assert bounds.upper_exp == pytest.approx(1.0)

    def test_right_unit_upper_tight(self):
        bounds = lemma3_bounds(99, 10)
        assert 10**bounds.upper_exp == pytest.approx(99.0)

    def test_rejects_below_ten(self):
        with pytest.raises(DomainError):
            lemma3_bounds(9, 10)
        with pytest.raises(DomainError):
            lemma3_bounds(10, 9)

    @given(st.integers(min_value=10, max_value=10**6), st.integers(min_value=10, max_value=10**6))
    def test_sandwich_property(self, a, b):
        bounds = lemma3_bounds(a, b)
        lg = log10_of_nat(reinterpret(a, b))
        assert bounds.lower_exp <= lg + 1e-9
        assert lg <= bounds.upper_exp + 1e-9


class TestLogEstimate:
    @given(st.integers(min_value=10, max_value=10**6), st.integers(min_value=11, max_value=10**9))
    def test_log_of_reinterpretation(self, a, b):
        est = log10_reinterpret(digit_list_of(a), math.log10(b))
        true = log10_of_nat(reinterpret(a, b))
        assert est == pytest.approx(true, rel=1e-12)

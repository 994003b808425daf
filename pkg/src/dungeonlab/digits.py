"""Decimal digit extraction and radix evaluation for huge integers.

CPython's builtin int<->str conversions are quadratic (and, since 3.10.7,
refuse outright above a digit limit), which is fatal here: the beta and
delta recurrences re-extract the digits of values with 10^5+ decimal
digits at every step.  All conversions therefore go through gmpy2, whose
GMP backend uses divide-and-conquer radix conversion, with a plain-int
path below a small threshold where the builtin is faster.
"""

from __future__ import annotations

import math
from typing import Sequence

import gmpy2
from gmpy2 import mpz

# Below this many decimal digits the builtin conversion wins on overhead.
_SMALL_CONV_DIGITS = 1000

# Digit counts at or below this use plain Horner; above, balanced splitting
# keeps the evaluation subquadratic given fast multiplication.
_HORNER_LIMIT = 64


def digits_of(n: int | mpz) -> str:
    """Decimal digit string of a nonnegative integer, msd first."""
    if n < 0:
        raise ValueError("digits_of expects a nonnegative integer")
    if isinstance(n, int) and n.bit_length() < _SMALL_CONV_DIGITS * 3:
        return str(n)
    return mpz(n).digits(10)


def digit_list_of(n: int | mpz) -> list[int]:
    """Decimal digits of ``n`` as ints, most significant first."""
    return [ord(c) - 48 for c in digits_of(n)]


def nat_from_str(text: str) -> int:
    """Parse a decimal digit string of any length into an int."""
    s = text.strip()
    if not s.isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    if len(s) < _SMALL_CONV_DIGITS:
        return int(s)
    return int(mpz(s, 10))


def num_digits(n: int | mpz) -> int:
    """Exact count of decimal digits of a nonnegative integer."""
    if n < 0:
        raise ValueError("num_digits expects a nonnegative integer")
    if n == 0:
        return 1
    # gmpy2.num_digits may overestimate by one; settle it with a power test.
    est = gmpy2.num_digits(mpz(n), 10)
    if n < 10 ** (est - 1):
        return est - 1
    return est


def leading_digits(n: int | mpz, count: int) -> str:
    """First ``count`` decimal digits of ``n`` (all of them if shorter)."""
    nd = num_digits(n)
    if nd <= count:
        return digits_of(n)
    # Shift down instead of rendering the full digit string.
    return digits_of(mpz(n) // mpz(10) ** (nd - count))


def log10_of_nat(n: int | mpz) -> float:
    """log10 of a positive integer, accurate to double precision.

    Uses the exact digit count plus the leading digits, so it stays
    accurate for values far beyond float range.
    """
    if n <= 0:
        raise ValueError("log10_of_nat expects a positive integer")
    nd = num_digits(n)
    lead = leading_digits(n, 17)
    return (nd - 1) + math.log10(int(lead) / 10 ** (len(lead) - 1))


def eval_digits_in_base(digits: Sequence[int], base: int | mpz) -> int:
    """Evaluate a digit polynomial: sum of digits[i] * base^(k-i).

    ``digits`` is most-significant-first.  Splits the digit string in
    half above a threshold so the work is dominated by balanced big
    multiplications; short strings use Horner directly.
    """
    if not digits:
        raise ValueError("empty digit sequence")
    b = mpz(base)
    power_cache: dict[int, mpz] = {}

    def rec(lo: int, hi: int) -> mpz:
        n = hi - lo
        if n <= _HORNER_LIMIT:
            acc = mpz(0)
            for i in range(lo, hi):
                acc = acc * b + digits[i]
            return acc
        half = n // 2  # length of the low (least significant) part
        high = rec(lo, hi - half)
        low = rec(hi - half, hi)
        pw = power_cache.get(half)
        if pw is None:
            pw = b**half
            power_cache[half] = pw
        return high * pw + low

    return int(rec(0, len(digits)))

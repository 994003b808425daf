"""The base-reinterpretation operator on integers and its modular form.

``reinterpret(a, b)`` reads the decimal digit string of ``a`` as if it
were written in base ``b``.  Operands from 2 up are accepted (the
classic counterexamples live below 10), but every order/growth guarantee
in this package is only claimed for operands >= 10, and callers that
rely on one must gate on that themselves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpz

from .digits import digits_of, eval_digits_in_base, log10_of_nat, num_digits
from .errors import DomainError

# GMP parses digit strings in any base up to 62; digits 0..9 keep their
# value there, which is exactly the reinterpretation sum.
_GMP_PARSE_MAX_BASE = 62


def reinterpret(a: int, b: int) -> int:
    """Value of the decimal digits of ``a`` read in base ``b``.

    10 is a two-sided unit.  For small bases the digit polynomial is
    evaluated by divide and conquer; for 11 <= b <= 62 GMP's fast string
    parser does the same job in C.
    """
    if a < 2 or b < 2:
        raise DomainError(f"reinterpret needs a, b >= 2, got ({a}, {b})")
    if b == 10:
        return a
    s = digits_of(a)
    if 11 <= b <= _GMP_PARSE_MAX_BASE:
        return int(mpz(s, b))
    return eval_digits_in_base([ord(c) - 48 for c in s], b)


def reinterpret_digits(digits: Sequence[int], b: int) -> int:
    """Reinterpretation with the decimal digits already extracted."""
    if b < 2:
        raise DomainError(f"base must be >= 2, got {b}")
    return eval_digits_in_base(digits, b)


def reinterpret_mod(a_digits: Sequence[int], b_residue: int, modulus: int) -> int:
    """``reinterpret`` carried out entirely in residues mod ``modulus``.

    ``a_digits`` is most-significant-first; ``b_residue`` stands for the
    base, reduced.  Agrees with the full-integer route composed with a
    final reduction.
    """
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if not 0 <= b_residue < modulus:
        raise DomainError("b_residue must already be reduced mod modulus")
    acc = 0
    for d in a_digits:
        acc = (acc * b_residue + d) % modulus
    return acc


@dataclass(frozen=True)
class BoundsPair:
    """Exponents of 10 sandwiching a reinterpreted value."""

    lower_exp: float
    upper_exp: float

    def __post_init__(self):
        if self.lower_exp > self.upper_exp:
            raise DomainError("lower bound exponent exceeds upper bound exponent")


def lemma3_bounds(a: int, b: int) -> BoundsPair:
    """Sandwich exponents for reinterpret(a, b) with operands >= 10.

    Guarantees 10^lower_exp <= reinterpret(a, b) <= 10^upper_exp with
    lower_exp = floor(log a) * log b and upper_exp = log a * log b
    (all logs base 10).
    """
    if a < 10 or b < 10:
        raise DomainError(f"bounds need a, b >= 10, got ({a}, {b})")
    floor_log_a = num_digits(a) - 1
    log_b = log10_of_nat(b)
    return BoundsPair(lower_exp=floor_log_a * log_b, upper_exp=log10_of_nat(a) * log_b)


def log10_reinterpret(a_digits: Sequence[int], log_b: float) -> float:
    """log10 of the digit polynomial of ``a_digits`` at a base with the
    given log10, without constructing the value.

    Accurate to double precision when the base is large; used by growth
    estimation.  The correction term sums the trailing digits scaled by
    negative powers of the base and underflows harmlessly to 0.
    """
    k = len(a_digits) - 1
    lead = float(a_digits[0])
    corr = 0.0
    for i, d in enumerate(a_digits[1:], start=1):
        if d == 0:
            continue
        scale = -i * log_b
        if scale < -320:
            break
        corr += d * 10.0**scale
    return k * log_b + math.log10(lead + corr)

"""Canonical base-10 expansions of reals greater than 1.

An expansion is a digit triple: integer digits, a fractional preperiod,
and a repeating fractional block.  Two conventions make the triple a
canonical form with well-defined equality and hashing:

* the repeating block has minimal length and is pulled as far left as
  possible (the preperiod never ends with a digit the block could absorb);
* all-9 repeating blocks are rejected rather than normalized, so every
  admissible real has exactly one spelling.

Text syntax puts the repeating block in parentheses: ``"1.0(3)"`` is
1.0333..., ``"1.(01)"`` is 1.010101... = 100/99.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .digits import digit_list_of
from .errors import DomainError, ParseError, ResourceBudgetExceeded

_GRAMMAR = re.compile(r"^(\d+)(?:\.(\d*)(?:\((\d*)\))?)?$")

# Guard for from_fraction: a denominator with a huge multiplicative order
# of 10 would otherwise spin out a near-endless period.
_MAX_FRACTION_DIGITS = 100_000


@dataclass(frozen=True)
class DecimalExpansion:
    """Canonical decimal expansion of a real number greater than 1.

    ``int_digits`` are most significant first and never start with 0;
    ``frac_period`` empty means the expansion terminates.
    """

    int_digits: tuple[int, ...]
    frac_pre: tuple[int, ...]
    frac_period: tuple[int, ...]

    def __post_init__(self):
        for d in (*self.int_digits, *self.frac_pre, *self.frac_period):
            if not 0 <= d <= 9:
                raise DomainError(f"digit out of range: {d}")
        if not self.int_digits or (self.int_digits[0] == 0 and len(self.int_digits) > 1):
            raise DomainError("integer part must have a nonzero leading digit")
        if self.frac_period and all(d == 9 for d in self.frac_period):
            raise DomainError("all-9 repeating blocks are not admissible")
        if self.frac_period:
            if _minimal_period(self.frac_period) != len(self.frac_period):
                raise DomainError("repeating block is not minimal")
            if self.frac_pre and self.frac_pre[-1] == self.frac_period[-1]:
                raise DomainError("preperiod is not minimal against the block")
        elif self.frac_pre and self.frac_pre[-1] == 0:
            raise DomainError("terminating fraction must not end in 0")
        if self.to_fraction() <= 1:
            raise DomainError("expansions must represent a value > 1")

    # -- derived views ---------------------------------------------------

    def to_fraction(self) -> Fraction:
        """Exact rational value of the expansion."""
        s, p = len(self.frac_pre), len(self.frac_period)
        value = Fraction(_digits_to_int(self.int_digits))
        if s:
            value += Fraction(_digits_to_int(self.frac_pre), 10**s)
        if p:
            value += Fraction(_digits_to_int(self.frac_period), 10**s * (10**p - 1))
        return value

    @property
    def is_terminating(self) -> bool:
        return not self.frac_period

    @property
    def is_integer(self) -> bool:
        return not self.frac_pre and not self.frac_period

    def __str__(self) -> str:
        text = "".join(str(d) for d in self.int_digits)
        if self.frac_pre or self.frac_period:
            text += "." + "".join(str(d) for d in self.frac_pre)
            if self.frac_period:
                text += "(" + "".join(str(d) for d in self.frac_period) + ")"
        return text


def parse_decimal(text: str) -> DecimalExpansion:
    """Parse ``INT [ "." FRAC [ "(" PERIOD ")" ] ]`` into canonical form.

    Rejects values <= 1, all-9 repeating blocks, empty parentheses and
    any non-digit character.  The result is canonicalized: the block is
    reduced to its minimal length and shifted as far left as it goes.
    """
    m = _GRAMMAR.match(text.strip())
    if not m:
        raise ParseError(f"not a decimal expansion: {text!r}")
    int_part, pre_part, period_part = m.groups()
    if period_part == "":
        raise ParseError(f"empty repeating block in {text!r}")
    int_digits = [ord(c) - 48 for c in int_part]
    while len(int_digits) > 1 and int_digits[0] == 0:
        int_digits.pop(0)
    pre = [ord(c) - 48 for c in pre_part] if pre_part else []
    period = [ord(c) - 48 for c in period_part] if period_part else []
    if period and all(d == 9 for d in period):
        raise ParseError(f"all-9 repeating block in {text!r}")
    pre, period = _canonical_fraction(pre, period)
    try:
        return DecimalExpansion(tuple(int_digits), tuple(pre), tuple(period))
    except DomainError as exc:
        raise ParseError(f"{text!r}: {exc}") from exc


def expansion_of_nat(n: int) -> DecimalExpansion:
    """Expansion of an integer >= 2 (digit extraction, empty fraction)."""
    if n < 2:
        raise DomainError(f"expansion_of_nat needs n >= 2, got {n}")
    return DecimalExpansion(tuple(digit_list_of(n)), (), ())


def expansion_of_fraction(value: Fraction) -> DecimalExpansion:
    """Canonical expansion of an exact rational > 1 by long division.

    The first repeated remainder fixes both the minimal preperiod and the
    minimal repeating block, so the result is canonical by construction.
    """
    if value <= 1:
        raise DomainError(f"expansions must represent a value > 1, got {value}")
    num, den = value.numerator, value.denominator
    q, r = divmod(num, den)
    frac: list[int] = []
    seen: dict[int, int] = {}
    while r and r not in seen:
        if len(frac) > _MAX_FRACTION_DIGITS:
            raise ResourceBudgetExceeded(
                f"expansion of {value} exceeds {_MAX_FRACTION_DIGITS} fraction digits"
            )
        seen[r] = len(frac)
        d, r = divmod(10 * r, den)
        frac.append(d)
    if r == 0:
        pre, period = frac, []
    else:
        cut = seen[r]
        pre, period = frac[:cut], frac[cut:]
    return DecimalExpansion(tuple(digit_list_of(q)), tuple(pre), tuple(period))


# -- canonicalization helpers ------------------------------------------------


def _digits_to_int(digits: tuple[int, ...] | list[int]) -> int:
    value = 0
    for d in digits:
        value = value * 10 + d
    return value


def _minimal_period(period) -> int:
    """Length of the shortest block whose repetition spells ``period``."""
    p = len(period)
    for d in range(1, p):
        if p % d == 0 and all(period[i] == period[i % d] for i in range(p)):
            return d
    return p


def _canonical_fraction(pre: list[int], period: list[int]) -> tuple[list[int], list[int]]:
    if period:
        d = _minimal_period(period)
        period = period[:d]
        if all(x == 0 for x in period):
            period = []
    if period:
        # Pull the block left while the preperiod boundary digit matches
        # the block's last digit (a right-rotation absorbs it).
        while pre and pre[-1] == period[-1]:
            period = [period[-1]] + period[:-1]
            pre.pop()
    else:
        while pre and pre[-1] == 0:
            pre.pop()
    return pre, period

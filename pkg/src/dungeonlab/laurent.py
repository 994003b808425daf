"""Evaluable form of the digit series attached to a decimal expansion.

A decimal expansion spells out a function of the base: integer digits
contribute a polynomial, preperiod digits contribute negative powers,
and the repeating block contributes a geometric tail with the closed
form  x^(-s) * (sum e_j x^(p-j)) / (x^p - 1).  Evaluating at 10 gives
back the number itself; evaluating elsewhere is base reinterpretation
extended to fractional digits.

Evaluation carriers: exact `Fraction` for rational arguments, mpmath
floats for everything else.  The derivative differentiates the closed
form analytically in both carriers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Union

import mpmath
from mpmath import mp, mpf

from .errors import DomainError, PrecisionExhausted
from .expansion import DecimalExpansion, parse_decimal

Real = Union[Fraction, int, float, mpf]

# Extra decimal digits carried internally beyond the requested working
# precision.  The documented approximation guarantee leaves a guard of
# GUARD_DIGITS, i.e. results are within 10^(-working_digits + GUARD_DIGITS)
# of the true value.
GUARD_DIGITS = 2
_INTERNAL_SLACK = 15


def _as_expansion(a: DecimalExpansion | str) -> DecimalExpansion:
    return a if isinstance(a, DecimalExpansion) else parse_decimal(a)


@dataclass(frozen=True)
class LaurentMap:
    """Closed-form view of the digit series of one expansion."""

    source: DecimalExpansion

    @cached_property
    def poly_coeffs(self) -> tuple[int, ...]:
        """Coefficients of the polynomial part, constant term first."""
        return tuple(reversed(self.source.int_digits))

    @cached_property
    def pre_coeffs(self) -> tuple[int, ...]:
        """Coefficients d_1..d_s of the negative powers x^-1..x^-s."""
        return self.source.frac_pre

    @cached_property
    def period_coeffs(self) -> tuple[int, ...]:
        return self.source.frac_period

    @cached_property
    def value(self) -> Fraction:
        """The represented number; equals evaluation at 10."""
        return self.source.to_fraction()

    @property
    def is_constant(self) -> bool:
        return self.source.is_integer and len(self.source.int_digits) == 1

    # -- exact carrier ----------------------------------------------------

    def eval_exact(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        if x <= 1:
            raise DomainError(f"evaluation point must be > 1, got {x}")
        acc = Fraction(0)
        for c in reversed(self.poly_coeffs):
            acc = acc * x + c
        if self.pre_coeffs:
            u = 1 / x
            tail = Fraction(0)
            for d in reversed(self.pre_coeffs):
                tail = (tail + d) * u
            acc += tail
        if self.period_coeffs:
            s, p = len(self.pre_coeffs), len(self.period_coeffs)
            n_val = Fraction(0)
            for e in self.period_coeffs:
                n_val = n_val * x + e
            acc += n_val / (x**s * (x**p - 1))
        return acc

    def deriv_exact(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        if x <= 1:
            raise DomainError(f"evaluation point must be > 1, got {x}")
        acc = Fraction(0)
        for i, c in enumerate(self.poly_coeffs):
            if i >= 1 and c:
                acc += i * c * x ** (i - 1)
        for j, d in enumerate(self.pre_coeffs, start=1):
            if d:
                acc -= j * d * x ** (-j - 1)
        if self.period_coeffs:
            s, p = len(self.pre_coeffs), len(self.period_coeffs)
            n_val = Fraction(0)
            dn_val = Fraction(0)
            for e in self.period_coeffs:
                dn_val = dn_val * x + n_val
                n_val = n_val * x + e
            den = x**p - 1
            acc += (dn_val - s * n_val / x) / (x**s * den)
            acc -= n_val * p * x ** (p - 1) / (x**s * den * den)
        return acc

    # -- high-precision carrier -------------------------------------------

    def eval_mp(self, x) -> mpf:
        """Evaluate at an mpmath float under the caller's precision."""
        x = mpf(x)
        if x <= 1:
            raise DomainError(f"evaluation point must be > 1, got {x}")
        acc = mpf(0)
        for c in reversed(self.poly_coeffs):
            acc = acc * x + c
        if self.pre_coeffs:
            u = 1 / x
            tail = mpf(0)
            for d in reversed(self.pre_coeffs):
                tail = (tail + d) * u
            acc += tail
        if self.period_coeffs:
            s, p = len(self.pre_coeffs), len(self.period_coeffs)
            n_val = mpf(0)
            for e in self.period_coeffs:
                n_val = n_val * x + e
            acc += n_val / (x**s * (x**p - 1))
        return acc

    def deriv_mp(self, x) -> mpf:
        x = mpf(x)
        if x <= 1:
            raise DomainError(f"evaluation point must be > 1, got {x}")
        acc = mpf(0)
        for i, c in enumerate(self.poly_coeffs):
            if i >= 1 and c:
                acc += i * c * x ** (i - 1)
        for j, d in enumerate(self.pre_coeffs, start=1):
            if d:
                acc -= j * d * x ** (-j - 1)
        if self.period_coeffs:
            s, p = len(self.pre_coeffs), len(self.period_coeffs)
            n_val = mpf(0)
            dn_val = mpf(0)
            for e in self.period_coeffs:
                dn_val = dn_val * x + n_val
                n_val = n_val * x + e
            den = x**p - 1
            acc += (dn_val - s * n_val / x) / (x**s * den)
            acc -= n_val * p * x ** (p - 1) / (x**s * den * den)
        return acc

    # -- rational-function form --------------------------------------------

    def rational_form(self) -> tuple[list[int], list[int]]:
        """Integer polynomials (P, Q), constant term first, with map = P/Q.

        Q is x^s for terminating expansions and x^s * (x^p - 1) otherwise.
        Not reduced; shared factors can only sit at x = 0.
        """
        s, p = len(self.pre_coeffs), len(self.period_coeffs)
        if p:
            q = _poly_shift([-1] + [0] * (p - 1) + [1], s)
        else:
            q = _poly_shift([1], s)
        poly = list(self.poly_coeffs) if any(self.poly_coeffs) else [0]
        num = _poly_mul(poly, q)
        base = [-1] + [0] * (p - 1) + [1] if p else [1]
        for j, d in enumerate(self.pre_coeffs, start=1):
            if d:
                num = _poly_add(num, _poly_scale(_poly_shift(base, s - j), d))
        if p:
            n_poly = [0] * (p + 1)
            for j, e in enumerate(self.period_coeffs, start=1):
                n_poly[p - j] = e
            n_poly.pop()  # degree p-1
            num = _poly_add(num, n_poly)
        return _poly_trim(num), _poly_trim(q)


# -- module-level operations ---------------------------------------------


def laurent_eval(a: DecimalExpansion | str, x: Fraction | int) -> Fraction:
    """Exact rational value of the digit series of ``a`` at ``x`` > 1."""
    return LaurentMap(_as_expansion(a)).eval_exact(x)


def laurent_eval_approx(a: DecimalExpansion | str, x: Real, working_digits: int = 28) -> mpf:
    """Digit series of ``a`` at ``x``, good to 10^(-working_digits + 2).

    Refuses points too close to 1 for the requested precision instead of
    quietly degrading: the tail behaves like 1/(x - 1) there.
    """
    if working_digits < 16:
        raise DomainError(f"working_digits must be >= 16, got {working_digits}")
    lmap = LaurentMap(_as_expansion(a))
    xf = Fraction(x) if isinstance(x, (Fraction, int)) else None
    with mp.workdps(working_digits + _INTERNAL_SLACK):
        xv = mpf(xf.numerator) / xf.denominator if xf is not None else mpf(x)
        floor_gap = mpf(10) ** (-(working_digits // 2))
        if xv <= 1 + floor_gap:
            raise PrecisionExhausted(
                f"{xv} is within 10^-{working_digits // 2} of 1; "
                f"raise working_digits or move the point"
            )
        # Size the internal precision to the result's magnitude so the
        # guarantee stays absolute, then to the cancellation in x^p - 1.
        k = len(lmap.poly_coeffs) - 1
        mag_est = max(0.0, k * float(mpmath.log10(xv)) + 1) + working_digits / 2 + 2
        dps = 2 * working_digits + _INTERNAL_SLACK + int(mag_est)
    with mp.workdps(dps):
        xv = mpf(xf.numerator) / xf.denominator if xf is not None else mpf(x)
        result = lmap.eval_mp(xv)
    return result


def laurent_derivative_eval(
    a: DecimalExpansion | str, x: Real, working_digits: int | None = None
):
    """Derivative of the digit series at ``x``; exact for rational ``x``.

    Returns a Fraction for Fraction/int arguments (unless working_digits
    forces the float carrier), an mpmath float otherwise.
    """
    lmap = LaurentMap(_as_expansion(a))
    if isinstance(x, (Fraction, int)) and working_digits is None:
        return lmap.deriv_exact(x)
    wd = working_digits if working_digits is not None else 28
    if wd < 16:
        raise DomainError(f"working_digits must be >= 16, got {wd}")
    with mp.workdps(2 * wd + _INTERNAL_SLACK):
        xv = (
            mpf(Fraction(x).numerator) / Fraction(x).denominator
            if isinstance(x, (Fraction, int))
            else mpf(x)
        )
        if xv <= 1 + mpf(10) ** (-(wd // 2)):
            raise PrecisionExhausted(f"{xv} too close to 1 for {wd} working digits")
        result = lmap.deriv_mp(xv)
    return result


# -- small integer-polynomial helpers (constant term first) ----------------


def _poly_trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_scale(p: list[int], k: int) -> list[int]:
    return [c * k for c in p]


def _poly_shift(p: list[int], n: int) -> list[int]:
    """Multiply by x^n."""
    return [0] * n + list(p)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_eval_fraction(p: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_eval_mp(p: list[int], x: mpf) -> mpf:
    return mpmath.polyval([mpf(c) for c in reversed(p)], x)

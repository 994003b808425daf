"""Integer polynomials with divisibility certificates on their slopes.

A polynomial is m-stable when every coefficient except the constant term
is divisible by m; composing an m-stable with an n-stable polynomial
gives an mn-stable one, which is the engine behind the residue
stabilization of the bottom-up sequences: composing the digit
polynomials of 10, 11, ..., k accumulates stability and eventually
freezes the chain's value mod 10^d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .digits import digit_list_of
from .errors import DomainError, ResourceBudgetExceeded

DEFAULT_DEGREE_BUDGET = 4096


def is_m_stable(coeffs: Sequence[int], m: int) -> bool:
    """True when every non-constant coefficient is divisible by m."""
    if m < 1:
        raise DomainError(f"stability modulus must be >= 1, got {m}")
    return all(c % m == 0 for c in coeffs[1:])


@dataclass(frozen=True)
class StablePoly:
    """Integer polynomial (constant term first) with a stability certificate."""

    coeffs: tuple[int, ...]
    certified_stability: int

    def __post_init__(self):
        if not self.coeffs:
            raise DomainError("polynomial needs at least a constant term")
        if self.certified_stability < 1:
            raise DomainError("certified stability must be a positive integer")
        if not is_m_stable(self.coeffs, self.certified_stability):
            raise DomainError(
                f"coefficients are not {self.certified_stability}-stable: {self.coeffs}"
            )

    @property
    def degree(self) -> int:
        d = len(self.coeffs) - 1
        while d > 0 and self.coeffs[d] == 0:
            d -= 1
        return d

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def digit_poly(j: int) -> list[int]:
    """Coefficients (constant first) of the digit polynomial of ``j``.

    Evaluating this polynomial at b is reinterpret(j, b).
    """
    if j < 2:
        raise DomainError(f"digit polynomials start at 2, got {j}")
    return list(reversed(digit_list_of(j)))


def poly_compose(f: Sequence[int], g: Sequence[int], modulus: int | None = None) -> list[int]:
    """Coefficients of f(g(x)), optionally reduced mod ``modulus``.

    Horner in g: start from f's leading coefficient and alternate
    multiply-by-g / add-constant.
    """
    out = [f[-1] % modulus if modulus else f[-1]]
    for c in reversed(f[:-1]):
        out = _poly_mul(out, g, modulus)
        out[0] += c
        if modulus:
            out[0] %= modulus
    return out


def compose_stable(f: StablePoly, g: StablePoly) -> StablePoly:
    """f composed with g, certified at the product of the stabilities.

    The certificate is re-verified against the expanded coefficients, so
    a wrong composition cannot ship a bogus certificate.
    """
    coeffs = poly_compose(f.coeffs, g.coeffs)
    m = f.certified_stability * g.certified_stability
    if not is_m_stable(coeffs, m):
        raise DomainError("composition lost its stability certificate")
    return StablePoly(tuple(coeffs), m)


def phi_composition(
    k_max: int, modulus: int, degree_budget: int = DEFAULT_DEGREE_BUDGET
) -> StablePoly:
    """Composition of the digit polynomials of 10, 11, ..., k_max, mod modulus.

    Applied innermost-last: the result sends x to
    reinterpret-chain 10_(11_(..._(k_max_x))).  The certificate is the
    largest divisor of ``modulus`` under which the composition is stable;
    once that divisor is the whole modulus, the constant term is the
    frozen residue of the bottom-up alpha chain.
    """
    if not 10 <= k_max <= 999:
        raise DomainError(f"k_max must be in [10, 999], got {k_max}")
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    cur = [d % modulus for d in digit_poly(k_max)]
    for j in range(k_max - 1, 9, -1):
        outer = digit_poly(j)
        new_degree = (len(outer) - 1) * (len(cur) - 1)
        if new_degree > degree_budget:
            raise ResourceBudgetExceeded(
                f"composition degree {new_degree} exceeds budget {degree_budget} at j={j}"
            )
        cur = poly_compose(outer, cur, modulus)
    cert = modulus
    for c in cur[1:]:
        cert = math.gcd(cert, c)
    return StablePoly(tuple(cur), cert)


def _poly_mul(p: Sequence[int], q: Sequence[int], modulus: int | None) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    if modulus:
        out = [c % modulus for c in out]
    return out

"""The four dungeon sequences and their exact and modular pipelines.

Chains of reinterpretations can be grouped from the bottom upwards
(innermost pair first) or from the top downwards.  Bottom-up chains only
ever reinterpret a small operand at a huge base, so they stream in
modular arithmetic as well; top-down chains must re-extract the decimal
digits of a huge running value at every step, which is why beta and
delta have no modular pipeline.

Indexing starts at 10 throughout, matching the OEIS entries
(alpha A121263, beta A121265, gamma A121295, delta A121296).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, Sequence

from .digits import digit_list_of, log10_of_nat, num_digits
from .errors import DigitBudgetExceeded, DomainError, HypothesisNotMet, UnsupportedSequence
from .reinterp import reinterpret

DEFAULT_DIGIT_BUDGET = 2_000_000

_OEIS_IDS = {"alpha": "A121263", "beta": "A121265", "gamma": "A121295", "delta": "A121296"}


class SequenceId(Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    DELTA = "delta"

    @property
    def oeis_id(self) -> str:
        return _OEIS_IDS[self.value]

    @property
    def bottom_up(self) -> bool:
        """True when terms evaluate small-digit polynomials at huge bases,
        which is what modular and estimated pipelines require."""
        return self in (SequenceId.ALPHA, SequenceId.GAMMA)


class Grouping(Enum):
    BOTTOM_UP = "bottom-up"
    TOP_DOWN = "top-down"


def dungeon_chain(values: Sequence[int], grouping: Grouping) -> int:
    """Evaluate a reinterpretation chain under the given grouping.

    BOTTOM_UP folds a1_(a2_(..._am)) innermost first; TOP_DOWN folds
    ((a1_a2)_...)_am.  A single element is returned unchanged.
    """
    if not values:
        raise DomainError("dungeon_chain needs at least one value")
    for v in values:
        if v < 2:
            raise DomainError(f"chain values must be >= 2, got {v}")
    if grouping is Grouping.BOTTOM_UP:
        acc = values[-1]
        for v in reversed(values[:-1]):
            acc = reinterpret(v, acc)
    else:
        acc = values[0]
        for v in values[1:]:
            acc = reinterpret(acc, v)
    return acc


def _check_budget(term: int, n: int, last_complete: int, budget: int) -> None:
    # Cheap bit-length screen first; exact digit count only near the line.
    if term.bit_length() <= (budget - 1) * 3.32:
        return
    if num_digits(term) > budget:
        raise DigitBudgetExceeded(
            f"term at n={n} exceeds the digit budget of {budget}", last_n=last_complete
        )


def sequence_stream(
    seq: SequenceId, n_max: int, digit_budget: int = DEFAULT_DIGIT_BUDGET
) -> Iterator[tuple[int, int]]:
    """Yield (n, term) for n = 10..n_max with full-precision terms.

    Alpha and delta have no incremental recurrence (the new element
    enters at the far end of the chain), so their terms are recomputed
    from the whole chain each n.  Raises DigitBudgetExceeded carrying the
    last completed index when a term would outgrow ``digit_budget``.
    """
    if n_max < 10:
        raise DomainError(f"n_max must be >= 10, got {n_max}")
    if seq is SequenceId.ALPHA:
        yield 10, 10
        for n in range(11, n_max + 1):
            acc = n
            for j in range(n - 1, 9, -1):
                acc = reinterpret(j, acc)
            _check_budget(acc, n, n - 1, digit_budget)
            yield n, acc
    elif seq is SequenceId.BETA:
        acc = 10
        yield 10, acc
        for n in range(11, n_max + 1):
            acc = reinterpret(acc, n)
            _check_budget(acc, n, n - 1, digit_budget)
            yield n, acc
    elif seq is SequenceId.GAMMA:
        acc = 10
        yield 10, acc
        for n in range(11, n_max + 1):
            acc = reinterpret(n, acc)
            _check_budget(acc, n, n - 1, digit_budget)
            yield n, acc
    else:
        yield 10, 10
        for n in range(11, n_max + 1):
            acc = n
            for j in range(n - 1, 9, -1):
                acc = reinterpret(acc, j)
            _check_budget(acc, n, n - 1, digit_budget)
            yield n, acc


def sequence_terms(
    seq: SequenceId, n_max: int, digit_budget: int = DEFAULT_DIGIT_BUDGET
) -> dict[int, int]:
    """Materialized sequence_stream."""
    return dict(sequence_stream(seq, n_max, digit_budget))


def sequence_mod_stream(seq: SequenceId, modulus: int, n_max: int) -> Iterator[tuple[int, int]]:
    """Yield (n, term mod modulus) entirely in residue arithmetic.

    Only the bottom-up sequences stream this way; beta and delta are
    rejected because their recurrences need full digit extraction.
    """
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if not seq.bottom_up:
        raise UnsupportedSequence(f"{seq.value} has no modular pipeline")
    if n_max < 10:
        raise DomainError(f"n_max must be >= 10, got {n_max}")
    if seq is SequenceId.GAMMA:
        acc = 10 % modulus
        yield 10, acc
        for n in range(11, n_max + 1):
            r = 0
            for d in digit_list_of(n):
                r = (r * acc + d) % modulus
            acc = r
            yield n, acc
        return
    digit_rows = [tuple(digit_list_of(j)) for j in range(10, n_max + 1)]
    yield 10, 10 % modulus
    for n in range(11, n_max + 1):
        v = n % modulus
        for j in range(n - 11, -1, -1):
            acc = 0
            for d in digit_rows[j]:
                acc = (acc * v + d) % modulus
            v = acc
        yield n, v


def stabilization_point(
    seq: SequenceId, modulus: int, n_max: int, window: int
) -> tuple[int, int] | None:
    """Smallest n0 with a constant residue on [n0, n_max], or None.

    Stability is only reported when the constant run covers at least
    ``window`` indices before n_max, i.e. n0 <= n_max - window.
    """
    if window < 1:
        raise DomainError(f"window must be >= 1, got {window}")
    if n_max <= 10 + window:
        raise DomainError(f"n_max must exceed 10 + window, got {n_max}")
    residues = dict(sequence_mod_stream(seq, modulus, n_max))
    final = residues[n_max]
    n0 = n_max
    for n in range(n_max - 1, 9, -1):
        if residues[n] != final:
            break
        n0 = n
    if n0 > n_max - window:
        return None
    return n0, final


@dataclass
class InequalityReport:
    """Outcome of the pairwise sequence comparisons up to n_max."""

    n_max: int
    checks: int
    violations: list[tuple[str, int, int, int]] = field(default_factory=list)
    # The remaining alpha/gamma relationship has no proof either way;
    # tallies are reported as observations only.
    alpha_ge_gamma: int = 0
    gamma_ge_alpha: int = 0

    @property
    def all_hold(self) -> bool:
        return not self.violations


def inequality_report(
    n_max: int = 45, digit_budget: int = DEFAULT_DIGIT_BUDGET
) -> InequalityReport:
    """Check beta >= alpha, delta >= gamma and beta >= gamma on [10, n_max]."""
    alpha = sequence_terms(SequenceId.ALPHA, n_max, digit_budget)
    beta = sequence_terms(SequenceId.BETA, n_max, digit_budget)
    gamma = sequence_terms(SequenceId.GAMMA, n_max, digit_budget)
    delta = sequence_terms(SequenceId.DELTA, n_max, digit_budget)
    report = InequalityReport(n_max=n_max, checks=0)
    for n in range(10, n_max + 1):
        for name, big, small in (
            ("beta>=alpha", beta[n], alpha[n]),
            ("delta>=gamma", delta[n], gamma[n]),
            ("beta>=gamma", beta[n], gamma[n]),
        ):
            report.checks += 1
            if big < small:
                report.violations.append((name, n, big, small))
        if alpha[n] >= gamma[n]:
            report.alpha_ge_gamma += 1
        if gamma[n] >= alpha[n]:
            report.gamma_ge_alpha += 1
    return report


def lbg_check(a: int, b: int, c: int, k: float | Fraction) -> bool:
    """Conditional comparison reinterpret(a, c) >= k * reinterpret(c, b).

    Hypotheses: k > 10, a >= k*b, and log c >= log k / (log k - 1).
    Raises HypothesisNotMet outside them; inside them the comparison is
    evaluated exactly and its truth returned.
    """
    kf = Fraction(k)
    if kf <= 10:
        raise HypothesisNotMet(f"k must exceed 10, got {k}")
    if a < kf * b:
        raise HypothesisNotMet(f"a >= k*b fails: {a} < {k}*{b}")
    log_k = math.log10(float(kf))
    if log10_of_nat(c) < log_k / (log_k - 1):
        raise HypothesisNotMet(f"log c >= log k/(log k - 1) fails for c={c}, k={k}")
    lhs = reinterpret(a, c)
    rhs = reinterpret(c, b)
    return Fraction(lhs) >= kf * rhs

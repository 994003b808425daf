"""Double-log growth of the dungeon sequences, exact and estimated.

Exact mode reads log log of a fully computed term off its digit count.
Estimated mode never builds the term: it pushes log10 of the running
value through the recurrence (using only the digits of the small
operand) and hops to log log once even that overflows a double.  The
estimator's error is dominated by float roundoff and the dropped
base^-1 corrections, both far below the documented 1e-3 relative target
for n up to 1e5.

All logarithms here are base 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .digits import digit_list_of, log10_of_nat
from .errors import DomainError, UnsupportedSequence
from .reinterp import log10_reinterpret
from .sequences import DEFAULT_DIGIT_BUDGET, SequenceId, sequence_stream

# State-machine thresholds: exact ints below ~1e15, then log10 as a
# double until that nears overflow, then log10(log10).
_EXACT_LIMIT = 10**15
_LOG_LIMIT = 1e300


class GrowthMode(Enum):
    EXACT = "exact"
    ESTIMATED = "estimated"


@dataclass(frozen=True)
class GrowthPoint:
    n: int
    loglog_value: float
    mode: GrowthMode


def tower_baseline_loglog_u(n: int) -> float:
    """log log of the bottom-up tower 10^(11*12*...*n): sum of log i."""
    if n < 11:
        raise DomainError(f"tower baseline starts at n = 11, got {n}")
    return math.fsum(math.log10(i) for i in range(11, n + 1))


class _LogLogTracker:
    """Running log-scale value pushed through reinterpretation steps."""

    def __init__(self, start: int):
        self.value: int | None = start  # exact phase
        self.log10: float | None = None  # single-log phase
        self.loglog: float | None = None  # double-log phase

    def step(self, operand_digits: list[int]) -> None:
        if self.value is not None:
            if self.value < _EXACT_LIMIT:
                acc = 0
                for d in operand_digits:
                    acc = acc * self.value + d
                self.value = acc
                return
            self.log10 = log10_of_nat(self.value)
            self.value = None
        if self.log10 is not None:
            if self.log10 < _LOG_LIMIT:
                self.log10 = log10_reinterpret(operand_digits, self.log10)
                return
            self.loglog = math.log10(self.log10)
            self.log10 = None
        k = len(operand_digits) - 1
        lead_corr = math.log10(operand_digits[0])
        bump = lead_corr * 10.0 ** (-self.loglog) if self.loglog < 300 else 0.0
        self.loglog = self.loglog + math.log10(k + bump)

    def result(self) -> float:
        if self.value is not None:
            if self.value <= 1:
                raise DomainError("log log undefined at values <= 10")
            return math.log10(math.log10(self.value))
        if self.log10 is not None:
            return math.log10(self.log10)
        return self.loglog


def _estimated_loglog(seq: SequenceId, n: int) -> float:
    if seq is SequenceId.ALPHA:
        tracker = _LogLogTracker(n)
        for j in range(n - 1, 9, -1):
            tracker.step(digit_list_of(j))
        return tracker.result()
    tracker = _LogLogTracker(10)
    for j in range(11, n + 1):
        tracker.step(digit_list_of(j))
    return tracker.result()


def growth_loglog(
    seq: SequenceId,
    n: int,
    mode: GrowthMode,
    digit_budget: int = DEFAULT_DIGIT_BUDGET,
) -> GrowthPoint:
    """log log of the n-th term, by full computation or by estimation.

    Estimated mode exists only for the bottom-up sequences; the others
    would need digit extraction of values that cannot be built.
    """
    if n < 11:
        raise DomainError(f"growth points start at n = 11, got {n}")
    if mode is GrowthMode.EXACT:
        term = None
        for idx, value in sequence_stream(seq, n, digit_budget):
            if idx == n:
                term = value
        assert term is not None
        return GrowthPoint(n, math.log10(log10_of_nat(term)), mode)
    if not seq.bottom_up:
        raise UnsupportedSequence(f"{seq.value} has no estimated growth mode")
    return GrowthPoint(n, _estimated_loglog(seq, n), mode)


def growth_ratio(seq: SequenceId, n: int, mode: GrowthMode = GrowthMode.ESTIMATED) -> float:
    """Ratio of log log term_n to n * log log n."""
    point = growth_loglog(seq, n, mode)
    return point.loglog_value / (n * math.log10(math.log10(n)))


def growth_ratio_points(
    seq: SequenceId, ns: Iterable[int], mode: GrowthMode = GrowthMode.ESTIMATED
) -> list[tuple[int, float]]:
    return [(n, growth_ratio(seq, n, mode)) for n in ns]

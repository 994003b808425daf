"""Exception types shared across the package.

The CLI maps these onto its exit-code contract (1 = usage/parse error,
2 = verification failure, 3 = resource budget exceeded).
"""


class DungeonError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DungeonError, ValueError):
    """Malformed operand text (decimal expansion, integer, modulus...)."""


class DomainError(DungeonError, ValueError):
    """Operand outside an operation's documented domain."""


class PrecisionExhausted(DungeonError):
    """The requested accuracy cannot be met at the allowed working precision."""


class DigitBudgetExceeded(DungeonError):
    """A sequence term would exceed the configured decimal-digit budget.

    `last_n` is the index of the last term that was completed in full.
    """

    def __init__(self, message: str, last_n: int):
        super().__init__(message)
        self.last_n = last_n


class UnsupportedSequence(DungeonError, ValueError):
    """Operation asked for on a sequence it cannot support (beta/delta in
    modular pipelines, whose steps need full decimal digits)."""


class ResourceBudgetExceeded(DungeonError):
    """Polynomial degree / coefficient budget blown (phi_composition)."""


class HypothesisNotMet(DungeonError):
    """A conditional inequality was invoked outside its hypotheses.

    Deliberately distinct from a `False` result: the statement was never
    in force, so nothing was refuted.
    """


class VerificationFailure(DungeonError):
    """A verify suite found at least one failing check."""

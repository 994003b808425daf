"""dungeonlab: exact arithmetic for iterated base reinterpretation.

Reading the decimal digits of a in base b instead of base 10 gives a
binary operation a_b with 10 as a two-sided unit.  This package computes
the four classic chains of that operation with full, modular and
log-scale precision, certifies their residue stabilization through
polynomial stability, and classifies the trajectories of the associated
one-parameter dynamical system x -> L<a>(x).
"""

from .digits import digits_of, nat_from_str, num_digits
from .dynamics import (
    ClassScanRow,
    CobwebData,
    CycleWitness,
    DivergenceWitness,
    FixedPointResult,
    FixedWitness,
    LocalClass,
    PrecisionPolicy,
    TrajectoryClass,
    TrajectoryReport,
    class_scan,
    classify_fixed_point,
    cobweb_points,
    fixed_point,
    trajectory,
    two_cycle,
)
from .errors import (
    DigitBudgetExceeded,
    DomainError,
    DungeonError,
    HypothesisNotMet,
    ParseError,
    PrecisionExhausted,
    ResourceBudgetExceeded,
    UnsupportedSequence,
    VerificationFailure,
)
from .expansion import DecimalExpansion, expansion_of_fraction, expansion_of_nat, parse_decimal
from .growth import (
    GrowthMode,
    GrowthPoint,
    growth_loglog,
    growth_ratio,
    growth_ratio_points,
    tower_baseline_loglog_u,
)
from .laurent import LaurentMap, laurent_derivative_eval, laurent_eval, laurent_eval_approx
from .reinterp import BoundsPair, lemma3_bounds, reinterpret, reinterpret_mod
from .sequences import (
    DEFAULT_DIGIT_BUDGET,
    Grouping,
    InequalityReport,
    SequenceId,
    dungeon_chain,
    inequality_report,
    lbg_check,
    sequence_mod_stream,
    sequence_stream,
    sequence_terms,
    stabilization_point,
)
from .stability import StablePoly, compose_stable, digit_poly, is_m_stable, phi_composition

__version__ = "0.1.0"

__all__ = [
    "BoundsPair",
    "ClassScanRow",
    "CobwebData",
    "CycleWitness",
    "DecimalExpansion",
    "DEFAULT_DIGIT_BUDGET",
    "DigitBudgetExceeded",
    "DivergenceWitness",
    "DomainError",
    "DungeonError",
    "FixedPointResult",
    "FixedWitness",
    "GrowthMode",
    "GrowthPoint",
    "Grouping",
    "HypothesisNotMet",
    "InequalityReport",
    "LaurentMap",
    "LocalClass",
    "ParseError",
    "PrecisionExhausted",
    "PrecisionPolicy",
    "ResourceBudgetExceeded",
    "SequenceId",
    "StablePoly",
    "TrajectoryClass",
    "TrajectoryReport",
    "UnsupportedSequence",
    "VerificationFailure",
    "class_scan",
    "classify_fixed_point",
    "cobweb_points",
    "compose_stable",
    "digit_poly",
    "digits_of",
    "dungeon_chain",
    "expansion_of_fraction",
    "expansion_of_nat",
    "fixed_point",
    "growth_loglog",
    "growth_ratio",
    "growth_ratio_points",
    "inequality_report",
    "is_m_stable",
    "laurent_derivative_eval",
    "laurent_eval",
    "laurent_eval_approx",
    "lbg_check",
    "lemma3_bounds",
    "nat_from_str",
    "num_digits",
    "parse_decimal",
    "phi_composition",
    "reinterpret",
    "reinterpret_mod",
    "sequence_mod_stream",
    "sequence_stream",
    "sequence_terms",
    "stabilization_point",
    "tower_baseline_loglog_u",
    "trajectory",
    "two_cycle",
]

"""maxwelter: exact solver and verification lab for the Max-Welter coin game.

Coins sit on a semi-infinite strip of squares 0, 1, 2, ...; a move takes a
coin to an empty square on its left, jumping allowed.  In the Max-Welter
variant only the coin furthest to the right may move.  This package provides:

* a brute-force Sprague-Grundy oracle (normal and misere play, max-coin and
  any-coin rulesets) with memoization (:mod:`maxwelter.grundy`);
* closed-form classifiers for the value-0 and value-1 positions, an exact
  adjacent-pair value formula, and search-free winning-move synthesis
  (:mod:`maxwelter.closedform`);
* value-preserving position reductions (:mod:`maxwelter.reductions`);
* the classical Welter function via the mating method (:mod:`maxwelter.welter`);
* periodicity analyzers for value sequences (:mod:`maxwelter.periodicity`);
* an exhaustive verification harness cross-checking every closed form against
  the oracle (:mod:`maxwelter.verify`);
* a JSON HTTP service and CLI for interactive play and analysis
  (:mod:`maxwelter.service`, :mod:`maxwelter.cli`).
"""

from .closedform import (
    ValueClass,
    ValueKind,
    check_value_two_gap,
    closed_form_value,
    corollary_value,
    has_value_one_misere,
    has_value_one_normal,
    is_excluded_gap_form,
    is_p_position_misere,
    is_p_position_normal,
    winning_move_closed_form,
)
from .core import (
    Convention,
    IllegalMoveError,
    InvalidPositionError,
    Position,
    Ruleset,
    apply_move,
    empty_squares_below,
    is_terminal,
    legal_moves,
)
from .grundy import (
    GrundyOracle,
    MemoBudgetExceededError,
    Outcome,
    TerminalPositionError,
    grundy,
    mex,
    optimal_moves,
    outcome,
    shared_oracle,
)
from .periodicity import (
    PeriodReport,
    TheoremViolationError,
    check_translation_invariance,
    detect_period,
    find_additive_shift,
    scan_arithmetic_progression,
    scan_record,
    scan_translation_period,
)
from .reductions import HypothesisError, canonicalize, drop_small_coin, replace_prefix
from .verify import (
    SUITE_IDS,
    PositionSpace,
    SuiteReport,
    enumerate_positions,
    format_suite_report,
    run_suite,
)
from .welter import MatingResult, mate, nim_add, pair_value, welter_value

__version__ = "0.1.0"

__all__ = [
    "Convention",
    "GrundyOracle",
    "HypothesisError",
    "IllegalMoveError",
    "InvalidPositionError",
    "MatingResult",
    "MemoBudgetExceededError",
    "Outcome",
    "PeriodReport",
    "Position",
    "PositionSpace",
    "Ruleset",
    "SUITE_IDS",
    "SuiteReport",
    "TerminalPositionError",
    "TheoremViolationError",
    "ValueClass",
    "ValueKind",
    "apply_move",
    "canonicalize",
    "check_translation_invariance",
    "check_value_two_gap",
    "closed_form_value",
    "corollary_value",
    "detect_period",
    "drop_small_coin",
    "empty_squares_below",
    "enumerate_positions",
    "find_additive_shift",
    "format_suite_report",
    "grundy",
    "has_value_one_misere",
    "has_value_one_normal",
    "is_excluded_gap_form",
    "is_p_position_misere",
    "is_p_position_normal",
    "is_terminal",
    "legal_moves",
    "mate",
    "mex",
    "nim_add",
    "optimal_moves",
    "outcome",
    "pair_value",
    "replace_prefix",
    "run_suite",
    "scan_arithmetic_progression",
    "scan_record",
    "scan_translation_period",
    "shared_oracle",
    "welter_value",
    "winning_move_closed_form",
]

"""Periodicity analysis of Max-Welter value sequences.

Two kinds of regularity are probed, always under the max-coin ruleset and
normal convention:

* sliding the single biggest coin rightward makes the value sequence settle
  into "value grows by 1 per square" after a bounded offset
  (``find_additive_shift``);
* translating an entire position rightward leaves the value unchanged for a
  family of positions with an adjacent interior pair
  (``check_translation_invariance``), and is observed to become ultimately
  periodic more broadly (``scan_translation_period``,
  ``scan_arithmetic_progression``).

The first two behaviours are proved facts: any observed violation raises or
is reported as a counterexample that fails the verification suite.  The scan
functions implement open observations; they only ever report what the data
shows, with an explicit evidence threshold before a period counts as
verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .core import Position
from .grundy import GrundyOracle, shared_oracle

# A detected period only counts as verified when this many full copies fit
# between the preperiod and the horizon.
MIN_PERIODS_FOR_VERIFICATION = 3


class TheoremViolationError(RuntimeError):
    """A proved regularity failed on concrete data; always surfaced loudly."""


@dataclass(frozen=True)
class PeriodReport:
    """Detected eventual regularity of a value sequence.

    ``additive_step`` is 0 for plain periodicity (s[n+period] == s[n]) and
    positive for additive periodicity (s[n+period] == s[n] + additive_step).
    ``verified_at_horizon`` is True only when every in-window check passed
    and at least MIN_PERIODS_FOR_VERIFICATION full periods fit between
    ``preperiod_start`` and ``horizon``.  ``counterexample`` records the first
    violating index when a claimed law failed.
    """

    preperiod_start: int
    period: int
    additive_step: int
    horizon: int
    verified_at_horizon: bool
    counterexample: int | None = None


def detect_period(values: list[int]) -> tuple[int, int, bool]:
    """Minimal (preperiod, period) reproducing ``values``, evidence-gated.

    Returns the smallest period whose tail match covers at least
    MIN_PERIODS_FOR_VERIFICATION full periods, together with its minimal
    preperiod and True.  If no period meets the evidence bar, falls back to
    the smallest period with any observed repetition (False), and as a last
    resort to the degenerate (0, len(values), False).
    """
    horizon = len(values) - 1
    fallback: tuple[int, int] | None = None
    for period in range(1, horizon + 1):
        start = 0
        for n in range(horizon - period, -1, -1):
            if values[n + period] != values[n]:
                start = n + 1
                break
        if start > horizon - period:
            continue  # no repetition observed at this period
        if horizon - start + 1 >= MIN_PERIODS_FOR_VERIFICATION * period:
            return start, period, True
        if fallback is None:
            fallback = (start, period)
    if fallback is not None:
        return fallback[0], fallback[1], False
    return 0, horizon + 1, False


def find_additive_shift(
    prefix: Position,
    last_square: int,
    horizon: int,
    oracle: GrundyOracle | None = None,
) -> tuple[int, PeriodReport]:
    """Locate where sliding the biggest coin right starts adding 1 per square.

    ``prefix`` holds the fixed coins; ``last_square`` is the starting square
    of the biggest coin and must exceed every prefix coin.  Returns the
    smallest n >= 1 with value(prefix + {last_square + n}) == last_square,
    then checks value(prefix + {last_square + n + i}) == last_square + i for
    all 0 <= i <= horizon.  Such an n <= last_square always exists; failing to
    find one raises TheoremViolationError.  A law violation inside the window
    is returned as a counterexample in the report, which fails the
    verification suite.
    """
    if last_square <= prefix.biggest:
        raise ValueError(
            f"biggest coin {last_square} must exceed the prefix maximum {prefix.biggest}"
        )
    if horizon < 1:
        raise ValueError("horizon must be positive")
    oracle = oracle or shared_oracle()

    def value_at(square: int) -> int:
        return oracle.grundy(Position(prefix.squares + (square,)))

    shift = None
    for n in range(1, last_square + 1):
        if value_at(last_square + n) == last_square:
            shift = n
            break
    if shift is None:
        raise TheoremViolationError(
            f"no shift n <= {last_square} reaches value {last_square} from prefix {prefix}"
        )

    counterexample = None
    for i in range(horizon + 1):
        if value_at(last_square + shift + i) != last_square + i:
            counterexample = i
            break
    report = PeriodReport(
        preperiod_start=shift,
        period=1,
        additive_step=1,
        horizon=horizon,
        verified_at_horizon=counterexample is None,
        counterexample=counterexample,
    )
    return shift, report


def check_translation_invariance(
    position: Position, oracle: GrundyOracle | None = None
) -> bool | None:
    """Test value invariance under a one-square rightward translation.

    Applies to positions with k >= 3 coins whose biggest coin is detached
    (gap of at least 2) and which contain an adjacent coin pair a_i, a_i + 1
    with a_i >= k - 2 at some index i <= k - 2.  Returns None when that
    hypothesis fails, otherwise whether the translated position has the same
    value -- which is a proved fact, so False is a counterexample.
    """
    squares = position.squares
    k = len(squares)
    if k < 3:
        raise ValueError(f"translation invariance needs k >= 3 coins, got {k}")
    if squares[-1] <= squares[-2] + 1:
        return None
    if not any(
        squares[t] >= k - 2 and squares[t] + 1 == squares[t + 1] for t in range(k - 2)
    ):
        return None
    oracle = oracle or shared_oracle()
    return oracle.grundy(position) == oracle.grundy(position.shift(1))


def scan_translation_period(
    position: Position, horizon: int, oracle: GrundyOracle | None = None
) -> PeriodReport:
    """Scan values of the whole position translated rightward 0..horizon.

    Requires k >= 3 coins, a detached biggest coin, and two unequal
    consecutive gaps somewhere below the top coin.  The observed sequence is
    expected (not asserted) to become periodic with period 1; the report
    records whatever minimal period the data supports.
    """
    squares = position.squares
    k = len(squares)
    if k < 3:
        raise ValueError(f"translation scan needs k >= 3 coins, got {k}")
    if squares[-1] <= squares[-2] + 1:
        raise ValueError(f"biggest coin of {position} is not detached (gap >= 2 required)")
    if not any(
        squares[t + 1] - squares[t] != squares[t + 2] - squares[t + 1] for t in range(k - 2)
    ):
        raise ValueError(f"{position} has no unequal consecutive gaps below the top coin")
    if horizon < 1:
        raise ValueError("horizon must be positive")
    oracle = oracle or shared_oracle()
    values = [oracle.grundy(position.shift(i)) for i in range(horizon + 1)]
    start, period, verified = detect_period(values)
    return PeriodReport(
        preperiod_start=start,
        period=period,
        additive_step=0,
        horizon=horizon,
        verified_at_horizon=verified,
    )


def scan_arithmetic_progression(
    base: int,
    step: int,
    step_count: int,
    horizon: int,
    oracle: GrundyOracle | None = None,
) -> PeriodReport:
    """Scan translations of the progression (base, base+step, ..., base+step_count*step).

    The observed sequence is expected (not asserted) to become periodic with
    period dividing 2*step; the report records the minimal observed period.
    """
    if base < 0:
        raise ValueError("base square must be nonnegative")
    if step < 1:
        raise ValueError("step must be positive")
    if step_count < 1:
        raise ValueError("need at least two coins, so step_count >= 1")
    if horizon < 1:
        raise ValueError("horizon must be positive")
    oracle = oracle or shared_oracle()
    start_position = Position(base + j * step for j in range(step_count + 1))
    values = [oracle.grundy(start_position.shift(i)) for i in range(horizon + 1)]
    start, period, verified = detect_period(values)
    return PeriodReport(
        preperiod_start=start,
        period=period,
        additive_step=0,
        horizon=horizon,
        verified_at_horizon=verified,
    )


def scan_record(kind: str, params: Mapping[str, object], report: PeriodReport) -> str:
    """One-line structured text record for a scan, e.g.

    ``kind=conj6.2 a=0 m=2 k=1 horizon=100 n0=5 period=4 verified=true``
    """
    fields = [f"kind={kind}"]
    fields.extend(f"{key}={value}" for key, value in params.items())
    fields.append(f"horizon={report.horizon}")
    fields.append(f"n0={report.preperiod_start}")
    fields.append(f"period={report.period}")
    fields.append(f"verified={'true' if report.verified_at_horizon else 'false'}")
    return " ".join(fields)

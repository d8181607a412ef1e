"""Closed-form value classifiers and winning-move synthesis for Max-Welter.

Everything here is pure arithmetic on the square indices -- no game-tree
search.  The classifiers characterize, under the max-coin ruleset:

* the losing (value-0) positions of normal play,
* the value-1 positions of normal play,
* an exact value for a family of positions with an adjacent pair under the
  biggest coin,
* the losing and value-1 positions of misere play, which mirror the normal
  ones with the roles of 0 and 1 swapped.

The verification harness cross-checks each classifier against the brute-force
oracle over exhaustively enumerated position spaces; the classifiers
themselves never consult the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Position, empty_squares_below, is_terminal


class ValueKind(Enum):
    ZERO = 0
    ONE = 1
    AT_LEAST_TWO = 2


@dataclass(frozen=True)
class ValueClass:
    """What the closed forms can say about a position's value.

    ``exact`` is populated when a closed form pins the value: always for the
    ZERO/ONE kinds, and for AT_LEAST_TWO only when the adjacent-pair formula
    applies (in which case it is >= 2).
    """

    kind: ValueKind
    exact: int | None = None


def _require_coins(position: Position, minimum: int) -> None:
    if len(position) < minimum:
        raise ValueError(
            f"classifier needs at least {minimum} coins, got {len(position)} in {position}"
        )


def _has_single_interior_gap(position: Position) -> bool:
    # The k coins sit on 0..k with exactly one unoccupied square strictly
    # inside the run (never square 0 nor the top square).
    squares = position.squares
    k = len(squares)
    if squares[-1] != k:
        return False
    missing = k * (k + 1) // 2 - sum(squares)
    return 1 <= missing <= k - 1


def is_p_position_normal(position: Position) -> bool:
    """Losing-to-move test for normal play: adjacent top pair with even parity.

    The position must have k >= 2 coins; it loses for the player to move iff
    the two biggest coins are adjacent and (second_biggest + k) is even.
    """
    _require_coins(position, 2)
    squares = position.squares
    return squares[-1] == squares[-2] + 1 and (squares[-2] + len(squares)) % 2 == 0


def has_value_one_normal(position: Position) -> bool:
    """Value-1 test for normal play (k >= 2).

    Holds iff either the coins pack 0..k with one interior gap, or the two
    biggest coins are adjacent with (second_biggest + k) odd.
    """
    _require_coins(position, 2)
    squares = position.squares
    if _has_single_interior_gap(position):
        return True
    return squares[-1] == squares[-2] + 1 and (squares[-2] + len(squares)) % 2 == 1


def is_excluded_gap_form(position: Position) -> bool:
    """True for positions (0,1,...,k-2, k+i) with i >= 0.

    This family is carved out of both the adjacent-pair value formula and the
    value-2 gap property; both use this same predicate.
    """
    squares = position.squares
    k = len(squares)
    return squares[:-1] == tuple(range(k - 1)) and squares[-1] >= k


def corollary_value(position: Position) -> int | None:
    """Exact value when an adjacent pair sits directly under the biggest coin.

    For k >= 3 coins, outside the excluded family (0,1,...,k-2,k+i): if the
    third-biggest and second-biggest coins are adjacent and the biggest is at
    least 2 further right, the value is exactly (biggest - second_biggest).
    Returns None when the hypothesis does not apply.
    """
    _require_coins(position, 3)
    squares = position.squares
    if is_excluded_gap_form(position):
        return None
    if squares[-3] + 1 == squares[-2] and squares[-2] <= squares[-1] - 2:
        return squares[-1] - squares[-2]
    return None


def check_value_two_gap(position: Position, grundy_value: int) -> bool:
    """Necessary condition on value-2 positions: the top gap must be exactly 2.

    ``grundy_value`` is the oracle value supplied by the caller.  Returns True
    when the implication holds for this position: it is of the excluded form,
    or its value is not 2, or biggest - second_biggest == 2.  The verification
    harness requires this to hold everywhere.
    """
    _require_coins(position, 3)
    squares = position.squares
    if is_excluded_gap_form(position):
        return True
    if grundy_value != 2:
        return True
    return squares[-1] - squares[-2] == 2


def winning_move_closed_form(position: Position) -> tuple[int, int]:
    """Synthesize a move to a losing-to-move position, without search.

    Requires k >= 2, a non-terminal position that is not already losing for
    the mover.  The move always takes the biggest coin; the target is chosen
    by case analysis:

    1. one square right of the second-biggest coin, when that square is empty
       and the parity works out;
    2. otherwise one square left of the second-biggest coin, when empty;
    3. otherwise the smallest empty square left of the third-biggest coin.
    """
    _require_coins(position, 2)
    if is_terminal(position):
        raise ValueError(f"terminal position {position} has no moves")
    if is_p_position_normal(position):
        raise ValueError(f"{position} is already losing for the mover; no winning move")
    squares = position.squares
    k = len(squares)
    biggest, second = squares[-1], squares[-2]

    above = second + 1
    if above < biggest and (second + k) % 2 == 0:
        return (biggest, above)

    below_is_empty = second - 1 >= 0 and (k == 2 or squares[-3] < second - 1)
    if below_is_empty:
        return (biggest, second - 1)

    # Both simple targets blocked: the third-biggest coin hugs the second-
    # biggest, and parity rules out the square above.  Any empty square left
    # of the third-biggest works; take the smallest for determinism.
    empties = empty_squares_below(position, squares[-3])
    if not empties:
        raise AssertionError(f"unreachable: no target left of {squares[-3]} in {position}")
    return (biggest, empties[0])


def is_p_position_misere(position: Position) -> bool:
    """Losing-to-move test for misere play (k >= 2).

    Misere losing positions are exactly the normal-play value-1 positions:
    an interior-gap packing, or an adjacent top pair with odd parity.
    """
    return has_value_one_normal(position)


def has_value_one_misere(position: Position) -> bool:
    """Value-1 test for misere play (k >= 2).

    Misere value-1 positions are exactly the normal-play losing ones:
    adjacent top pair with even parity.  This includes every terminal
    position, whose misere value is 1 by definition.
    """
    return is_p_position_normal(position)


def closed_form_value(position: Position) -> ValueClass:
    """Best classification the closed forms give for normal Max-Welter play."""
    _require_coins(position, 2)
    if is_p_position_normal(position):
        return ValueClass(ValueKind.ZERO, 0)
    if has_value_one_normal(position):
        return ValueClass(ValueKind.ONE, 1)
    exact = corollary_value(position) if len(position) >= 3 else None
    return ValueClass(ValueKind.AT_LEAST_TWO, exact)

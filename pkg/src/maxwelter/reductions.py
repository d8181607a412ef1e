"""Value-preserving position simplifications for normal Max-Welter play.

Two rewrite rules shrink a position without changing its game value:

* ``drop_small_coin`` -- when the smallest coin can never move again (its
  index is at most k-1, so the squares on its left can never all empty out),
  delete it and slide the rest one square left.
* ``replace_prefix`` -- when some coin sits immediately left of its neighbour
  and at least as far right as its rank, everything left of that pair is
  interchangeable: any strictly increasing replacement prefix of admissible
  length yields the same value.

``canonicalize`` drives both rules to a fixpoint.  The guarantees are for the
normal convention only; misere preservation is not claimed and is probed
empirically by the harness as an exploratory report.
"""

from __future__ import annotations

from typing import Sequence

from .core import Position


class HypothesisError(ValueError):
    """A reduction was applied outside its hypothesis; names the failed condition."""


def drop_small_coin(position: Position) -> Position | None:
    """Delete an immovable smallest coin, shifting the remainder left by one.

    Applies when the smallest coin's index is at most k-1 (k >= 3 coins
    required).  Returns the reduced position, or None when the rule does not
    apply.  The reduced position has the same normal-play value.
    """
    if len(position) < 3:
        raise HypothesisError(f"drop_small_coin needs k >= 3 coins, got {len(position)}")
    squares = position.squares
    if squares[0] > len(squares) - 1:
        return None
    return Position(s - 1 for s in squares[1:])


def replace_prefix(position: Position, anchor_index: int, new_prefix: Sequence[int]) -> Position:
    """Swap everything left of an adjacent coin pair for ``new_prefix``.

    ``anchor_index`` is 1-based: coin a_i must satisfy a_i >= i and sit
    immediately left of coin a_{i+1}.  The replacement prefix must be strictly
    increasing, stay below a_i, have length j < a_i, and j + i - 1 must be
    even.  The result keeps the suffix a_i..a_k.

    The rewrite is claimed to preserve the normal-play value on this whole
    hypothesis domain, and provably does when the prefix does not grow
    (j <= i - 1), which covers every use ``canonicalize`` makes of it.  For
    grown prefixes the claim fails on boundary cases -- (3,4,6,8) with
    anchor 1 and prefix (0,1) is the smallest -- because a replacement can
    complete a packed run whose value is pinned by the interior-gap rule.
    The verification suite checks the full claim against the oracle and
    reports exactly those mismatches.
    """
    squares = position.squares
    k = len(squares)
    if k < 3:
        raise HypothesisError(f"replace_prefix needs k >= 3 coins, got {k}")
    if not 1 <= anchor_index <= k - 1:
        raise HypothesisError(f"anchor index {anchor_index} outside 1..{k - 1}")
    anchor = squares[anchor_index - 1]
    if anchor < anchor_index:
        raise HypothesisError(f"anchor coin {anchor} is left of its rank {anchor_index}")
    if anchor + 1 != squares[anchor_index]:
        raise HypothesisError(
            f"coin after anchor is {squares[anchor_index]}, not adjacent to {anchor}"
        )
    prefix = tuple(new_prefix)
    for lo, hi in zip(prefix, prefix[1:]):
        if lo >= hi:
            raise HypothesisError(f"replacement prefix {prefix} is not strictly increasing")
    if prefix and prefix[0] < 0:
        raise HypothesisError(f"replacement prefix {prefix} leaves the strip")
    if prefix and prefix[-1] >= anchor:
        raise HypothesisError(f"replacement prefix {prefix} reaches the anchor coin {anchor}")
    if len(prefix) >= anchor:
        raise HypothesisError(f"replacement length {len(prefix)} is not below anchor {anchor}")
    if (len(prefix) + anchor_index - 1) % 2 != 0:
        raise HypothesisError(
            f"length {len(prefix)} plus anchor index {anchor_index} minus 1 is odd"
        )
    return Position(prefix + squares[anchor_index - 1 :])


def _best_suffix_cut(squares: tuple[int, ...]) -> int | None:
    # Largest odd 1-based index i > 1 where the empty-prefix rewrite applies;
    # i == 1 would be the identity rewrite, so it never counts as progress.
    k = len(squares)
    best = None
    for i in range(1, k):  # 1-based anchor, needs a coin after it
        if i % 2 == 1 and i > 1 and squares[i - 1] >= i and squares[i - 1] + 1 == squares[i]:
            best = i
    return best


def canonicalize(position: Position) -> Position:
    """Apply the reductions to a fixpoint, smallest-coin deletion first.

    Every step removes at least one coin, so this terminates.  The result has
    the same normal-play value as the input and is itself irreducible.
    """
    current = position
    while len(current) >= 3:
        dropped = drop_small_coin(current)
        if dropped is not None:
            current = dropped
            continue
        cut = _best_suffix_cut(current.squares)
        if cut is not None:
            current = replace_prefix(current, cut, ())
            continue
        break
    return current

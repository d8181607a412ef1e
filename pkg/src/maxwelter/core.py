"""Positions, rulesets, and move generation for coin games on a semi-infinite strip.

The board is a one-way strip of squares numbered 0, 1, 2, ... with at most one
coin per square.  A move takes one coin to an empty square strictly to its
left; jumping over other coins is allowed.  Two rulesets are supported:

* ``Ruleset.MAX_WELTER`` -- only the coin on the largest occupied square may move.
* ``Ruleset.WELTER``     -- any coin may move.

Under both rulesets play ends exactly when the coins are packed into squares
0..k-1, at which point no coin has an empty square on its left.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class InvalidPositionError(ValueError):
    """Raised when a square sequence cannot form a legal position."""


class IllegalMoveError(ValueError):
    """Raised when a requested move is not legal in the given position."""


class Ruleset(str, Enum):
    MAX_WELTER = "max-welter"
    WELTER = "welter"


class Convention(str, Enum):
    NORMAL = "normal"    # last mover wins
    MISERE = "misere"    # last mover loses


@dataclass(frozen=True, order=True)
class Position:
    """A strictly increasing tuple of occupied square indices (k >= 1).

    Input squares may arrive in any order; the constructor sorts them.
    Duplicates and negative indices are rejected.
    """

    squares: tuple[int, ...]

    def __init__(self, squares: Iterable[int]):
        ordered = tuple(sorted(squares))
        if not ordered:
            raise InvalidPositionError("a position needs at least one coin")
        for s in ordered:
            if not isinstance(s, int) or isinstance(s, bool):
                raise InvalidPositionError(f"square index {s!r} is not an integer")
            if s < 0:
                raise InvalidPositionError(f"square index {s} is negative")
        for lo, hi in zip(ordered, ordered[1:]):
            if lo == hi:
                raise InvalidPositionError(f"square {lo} occupied twice")
        object.__setattr__(self, "squares", ordered)

    @classmethod
    def parse(cls, text: str) -> "Position":
        """Parse the textual syntax used everywhere: comma-separated integers."""
        parts = [p.strip() for p in text.split(",")]
        try:
            return cls(int(p) for p in parts if p != "")
        except ValueError as exc:
            if isinstance(exc, InvalidPositionError):
                raise
            raise InvalidPositionError(f"cannot parse position {text!r}") from exc

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.squares)

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self) -> Iterator[int]:
        return iter(self.squares)

    def __contains__(self, square: int) -> bool:
        return square in set(self.squares)

    @property
    def biggest(self) -> int:
        return self.squares[-1]

    def shift(self, offset: int) -> "Position":
        """Translate every coin right by ``offset`` (>= 0, or left if all stay >= 0)."""
        return Position(s + offset for s in self.squares)

    def replace(self, origin: int, target: int) -> "Position":
        occupied = set(self.squares)
        occupied.discard(origin)
        occupied.add(target)
        return Position(occupied)


def empty_squares_below(position: Position, square: int) -> list[int]:
    """All unoccupied squares j with 0 <= j < square, ascending."""
    occupied = set(position.squares)
    return [j for j in range(square) if j not in occupied]


def legal_moves(position: Position, ruleset: Ruleset = Ruleset.MAX_WELTER) -> list[tuple[int, int]]:
    """Every legal (origin, target) pair, targets ascending per origin.

    Max-Welter restricts the origin to the largest occupied square; classical
    Welter allows any coin.  There is no adjacency constraint: a coin may jump
    over others to any empty square on its left.
    """
    occupied = set(position.squares)
    if ruleset is Ruleset.MAX_WELTER:
        origins: tuple[int, ...] = (position.biggest,)
    else:
        origins = position.squares
    moves = []
    for origin in origins:
        for target in range(origin):
            if target not in occupied:
                moves.append((origin, target))
    return moves


def apply_move(position: Position, origin: int, target: int) -> Position:
    """Move the coin on ``origin`` to the empty square ``target`` on its left."""
    occupied = set(position.squares)
    if origin not in occupied:
        raise IllegalMoveError(f"no coin on square {origin}")
    if target in occupied:
        raise IllegalMoveError(f"square {target} is already occupied")
    if target >= origin:
        raise IllegalMoveError(f"target {target} is not left of origin {origin}")
    if target < 0:
        raise IllegalMoveError(f"target {target} is off the strip")
    return position.replace(origin, target)


def is_terminal(position: Position, ruleset: Ruleset = Ruleset.MAX_WELTER) -> bool:
    """True iff no move is available, i.e. the coins fill squares 0..k-1.

    Terminality does not depend on the ruleset: the packed prefix blocks every
    coin, and any other position leaves an empty square under the biggest coin.
    """
    return position.biggest == len(position) - 1

"""Brute-force Sprague-Grundy oracle with memoization.

Values are defined recursively over the game DAG: under the normal convention
the terminal position has value 0 and every other position takes the mex of
its successors' values.  Under the misere convention (last mover loses) the
terminal position is assigned value 1 by definition -- it gains a single edge
to an appended sink -- and the recursion is otherwise unchanged.

The oracle is exhaustive and convention/ruleset agnostic; every closed-form
classifier in this package is validated against it.
"""

from __future__ import annotations

import threading
from bisect import bisect_left
from enum import Enum
from typing import Iterable

from .core import Convention, Position, Ruleset, apply_move, is_terminal, legal_moves

# Positions whose squares all fit below this bound are memo-keyed by bitmask;
# larger ones fall back to the tuple of squares.
_MASK_LIMIT = 128

DEFAULT_MEMO_BUDGET = 10_000_000


class MemoBudgetExceededError(RuntimeError):
    """The reachable sub-DAG outgrew the configured memo-entry budget."""


class TerminalPositionError(ValueError):
    """An operation that needs a movable position was given a terminal one."""


class Outcome(str, Enum):
    P = "P"    # previous player wins: the player to move loses
    N = "N"    # next player (the one to move) wins


def mex(values: Iterable[int]) -> int:
    """Minimum excludant: the smallest nonnegative integer not in ``values``."""
    present = set(values)
    candidate = 0
    while candidate in present:
        candidate += 1
    return candidate


def _key(squares: tuple[int, ...]):
    if squares[-1] < _MASK_LIMIT:
        packed = 0
        for s in squares:
            packed |= 1 << s
        return packed
    return squares


def _successors(squares: tuple[int, ...], ruleset: Ruleset) -> list[tuple[int, ...]]:
    occupied = set(squares)
    movers = squares[-1:] if ruleset is Ruleset.MAX_WELTER else squares
    out = []
    for origin in movers:
        rest = tuple(s for s in squares if s != origin)
        for target in range(origin):
            if target not in occupied:
                at = bisect_left(rest, target)
                out.append(rest[:at] + (target,) + rest[at:])
    return out


class GrundyOracle:
    """Memoized game-value oracle, safe for concurrent use.

    One value table is kept per (ruleset, convention) pair.  Evaluation uses
    an explicit work stack, so long single-coin chains such as (0, m) do not
    hit the interpreter recursion limit.  The total number of memo entries is
    capped by ``memo_budget``; exceeding it raises rather than truncating.
    """

    def __init__(self, memo_budget: int = DEFAULT_MEMO_BUDGET):
        self._budget = memo_budget
        self._tables: dict[tuple[Ruleset, Convention], dict] = {}
        self._entries = 0
        self._lock = threading.RLock()

    @property
    def memo_size(self) -> int:
        return self._entries

    def grundy(
        self,
        position: Position,
        ruleset: Ruleset = Ruleset.MAX_WELTER,
        convention: Convention = Convention.NORMAL,
    ) -> int:
        squares = position.squares
        table = self._tables.get((ruleset, convention))
        if table is not None:
            # Lock-free fast path: table entries are write-once, so a hit is final.
            cached = table.get(_key(squares))
            if cached is not None:
                return cached
        with self._lock:
            table = self._tables.setdefault((ruleset, convention), {})
            self._evaluate(squares, table, ruleset, convention)
            return table[_key(squares)]

    def outcome(
        self,
        position: Position,
        ruleset: Ruleset = Ruleset.MAX_WELTER,
        convention: Convention = Convention.NORMAL,
    ) -> Outcome:
        return Outcome.P if self.grundy(position, ruleset, convention) == 0 else Outcome.N

    def optimal_moves(
        self,
        position: Position,
        ruleset: Ruleset = Ruleset.MAX_WELTER,
        convention: Convention = Convention.NORMAL,
    ) -> list[tuple[int, int]]:
        """All moves to value-0 successors; empty exactly when the mover is lost."""
        if is_terminal(position, ruleset):
            raise TerminalPositionError(f"no moves from terminal position {position}")
        winning = []
        for origin, target in legal_moves(position, ruleset):
            if self.grundy(apply_move(position, origin, target), ruleset, convention) == 0:
                winning.append((origin, target))
        return winning

    # -- internals ---------------------------------------------------------

    def _store(self, table: dict, key, value: int) -> None:
        if key not in table:
            if self._entries >= self._budget:
                raise MemoBudgetExceededError(
                    f"memo budget of {self._budget} entries exceeded"
                )
            self._entries += 1
        table[key] = value

    def _evaluate(self, squares, table, ruleset, convention) -> None:
        terminal_value = 0 if convention is Convention.NORMAL else 1
        stack: list[tuple[tuple[int, ...], list | None]] = [(squares, None)]
        while stack:
            current, succ = stack.pop()
            key = _key(current)
            if key in table:
                continue
            if succ is None:
                if current[-1] == len(current) - 1:
                    self._store(table, key, terminal_value)
                    continue
                succ = _successors(current, ruleset)
                missing = [s for s in succ if _key(s) not in table]
                if missing:
                    stack.append((current, succ))
                    stack.extend((m, None) for m in missing)
                    continue
            self._store(table, key, mex(table[_key(s)] for s in succ))


_shared = GrundyOracle()


def shared_oracle() -> GrundyOracle:
    """The process-wide oracle instance backing the convenience functions."""
    return _shared


def grundy(
    position: Position,
    ruleset: Ruleset = Ruleset.MAX_WELTER,
    convention: Convention = Convention.NORMAL,
) -> int:
    return _shared.grundy(position, ruleset, convention)


def outcome(
    position: Position,
    ruleset: Ruleset = Ruleset.MAX_WELTER,
    convention: Convention = Convention.NORMAL,
) -> Outcome:
    return _shared.outcome(position, ruleset, convention)


def optimal_moves(
    position: Position,
    ruleset: Ruleset = Ruleset.MAX_WELTER,
    convention: Convention = Convention.NORMAL,
) -> list[tuple[int, int]]:
    return _shared.optimal_moves(position, ruleset, convention)

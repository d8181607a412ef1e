import random
import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maxwelter.core import Convention, Position, Ruleset, apply_move, legal_moves
from maxwelter.grundy import (
    GrundyOracle,
    MemoBudgetExceededError,
    Outcome,
    TerminalPositionError,
    grundy,
    mex,
    optimal_moves,
    outcome,
)

MISERE = Convention.MISERE
WELTER = Ruleset.WELTER


@pytest.mark.parametrize(
    "values,expected",
    [(set(), 0), ({0, 1, 2}, 3), ({0, 2}, 1), ({1, 2, 3}, 0), ({0, 1, 3, 7}, 2)],
)
def test_mex(values, expected):
    assert mex(values) == expected


def test_grundy_frozen_examples():
    assert grundy(Position([1, 2, 5])) == 3
    assert grundy(Position([0, 1]), convention=MISERE) == 1
    assert grundy(Position([1, 2]), ruleset=WELTER) == 2


def test_two_coin_any_ruleset_matches_xor_formula():
    assert grundy(Position([1, 2]), ruleset=WELTER) == (1 ^ 2) - 1


def test_single_gap_chain_values():
    # (0, m) is a bare one-heap game shifted by the stuck coin on square 0.
    for m in range(1, 11):
        assert grundy(Position([0, m])) == m - 1


def test_long_chain_does_not_recurse():
    assert grundy(Position([0, 2000])) == 1999


@pytest.mark.parametrize(
    "squares,convention,expected",
    [
        ((2, 3), Convention.NORMAL, Outcome.P),
        ((3, 4), Convention.NORMAL, Outcome.N),
        ((2, 3), MISERE, Outcome.N),
    ],
)
def test_outcome(squares, convention, expected):
    assert outcome(Position(squares), convention=convention) is expected


def test_optimal_moves_examples():
    assert optimal_moves(Position([1, 2, 5])) == [(5, 0)]
    assert optimal_moves(Position([2, 3])) == []
    assert optimal_moves(Position([2, 3]), convention=MISERE) == [(3, 0), (3, 1)]
    assert optimal_moves(Position([1, 2]), convention=MISERE) == []
    assert optimal_moves(Position([0, 2]), convention=MISERE) == []


def test_optimal_moves_rejects_terminal():
    with pytest.raises(TerminalPositionError):
        optimal_moves(Position([0, 1, 2]))


def test_misere_terminal_is_one_for_any_size():
    for k in (1, 2, 3, 5):
        assert grundy(Position(range(k)), convention=MISERE) == 1


positions = st.builds(
    Position,
    st.lists(st.integers(0, 14), min_size=1, max_size=5, unique=True),
)


@given(positions)
def test_mex_defining_property(position):
    """Every value below grundy(p) appears among successors; grundy(p) itself never."""
    value = grundy(position)
    successor_values = {
        grundy(apply_move(position, o, t)) for o, t in legal_moves(position)
    }
    assert value not in successor_values
    assert set(range(value)) <= successor_values


@given(positions)
def test_misere_swap(position):
    normal = grundy(position)
    misere = grundy(position, convention=MISERE)
    if normal <= 1:
        assert misere == 1 - normal
    else:
        assert misere == normal


def test_determinism_independent_of_warm_up_order():
    targets = [Position([a, b, c]) for a in range(4) for b in range(4, 8) for c in range(8, 12)]
    reference = {p: grundy(p) for p in targets}
    for seed in range(3):
        oracle = GrundyOracle()
        shuffled = targets[:]
        random.Random(seed).shuffle(shuffled)
        assert {p: oracle.grundy(p) for p in shuffled} == reference


def test_thread_safety_and_agreement():
    oracle = GrundyOracle()
    pool = [
        Position([a, b]) for a in range(10) for b in range(a + 1, 14)
    ] + [Position([a, b, c]) for a in range(5) for b in range(5, 9) for c in range(9, 13)]
    reference = {p: grundy(p) for p in pool}
    errors = []

    def worker(seed):
        order = pool[:]
        random.Random(seed).shuffle(order)
        for p in order:
            if oracle.grundy(p) != reference[p]:
                errors.append(p)

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors


def test_memo_budget_is_enforced():
    oracle = GrundyOracle(memo_budget=10)
    with pytest.raises(MemoBudgetExceededError):
        oracle.grundy(Position([3, 7, 11, 15]))


def test_repeated_calls_hit_the_memo():
    oracle = GrundyOracle()
    p = Position([2, 5, 9])
    first = oracle.grundy(p)
    size = oracle.memo_size
    assert oracle.grundy(p) == first
    assert oracle.memo_size == size

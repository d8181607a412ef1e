import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maxwelter.core import Position, Ruleset
from maxwelter.grundy import grundy
from maxwelter.welter import mate, nim_add, pair_value, welter_value


def test_nim_add_basics():
    assert nim_add(2, 5) == 7
    assert nim_add(9, 9) == 0
    assert nim_add(13, 0) == 13


@given(st.integers(0, 1 << 40), st.integers(0, 1 << 40))
def test_nim_add_is_xor(a, b):
    assert nim_add(a, b) == a ^ b
    assert nim_add(nim_add(a, b), b) == a


@pytest.mark.parametrize("a,b,expected", [(1, 2, 2), (0, 2, 1), (0, 1, 0)])
def test_pair_value(a, b, expected):
    assert pair_value(a, b) == expected


def test_pair_value_rejects_equal_squares():
    with pytest.raises(ValueError):
        pair_value(4, 4)


def test_mate_terminal_three_coins():
    result = mate(Position([0, 1, 2]))
    assert result.pairs == ((0, 2),)
    assert result.spinster == 1
    assert result.value == 0


def test_mate_two_coins():
    result = mate(Position([1, 2]))
    assert result.pairs == ((1, 2),)
    assert result.spinster is None
    assert result.value == 2


def test_mate_five_coins():
    result = mate(Position([2, 5, 6, 8, 10]))
    assert result.pairs == ((2, 10), (6, 8))
    assert result.spinster == 5
    assert result.value == 15
    assert grundy(Position([2, 5, 6, 8, 10]), ruleset=Ruleset.WELTER) == 15


def test_mate_partitions_the_squares():
    for squares in [(0, 3, 4, 9), (1, 2, 5, 7, 11), (6,), (0, 8)]:
        result = mate(Position(squares))
        seen = [s for pair in result.pairs for s in pair]
        if result.spinster is not None:
            seen.append(result.spinster)
        assert sorted(seen) == list(squares)
        assert (result.spinster is not None) == (len(squares) % 2 == 1)


@pytest.mark.parametrize(
    "squares,expected",
    [((0, 1), 0), ((1, 2), 2), ((0, 1, 2, 3), 0), ((6,), 6)],
)
def test_welter_value_examples(squares, expected):
    assert welter_value(Position(squares)) == expected


@given(st.lists(st.integers(0, 40), min_size=2, max_size=2, unique=True))
def test_two_coin_value_is_xor_minus_one(squares):
    a, b = squares
    assert welter_value(Position(squares)) == (a ^ b) - 1


def test_welter_value_matches_oracle_small_space():
    for k in (2, 3):
        for squares in itertools.combinations(range(10), k):
            position = Position(squares)
            assert welter_value(position) == grundy(position, ruleset=Ruleset.WELTER), position


def test_tie_break_does_not_change_the_value():
    rng = random.Random(0x5EED)
    for k in (3, 4, 5):
        for squares in itertools.combinations(range(9), k):
            position = Position(squares)
            reference = mate(position).value
            for _ in range(5):
                assert mate(position, rng=rng).value == reference, position

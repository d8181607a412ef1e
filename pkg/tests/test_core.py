import pytest
from hypothesis import given
from hypothesis import strategies as st

from maxwelter.core import (
    IllegalMoveError,
    InvalidPositionError,
    Position,
    Ruleset,
    apply_move,
    empty_squares_below,
    is_terminal,
    legal_moves,
)

positions = st.builds(
    Position,
    st.lists(st.integers(0, 30), min_size=1, max_size=8, unique=True),
)


def test_position_sorts_input():
    assert Position([5, 2, 10, 6, 8]).squares == (2, 5, 6, 8, 10)


def test_position_rejects_duplicates():
    with pytest.raises(InvalidPositionError):
        Position([3, 3])


def test_position_rejects_empty_and_negative():
    with pytest.raises(InvalidPositionError):
        Position([])
    with pytest.raises(InvalidPositionError):
        Position([-1, 2])


def test_position_parse_round_trip():
    p = Position.parse("2,5,6,8,10")
    assert p.squares == (2, 5, 6, 8, 10)
    assert str(p) == "2,5,6,8,10"
    with pytest.raises(InvalidPositionError):
        Position.parse("2,x,5")


@pytest.mark.parametrize(
    "squares,below,expected",
    [
        ((2, 5, 6, 8, 10), 10, [0, 1, 3, 4, 7, 9]),
        ((0, 1, 2), 2, []),
        ((2, 5, 6, 8, 10), 6, [0, 1, 3, 4]),
    ],
)
def test_empty_squares_below(squares, below, expected):
    assert empty_squares_below(Position(squares), below) == expected


def test_legal_moves_max_ruleset():
    moves = legal_moves(Position([2, 5, 6, 8, 10]), Ruleset.MAX_WELTER)
    assert len(moves) == 6
    assert all(origin == 10 for origin, _ in moves)
    assert [target for _, target in moves] == [0, 1, 3, 4, 7, 9]


@pytest.mark.parametrize("k", [1, 2, 3, 5])
@pytest.mark.parametrize("ruleset", list(Ruleset))
def test_packed_prefix_has_no_moves(k, ruleset):
    assert legal_moves(Position(range(k)), ruleset) == []


def test_legal_moves_any_coin_ruleset():
    assert set(legal_moves(Position([1, 2]), Ruleset.WELTER)) == {(1, 0), (2, 0)}


@pytest.mark.parametrize(
    "squares,origin,target,expected",
    [
        ((1, 2, 5), 5, 0, (0, 1, 2)),
        ((3, 4), 4, 2, (2, 3)),
        ((0, 2), 2, 1, (0, 1)),
    ],
)
def test_apply_move(squares, origin, target, expected):
    assert apply_move(Position(squares), origin, target).squares == expected


def test_apply_move_rejects_illegal():
    p = Position([1, 2, 5])
    with pytest.raises(IllegalMoveError):
        apply_move(p, 3, 0)  # no coin on 3
    with pytest.raises(IllegalMoveError):
        apply_move(p, 5, 2)  # occupied target
    with pytest.raises(IllegalMoveError):
        apply_move(p, 2, 4)  # rightward move


@pytest.mark.parametrize(
    "squares,expected",
    [((0, 1, 2), True), ((0, 1, 3), False), ((5,), False), ((0,), True)],
)
def test_is_terminal(squares, expected):
    assert is_terminal(Position(squares)) is expected


@given(positions)
def test_terminal_agrees_across_rulesets(position):
    both = {is_terminal(position, r) for r in Ruleset}
    assert len(both) == 1
    assert both.pop() == (not legal_moves(position, Ruleset.WELTER))


@given(positions)
def test_max_ruleset_move_count(position):
    moves = legal_moves(position, Ruleset.MAX_WELTER)
    assert len(moves) == position.biggest - (len(position) - 1)


@given(positions, st.randoms())
def test_apply_move_keeps_position_valid(position, rng):
    moves = legal_moves(position, Ruleset.WELTER)
    if not moves:
        return
    origin, target = rng.choice(moves)
    moved = apply_move(position, origin, target)
    assert len(moved) == len(position)
    assert all(a < b for a, b in zip(moved.squares, moved.squares[1:]))

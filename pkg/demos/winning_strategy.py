#!/usr/bin/env python3
"""Walk through the closed-form winning strategy for Max-Welter.

A position loses for the player to move exactly when its two biggest coins
are adjacent and (second_biggest + coin_count) is even.  From any other
position, a winning move can be written down directly -- no search -- and we
check it against the brute-force oracle as we go.
"""

from maxwelter import (
    Position,
    grundy,
    is_p_position_normal,
    optimal_moves,
    outcome,
    winning_move_closed_form,
)


def describe(squares):
    position = Position(squares)
    value = grundy(position)
    verdict = outcome(position)
    print(f"\nposition {position}:  value={value}  outcome={verdict.value}")
    if is_p_position_normal(position):
        print("  losing for the mover: adjacent top pair, even parity")
        print(f"  (oracle agrees: no winning moves -> {optimal_moves(position)})")
        return
    origin, target = winning_move_closed_form(position)
    landed = position.replace(origin, target)
    print(f"  closed-form winning move: {origin} -> {target}, landing on {landed}")
    print(f"  landed position is losing for the opponent: {is_p_position_normal(landed)}")
    print(f"  oracle's winning moves: {optimal_moves(position)}")


def main():
    print("The biggest coin is the only one that may move.")
    for squares in [(2, 3), (1, 2, 5), (0, 4), (3, 4), (2, 5, 6, 8, 10)]:
        describe(squares)

    print("\nScoreboard of 2-coin positions (rows a, cols b, P = losing to move):")
    print("      " + " ".join(f"b={b}" for b in range(1, 8)))
    for a in range(0, 7):
        row = []
        for b in range(1, 8):
            if b <= a:
                row.append("  . ")
            else:
                row.append("  P " if is_p_position_normal(Position([a, b])) else "  - ")
        print(f"a={a}  " + " ".join(row))


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""The classical Welter function (any coin may move), computed by mating.

Pairs of squares congruent modulo the highest possible power of 2 are mated
first; each pair contributes (a XOR b) - 1, an odd leftover contributes
itself, and everything combines by XOR.  The brute-force oracle on the
any-coin ruleset confirms every value.
"""

from maxwelter import Position, Ruleset, grundy, mate, welter_value


def main():
    for squares in [(1, 2), (0, 1, 2), (2, 5, 6, 8, 10), (0, 3, 5, 6), (4, 7, 9, 12, 13)]:
        position = Position(squares)
        result = mate(position)
        parts = [f"[{a}|{b}]=({a}^{b})-1={(a ^ b) - 1}" for a, b in result.pairs]
        if result.spinster is not None:
            parts.append(f"spinster {result.spinster}")
        oracle = grundy(position, ruleset=Ruleset.WELTER)
        print(f"{str(position):14} -> {' xor '.join(parts)}")
        print(f"{'':14}    mating value {result.value}, oracle {oracle}")
        assert result.value == oracle == welter_value(position)

    print("\ntwo-coin sanity: value of (a, b) is (a xor b) - 1")
    for a, b in [(0, 1), (1, 2), (3, 12), (5, 9)]:
        print(f"  ({a},{b}) -> {welter_value(Position([a, b]))}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Shrinking positions without changing their value -- and where that breaks.

Two rewrite rules simplify Max-Welter positions under normal play:

* a smallest coin that can never move again (index <= k-1) can be deleted,
  sliding the rest one square left;
* everything left of an adjacent pair (a_i, a_i + 1) with a_i >= i is
  interchangeable with other prefixes of compatible parity.

The second rule is only trustworthy when the prefix does not grow: growing
it can complete a packed run whose value is pinned at 1, and the equality
fails.  This script shows both the good cases and the smallest bad one.
"""

from maxwelter import Position, canonicalize, drop_small_coin, grundy, replace_prefix


def show(label, position):
    print(f"  {label:32} {str(position):14} value={grundy(position)}")


def main():
    print("Deleting an immovable smallest coin:")
    for squares in [(0, 2, 5), (0, 1, 5), (1, 2, 5)]:
        p = Position(squares)
        reduced = drop_small_coin(p)
        show("original", p)
        show("after drop", reduced)
        assert grundy(p) == grundy(reduced)

    print("\nPrefix replacement at an adjacent pair (same-size prefixes):")
    base = Position([0, 3, 4, 9])
    show("original (anchor pair 3,4)", base)
    for prefix in [(1,), (2,)]:
        swapped = replace_prefix(base, 2, prefix)
        show(f"prefix -> {prefix}", swapped)
        assert grundy(swapped) == grundy(base)

    print("\nCutting the whole prefix at an odd anchor:")
    tail = replace_prefix(Position([0, 2, 3, 4, 8]), 3, ())
    show("original", Position([0, 2, 3, 4, 8]))
    show("suffix only", tail)

    print("\nCanonical forms (both rules to a fixpoint):")
    for squares in [(0, 1, 5), (5, 6, 7, 8, 9), (3, 4, 8), (0, 2, 5, 6, 11)]:
        p = Position(squares)
        show(f"canonicalize {p}", canonicalize(p))
        assert grundy(canonicalize(p)) == grundy(p)

    print("\nThe boundary where grown prefixes betray the rule:")
    trap = Position([3, 4, 6, 8])
    grown = replace_prefix(trap, 1, (0, 1))
    show("original", trap)
    show("grown prefix (0,1)", grown)
    print(f"  values differ: {grundy(trap)} vs {grundy(grown)} -- the grown prefix")
    print("  lets a successor complete the packed run (0,1,2,3,4,6), a value-1")
    print("  position, which the parity argument behind the rule cannot see.")


if __name__ == "__main__":
    main()

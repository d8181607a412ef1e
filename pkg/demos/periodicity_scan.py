#!/usr/bin/env python3
"""Regularities of Max-Welter values under rightward translation.

Three experiments:

1. slide only the biggest coin rightward: after a bounded offset the value
   grows by exactly 1 per square (a proved law -- we locate the offset);
2. translate a whole position rightward: for suitable shapes the value does
   not change at all (proved), and scans suggest eventual period 1 broadly;
3. translate arithmetic progressions: scans suggest eventual periodicity
   with period dividing twice the step.
"""

from maxwelter import (
    Position,
    find_additive_shift,
    grundy,
    scan_arithmetic_progression,
    scan_record,
    scan_translation_period,
)


def main():
    print("1. sliding the biggest coin from (0,2,5)'s prefix (0,2):")
    prefix, start = Position([0, 2]), 5
    shift, law = find_additive_shift(prefix, start, horizon=30)
    print(f"   smallest offset with value {start}: n={shift} (bounded by {start})")
    row = [grundy(Position(prefix.squares + (start + i,))) for i in range(1, 16)]
    print(f"   values at offsets 1..15: {row}")
    print(f"   law verified through horizon 30: {law.verified_at_horizon}")

    print("\n2. translating whole positions:")
    for squares in [(0, 2, 5), (0, 1, 4)]:
        p = Position(squares)
        seq = [grundy(p.shift(i)) for i in range(16)]
        report = scan_translation_period(p, horizon=100)
        print(f"   {p} + i: {seq} ...")
        print("   " + scan_record("conj6.1", {"squares": p}, report))

    print("\n3. translating arithmetic progressions (a, a+m, ..., a+km):")
    for a, m, k in [(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 2, 2)]:
        report = scan_arithmetic_progression(a, m, k, horizon=100)
        print("   " + scan_record("conj6.2", {"a": a, "m": m, "k": k}, report))
    print("   (observed periods divide 2m each time)")


if __name__ == "__main__":
    main()

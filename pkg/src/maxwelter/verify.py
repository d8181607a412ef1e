"""Exhaustive cross-checking of every closed form against the brute-force oracle.

A ``PositionSpace`` enumerates all strictly increasing k-subsets of
{0..max_square} for each k in an inclusive range.  ``run_suite`` applies one
named check to every position in a space and collects *all* counterexamples
(it never stops at the first).  Positions outside a check's hypothesis are
counted as skipped, so vacuous passes stay visible.

Suite identifiers (the CLI accepts these verbatim):

==============  ==============================================================
thm2.1          losing-position classifier == oracle value 0 (normal play)
thm3.1          value-1 classifier == oracle value 1 (normal play)
cor3.2          adjacent-pair exact value == oracle value, when it applies
prop4           value-2 positions have top gap exactly 2 (stated implication)
thm5.1          dropping an immovable smallest coin preserves the value
thm5.2          prefix replacement preserves the value, all admissible prefixes
thm6.1          sliding the top coin becomes value+1-per-square within bound
thm6.2          translation invariance holds whenever its hypothesis does
thm7.1          misere losing-position classifier == misere oracle value 0
thm7.2          misere value-1 classifier == misere oracle value 1
thm7.4          normal/misere values agree up to a 0<->1 swap
welter-mating   mating value == any-coin-ruleset oracle (+ 2-coin formula)
==============  ==============================================================
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from .closedform import (
    check_value_two_gap,
    corollary_value,
    has_value_one_misere,
    has_value_one_normal,
    is_p_position_misere,
    is_p_position_normal,
)
from .core import Convention, Position, Ruleset
from .grundy import GrundyOracle, shared_oracle
from .periodicity import TheoremViolationError, find_additive_shift
from .reductions import drop_small_coin, replace_prefix
from .welter import pair_value, welter_value

DEFAULT_SEED = 0x5EED
DEFAULT_SAMPLE_CAP = 200


class EmptySpaceError(ValueError):
    """The requested space cannot hold positions of every requested size."""


class UnknownSuiteError(ValueError):
    pass


@dataclass(frozen=True)
class PositionSpace:
    """All strictly increasing k-subsets of {0..max_square}, k_min <= k <= k_max."""

    k_min: int
    k_max: int
    max_square: int

    def __post_init__(self):
        if self.k_min < 1 or self.k_max < self.k_min:
            raise EmptySpaceError(f"bad coin-count range {self.k_min}..{self.k_max}")
        if self.max_square < self.k_max - 1:
            raise EmptySpaceError(
                f"max square {self.max_square} cannot hold {self.k_max} coins"
            )

    @property
    def count(self) -> int:
        return sum(comb(self.max_square + 1, k) for k in range(self.k_min, self.k_max + 1))

    def positions(self) -> Iterator[Position]:
        for k in range(self.k_min, self.k_max + 1):
            for squares in itertools.combinations(range(self.max_square + 1), k):
                yield Position(squares)


def enumerate_positions(space: PositionSpace) -> Iterator[Position]:
    """Deterministic stream of every position in the space, each exactly once."""
    return space.positions()


Counterexample = tuple[Position, object, object]


@dataclass
class SuiteReport:
    suite_id: str
    positions_checked: int = 0
    skipped: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0
    seed: int = DEFAULT_SEED

    @property
    def passed(self) -> bool:
        return not self.counterexamples


@dataclass
class _SuiteContext:
    oracle: GrundyOracle
    seed: int
    sample_cap: int
    horizon: int
    shift_gaps: tuple[int, ...]


# Each suite maps a position to (checked, skipped, failures).
_SuiteFn = Callable[[Position, _SuiteContext], tuple[int, int, list[Counterexample]]]


def _suite_thm21(position, ctx):
    if len(position) < 2:
        return 0, 1, []
    claimed = is_p_position_normal(position)
    actual = ctx.oracle.grundy(position) == 0
    if claimed != actual:
        return 1, 0, [(position, claimed, actual)]
    return 1, 0, []


def _suite_thm31(position, ctx):
    if len(position) < 2:
        return 0, 1, []
    claimed = has_value_one_normal(position)
    actual = ctx.oracle.grundy(position) == 1
    if claimed != actual:
        return 1, 0, [(position, claimed, actual)]
    return 1, 0, []


def _suite_cor32(position, ctx):
    if len(position) < 3:
        return 0, 1, []
    claimed = corollary_value(position)
    if claimed is None:
        return 0, 1, []
    actual = ctx.oracle.grundy(position)
    if claimed != actual:
        return 1, 0, [(position, claimed, actual)]
    return 1, 0, []


def _suite_prop4(position, ctx):
    if len(position) < 3:
        return 0, 1, []
    value = ctx.oracle.grundy(position)
    if not check_value_two_gap(position, value):
        gap = position.squares[-1] - position.squares[-2]
        return 1, 0, [(position, "top gap 2 when value is 2", f"value {value}, gap {gap}")]
    return 1, 0, []


def _suite_thm51(position, ctx):
    if len(position) < 3:
        return 0, 1, []
    reduced = drop_small_coin(position)
    if reduced is None:
        return 0, 1, []
    expected = ctx.oracle.grundy(position)
    actual = ctx.oracle.grundy(reduced)
    if expected != actual:
        return 1, 0, [(position, expected, f"{actual} after dropping to {reduced}")]
    return 1, 0, []


def _admissible_prefix_classes(position: Position) -> list[tuple[int, int]]:
    # (anchor index i, prefix length j) pairs admissible for prefix replacement.
    squares = position.squares
    k = len(squares)
    classes = []
    for i in range(1, k):
        anchor = squares[i - 1]
        if anchor >= i and anchor + 1 == squares[i]:
            for j in range(0, anchor):
                if (j + i - 1) % 2 == 0:
                    classes.append((i, j))
    return classes


def _suite_thm52(position, ctx):
    if len(position) < 3:
        return 0, 1, []
    classes = _admissible_prefix_classes(position)
    if not classes:
        return 0, 1, []
    expected = ctx.oracle.grundy(position)
    failures = []

    def check(anchor_index: int, prefix: tuple[int, ...]):
        replaced = replace_prefix(position, anchor_index, prefix)
        actual = ctx.oracle.grundy(replaced)
        if actual != expected:
            failures.append((position, expected, f"{actual} via i={anchor_index} b={prefix}"))

    total = sum(comb(position.squares[i - 1], j) for i, j in classes)
    if total <= ctx.sample_cap:
        for i, j in classes:
            for prefix in itertools.combinations(range(position.squares[i - 1]), j):
                check(i, prefix)
    else:
        # Deterministic weighted sampling (with replacement) of admissible
        # (anchor, prefix) combinations; the seed is part of the report.
        rng = random.Random(f"{ctx.seed}:{position}")
        weights = [comb(position.squares[i - 1], j) for i, j in classes]
        for _ in range(ctx.sample_cap):
            i, j = rng.choices(classes, weights=weights)[0]
            prefix = tuple(sorted(rng.sample(range(position.squares[i - 1]), j)))
            check(i, prefix)
    return 1, 0, failures


def _suite_thm61(position, ctx):
    # Enumerated positions act as the fixed prefix; the biggest coin is
    # appended at each configured gap and slid rightward.
    checked = 0
    failures = []
    for gap in ctx.shift_gaps:
        last = position.biggest + gap
        checked += 1
        try:
            shift, report = find_additive_shift(position, last, ctx.horizon, ctx.oracle)
        except TheoremViolationError as exc:
            failures.append((position, f"shift <= {last} for gap {gap}", str(exc)))
            continue
        if report.counterexample is not None:
            failures.append(
                (
                    position,
                    f"value {last + report.counterexample} at offset {report.counterexample}",
                    f"law broke at offset {report.counterexample} (gap {gap}, shift {shift})",
                )
            )
    return checked, 0, failures


def _suite_thm62(position, ctx):
    if len(position) < 3:
        return 0, 1, []
    from .periodicity import check_translation_invariance

    result = check_translation_invariance(position, ctx.oracle)
    if result is None:
        return 0, 1, []
    if result is False:
        return 1, 0, [(position, "translation-invariant value", "value changed")]
    return 1, 0, []


def _suite_thm71(position, ctx):
    if len(position) < 2:
        return 0, 1, []
    claimed = is_p_position_misere(position)
    actual = ctx.oracle.grundy(position, convention=Convention.MISERE) == 0
    if claimed != actual:
        return 1, 0, [(position, claimed, actual)]
    return 1, 0, []


def _suite_thm72(position, ctx):
    if len(position) < 2:
        return 0, 1, []
    claimed = has_value_one_misere(position)
    actual = ctx.oracle.grundy(position, convention=Convention.MISERE) == 1
    if claimed != actual:
        return 1, 0, [(position, claimed, actual)]
    return 1, 0, []


def _suite_thm74(position, ctx):
    normal = ctx.oracle.grundy(position)
    misere = ctx.oracle.grundy(position, convention=Convention.MISERE)
    swapped = {0: 1, 1: 0}.get(normal, normal)
    if misere != swapped:
        return 1, 0, [(position, f"misere value {swapped}", f"misere value {misere}")]
    return 1, 0, []


def _suite_welter_mating(position, ctx):
    claimed = welter_value(position)
    actual = ctx.oracle.grundy(position, ruleset=Ruleset.WELTER)
    failures = []
    if claimed != actual:
        failures.append((position, actual, claimed))
    if len(position) == 2:
        a, b = position.squares
        if claimed != pair_value(a, b):
            failures.append((position, pair_value(a, b), claimed))
    return 1, 0, failures


_SUITES: dict[str, _SuiteFn] = {
    "thm2.1": _suite_thm21,
    "thm3.1": _suite_thm31,
    "cor3.2": _suite_cor32,
    "prop4": _suite_prop4,
    "thm5.1": _suite_thm51,
    "thm5.2": _suite_thm52,
    "thm6.1": _suite_thm61,
    "thm6.2": _suite_thm62,
    "thm7.1": _suite_thm71,
    "thm7.2": _suite_thm72,
    "thm7.4": _suite_thm74,
    "welter-mating": _suite_welter_mating,
}

SUITE_IDS = tuple(_SUITES)


def run_suite(
    suite_id: str,
    space: PositionSpace,
    oracle: GrundyOracle | None = None,
    seed: int = DEFAULT_SEED,
    sample_cap: int = DEFAULT_SAMPLE_CAP,
    horizon: int = 50,
    shift_gaps: tuple[int, ...] = (1, 2, 3, 4),
    jobs: int = 1,
) -> SuiteReport:
    """Run one named suite over every position in the space.

    All counterexamples are collected and returned sorted by position, so the
    report is deterministic for a given (suite_id, space, seed) regardless of
    the worker count.
    """
    try:
        suite = _SUITES[suite_id]
    except KeyError:
        raise UnknownSuiteError(
            f"unknown suite {suite_id!r}; known: {', '.join(SUITE_IDS)}"
        ) from None
    oracle = oracle or shared_oracle()
    ctx = _SuiteContext(
        oracle=oracle,
        seed=seed,
        sample_cap=sample_cap,
        horizon=horizon,
        shift_gaps=tuple(shift_gaps),
    )
    report = SuiteReport(suite_id=suite_id, seed=seed)
    started = time.perf_counter()

    def evaluate(position: Position):
        return suite(position, ctx)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(evaluate, enumerate_positions(space)))
    else:
        results = [evaluate(p) for p in enumerate_positions(space)]

    for checked, skipped, failures in results:
        report.positions_checked += checked
        report.skipped += skipped
        report.counterexamples.extend(failures)
    report.counterexamples.sort(key=lambda entry: (entry[0], str(entry[1]), str(entry[2])))
    report.elapsed = time.perf_counter() - started
    return report


def format_suite_report(report: SuiteReport, space: PositionSpace | None = None) -> str:
    """Structured text for one suite run: a header line plus counterexample lines."""
    parts = [f"suite={report.suite_id}"]
    if space is not None:
        parts.append(f"k={space.k_min}..{space.k_max}")
        parts.append(f"max_square={space.max_square}")
    parts.append(f"checked={report.positions_checked}")
    parts.append(f"skipped={report.skipped}")
    parts.append(f"counterexamples={len(report.counterexamples)}")
    parts.append(f"elapsed={report.elapsed:.2f}s")
    parts.append(f"seed={report.seed:#x}")
    lines = [" ".join(parts)]
    for position, expected, actual in report.counterexamples:
        lines.append(
            f"counterexample suite={report.suite_id} position={position} "
            f"expected={expected} actual={actual}"
        )
    return "\n".join(lines)


def misere_reduction_report(
    space: PositionSpace, oracle: GrundyOracle | None = None
) -> SuiteReport:
    """Exploratory (non-acceptance) check: do the reductions preserve misere values?

    The reduction rules are only guaranteed for normal play; this report
    records how they fare under the misere convention.
    """
    oracle = oracle or shared_oracle()
    report = SuiteReport(suite_id="reduce-misere-exploratory")
    started = time.perf_counter()
    for position in enumerate_positions(space):
        if len(position) < 3:
            report.skipped += 1
            continue
        reduced = drop_small_coin(position)
        if reduced is None:
            report.skipped += 1
            continue
        report.positions_checked += 1
        expected = oracle.grundy(position, convention=Convention.MISERE)
        actual = oracle.grundy(reduced, convention=Convention.MISERE)
        if expected != actual:
            report.counterexamples.append((position, expected, actual))
    report.elapsed = time.perf_counter() - started
    return report

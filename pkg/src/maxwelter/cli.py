"""Command-line front door: analysis, verification, conjecture scans, serving.

Exit status: 0 on success, 1 when a verification suite finds counterexamples,
2 on usage errors.  Square lists are comma-separated decimals; unsorted input
is sorted with a warning, duplicates are a hard error.
"""

from __future__ import annotations

import argparse
import os
import sys

from .closedform import (
    _has_single_interior_gap,
    has_value_one_normal,
    is_p_position_normal,
    winning_move_closed_form,
)
from .core import Convention, InvalidPositionError, Position, Ruleset, is_terminal
from .grundy import optimal_moves, outcome, shared_oracle
from .periodicity import (
    scan_arithmetic_progression,
    scan_record,
    scan_translation_period,
)
from .reductions import canonicalize
from .verify import (
    DEFAULT_SAMPLE_CAP,
    DEFAULT_SEED,
    SUITE_IDS,
    PositionSpace,
    format_suite_report,
    run_suite,
)
from .welter import welter_value


def _parse_squares(text: str, parser: argparse.ArgumentParser) -> Position:
    try:
        raw = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        parser.error(f"cannot parse squares {text!r}: expected comma-separated integers")
    if len(raw) != len(set(raw)):
        parser.error(f"duplicate squares in {text!r}")
    if sorted(raw) != raw:
        print(
            f"warning: squares {text} were unsorted; using {','.join(map(str, sorted(raw)))}",
            file=sys.stderr,
        )
    try:
        return Position(raw)
    except InvalidPositionError as exc:
        parser.error(str(exc))


def _parse_k_range(text: str, parser: argparse.ArgumentParser) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError:
        parser.error(f"cannot parse coin-count range {text!r}: expected A..B")


def _classify_rule(position: Position) -> str:
    if len(position) < 2:
        return "none"
    if is_p_position_normal(position):
        return "thm2.1"
    if _has_single_interior_gap(position):
        return "thm3.1a"
    if has_value_one_normal(position):
        return "thm3.1b"
    return "none"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxwelter",
        description="Exact solver and verification lab for the Max-Welter coin game.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def add_squares_command(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("squares", help="comma-separated square indices, e.g. 2,5,6,8,10")
        return sub

    sub = add_squares_command("grundy", "print the game value of a position")
    sub.add_argument("--ruleset", choices=[r.value for r in Ruleset], default=Ruleset.MAX_WELTER.value)
    sub.add_argument(
        "--convention", choices=[c.value for c in Convention], default=Convention.NORMAL.value
    )

    add_squares_command("classify", "value, outcome, and matching closed-form rule")
    add_squares_command("strategy", "winning move for the position, if any")
    add_squares_command("reduce", "canonical value-equivalent form of the position")
    add_squares_command("welter", "classical any-coin-ruleset value, by mating")

    sub = commands.add_parser("verify", help="cross-check closed forms against the oracle")
    sub.add_argument(
        "--suite",
        required=True,
        help=f"suite id, comma list, or 'all'; known: {', '.join(SUITE_IDS)}",
    )
    sub.add_argument("--k", required=True, metavar="A..B", help="coin-count range, e.g. 2..5")
    sub.add_argument("--max-square", type=int, required=True)
    sub.add_argument("--out", help="also write the report to this file")
    sub.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED)
    sub.add_argument("--sample-cap", type=int, default=DEFAULT_SAMPLE_CAP)
    sub.add_argument("--horizon", type=int, default=50, help="law window for sliding-coin checks")
    sub.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    sub = commands.add_parser("scan", help="empirical periodicity scans")
    sub.add_argument("--conjecture", choices=["6.1", "6.2"], required=True)
    sub.add_argument("--squares", help="starting position for --conjecture 6.1")
    sub.add_argument("--a", type=int, help="base square for --conjecture 6.2")
    sub.add_argument("--m", type=int, help="progression step for --conjecture 6.2")
    sub.add_argument("--k", type=int, help="number of steps for --conjecture 6.2")
    sub.add_argument("--horizon", type=int, default=100)

    sub = commands.add_parser("serve", help="run the HTTP API and web UI")
    sub.add_argument("--port", type=int, default=8080)
    sub.add_argument("--host", default="127.0.0.1")
    sub.add_argument("--static-dir", help="directory with the built web UI")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    if args.command == "grundy":
        position = _parse_squares(args.squares, parser)
        value = shared_oracle().grundy(position, Ruleset(args.ruleset), Convention(args.convention))
        print(value)
        return 0

    if args.command == "classify":
        position = _parse_squares(args.squares, parser)
        value = shared_oracle().grundy(position)
        verdict = outcome(position)
        print(f"grundy={value} outcome={verdict.value} rule={_classify_rule(position)}")
        return 0

    if args.command == "strategy":
        position = _parse_squares(args.squares, parser)
        if is_terminal(position):
            print("terminal")
            return 0
        if len(position) >= 2 and not is_p_position_normal(position):
            origin, target = winning_move_closed_form(position)
            print(f"from={origin} to={target}")
            return 0
        winning = optimal_moves(position)
        if winning:
            origin, target = winning[0]
            print(f"from={origin} to={target}")
        else:
            print("p-position (every move loses)")
        return 0

    if args.command == "reduce":
        position = _parse_squares(args.squares, parser)
        print(canonicalize(position))
        return 0

    if args.command == "welter":
        position = _parse_squares(args.squares, parser)
        print(welter_value(position))
        return 0

    if args.command == "verify":
        k_min, k_max = _parse_k_range(args.k, parser)
        try:
            space = PositionSpace(k_min, k_max, args.max_square)
        except ValueError as exc:
            parser.error(str(exc))
        if args.suite == "all":
            suites = list(SUITE_IDS)
        else:
            suites = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [s for s in suites if s not in SUITE_IDS]
        if unknown:
            parser.error(f"unknown suite(s): {', '.join(unknown)}")
        failures = 0
        chunks = []
        for suite_id in suites:
            report = run_suite(
                suite_id,
                space,
                seed=args.seed,
                sample_cap=args.sample_cap,
                horizon=args.horizon,
                jobs=args.jobs,
            )
            text = format_suite_report(report, space)
            print(text)
            chunks.append(text)
            failures += len(report.counterexamples)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write("\n".join(chunks) + "\n")
        return 1 if failures else 0

    if args.command == "scan":
        if args.conjecture == "6.1":
            if not args.squares:
                parser.error("--conjecture 6.1 needs --squares")
            position = _parse_squares(args.squares, parser)
            try:
                report = scan_translation_period(position, args.horizon)
            except ValueError as exc:
                parser.error(str(exc))
            print(scan_record("conj6.1", {"squares": position}, report))
        else:
            missing = [name for name in ("a", "m", "k") if getattr(args, name) is None]
            if missing:
                parser.error(f"--conjecture 6.2 needs --{' --'.join(missing)}")
            try:
                report = scan_arithmetic_progression(args.a, args.m, args.k, args.horizon)
            except ValueError as exc:
                parser.error(str(exc))
            print(scan_record("conj6.2", {"a": args.a, "m": args.m, "k": args.k}, report))
        return 0

    if args.command == "serve":
        from .service import serve

        serve(port=args.port, static_dir=args.static_dir, host=args.host)
        return 0

    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())

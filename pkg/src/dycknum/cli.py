"""Command line front end: the ``dyck`` tool.

One subcommand per library capability. Numbers print in decimal unless
--binary asks for the raw binary expansion; inputs are decimal by
default and accept 0b/0x prefixes. Exit status is 0 on success, 1 on
domain errors (and for a failed check), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import islice
from pathlib import Path

from . import __version__, bfile, core, oracle, sequence


def _natural(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        try:
            value = int(text, 0)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {text!r}")
    return value


def _positive(text: str) -> int:
    value = _natural(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {text!r}")
    return value


def _fmt(n: int, binary: bool) -> str:
    return format(n, "b") if binary else str(n)


def _cmd_check(args: argparse.Namespace) -> int:
    suffix = core.violating_suffix(args.number)
    if suffix is None:
        print("yes")
        return 0
    print(f"no (violating suffix {suffix})")
    return 1


def _cmd_succ(args: argparse.Namespace) -> int:
    first = core.successor(args.number)
    for value in islice(sequence.iter_from(first), args.count):
        print(_fmt(value, args.binary))
    return 0


def _cmd_range(args: argparse.Namespace) -> int:
    if args.list:
        line = " ".join(_fmt(d, args.binary) for d in sequence.iter_range(args.k))
        print(line)
        return 0
    stats = sequence.range_stats(args.k)
    print(
        f"range {stats.k}: first={_fmt(stats.first, args.binary)} "
        f"last={_fmt(stats.last, args.binary)} size={stats.size} "
        f"expected={stats.expected} match={'yes' if stats.matches else 'NO'}"
    )
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    start = args.start
    if args.skip_zero and start == 0:
        start = 1
    for value in islice(sequence.iter_from(start), args.count):
        print(_fmt(value, args.binary))
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    if args.to == "word":
        print(core.to_dyck_word(args.number))
    elif args.to == "standard":
        print(_fmt(core.to_standard_code(args.number), args.binary))
    else:  # heights, shown most significant digit first
        profile = core.height_profile(args.number)
        print(" ".join(str(h) for h in reversed(profile)))
    return 0


def _cmd_verify_conjecture(args: argparse.Namespace) -> int:
    all_match = True
    for k in range(1, args.max_range + 1):
        stats = sequence.range_stats(k)
        verdict = "match" if stats.matches else "MISMATCH"
        print(f"range {k}: size={stats.size} expected={stats.expected} {verdict}")
        all_match = all_match and stats.matches
    if all_match:
        print(f"conjecture holds for ranges 1..{args.max_range}")
        return 0
    print("conjecture FAILED; see mismatches above")
    return 1


def _cmd_bfile(args: argparse.Namespace) -> int:
    if args.check is not None:
        if args.count is not None or args.offset is not None:
            args.parser.error("--check cannot be combined with --count/--offset")
        reference = bfile.parse_bfile(Path(args.check).read_text())
        cursor = sequence.SequenceCursor.from_index(reference.offset)
        values = tuple(v for _, v in islice(cursor.pairs(), len(reference)))
        report = bfile.compare(bfile.BFile(reference.offset, values), reference)
        if report.verdict == bfile.MATCH:
            print(f"match: {report.compared_count} terms agree")
            return 0
        if report.verdict == bfile.MISMATCH:
            index, expected, actual = report.first_mismatch
            print(f"mismatch at index {index}: expected {expected}, got {actual}")
        else:
            print("span differs between generated and reference data")
        return 1
    count = 20 if args.count is None else args.count
    offset = 1 if args.offset is None else args.offset
    cursor = sequence.SequenceCursor.from_index(offset)
    for index, value in islice(cursor.pairs(), count):
        print(f"{index} {value}")
    return 0


def _cmd_oracle_succ(args: argparse.Namespace) -> int:
    print(_fmt(oracle.brute_successor(args.number), args.binary))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyck",
        description="Dyck numbers (OEIS A036991): membership, successor, "
        "ranges, encodings, and b-file tooling.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    display = argparse.ArgumentParser(add_help=False)
    display.add_argument(
        "--binary", action="store_true", help="print numbers in binary"
    )

    p = sub.add_parser(
        "check", help="test whether a number is a Dyck number (exit 1 if not)"
    )
    p.add_argument("number", type=_natural)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser(
        "succ", parents=[display], help="Dyck successor(s) of a Dyck number"
    )
    p.add_argument("number", type=_natural)
    p.add_argument(
        "--count", type=_positive, default=1, help="how many successors (default 1)"
    )
    p.set_defaults(func=_cmd_succ)

    p = sub.add_parser(
        "range", parents=[display], help="one range of Dyck numbers, by bit length"
    )
    p.add_argument("k", type=_positive, help="range index (= bit length)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list", action="store_true", help="print every term")
    mode.add_argument(
        "--stats", action="store_true", help="print boundary and size summary (default)"
    )
    p.set_defaults(func=_cmd_range)

    p = sub.add_parser(
        "enumerate", parents=[display], help="stream Dyck numbers in order"
    )
    p.add_argument(
        "--start", type=_natural, default=0, help="first value to emit (default 0)"
    )
    p.add_argument(
        "--count", type=_positive, default=20, help="how many terms (default 20)"
    )
    p.add_argument(
        "--skip-zero", action="store_true", help="start at 1, omitting the empty path"
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser(
        "convert", parents=[display], help="re-encode a Dyck number"
    )
    p.add_argument("number", type=_natural)
    p.add_argument(
        "--to",
        required=True,
        choices=("word", "standard", "heights"),
        help="target encoding: U/D step word, A014486 code, or height profile",
    )
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser(
        "verify-conjecture",
        help="count ranges and compare sizes against A001405",
    )
    p.add_argument(
        "--max-range", type=_positive, required=True, help="last range index to count"
    )
    p.set_defaults(func=_cmd_verify_conjecture)

    p = sub.add_parser(
        "bfile", help="emit b-file lines, or --check them against a reference file"
    )
    p.add_argument(
        "--count", type=_positive, default=None, help="how many terms (default 20)"
    )
    p.add_argument(
        "--offset", type=_positive, default=None, help="first index (default 1)"
    )
    p.add_argument(
        "--check", metavar="FILE", default=None, help="compare against this b-file"
    )
    p.set_defaults(func=_cmd_bfile)

    p = sub.add_parser(
        "oracle-succ",
        parents=[display],
        help="successor by brute-force scan (slow reference)",
    )
    p.add_argument("number", type=_natural)
    p.set_defaults(func=_cmd_oracle_succ)

    for name, subparser in sub.choices.items():
        subparser.set_defaults(parser=subparser)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code = args.func(args)
        # force pending output through while the pipe error is still catchable
        sys.stdout.flush()
        return code
    except BrokenPipeError:
        # reader went away mid-stream (e.g. piping into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

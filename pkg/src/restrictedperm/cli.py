"""Command line interface.

Plain output is exactly the result followed by a newline; ``--json`` wraps it
as ``{"ok": true, "result": ...}`` with big integers as decimal strings.
Exit status: 0 success, 1 domain error (bad index, non-member word, ...),
2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional

from . import engine, lyndon
from .derangements import DerangementFamily
from .errors import RestrictedPermError
from .menage import MenageFamily
from .words import format_word, parse_word

FAMILIES: Dict[str, Callable[[int], engine.PrefixCountFamily]] = {
    "derangement": DerangementFamily,
    "menage": MenageFamily,
}


class UsageError(Exception):
    pass


def _decimal(text: str) -> int:
    if not (text.isascii() and text.isdigit()):
        raise argparse.ArgumentTypeError(f"expected a nonnegative decimal integer, got {text!r}")
    return int(text)


def _seed(text: str) -> int:
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a decimal seed, got {text!r}") from None
    if not -(2 ** 63) <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return value


def _word(text: str):
    try:
        return parse_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="restrictedperm",
        description="Rank, unrank and count derangements and ménage permutations in lexicographic order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--family", required=True, choices=sorted(FAMILIES))
        p.add_argument("--n", required=True, type=int)
        p.add_argument("--json", action="store_true")
        return p

    family_command("count", "number of members")
    p = family_command("count-prefix", "number of members starting with a prefix")
    p.add_argument("--prefix", required=True, type=_word)
    p = family_command("rank", "1-based rank of a member")
    p.add_argument("--word", required=True, type=_word)
    p = family_command("unrank", "member at a 1-based rank")
    p.add_argument("--index", required=True, type=_decimal)
    p = family_command("sample", "uniformly random members")
    p.add_argument("--seed", required=True, type=_seed)
    p.add_argument("--count", type=int, default=1)
    p = family_command("enumerate", "members with ranks FROM..TO")
    p.add_argument("--from", dest="start", required=True, type=_decimal)
    p.add_argument("--to", dest="stop", required=True, type=_decimal)

    p = sub.add_parser("lyndon-table", help="Lyndon prefix counts, Euler transforms and guessed recurrences")
    p.add_argument("--prefix", action="append", dest="prefixes",
                   help="binary prefix (repeatable); defaults to the standard table rows")
    p.add_argument("--length", type=int, default=12)
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("selftest", help="check built-in reference answers")
    p.add_argument("--json", action="store_true")
    return parser


def _make_family(args) -> engine.PrefixCountFamily:
    try:
        return FAMILIES[args.family](args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _lyndon_rows(args) -> List[dict]:
    prefixes = args.prefixes or list(lyndon.TABLE_PREFIXES)
    for prefix in prefixes:
        if not prefix or set(prefix) - {"0", "1"}:
            raise UsageError(f"not a binary prefix: {prefix!r}")
    if args.length < 1 or args.max_order < 1:
        raise UsageError("--length and --max-order must be positive")
    return [lyndon.table_row(p, args.length, args.max_order) for p in prefixes]


def _format_lyndon_plain(rows: List[dict]) -> str:
    lines = []
    for row in rows:
        guess = row["recurrence"]
        tail = f"conjectured {guess.describe()} for n >= {guess.valid_from}" if guess else "no recurrence found"
        lines.append("\t".join([
            row["prefix"],
            " ".join(map(str, row["counts"])),
            " ".join(map(str, row["euler_transform"])),
            tail,
        ]))
    return "\n".join(lines)


def _lyndon_json(rows: List[dict]) -> List[dict]:
    out = []
    for row in rows:
        guess = row["recurrence"]
        out.append({
            "prefix": row["prefix"],
            "counts": [str(v) for v in row["counts"]],
            "euler_transform": [str(v) for v in row["euler_transform"]],
            "recurrence": None if guess is None else {
                "status": "conjectured",
                "order": guess.order,
                "coefficients": list(guess.coefficients),
                "valid_from": guess.valid_from,
                "text": guess.describe(),
            },
        })
    return out


def selftest_cases():
    """Reference answers: (label, callable producing a value, expected value)."""
    d8, m8 = DerangementFamily(8), MenageFamily(8)
    d20, m20 = DerangementFamily(20), MenageFamily(20)
    menage_answer = "7 16 19 12 2 8 15 1 18 14 3 9 20 10 5 17 13 4 11 6"
    return [
        ("derangement n=20 index 5*10^17",
         lambda: format_word(engine.unrank(d20, 5 * 10 ** 17)),
         "12 14 2 9 13 20 6 3 1 17 5 11 19 15 10 18 8 7 4 16"),
        ("menage n=20 index 10^17",
         lambda: format_word(engine.unrank(m20, 10 ** 17)), menage_answer),
        ("menage n=20 rank of answer",
         lambda: engine.rank(m20, parse_word(menage_answer)), 10 ** 17),
        ("menage n=20 total", lambda: engine.total_count(m20), 312400218671253762),
        ("derangement n=8 index 1000",
         lambda: format_word(engine.unrank(d8, 1000)), "2 5 4 8 7 3 6 1"),
        ("menage n=8 index 1000",
         lambda: format_word(engine.unrank(m8, 1000)), "3 5 4 8 2 7 1 6"),
    ]


def _run_selftest(args, out) -> int:
    results = []
    for label, compute, expected in selftest_cases():
        try:
            got = compute()
        except RestrictedPermError as exc:
            got = f"error: {exc}"
        results.append((label, got == expected, got, expected))
    failed = sum(not ok for _, ok, _, _ in results)
    if args.json:
        payload = {
            "ok": failed == 0,
            "result": [{"case": label, "pass": ok, "got": str(got), "expected": str(expected)}
                       for label, ok, got, expected in results],
        }
        print(json.dumps(payload), file=out)
    else:
        for label, ok, got, expected in results:
            status = "PASS" if ok else f"FAIL (got {got}, expected {expected})"
            print(f"{status} {label}", file=out)
    return 1 if failed else 0


def _execute(args):
    """Return the command's result as (plain text, JSON-ready value)."""
    cmd = args.command
    if cmd == "lyndon-table":
        rows = _lyndon_rows(args)
        return _format_lyndon_plain(rows), _lyndon_json(rows)
    family = _make_family(args)
    if cmd == "count":
        value = engine.total_count(family)
        return str(value), str(value)
    if cmd == "count-prefix":
        value = family.count_prefix(args.prefix)
        return str(value), str(value)
    if cmd == "rank":
        value = engine.rank(family, args.word)
        return str(value), str(value)
    if cmd == "unrank":
        text = format_word(engine.unrank(family, args.index))
        return text, text
    if cmd == "sample":
        if args.count < 1:
            raise UsageError("--count must be positive")
        words = [format_word(w) for w in engine.sample_uniform(family, args.seed, args.count)]
        return "\n".join(words), words
    if cmd == "enumerate":
        words = [format_word(w) for w in engine.enumerate_range(family, args.start, args.stop)]
        return "\n".join(words), words
    raise UsageError(f"unknown command {cmd}")


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False)
    if args.command == "selftest":
        return _run_selftest(args, out)
    try:
        plain, value = _execute(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=err)
        return 2
    except RestrictedPermError as exc:
        if as_json:
            print(json.dumps({"ok": False, "error": str(exc)}), file=out)
        else:
            print(f"{parser.prog}: {exc}", file=err)
        return 1
    if as_json:
        print(json.dumps({"ok": True, "result": value}), file=out)
    else:
        print(plain, file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

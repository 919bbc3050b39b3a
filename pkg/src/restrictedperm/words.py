"""Words over the alphabet ``1..n``.

A word is a plain tuple of ints. Python's tuple ordering already is the
lexicographic order used throughout the package (a proper prefix sorts before
its extensions), so :func:`lex_compare` is a thin wrapper.
"""

from __future__ import annotations

from typing import Sequence, Tuple

from .errors import WordRangeError

Word = Tuple[int, ...]


def is_prefix(alpha: Sequence[int], w: Sequence[int]) -> bool:
    return len(alpha) <= len(w) and tuple(w[: len(alpha)]) == tuple(alpha)


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``a`` sorts before, equal to, or after ``b``."""
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


def increment_last(alpha: Sequence[int], n: int) -> Word:
    if not alpha:
        raise WordRangeError("cannot increment the last letter of the empty word")
    if alpha[-1] >= n:
        raise WordRangeError(f"last letter {alpha[-1]} is already the largest letter {n}")
    return tuple(alpha[:-1]) + (alpha[-1] + 1,)


def append_one(alpha: Sequence[int], n: int) -> Word:
    if len(alpha) >= n:
        raise WordRangeError(f"word of length {len(alpha)} cannot grow beyond {n} letters")
    return tuple(alpha) + (1,)


def check_letters(w: Sequence[int], n: int) -> Word:
    w = tuple(w)
    for letter in w:
        if not 1 <= letter <= n:
            raise WordRangeError(f"letter {letter} outside alphabet 1..{n}")
    return w


def parse_word(text: str) -> Word:
    """Parse the space separated decimal form, e.g. ``"2 5 4 8 7 3 6 1"``."""
    parts = text.split()
    if not all(p.isascii() and p.isdigit() for p in parts):
        raise ValueError(f"not a word: {text!r}")
    return tuple(int(p) for p in parts)


def format_word(w: Sequence[int]) -> str:
    return " ".join(str(letter) for letter in w)

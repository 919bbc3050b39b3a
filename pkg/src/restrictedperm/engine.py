"""Lexicographic rank, unrank, sampling and enumeration from prefix counts.

Any object satisfying :class:`PrefixCountFamily` can be ranked: the engine
only ever asks how many members begin with a given prefix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, List, Protocol, Sequence, runtime_checkable

from .errors import EmptyFamilyError, IndexOutOfRangeError, NotAMemberError
from .words import Word


@runtime_checkable
class PrefixCountFamily(Protocol):
    """A finite set of words over ``1..n`` that can count members by prefix."""

    n: int
    #: members never repeat a letter (lets the engine skip such prefixes)
    distinct_letters: bool

    def count_prefix(self, alpha: Sequence[int]) -> int: ...

    def contains(self, w: Sequence[int]) -> bool: ...

    def quick_letter_ok(self, position: int, letter: int) -> bool:
        """Cheap filter; False only if no member has ``letter`` at ``position`` (1-based)."""
        ...


@dataclass(frozen=True)
class EngineState:
    """One application of the unranking recursion.

    ``j`` is the number of members strictly before ``alpha``; ``count`` is the
    number of members with prefix ``alpha``, so those occupy ranks
    ``(j, j + count]``. ``case`` names the rule that was applied next.
    """

    alpha: Word
    j: int
    count: int
    case: str


def total_count(family: PrefixCountFamily) -> int:
    return sum(family.count_prefix((x,)) for x in range(1, family.n + 1))


def _check_index(family: PrefixCountFamily, i: int) -> int:
    total = total_count(family)
    if not 1 <= i <= total:
        raise IndexOutOfRangeError(f"index {i} outside 1..{total}")
    return total


def trace_unrank(family: PrefixCountFamily, i: int) -> Iterator[EngineState]:
    """Yield every step of the four-case recursion while unranking ``i``.

    This is the literal recursion, probing every candidate prefix; use
    :func:`unrank` when only the result is wanted.
    """
    _check_index(family, i)
    n = family.n
    alpha: Word = (1,)
    j = 0
    while True:
        count = family.count_prefix(alpha)
        member = family.contains(alpha)
        if i > j + count:
            yield EngineState(alpha, j, count, "increment")
            if alpha[-1] >= n:
                raise IndexOutOfRangeError(f"index {i} ran past the last letter")
            alpha = alpha[:-1] + (alpha[-1] + 1,)
            j += count
        elif not member:
            yield EngineState(alpha, j, count, "append")
            if len(alpha) >= n:
                raise IndexOutOfRangeError(f"index {i} ran past the longest word")
            alpha = alpha + (1,)
        elif i != j + 1:
            yield EngineState(alpha, j, count, "member-append")
            if len(alpha) >= n:
                raise IndexOutOfRangeError(f"index {i} ran past the longest word")
            alpha = alpha + (1,)
            j += 1
        else:
            yield EngineState(alpha, j, count, "finish")
            return


def unrank(family: PrefixCountFamily, i: int) -> Word:
    """Return the ``i``-th member (1-based) in lexicographic order.

    Same recursion as :func:`trace_unrank`, except that prefixes rejected by
    the family's cheap letter filter are stepped over without counting (their
    count is zero, so the recursion would only increment past them).
    """
    _check_index(family, i)
    return _unrank_unchecked(family, i)


def _unrank_unchecked(family: PrefixCountFamily, i: int) -> Word:
    n = family.n
    distinct = family.distinct_letters
    ok = family.quick_letter_ok
    prefix: List[int] = []
    used = set()
    letter = 1
    j = 0
    while True:
        position = len(prefix) + 1
        if (distinct and letter in used) or not ok(position, letter):
            count = 0
        else:
            count = family.count_prefix(prefix + [letter])
        if i > j + count:
            if letter >= n:
                raise IndexOutOfRangeError(f"index {i} ran past the last letter")
            letter += 1
            j += count
            continue
        alpha = tuple(prefix) + (letter,)
        if family.contains(alpha):
            if i == j + 1:
                return alpha
            j += 1
        if len(alpha) >= n:
            raise IndexOutOfRangeError(f"index {i} ran past the longest word")
        prefix.append(letter)
        used.add(letter)
        letter = 1


def rank(family: PrefixCountFamily, w: Sequence[int]) -> int:
    """Return the 1-based lexicographic rank of member ``w``.

    Sums, over each position, the counts of the prefixes that agree with
    ``w`` before that position and carry a smaller letter at it.
    """
    w = tuple(w)
    if not family.contains(w):
        raise NotAMemberError(f"{w} is not a member of {family!r}")
    distinct = family.distinct_letters
    ok = family.quick_letter_ok
    result = 1
    used = set()
    for pos, letter in enumerate(w):
        head = w[:pos]
        for x in range(1, letter):
            if (distinct and x in used) or not ok(pos + 1, x):
                continue
            result += family.count_prefix(head + (x,))
        used.add(letter)
    # members that are proper prefixes of w come before it
    for cut in range(1, len(w)):
        if family.contains(w[:cut]):
            result += 1
    return result


def sample_uniform(family: PrefixCountFamily, seed: int, count: int) -> List[Word]:
    """Draw ``count`` members uniformly at random, reproducibly for a fixed seed.

    Indices come from rejection sampling on ``total.bit_length()`` random bits,
    so every index in ``1..total`` is exactly equally likely.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    total = total_count(family)
    if total == 0:
        raise EmptyFamilyError(f"{family!r} has no members")
    rng = random.Random(seed)
    bits = total.bit_length()
    out = []
    while len(out) < count:
        r = rng.getrandbits(bits)
        if r < total:
            out.append(_unrank_unchecked(family, r + 1))
    return out


def enumerate_range(family: PrefixCountFamily, start: int, stop: int) -> Iterator[Word]:
    """Yield members with ranks ``start..stop`` inclusive, in order."""
    total = total_count(family)
    if not 1 <= start <= stop <= total:
        raise IndexOutOfRangeError(f"range {start}..{stop} outside 1..{total}")
    w = _unrank_unchecked(family, start)
    yield w
    for _ in range(stop - start):
        w = successor(family, w)
        yield w


def successor(family: PrefixCountFamily, w: Sequence[int]) -> Word:
    """Return the member immediately after member ``w`` (which must not be last)."""
    w = tuple(w)
    n = family.n
    distinct = family.distinct_letters
    ok = family.quick_letter_ok
    # members extending w come first
    if len(w) < n:
        found = _first_below(family, w)
        if found is not None:
            return found
    for cut in range(len(w), 0, -1):
        head = w[: cut - 1]
        used = set(head)
        for x in range(w[cut - 1] + 1, n + 1):
            if (distinct and x in used) or not ok(cut, x):
                continue
            if family.count_prefix(head + (x,)):
                return _first_below(family, head + (x,), inclusive=True)
    raise IndexOutOfRangeError(f"{w} is the last member")


def _first_below(family: PrefixCountFamily, alpha: Word, inclusive: bool = False):
    """Smallest member with prefix ``alpha`` (strict extension unless ``inclusive``)."""
    if inclusive and family.contains(alpha):
        return alpha
    n = family.n
    distinct = family.distinct_letters
    ok = family.quick_letter_ok
    prefix = alpha
    while len(prefix) < n:
        used = set(prefix)
        for x in range(1, n + 1):
            if (distinct and x in used) or not ok(len(prefix) + 1, x):
                continue
            if family.count_prefix(prefix + (x,)):
                prefix = prefix + (x,)
                break
        else:
            return None
        if family.contains(prefix):
            return prefix
    return None

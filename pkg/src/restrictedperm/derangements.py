"""Prefix counting for derangements (permutations without fixed points)."""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidPrefixError
from .numeric import binomial, factorial


def is_valid_prefix_d(n: int, alpha: Sequence[int]) -> bool:
    if len(alpha) > n:
        return False
    seen = set()
    for i, a in enumerate(alpha, start=1):
        if not 1 <= a <= n or a == i or a in seen:
            return False
        seen.add(a)
    return True


def complement_size_d(n: int, alpha: Sequence[int]) -> int:
    """Forbidden (diagonal) squares left after placing the prefix.

    The derived complement keeps the diagonal squares of rows ``len(alpha)+1..n``
    whose column is still free; no two of them share a row or column.
    """
    if not is_valid_prefix_d(n, alpha):
        raise InvalidPrefixError(f"{tuple(alpha)} is not a derangement prefix for n={n}")
    ell = len(alpha)
    taken = bytearray(n + 1)
    for a in alpha:
        taken[a] = 1
    hits = sum(taken[ell + 1:])
    return n - ell - hits


def count_prefix_d(n: int, alpha: Sequence[int]) -> int:
    """Number of derangements of ``1..n`` beginning with ``alpha``; 0 for impossible prefixes."""
    if not is_valid_prefix_d(n, alpha):
        return 0
    ell = len(alpha)
    c = complement_size_d(n, alpha)
    total = 0
    for j in range(c + 1):
        term = binomial(c, j) * factorial(n - ell - j)
        total += -term if j & 1 else term
    return total


class DerangementFamily:
    """Derangements of ``1..n`` as words, for use with the ranking engine."""

    name = "derangement"
    distinct_letters = True

    def __init__(self, n: int):
        if n < 2:
            raise ValueError(f"derangements need n >= 2, got {n}")
        self.n = n

    def __repr__(self) -> str:
        return f"DerangementFamily(n={self.n})"

    def count_prefix(self, alpha: Sequence[int]) -> int:
        return count_prefix_d(self.n, alpha)

    def contains(self, w: Sequence[int]) -> bool:
        return len(w) == self.n and is_valid_prefix_d(self.n, w)

    def quick_letter_ok(self, position: int, letter: int) -> bool:
        return 1 <= letter <= self.n and letter != position

"""Prefix counting for ménage permutations.

A ménage permutation of ``1..n`` satisfies ``p(i) != i`` and
``p(i) + 1 != i (mod n)``. After placing a nonempty prefix, the forbidden
squares left on the derived board split into disjoint staircases, one per
maximal run of unused columns; a staircase with ``k`` squares has the
``k``-th Fibonacci polynomial as rook polynomial.
"""

from __future__ import annotations

import threading
from typing import List, Sequence

from .errors import InvalidPrefixError
from .numeric import ONE, Poly, alternating_factorial_sum, poly_add, poly_product, poly_shift

_fib_cache: List[Poly] = [ONE, (1, 1)]
_fib_lock = threading.Lock()


def fibonacci_polynomial(k: int) -> Poly:
    """``F_0 = 1``, ``F_1 = 1 + x``, ``F_k = x F_{k-2} + F_{k-1}``."""
    if k < 0:
        raise ValueError(f"negative index {k}")
    cache = _fib_cache
    if k < len(cache):
        return cache[k]
    with _fib_lock:
        while len(cache) <= k:
            cache.append(poly_add(poly_shift(cache[-2]), cache[-1]))
    return cache[k]


def is_valid_prefix_m(n: int, alpha: Sequence[int]) -> bool:
    if len(alpha) > n:
        return False
    seen = set()
    for i, a in enumerate(alpha, start=1):
        if not 1 <= a <= n or a in seen or a == i or (a - i + 1) % n == 0:
            return False
        seen.add(a)
    return True


def column_weight(n: int, ell: int, i: int) -> int:
    """Forbidden squares left in free column ``i`` once rows ``1..ell`` are gone."""
    if i < ell:
        return 0
    if i == ell or i == n:
        return 1
    return 2


def block_sizes(n: int, alpha: Sequence[int]) -> List[int]:
    """Square counts of the staircase blocks, one per run of unused columns.

    Runs are listed left to right; zero-size runs are kept.
    """
    if not alpha:
        raise InvalidPrefixError("block decomposition needs a nonempty prefix")
    if not is_valid_prefix_m(n, alpha):
        raise InvalidPrefixError(f"{tuple(alpha)} is not a ménage prefix for n={n}")
    ell = len(alpha)
    used = bytearray(n + 2)
    for a in alpha:
        used[a] = 1
    sizes = []
    run = None
    for i in range(1, n + 1):
        if used[i]:
            if run is not None:
                sizes.append(run)
                run = None
        else:
            run = (run or 0) + column_weight(n, ell, i)
    if run is not None:
        sizes.append(run)
    return sizes


def count_prefix_m(n: int, alpha: Sequence[int]) -> int:
    """Number of ménage permutations of ``1..n`` beginning with ``alpha``.

    Impossible prefixes give 0. The empty prefix is summed over first letters,
    since its forbidden board wraps around and is not a union of staircases.
    """
    if not alpha:
        return sum(count_prefix_m(n, (x,)) for x in range(1, n + 1))
    if not is_valid_prefix_m(n, alpha):
        return 0
    ell = len(alpha)
    if ell == n:
        return 1
    poly = poly_product(fibonacci_polynomial(k) for k in block_sizes(n, alpha) if k)
    return alternating_factorial_sum(poly, n - ell)


class MenageFamily:
    """Ménage permutations of ``1..n`` as words, for use with the ranking engine."""

    name = "menage"
    distinct_letters = True

    def __init__(self, n: int):
        if n < 3:
            raise ValueError(f"ménage permutations need n >= 3, got {n}")
        self.n = n

    def __repr__(self) -> str:
        return f"MenageFamily(n={self.n})"

    def count_prefix(self, alpha: Sequence[int]) -> int:
        return count_prefix_m(self.n, alpha)

    def contains(self, w: Sequence[int]) -> bool:
        return len(w) == self.n and is_valid_prefix_m(self.n, w)

    def quick_letter_ok(self, position: int, letter: int) -> bool:
        return (1 <= letter <= self.n and letter != position
                and (letter - position + 1) % self.n != 0)

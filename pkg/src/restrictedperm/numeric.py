"""Exact integer helpers: factorials, binomials and dense integer polynomials.

Polynomials are tuples of Python ints in ascending degree, ``(1, 3, 1)`` being
``1 + 3x + x^2``. They are kept normalized: no trailing zero coefficients,
except for the zero polynomial which is ``(0,)``.
"""

from __future__ import annotations

import math
import threading
from typing import Iterable, Sequence, Tuple

from .errors import CapacityError, InconsistentInputError

Poly = Tuple[int, ...]

MAX_FACTORIAL = 10_000

ZERO: Poly = (0,)
ONE: Poly = (1,)

_factorials = [1]
_factorial_lock = threading.Lock()


def factorial(k: int) -> int:
    """Return ``k!`` from a monotone cache that grows on demand."""
    if k < 0:
        raise ValueError(f"factorial of negative number {k}")
    if k > MAX_FACTORIAL:
        raise CapacityError(f"factorial argument {k} exceeds limit {MAX_FACTORIAL}")
    cache = _factorials
    if k < len(cache):
        return cache[k]
    with _factorial_lock:
        # another thread may have filled the cache meanwhile
        while len(cache) <= k:
            cache.append(cache[-1] * len(cache))
    return cache[k]


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def normalize(coefficients: Iterable[int]) -> Poly:
    coeffs = list(coefficients)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return ZERO
    return tuple(coeffs)


def degree(p: Sequence[int]) -> int:
    return len(normalize(p)) - 1


def poly_add(a: Sequence[int], b: Sequence[int]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return normalize(out)


def poly_shift(a: Sequence[int]) -> Poly:
    """Multiply by ``x``."""
    a = normalize(a)
    if a == ZERO:
        return ZERO
    return (0,) + a


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Poly:
    a = normalize(a)
    b = normalize(b)
    if a == ZERO or b == ZERO:
        return ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return normalize(out)


def poly_product(polys: Iterable[Sequence[int]]) -> Poly:
    result: Poly = ONE
    for p in polys:
        result = poly_mul(result, p)
    return result


def alternating_factorial_sum(coefficients: Sequence[int], m: int) -> int:
    """Return ``sum_k (-1)^k c_k (m - k)!``.

    With ``c`` the rook polynomial of the complement of a board inside an
    ``m x m`` grid, this is the number of full rook placements on the board.
    """
    coefficients = normalize(coefficients)
    if len(coefficients) - 1 > m:
        raise InconsistentInputError(
            f"polynomial of degree {len(coefficients) - 1} exceeds board size {m}"
        )
    total = 0
    for k, c in enumerate(coefficients):
        if k & 1:
            total -= c * factorial(m - k)
        else:
            total += c * factorial(m - k)
    return total

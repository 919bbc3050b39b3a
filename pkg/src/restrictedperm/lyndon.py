"""Lyndon words with a fixed prefix, Euler transforms and recurrence guessing."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .errors import CapacityError, InsufficientDataError

MAX_LENGTH = 24

BinaryWord = Union[str, Sequence[int]]


def _as_bits(w: BinaryWord) -> str:
    if isinstance(w, str):
        bits = w
    else:
        bits = "".join(str(int(b)) for b in w)
    if set(bits) - {"0", "1"}:
        raise ValueError(f"not a binary word: {w!r}")
    return bits


def is_lyndon(w: BinaryWord) -> bool:
    """True iff ``w`` is strictly smaller than each of its nontrivial rotations."""
    bits = _as_bits(w)
    if not bits:
        raise ValueError("the empty word has no rotations to compare")
    return all(bits < bits[k:] + bits[:k] for k in range(1, len(bits)))


def lyndon_words(length: int) -> Iterator[str]:
    """Binary Lyndon words of exactly ``length`` letters, in lexicographic order (Duval)."""
    if length < 1:
        return
    w = [0]
    while w:
        if len(w) == length:
            yield "".join(map(str, w))
        # extend periodically to full length, then bump the last non-maximal letter
        m = len(w)
        while len(w) < length:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] += 1


@lru_cache(maxsize=None)
def _lyndon_words_cached(length: int) -> Tuple[str, ...]:
    return tuple(lyndon_words(length))


def count_lyndon_prefix(alpha: BinaryWord, length: int) -> int:
    """Number of binary Lyndon words of the given length that start with ``alpha``."""
    prefix = _as_bits(alpha)
    if length < 1:
        raise ValueError(f"length must be positive, got {length}")
    if length > MAX_LENGTH:
        raise CapacityError(f"length {length} exceeds limit {MAX_LENGTH}")
    return sum(1 for w in _lyndon_words_cached(length) if w.startswith(prefix))


def lyndon_prefix_sequence(alpha: BinaryWord, terms: int = 12) -> List[int]:
    return [count_lyndon_prefix(alpha, n) for n in range(1, terms + 1)]


def _divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def euler_transform(a: Sequence[int]) -> List[int]:
    """Power series coefficients ``b_0, ..., b_{L-1}`` of ``prod_i (1 - x^i)^(-a_i)``.

    ``a`` holds ``a_1, ..., a_L``; ``b_0`` is always 1 and ``a_L`` does not
    influence the returned terms.
    """
    size = len(a)
    if size == 0:
        return []
    c = [0] * size
    for n in range(1, size):
        c[n] = sum(d * a[d - 1] for d in _divisors(n))
    b = [1] + [0] * (size - 1)
    for n in range(1, size):
        s = c[n] + sum(c[k] * b[n - k] for k in range(1, n))
        q, r = divmod(s, n)
        if r:
            raise ArithmeticError(f"non-integral Euler transform term at n={n}")
        b[n] = q
    return b


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def inverse_euler_transform(b: Sequence[int]) -> List[int]:
    """Recover ``a_1, ..., a_{L-1}`` from ``b_0 = 1, b_1, ..., b_{L-1}``."""
    if not b:
        return []
    if b[0] != 1:
        raise ValueError("Euler transforms start with b_0 = 1")
    size = len(b)
    c = [0] * size
    for n in range(1, size):
        c[n] = n * b[n] - sum(c[k] * b[n - k] for k in range(1, n))
    a = []
    for n in range(1, size):
        s = sum(_mobius(n // d) * c[d] for d in _divisors(n))
        q, r = divmod(s, n)
        if r:
            raise ArithmeticError(f"sequence is not an Euler transform (n={n})")
        a.append(q)
    return a


@dataclass(frozen=True)
class RecurrenceGuess:
    """``t[n + order] = sum(coefficients[i] * t[n + i])`` for all ``n >= valid_from``.

    Indices are 1-based into the sequence it was detected on. A guess is only
    ever conjectural.
    """

    order: int
    coefficients: Tuple[int, ...]
    valid_from: int

    def holds(self, seq: Sequence[int], start: Optional[int] = None) -> bool:
        start = self.valid_from if start is None else start
        k = self.order
        return all(
            seq[n - 1 + k] == sum(c * seq[n - 1 + i] for i, c in enumerate(self.coefficients))
            for n in range(start, len(seq) - k + 1)
        )

    def describe(self) -> str:
        """Render like ``a(n+2) = a(n+1) + a(n)``."""
        terms = []
        for i in range(self.order - 1, -1, -1):
            c = self.coefficients[i]
            if c:
                term = f"a(n+{i})" if i else "a(n)"
                terms.append(term if c == 1 else f"{c}{term}")
        return f"a(n+{self.order}) = " + " + ".join(terms)


def detect_recurrence(
    seq: Sequence[int],
    max_order: int = 4,
    from_candidates: Optional[range] = None,
    min_checks: int = 4,
) -> Optional[RecurrenceGuess]:
    """Guess a linear recurrence with coefficients in {0, 1, 2}.

    Orders are tried from 1 upward; within an order the earliest valid start
    wins, ties broken by coefficient tuple. A candidate must be confirmed by at
    least ``min_checks`` equations, and the coefficient of the oldest term must
    be nonzero so the order is genuine.
    """
    if max_order < 1:
        raise ValueError("max_order must be positive")
    if len(seq) < 2 * max_order:
        raise InsufficientDataError(f"need at least {2 * max_order} terms, got {len(seq)}")
    size = len(seq)
    if from_candidates is None:
        from_candidates = range(1, size + 1)
    for order in range(1, max_order + 1):
        best = None
        for coeffs in product((0, 1, 2), repeat=order):
            if coeffs[0] == 0:
                continue
            guess = RecurrenceGuess(order, coeffs, 1)
            start = _earliest_start(guess, seq)
            if start is None or start not in from_candidates:
                continue
            if size - order - start + 1 < min_checks:
                continue
            key = (start, coeffs)
            if best is None or key < best[0]:
                best = (key, RecurrenceGuess(order, coeffs, start))
        if best is not None:
            return best[1]
    return None


def _earliest_start(guess: RecurrenceGuess, seq: Sequence[int]) -> Optional[int]:
    k = guess.order
    last = len(seq) - k
    if last < 1:
        return None
    start = last + 1
    for n in range(last, 0, -1):
        if seq[n - 1 + k] != sum(c * seq[n - 1 + i] for i, c in enumerate(guess.coefficients)):
            break
        start = n
    return start if start <= last else None


#: prefixes of the published conjecture table, in its row order
TABLE_PREFIXES = (
    "0", "00", "01", "000", "001", "010", "011",
    "0000", "0001", "0010", "0011", "0101", "0110", "0111",
)


def table_row(alpha: BinaryWord, terms: int = 12, max_order: int = 4) -> dict:
    counts = lyndon_prefix_sequence(alpha, terms)
    transformed = euler_transform(counts)
    guess = None
    if terms >= 2 * max_order:
        guess = detect_recurrence(transformed, max_order)
    return {
        "prefix": _as_bits(alpha),
        "counts": counts,
        "euler_transform": transformed,
        "recurrence": guess,
    }

"""Boards, rook polynomials and full-placement counts.

These routines make no assumption about board structure. They are slow
(exponential in general) and serve as a reference for the fast prefix
counters, as well as a small public API for arbitrary boards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterable, Sequence, Tuple

from .errors import CapacityError, InvalidPrefixError, NotDisjointError
from .numeric import ONE, Poly, alternating_factorial_sum, normalize, poly_add, poly_product, poly_shift

Square = Tuple[int, int]

PERMANENT_LIMIT = 12


@dataclass(frozen=True)
class Board:
    """A set of allowed squares inside the ``size x size`` grid (1-based)."""

    size: int
    squares: FrozenSet[Square]

    def __init__(self, size: int, squares: Iterable[Square] = ()):
        squares = frozenset((int(r), int(c)) for r, c in squares)
        for r, c in squares:
            if not (1 <= r <= size and 1 <= c <= size):
                raise ValueError(f"square {(r, c)} outside {size}x{size} grid")
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "squares", squares)

    def __len__(self) -> int:
        return len(self.squares)

    def __contains__(self, square) -> bool:
        return square in self.squares

    def sorted_squares(self) -> Tuple[Square, ...]:
        return tuple(sorted(self.squares))

    def rows(self) -> FrozenSet[int]:
        return frozenset(r for r, _ in self.squares)

    def columns(self) -> FrozenSet[int]:
        return frozenset(c for _, c in self.squares)

    def matrix(self):
        """0/1 incidence matrix as a list of row lists."""
        return [[int((r, c) in self.squares) for c in range(1, self.size + 1)]
                for r in range(1, self.size + 1)]

    @classmethod
    def full(cls, size: int) -> "Board":
        return cls(size, ((r, c) for r in range(1, size + 1) for c in range(1, size + 1)))

    @classmethod
    def derangement(cls, size: int) -> "Board":
        """Allowed squares of derangements: everything off the diagonal."""
        return cls(size, ((r, c) for r in range(1, size + 1)
                          for c in range(1, size + 1) if r != c))

    @classmethod
    def menage(cls, size: int) -> "Board":
        """Allowed squares of ménage permutations: ``c != r`` and ``c + 1 != r (mod size)``."""
        return cls(size, ((r, c) for r in range(1, size + 1)
                          for c in range(1, size + 1)
                          if c != r and (c + 1 - r) % size != 0))


def complement(b: Board) -> Board:
    return Board(b.size, (sq for sq in Board.full(b.size).squares if sq not in b.squares))


def rook_polynomial(b: Board) -> Poly:
    """Coefficient ``k`` counts placements of ``k`` non-attacking rooks on ``b``."""
    return _rook_poly(b.sorted_squares())


@lru_cache(maxsize=None)
def _rook_poly(squares: Tuple[Square, ...]) -> Poly:
    if not squares:
        return ONE
    r, c = squares[0]
    rest = squares[1:]
    # pivot on the smallest square: place a rook there, or leave it empty
    included = tuple(sq for sq in rest if sq[0] != r and sq[1] != c)
    return poly_add(poly_shift(_rook_poly(included)), _rook_poly(rest))


def permanent_count(b: Board) -> int:
    """Number of placements of ``size`` non-attacking rooks (the 0/1 permanent).

    Inclusion-exclusion over column subsets:
    ``perm(A) = sum_S (-1)^(m-|S|) prod_i sum_{j in S} a_ij``.
    """
    m = b.size
    if m > PERMANENT_LIMIT:
        raise CapacityError(f"board size {m} exceeds permanent limit {PERMANENT_LIMIT}")
    if m == 0:
        return 1
    # bit masks of allowed columns per row
    row_masks = [0] * m
    for r, c in b.squares:
        row_masks[r - 1] |= 1 << (c - 1)
    total = 0
    for subset in range(1 << m):
        prod = 1
        for mask in row_masks:
            prod *= bin(mask & subset).count("1")
            if not prod:
                break
        if prod:
            if (m - bin(subset).count("1")) & 1:
                total -= prod
            else:
                total += prod
    return total


def derived_board(b: Board, alpha: Sequence[int]) -> Board:
    """Drop rows ``1..len(alpha)`` and columns ``alpha``, then reindex to ``1..size-len(alpha)``."""
    alpha = tuple(alpha)
    ell = len(alpha)
    if len(set(alpha)) != ell:
        raise InvalidPrefixError(f"prefix {alpha} repeats a letter")
    if ell > b.size or any(not 1 <= a <= b.size for a in alpha):
        raise InvalidPrefixError(f"prefix {alpha} does not fit a board of size {b.size}")
    removed = set(alpha)
    kept_cols = [c for c in range(1, b.size + 1) if c not in removed]
    new_col = {c: k for k, c in enumerate(kept_cols, start=1)}
    return Board(b.size - ell, ((r - ell, new_col[c]) for r, c in b.squares
                                if r > ell and c not in removed))


def disjoint_product(parts: Sequence[Board]) -> Poly:
    """Rook polynomial of a union of boards sharing no rows and no columns."""
    seen_rows: set = set()
    seen_cols: set = set()
    for part in parts:
        rows, cols = part.rows(), part.columns()
        if rows & seen_rows or cols & seen_cols:
            raise NotDisjointError("boards share a row or a column")
        seen_rows |= rows
        seen_cols |= cols
    return poly_product(rook_polynomial(p) for p in parts)


def stanley_count(complement_poly: Sequence[int], m: int) -> int:
    """Full placements on an ``m x m`` board, given its complement's rook polynomial."""
    return alternating_factorial_sum(normalize(complement_poly), m)


def brute_force_rook_polynomial(b: Board) -> Poly:
    """Enumerate every subset of squares; only usable for tiny boards."""
    squares = b.sorted_squares()
    coeffs = [0] * (len(squares) + 1)
    for k in range(len(squares) + 1):
        for chosen in combinations(squares, k):
            rows = {r for r, _ in chosen}
            cols = {c for _, c in chosen}
            if len(rows) == k and len(cols) == k:
                coeffs[k] += 1
    return normalize(coeffs)


def staircase(kind: str, k: int) -> Board:
    """Staircase-shaped board with ``k`` squares.

    ``kind`` is ``"O"``, ``"OT"`` (odd ``k``) or ``"E"``, ``"ET"`` (even ``k``).
    Even shapes sit in a grid one larger than they need, padded with an empty
    row or column.
    """
    if kind in ("O", "OT"):
        if k % 2 != 1:
            raise ValueError(f"odd staircase needs an odd square count, got {k}")
        n = (k + 1) // 2
        diag = [(i, i) for i in range(1, n + 1)]
        off = [(i, i + 1) for i in range(1, n)] if kind == "O" else [(i + 1, i) for i in range(1, n)]
        return Board(n, diag + off)
    if kind in ("E", "ET"):
        if k % 2 != 0:
            raise ValueError(f"even staircase needs an even square count, got {k}")
        n = k // 2 + 1
        diag = [(i, i) for i in range(1, n)]
        off = [(i + 1, i) for i in range(1, n)] if kind == "E" else [(i, i + 1) for i in range(1, n)]
        return Board(n, diag + off)
    raise ValueError(f"unknown staircase kind {kind!r}")

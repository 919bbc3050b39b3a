import math
from collections import Counter

import pytest

from conftest import brute_members, brute_prefix_counts, injective_prefixes
from restrictedperm.errors import InvalidPrefixError
from restrictedperm.menage import (
    MenageFamily,
    block_sizes,
    column_weight,
    count_prefix_m,
    fibonacci_polynomial,
    is_valid_prefix_m,
)
from restrictedperm.numeric import poly_product
from restrictedperm.rooks import Board, complement, derived_board, permanent_count, rook_polynomial, staircase


def components(board):
    """Split a board into pieces that share no row or column (union-find)."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r, c in board.squares:
        parent[find(("r", r))] = find(("c", c))
    groups = {}
    for sq in board.squares:
        groups.setdefault(find(("r", sq[0])), []).append(sq)
    return list(groups.values())


def staircase_kind(squares):
    """Name the staircase shape of a block after compacting rows and columns, or None."""
    rows = {r: i for i, r in enumerate(sorted({r for r, _ in squares}), start=1)}
    cols = {c: i for i, c in enumerate(sorted({c for _, c in squares}), start=1)}
    compact = frozenset((rows[r], cols[c]) for r, c in squares)
    k = len(squares)
    kinds = ("O", "OT") if k % 2 else ("E", "ET")
    for kind in kinds:
        if staircase(kind, k).squares == compact:
            return kind
    return None


def test_valid_prefix():
    assert is_valid_prefix_m(12, (3, 6, 1, 8))
    assert not is_valid_prefix_m(8, (8,))
    assert not is_valid_prefix_m(8, (3, 2))
    assert not is_valid_prefix_m(8, (3, 3))
    assert not is_valid_prefix_m(8, (1,))


def test_column_weight():
    assert column_weight(12, 4, 2) == 0
    assert column_weight(12, 4, 4) == 1
    assert column_weight(12, 4, 5) == 2
    assert column_weight(12, 4, 12) == 1


def test_block_sizes():
    assert block_sizes(12, (3, 6, 1, 8)) == [0, 3, 2, 7]
    assert sorted(block_sizes(7, (3,))) == [3, 7]
    assert block_sizes(8, (2,)) == [1, 11]
    with pytest.raises(InvalidPrefixError):
        block_sizes(8, ())
    with pytest.raises(InvalidPrefixError):
        block_sizes(8, (1,))


def test_fibonacci_polynomial():
    assert fibonacci_polynomial(0) == (1,)
    assert fibonacci_polynomial(1) == (1, 1)
    assert fibonacci_polynomial(3) == (1, 3, 1)
    assert fibonacci_polynomial(7) == (1, 7, 15, 10, 1)
    for k in range(40):
        assert len(fibonacci_polynomial(k)) - 1 == (k + 1) // 2


def test_worked_product():
    sizes = block_sizes(12, (3, 6, 1, 8))
    assert poly_product(fibonacci_polynomial(k) for k in sizes) == (1, 12, 57, 136, 170, 105, 27, 2)


@pytest.mark.parametrize("n, alpha, expected", [
    (12, (3, 6, 1, 8), 8062),
    (8, (2,), 787),
    (8, (3,), 791),
    (8, (3, 5), 166),
    (8, (), 4738),
    (8, (1,), 0),
    (8, (3, 5, 4, 8, 2, 7, 1, 6), 1),
])
def test_count_prefix(n, alpha, expected):
    assert count_prefix_m(n, alpha) == expected


@pytest.mark.parametrize("n", range(3, 9))
def test_count_prefix_matches_brute_force(n):
    brute = brute_prefix_counts("menage", n)
    for alpha in injective_prefixes(n):
        assert count_prefix_m(n, alpha) == brute[alpha], alpha


@pytest.mark.parametrize("n", range(3, 9))
def test_full_length_words(n):
    members = set(brute_members("menage", n))
    for w in injective_prefixes(n):
        if len(w) == n:
            assert count_prefix_m(n, w) == (1 if w in members else 0)


@pytest.mark.parametrize("n", range(3, 9))
def test_additivity(n):
    for alpha in injective_prefixes(n, n - 1):
        children = sum(count_prefix_m(n, alpha + (x,)) for x in range(1, n + 1))
        assert count_prefix_m(n, alpha) == children


def test_invalid_words_count_zero():
    for alpha in [(2, 2), (3, 1, 3), (9,), (0,), (2, 4, 1, 5, 3, 6)]:
        assert count_prefix_m(5, alpha) == 0


@pytest.mark.parametrize("k", range(15))
def test_staircases_are_fibonacci(k):
    kinds = ("O", "OT") if k % 2 else ("E", "ET")
    for kind in kinds:
        board = staircase(kind, k)
        assert len(board) == k
        assert rook_polynomial(board) == fibonacci_polynomial(k)


@pytest.mark.parametrize("n", range(3, 13))
def test_single_letter_blocks(n):
    for a in range(2, n):
        sizes = block_sizes(n, (a,))
        assert sorted(sizes) == sorted([2 * a - 3, 2 * n - 2 * a - 1])
        comp = complement(derived_board(Board.menage(n), (a,)))
        assert Counter(len(p) for p in components(comp)) == Counter(s for s in sizes if s)


@pytest.mark.parametrize("n", range(3, 9))
def test_blocks_are_staircases(n):
    board = Board.menage(n)
    for alpha in injective_prefixes(n):
        if not alpha or not is_valid_prefix_m(n, alpha):
            continue
        parts = components(complement(derived_board(board, alpha)))
        assert Counter(len(p) for p in parts) == Counter(s for s in block_sizes(n, alpha) if s)
        for p in parts:
            assert staircase_kind(p) is not None, (alpha, p)


def touchard(n):
    """Closed form for the number of ménage permutations of 1..n."""
    return sum(
        (-1) ** k * 2 * n * math.comb(2 * n - k, k) * math.factorial(n - k) // (2 * n - k)
        for k in range(n + 1)
    )


MENAGE_NUMBERS = [1, 2, 13, 80, 579, 4738, 43387, 439792, 4890741, 59216642]


def test_menage_numbers():
    got = [count_prefix_m(n, ()) for n in range(3, 13)]
    assert got == MENAGE_NUMBERS
    for n in range(3, 10):
        assert len(brute_members("menage", n)) == MENAGE_NUMBERS[n - 3]
    for n in range(3, 13):
        assert touchard(n) == MENAGE_NUMBERS[n - 3]


@pytest.mark.parametrize("n", [10, 11, 12])
def test_menage_numbers_by_permanent(n):
    assert permanent_count(Board.menage(n)) == MENAGE_NUMBERS[n - 3]


def test_family_contract():
    f = MenageFamily(5)
    assert f.contains((3, 4, 5, 1, 2))
    assert f.contains((2, 3, 4, 5, 1))
    assert not f.contains((5, 1, 2, 3, 4))  # p(1) + 1 = 6 = 1 (mod 5)
    assert not f.contains((3, 4, 5, 1))
    assert not f.quick_letter_ok(1, 5)
    assert not f.quick_letter_ok(3, 2)
    assert f.quick_letter_ok(3, 1)
    with pytest.raises(ValueError):
        MenageFamily(2)

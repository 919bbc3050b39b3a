import pytest

from conftest import brute_prefix_counts, injective_prefixes
from restrictedperm.derangements import (
    DerangementFamily,
    complement_size_d,
    count_prefix_d,
    is_valid_prefix_d,
)
from restrictedperm.errors import InvalidPrefixError
from restrictedperm.rooks import Board, complement, derived_board, rook_polynomial, stanley_count


def test_valid_prefix():
    assert is_valid_prefix_d(8, (2, 5))
    assert not is_valid_prefix_d(8, (2, 2))
    assert not is_valid_prefix_d(8, (1,))
    assert not is_valid_prefix_d(8, (1, 3))
    assert not is_valid_prefix_d(3, (2, 3, 1, 4))
    assert not is_valid_prefix_d(3, (4,))


def test_complement_size():
    assert complement_size_d(12, (6, 1)) == 9
    assert complement_size_d(8, (2,)) == 6
    assert complement_size_d(8, ()) == 8
    with pytest.raises(InvalidPrefixError):
        complement_size_d(8, (1,))


@pytest.mark.parametrize("n, alpha, expected", [
    (12, (6, 1), 1468457),
    (8, (2,), 2119),
    (8, (2, 5, 4, 8), 14),
    (8, (), 14833),
    (8, (1,), 0),
    (8, (2, 2), 0),
    (8, (2, 5, 4, 8, 7, 3, 6, 1), 1),
])
def test_count_prefix(n, alpha, expected):
    assert count_prefix_d(n, alpha) == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_count_prefix_matches_brute_force(n):
    brute = brute_prefix_counts("derangement", n)
    for alpha in injective_prefixes(n):
        assert count_prefix_d(n, alpha) == brute[alpha], alpha


def test_invalid_words_count_zero():
    # repeated or out-of-range letters, and over-long words
    for alpha in [(2, 2), (3, 1, 3), (9,), (0,), (2, 1, 4, 3, 5)]:
        assert count_prefix_d(4, alpha) == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_additivity(n):
    for alpha in injective_prefixes(n, n - 1):
        children = sum(count_prefix_d(n, alpha + (x,)) for x in range(1, n + 1))
        assert count_prefix_d(n, alpha) == children


@pytest.mark.parametrize("n", range(3, 9))
def test_matches_rook_route(n):
    board = Board.derangement(n)
    for alpha in injective_prefixes(n):
        if is_valid_prefix_d(n, alpha):
            slow = stanley_count(rook_polynomial(complement(derived_board(board, alpha))), n - len(alpha))
            assert count_prefix_d(n, alpha) == slow


def test_derangement_numbers_recurrence():
    d = {n: count_prefix_d(n, ()) for n in range(1, 31)}
    assert d[1] == 0 and d[2] == 1
    for n in range(3, 31):
        assert d[n] == (n - 1) * (d[n - 1] + d[n - 2])


def test_family_contract():
    f = DerangementFamily(5)
    assert f.contains((2, 1, 4, 5, 3))
    assert not f.contains((2, 1, 4, 5))
    assert not f.quick_letter_ok(3, 3)
    assert f.quick_letter_ok(3, 1)
    with pytest.raises(ValueError):
        DerangementFamily(1)

"""Lexicographic ranking and unranking of derangements and ménage permutations."""

from .derangements import DerangementFamily, complement_size_d, count_prefix_d, is_valid_prefix_d
from .engine import (
    EngineState,
    PrefixCountFamily,
    enumerate_range,
    rank,
    sample_uniform,
    successor,
    total_count,
    trace_unrank,
    unrank,
)
from .errors import (
    CapacityError,
    EmptyFamilyError,
    InconsistentInputError,
    IndexOutOfRangeError,
    InsufficientDataError,
    InvalidPrefixError,
    NotAMemberError,
    NotDisjointError,
    RestrictedPermError,
    WordRangeError,
)
from .menage import MenageFamily, block_sizes, column_weight, count_prefix_m, fibonacci_polynomial, is_valid_prefix_m
from .words import format_word, parse_word

__version__ = "0.1.0"

"""Brute-force oracles shared by the test modules.

Nothing here calls the package's counting code: members are found by
filtering all ``n!`` permutations against the defining constraints.
"""

from collections import Counter
from functools import lru_cache
from itertools import permutations


def is_derangement(p):
    return all(x != i for i, x in enumerate(p, start=1))


def is_menage(p):
    n = len(p)
    return all(x != i and (x + 1 - i) % n != 0 for i, x in enumerate(p, start=1))


PREDICATES = {"derangement": is_derangement, "menage": is_menage}


@lru_cache(maxsize=None)
def brute_members(kind, n):
    """Sorted members of the family among permutations of 1..n."""
    pred = PREDICATES[kind]
    return tuple(p for p in permutations(range(1, n + 1)) if pred(p))


@lru_cache(maxsize=None)
def brute_prefix_counts(kind, n):
    counts = Counter()
    for p in brute_members(kind, n):
        for cut in range(n + 1):
            counts[p[:cut]] += 1
    return counts


def injective_prefixes(n, max_len=None):
    """Every word over 1..n without repeated letters, up to ``max_len`` letters."""
    max_len = n if max_len is None else max_len
    yield ()
    for ell in range(1, max_len + 1):
        yield from permutations(range(1, n + 1), ell)


_acceptance_results = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance_results.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance_results:
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status} {name} ({duration:.2f}s)")

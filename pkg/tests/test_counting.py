from collections import Counter

import pytest

from trafficmerge import DomainError, bounce_bounds, m_count_closed, m_count_k_closed, m_count_k_recursive, m_count_recursive, t_count
from trafficmerge.counting import binomial, m_count_k_region
from trafficmerge.oracle import tally

from reference import KPATHS_SIX, PATH_COUNTS


@pytest.mark.parametrize("n, m, expected", [(0, 0, 1), (1, 2, 6), (3, 5, 112), (4, 4, 70), (5, 5, 252), (0, 3, 2), (0, 9, 2)])
def test_path_counts(n, m, expected):
    assert m_count_recursive(n, m) == expected
    assert m_count_closed(n, m) == expected


def test_path_counts_grid():
    for m, row in PATH_COUNTS.items():
        for n, value in enumerate(row):
            assert m_count_closed(n, m) == value


def test_closed_rejects_below_diagonal():
    with pytest.raises(DomainError):
        m_count_closed(3, 2)


def test_recursive_and_closed_agree_widely():
    for m in range(25):
        for n in range(m + 1):
            assert m_count_recursive(n, m) == m_count_closed(n, m)


@pytest.mark.parametrize("n, m, k, expected", [(2, 3, 1, 5), (1, 4, 2, 1), (0, 1, 0, 1)])
def test_k_recursive_examples(n, m, k, expected):
    assert m_count_k_recursive(n, m, k) == expected


@pytest.mark.parametrize("n, m, k, expected", [(4, 5, 2, 35), (5, 5, 3, 75), (6, 6, 6, 132), (7, 7, 6, 1001)])
def test_k_closed_examples(n, m, k, expected):
    assert m_count_k_closed(n, m, k) == expected


def test_k_closed_outside_regions():
    with pytest.raises(DomainError, match="m > k"):
        m_count_k_closed(1, 3, 5)
    assert m_count_k_region(1, 3, 5) is None


def test_k_closed_matches_recursive_in_every_region():
    for m in range(14):
        for n in range(m + 1):
            for k in range(m + 1):
                if m_count_k_region(n, m, k) is not None:
                    assert m_count_k_closed(n, m, k) == m_count_k_recursive(n, m, k), (n, m, k)


def test_k_six_block():
    for m, row in KPATHS_SIX.items():
        for n, value in enumerate(row):
            assert m_count_k_recursive(n, m, 6) == value


def test_k_counts_sum_to_path_counts():
    for m in range(10):
        for n in range(m + 1):
            assert sum(m_count_k_recursive(n, m, k) for k in range(m + 1)) == m_count_closed(n, m)


def test_t_count_example():
    assert t_count(9, 3, 2) == binomial(9, 2) == 36


@pytest.mark.parametrize("args", [(6, 0, 2), (6, 2, 1), (4, 0, 0)])
def test_t_count_preconditions(args):
    with pytest.raises(DomainError):
        t_count(*args)


def test_t_count_brute_force():
    for length in range(1, 13):
        t = tally(length)
        for k in range(length + 1):
            for s in range(1, length + 1):
                m = k + s
                if not (m > length - m >= 0):
                    continue
                brute = sum(c for (_, _, kk, b), c in t.items() if kk == k and b >= s)
                assert t_count(length, s, k) == brute, (length, s, k)


@pytest.mark.parametrize("length, k, lo, hi", [(8, 4, 0, 2), (5, 1, 2, 2)])
def test_bounce_bounds_examples(length, k, lo, hi):
    bounds = bounce_bounds(length, k)
    assert (bounds.lo, bounds.hi) == (lo, hi)


def test_bounce_bounds_hold_exhaustively():
    for length in range(15):
        seen: Counter = Counter()
        for (_, _, k, b), count in tally(length).items():
            assert b in bounce_bounds(length, k), (length, k, b)
            seen[k] += count
        assert sum(seen.values()) == 2**length


def test_bounce_bounds_domain():
    with pytest.raises(DomainError):
        bounce_bounds(3, 4)

import pytest

from rgfaudit.core import is_valid_rgf, is_weakly_increasing
from rgfaudit.enumeration import (
    Constraint,
    bell,
    bell_triangle,
    binom,
    count_weakly_increasing,
    iterate_rgfs,
    prefixes,
    stirling2,
)

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147]


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_match_bell(n):
    words = list(iterate_rgfs(n))
    assert len(words) == BELL[n] == bell(n) == bell_triangle(n)
    assert words == sorted(words)
    assert all(is_valid_rgf(w) for w in words)


def test_stirling_rows():
    assert [stirling2(5, k) for k in range(6)] == [0, 1, 15, 25, 10, 1]
    assert all(sum(stirling2(n, k) for k in range(n + 1)) == bell(n) for n in range(12))


@pytest.mark.parametrize("n,m", [(6, 1), (6, 3), (7, 4), (5, 5)])
def test_constraints(n, m):
    exact = list(iterate_rgfs(n, Constraint(exact_max=m)))
    assert len(exact) == stirling2(n, m)
    wi = list(iterate_rgfs(n, Constraint(weakly_increasing=True, exact_max=m)))
    assert all(is_weakly_increasing(w) and max(w) == m for w in wi)
    assert len(wi) == count_weakly_increasing(n, m) == binom(n - 1, m - 1)


def test_prefix_chunks_partition_the_stream():
    n = 7
    chunks = [w for p in prefixes(n, 3) for w in iterate_rgfs(n, prefix=p)]
    assert chunks == list(iterate_rgfs(n))


def test_bad_prefix_is_empty():
    assert list(iterate_rgfs(4, prefix=(1, 3))) == []

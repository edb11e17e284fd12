"""Lexicographic RGF streams and exact counting helpers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Optional

from .core import InvalidInput, Word


@dataclass(frozen=True)
class Constraint:
    """Optional restrictions on an RGF stream.

    ``max_letter`` bounds every letter, ``exact_max`` fixes m, and
    ``weakly_increasing`` keeps only words of the form 1^a1 2^a2 ... m^am.
    """

    weakly_increasing: bool = False
    exact_max: Optional[int] = None
    max_letter: Optional[int] = None


def iterate_rgfs(n: int, constraint: Optional[Constraint] = None,
                 prefix: Word = (1,)) -> Iterator[Word]:
    """Yield every RGF of length n (optionally constrained) in lexicographic order.

    ``prefix`` restricts the stream to words starting with it, which lets
    callers split the work into independent chunks.
    """
    if n < 1:
        raise InvalidInput("n must be >= 1")
    c = constraint or Constraint()
    bound = c.max_letter
    if c.exact_max is not None:
        bound = c.exact_max if bound is None else min(bound, c.exact_max)
    if not prefix or prefix[0] != 1 or len(prefix) > n:
        return
    w = list(prefix)
    top = 0
    for i, a in enumerate(w):
        if a < 1 or a > top + 1 or (bound is not None and a > bound):
            return
        if c.weakly_increasing and i and a < w[i - 1]:
            return
        top = max(top, a)
    yield from _extend(w, top, n, c, bound)


def _extend(w, top, n, c, bound):
    if len(w) == n:
        if c.exact_max is None or top == c.exact_max:
            yield tuple(w)
        return
    remaining = n - len(w)
    if c.exact_max is not None and top + remaining < c.exact_max:
        return
    lo = w[-1] if c.weakly_increasing else 1
    hi = top + 1 if bound is None else min(top + 1, bound)
    for a in range(lo, hi + 1):
        w.append(a)
        yield from _extend(w, max(top, a), n, c, bound)
        w.pop()


def prefixes(n: int, length: int) -> list:
    """All valid RGF prefixes of the given length (the chunk keys for ``iterate_rgfs``)."""
    return list(iterate_rgfs(min(length, n)))


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1)."""
    if n < 0 or k < 0:
        raise InvalidInput("negative argument")
    if k > n:
        return 0
    if n == k:
        return 1
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    if n < 0:
        raise InvalidInput("negative argument")
    return sum(stirling2(n, k) for k in range(n + 1))


def bell_triangle(n: int) -> int:
    """Bell number via the Aitken array; an independent route to ``bell``."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def binom(n: int, k: int) -> int:
    """Binomial coefficient that is 0 outside 0 <= k <= n (including negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def count_weakly_increasing(n: int, m: int) -> int:
    """Number of weakly increasing RGFs of length n with exactly m letters."""
    if m < 1 or n < 1 or m > n:
        return 0
    return comb(n - 1, n - m)

"""Brute-force containment oracle and avoidance classes.

``contains`` follows the definition literally: restrict the partition to a
k-subset, standardize, compare.  Avoidance classes are grown letter by letter;
containment is inherited by extensions, so a prefix that already contains a
pattern is pruned and only subsets through the newest position need checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .core import (
    InvalidInput,
    Partition,
    Word,
    as_partition,
    canonical,
    complement,
    format_partition,
    parse_partition,
    partition_from_rgf,
    restrict,
    rgf_from_partition,
    standardize,
)
from .enumeration import iterate_rgfs


@dataclass(frozen=True, order=True)
class Pattern:
    """A set partition used as an avoidance target, keyed by its RGF."""

    word: Word

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        return cls.from_partition(parse_partition(text))

    @classmethod
    def from_partition(cls, blocks) -> "Pattern":
        return cls(rgf_from_partition(standardize(blocks)))

    @property
    def partition(self) -> Partition:
        return partition_from_rgf(self.word)

    @property
    def size(self) -> int:
        return len(self.word)

    def complement(self) -> "Pattern":
        return Pattern(rgf_from_partition(complement(self.partition)))

    def __str__(self) -> str:
        return format_partition(self.partition)


def as_pattern(p) -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, str):
        return Pattern.parse(p)
    return Pattern.from_partition(p)


def pattern_set(patterns) -> tuple:
    """Normalize an iterable of patterns (or a '+'/','-separated string) to a sorted tuple."""
    if isinstance(patterns, (str, Pattern)):
        patterns = split_patterns(patterns) if isinstance(patterns, str) else [patterns]
    return tuple(sorted({as_pattern(p) for p in patterns}, key=lambda q: (q.size, q.word)))


def split_patterns(text: str) -> list:
    parts = [t.strip() for t in text.replace("+", ",").split(",")]
    if not all(parts):
        raise InvalidInput(f"bad pattern list {text!r}")
    return parts


def set_name(patterns) -> str:
    return "+".join(str(p) for p in pattern_set(patterns))


def all_patterns(k: int) -> list:
    """Every set partition of [k], as patterns, in RGF order."""
    return [Pattern(w) for w in iterate_rgfs(k)]


# -- the oracle --------------------------------------------------------------

def contains(p: Partition, pat) -> bool:
    """True iff some k-subset of [n] restricts and standardizes to ``pat``."""
    pat = as_pattern(pat)
    p = as_partition(p)
    n = sum(len(b) for b in p)
    k = pat.size
    if k > n:
        return False
    target = pat.partition
    for subset in combinations(range(1, n + 1), k):
        if standardize(restrict(p, subset)) == target:
            return True
    return False


def avoids(p: Partition, pat) -> bool:
    return not contains(p, pat)


def word_contains(w: Word, pat) -> bool:
    """Same predicate as ``contains`` computed on the word.

    The restriction of w's partition to positions A standardizes to the RGF
    obtained by relabelling the subword w[A] in order of first appearance.
    """
    target = as_pattern(pat).word
    k = len(target)
    if k > len(w):
        return False
    for idx in combinations(range(len(w)), k):
        if canonical([w[i] for i in idx]) == target:
            return True
    return False


def _hits_through_last(w: list, targets: frozenset, sizes: tuple) -> bool:
    last = len(w) - 1
    x = w[last]
    for k in sizes:
        if k - 1 > last:
            continue
        for idx in combinations(range(last), k - 1):
            if canonical([w[i] for i in idx] + [x]) in targets:
                return True
    return False


def _grow(w: list, top: int, n: int, targets: frozenset, sizes: tuple) -> Iterator[Word]:
    if len(w) == n:
        yield tuple(w)
        return
    for a in range(1, top + 2):
        w.append(a)
        if not _hits_through_last(w, targets, sizes):
            yield from _grow(w, max(top, a), n, targets, sizes)
        w.pop()


def iter_avoiders(n: int, patterns, prefix: Word = (1,)) -> Iterator[Word]:
    """Lexicographic stream of RGFs of length n avoiding every pattern."""
    if n < 1:
        raise InvalidInput("n must be >= 1")
    pats = pattern_set(patterns)
    targets = frozenset(p.word for p in pats)
    sizes = tuple(sorted({p.size for p in pats}))
    w: list = []
    top = 0
    for a in prefix[:n]:
        if a < 1 or a > top + 1:
            return
        w.append(a)
        top = max(top, a)
        if _hits_through_last(w, targets, sizes):
            return
    yield from _grow(w, top, n, targets, sizes)


@dataclass(frozen=True)
class AvoidanceClass:
    n: int
    patterns: tuple
    members: tuple

    @property
    def name(self) -> str:
        return set_name(self.patterns) if self.patterns else "(none)"

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._index

    @property
    def _index(self) -> frozenset:
        return _member_index(self.n, self.patterns)


@lru_cache(maxsize=256)
def _member_index(n: int, pats: tuple) -> frozenset:
    return frozenset(_class_members(n, pats))


@lru_cache(maxsize=4096)
def _class_members(n: int, pats: tuple) -> tuple:
    return tuple(iter_avoiders(n, pats))


def avoidance_class(n: int, patterns) -> AvoidanceClass:
    pats = pattern_set(patterns) if patterns else ()
    if n < 1:
        raise InvalidInput("n must be >= 1")
    return AvoidanceClass(n, pats, _class_members(n, pats))


def count_avoiders(n: int, patterns) -> int:
    return len(avoidance_class(n, patterns).members)


def brute_force_class(n: int, patterns: Iterable) -> tuple:
    """Reference filter over all of R_n using the partition-level oracle."""
    pats = pattern_set(patterns) if patterns else ()
    return tuple(w for w in iterate_rgfs(n)
                 if not any(contains(partition_from_rgf(w), p) for p in pats))

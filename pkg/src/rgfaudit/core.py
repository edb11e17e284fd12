"""Set partitions, restricted growth functions and the conversions between them.

Words are plain tuples of positive ints (``(1, 2, 2, 3, 2, 3)``) and partitions
are tuples of sorted blocks ordered by block minimum.  Everything here is a pure
function on immutable values.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]
Partition = tuple  # tuple[tuple[int, ...], ...]


class InvalidInput(ValueError):
    """Raised when an argument violates an operation's precondition."""


class LetterClass(str, Enum):
    BLOCK = "block"
    BLOCK_SINGLETON = "block-singleton"
    SINGLETON_BLOCK = "singleton-block"
    OTHER = "other"


# -- words -------------------------------------------------------------------

def is_valid_rgf(letters: Sequence[int]) -> bool:
    if len(letters) == 0:
        raise InvalidInput("empty sequence")
    top = 0
    for a in letters:
        if not isinstance(a, int) or a < 1 or a > top + 1:
            return False
        top = max(top, a)
    return True


def as_word(letters: Iterable[int]) -> Word:
    w = tuple(int(a) for a in letters)
    if not w or not is_valid_rgf(w):
        raise InvalidInput(f"not a restricted growth function: {w!r}")
    return w


def word_key(w: Word) -> tuple:
    """Canonical total order on words: length first, then lexicographic."""
    return (len(w), w)


def multiplicities(w: Word) -> tuple:
    """(a_1, ..., a_m): how often each letter occurs."""
    c = Counter(w)
    return tuple(c[i] for i in range(1, max(w) + 1))


def is_weakly_increasing(w: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def runs(w: Sequence[int]) -> list:
    """Maximal runs of equal letters as (letter, start, length), 0-based."""
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append((w[i], i, j - i))
        i = j
    return out


def canonical(seq: Sequence) -> Word:
    """Relabel a sequence by order of first appearance (its RGF standard form)."""
    seen: dict = {}
    out = []
    for a in seq:
        if a not in seen:
            seen[a] = len(seen) + 1
        out.append(seen[a])
    return tuple(out)


# -- partitions --------------------------------------------------------------

def _check_blocks(blocks) -> list:
    bl = [tuple(sorted(int(x) for x in b)) for b in blocks]
    if any(len(b) == 0 for b in bl):
        raise InvalidInput("empty block")
    flat = [x for b in bl for x in b]
    if len(flat) != len(set(flat)):
        raise InvalidInput("blocks overlap")
    return bl


def as_partition(blocks) -> Partition:
    """Validate a partition of [n] and put it in min-increasing block order."""
    bl = _check_blocks(blocks)
    flat = sorted(x for b in bl for x in b)
    if flat != list(range(1, len(flat) + 1)) or not flat:
        raise InvalidInput(f"blocks do not cover [n]: {blocks!r}")
    return tuple(sorted(bl, key=lambda b: b[0]))


def rgf_from_partition(p: Partition) -> Word:
    n = sum(len(b) for b in p)
    w = [0] * n
    for j, block in enumerate(sorted(p, key=min), start=1):
        for i in block:
            w[i - 1] = j
    return tuple(w)


def partition_from_rgf(w: Word) -> Partition:
    blocks: dict = {}
    for i, a in enumerate(w, start=1):
        blocks.setdefault(a, []).append(i)
    return tuple(tuple(blocks[a]) for a in sorted(blocks))


def complement(p: Partition) -> Partition:
    n = sum(len(b) for b in p)
    return tuple(sorted((tuple(sorted(n - x + 1 for x in b)) for b in p), key=lambda b: b[0]))


def complement_word(w: Word) -> Word:
    return rgf_from_partition(complement(partition_from_rgf(w)))


def restrict(p: Partition, subset) -> list:
    """Blocks of ``p`` intersected with ``subset``; empty intersections dropped."""
    a = set(subset)
    n = sum(len(b) for b in p)
    if any(x < 1 or x > n for x in a):
        raise InvalidInput(f"subset not contained in [1..{n}]")
    out = []
    for b in p:
        kept = tuple(x for x in b if x in a)
        if kept:
            out.append(kept)
    return out


def standardize(blocks) -> Partition:
    """Order-isomorphic relabelling of disjoint blocks onto [k]."""
    bl = _check_blocks(blocks)
    rank = {x: i for i, x in enumerate(sorted(x for b in bl for x in b), start=1)}
    return tuple(sorted((tuple(rank[x] for x in b) for b in bl), key=lambda b: b[0]))


# -- letter classification ---------------------------------------------------

def classify_letters(w: Word) -> dict:
    """Map each distinct letter to the frozenset of LetterClass values it has.

    A letter whose occurrences form a single run is a block letter (this
    includes letters occurring once).  Block-singleton: one run, then exactly
    one more occurrence after some other letter.  Singleton-block: a single
    occurrence, then after some other letter one final run.  A letter with
    exactly two isolated occurrences is both block-singleton and
    singleton-block; anything else is OTHER.
    """
    letter_runs: dict = {}
    for a, _start, length in runs(w):
        letter_runs.setdefault(a, []).append(length)
    out = {}
    for a in sorted(letter_runs):
        rl = letter_runs[a]
        kinds = set()
        if len(rl) == 1:
            kinds.add(LetterClass.BLOCK)
        elif len(rl) == 2:
            if rl[1] == 1:
                kinds.add(LetterClass.BLOCK_SINGLETON)
            if rl[0] == 1:
                kinds.add(LetterClass.SINGLETON_BLOCK)
        out[a] = frozenset(kinds or {LetterClass.OTHER})
    return out


def letters_of_class(w: Word, cls: LetterClass) -> set:
    return {a for a, kinds in classify_letters(w).items() if cls in kinds}


# -- text forms --------------------------------------------------------------

def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        raise InvalidInput("empty word")
    if any(ch.isspace() for ch in text) or "," in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        return as_word(int(x) for x in parts)
    except ValueError as exc:
        raise InvalidInput(f"cannot parse word {text!r}") from exc


def format_word(w: Sequence[int]) -> str:
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return " ".join(str(a) for a in w)


def parse_partition(text: str) -> Partition:
    """Parse ``1246/37/5`` or ``1,2,4,6/3,7/5``."""
    blocks = []
    for chunk in text.strip().split("/"):
        chunk = chunk.strip()
        if not chunk:
            raise InvalidInput(f"empty block in {text!r}")
        parts = chunk.split(",") if "," in chunk else list(chunk)
        try:
            blocks.append([int(x) for x in parts])
        except ValueError as exc:
            raise InvalidInput(f"cannot parse partition {text!r}") from exc
    return as_partition(blocks)


def format_partition(p: Partition) -> str:
    n = sum(len(b) for b in p)
    sep = "" if n <= 9 else ","
    return "/".join(sep.join(str(x) for x in b) for b in p)

"""Equidistribution of statistics across avoidance classes.

A claim ``(A, s) ~ (B, t)`` holds at n when the distribution of s over
R_n(A) equals the distribution of t over R_n(B).  Everything here is a
finite check; reports always say up to which n a claim was verified.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from .avoid import all_patterns, avoidance_class, contains, count_avoiders, pattern_set, set_name
from .core import InvalidInput
from .stats import KINDS, StatKind, distribution


def _side(spec):
    """Normalize (patterns, kind) to (canonical set name, StatKind)."""
    pats, kind = spec
    return set_name(pats), StatKind.parse(kind)


@lru_cache(maxsize=8192)
def _dist(name: str, kind: StatKind, n: int):
    return distribution(avoidance_class(n, name), kind, n, descriptor=name)


def equidistributed(left, right, n: int) -> bool:
    """Exact equality of the two distributions at length n."""
    (a, s), (b, t) = _side(left), _side(right)
    return _dist(a, s, n) == _dist(b, t, n)


# named claims with descriptive ids
def _claim(a, s, b, t):
    return (set_name(a), StatKind.parse(s)), (set_name(b), StatKind.parse(t))


_PAIR_14 = ("14/2/3+1/24/3", "14/2/3+13/2/4")
KNOWN_CLAIMS = {
    "split-classes:ls~rb": _claim("13/2/4", "ls", "1/24/3", "rb"),
    "split-classes:rb~ls": _claim("13/2/4", "rb", "1/24/3", "ls"),
    "split-classes:lb~lb": _claim("13/2/4", "lb", "1/24/3", "lb"),
    "split-classes:rs~rs": _claim("13/2/4", "rs", "1/24/3", "rs"),
    "flip:ls~ls": _claim("124/3", "ls", "134/2", "ls"),
    "increasing-pairs:rb~ls": _claim("12/3+1/24/3", "rb", "1/23+13/2/4", "ls"),
    "increasing-pairs:rs~lb": _claim("12/3+1/24/3", "rs", "1/23+13/2/4", "lb"),
    "flip-with-1/24/3:ls~ls": _claim("1/24/3+134/2", "ls", "1/24/3+124/3", "ls"),
    "flip-with-1/24/3:rs~rs": _claim("1/24/3+134/2", "rs", "1/24/3+124/3", "rs"),
    "flip-with-13/2/4:ls~ls": _claim("13/2/4+134/2", "ls", "13/2/4+124/3", "ls"),
    "flip-with-13/2/4:rs~rs": _claim("13/2/4+134/2", "rs", "13/2/4+124/3", "rs"),
    "with-14/2/3:lb~rs": _claim(_PAIR_14[0], "lb", _PAIR_14[0], "rs"),
    "with-14/2/3:rs~lb": _claim(_PAIR_14[0], "rs", _PAIR_14[1], "lb"),
    "with-14/2/3:lb~rs'": _claim(_PAIR_14[1], "lb", _PAIR_14[1], "rs"),
    "with-14/2/3:ls~rb": _claim(_PAIR_14[0], "ls", _PAIR_14[1], "rb"),
    "with-14/2/3:rb~ls": _claim(_PAIR_14[0], "rb", _PAIR_14[1], "ls"),
}


def _key(left, right):
    """Symmetric key: the two sides in a fixed order."""
    (a, s), (b, t) = left, right
    return tuple(sorted([(a, s.value), (b, t.value)]))


_KNOWN_BY_KEY = {_key(*v): k for k, v in KNOWN_CLAIMS.items()}


@dataclass
class EquiClaim:
    left: tuple  # (set name, StatKind)
    right: tuple
    verdicts: dict = field(default_factory=dict)  # n -> bool

    @property
    def n_checked(self) -> list:
        return sorted(self.verdicts)

    @property
    def holds(self) -> bool:
        return all(self.verdicts.values())

    @property
    def failing_n(self):
        bad = [n for n, ok in sorted(self.verdicts.items()) if not ok]
        return bad[0] if bad else None

    @property
    def verified_to(self):
        """Largest n such that every length up to n agrees."""
        top = None
        for n in self.n_checked:
            if not self.verdicts[n]:
                break
            top = n
        return top

    @property
    def tag(self) -> str:
        return _KNOWN_BY_KEY.get(_key(self.left, self.right), "novel")

    @property
    def trivial(self) -> bool:
        return self.left == self.right

    def label(self) -> str:
        (a, s), (b, t) = self.left, self.right
        return f"{s.value.upper()}({a}) ~ {t.value.upper()}({b})"

    def to_dict(self) -> dict:
        return {"left": [self.left[0], self.left[1].value],
                "right": [self.right[0], self.right[1].value],
                "tag": self.tag, "holds": self.holds, "verified_to": self.verified_to,
                "failing_n": self.failing_n,
                "verdicts": {str(n): v for n, v in sorted(self.verdicts.items())}}


def check_claim(left, right, n_max: int, n_min: int = 1, stop: bool = False) -> EquiClaim:
    c = EquiClaim(_side(left), _side(right))
    for n in range(n_min, n_max + 1):
        c.verdicts[n] = equidistributed(c.left, c.right, n)
        if stop and not c.verdicts[n]:
            break
    return c


def check_known(n_max: int = 8) -> dict:
    return {cid: check_claim(l, r, n_max) for cid, (l, r) in KNOWN_CLAIMS.items()}


def _cell(args):
    name, n = args
    return name, n, {k: _dist(name, k, n).counts for k in KINDS}


def scan(pattern_sets, kinds=KINDS, n_max: int = 7, workers: int = 1,
         keep_failed: bool = False) -> list:
    """Every (class, stat) pair whose distributions agree for all n <= n_max.

    Pairs are unordered and include a class with itself.  With
    ``keep_failed`` the dropped candidates come back too, each with the
    first n at which it failed.
    """
    names = sorted({set_name(p) for p in pattern_sets})
    kinds = sorted({StatKind.parse(k) for k in kinds}, key=lambda k: KINDS.index(k))
    sides = [(a, k) for a in names for k in kinds]
    cells = [(a, n) for n in range(1, n_max + 1) for a in names]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            got = list(ex.map(_cell, cells))
    else:
        got = [_cell(c) for c in cells]
    counts = {(a, n, k): d[k] for a, n, d in got for k in kinds}
    out = []
    for left, right in combinations_with_replacement(sides, 2):
        c = EquiClaim(left, right)
        for n in range(1, n_max + 1):
            ok = counts[(left[0], n, left[1])] == counts[(right[0], n, right[1])]
            c.verdicts[n] = ok
            if not ok:
                break
        if c.holds or keep_failed:
            out.append(c)
    return out


def scan_json(claims) -> str:
    return json.dumps([c.to_dict() for c in claims], indent=2)


# -- complement conjecture for pattern pairs ---------------------------------

@dataclass
class ConjectureRow:
    pi1: str
    pi2: str
    case: str  # "i", "ii", "neither", "degenerate"
    left: str = ""
    right: str = ""
    left_counts: tuple = ()
    right_counts: tuple = ()

    @property
    def tested(self) -> bool:
        return self.case in ("i", "ii")

    @property
    def first_failure(self):
        for n, (a, b) in enumerate(zip(self.left_counts, self.right_counts), 1):
            if a != b:
                return n
        return None

    @property
    def verdict(self) -> str:
        if not self.tested:
            return "excluded"
        return "holds" if self.first_failure is None else "fails"

    def to_dict(self) -> dict:
        return {"pi1": self.pi1, "pi2": self.pi2, "case": self.case,
                "left": self.left, "right": self.right,
                "left_counts": list(self.left_counts),
                "right_counts": list(self.right_counts),
                "verdict": self.verdict, "first_failure": self.first_failure}


@dataclass
class ConjectureReport:
    k: int
    l: int
    n_max: int
    rows: list

    def summary(self) -> dict:
        out: dict = {}
        for r in self.rows:
            key = f"{r.case}:{r.verdict}"
            out[key] = out.get(key, 0) + 1
        return dict(sorted(out.items()))

    def failures(self) -> list:
        return [r for r in self.rows if r.verdict == "fails"]

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "l": self.l, "n_max": self.n_max,
                           "summary": self.summary(),
                           "rows": [r.to_dict() for r in self.rows]}, indent=2)

    def table(self, tested_only: bool = True) -> str:
        lines = [f"{'pi1':<10}{'pi2':<10}{'case':<11}{'verdict':<10}first_failure"]
        for r in self.rows:
            if tested_only and not r.tested:
                continue
            ff = "" if r.first_failure is None else str(r.first_failure)
            lines.append(f"{r.pi1:<10}{r.pi2:<10}{r.case:<11}{r.verdict:<10}{ff}")
        return "\n".join(lines)


@lru_cache(maxsize=None)
def _counts(name: str, n_max: int) -> tuple:
    return tuple(count_avoiders(n, name) for n in range(1, n_max + 1))


def classify_pair(p1, p2) -> str:
    """Conjecture case of (p1, p2), using the containment oracle on partitions."""
    if contains(p2.partition, p1):
        return "degenerate"
    if not contains(p2.complement().partition, p1):
        return "i"
    return "ii"


def check_conjecture(k: int, l: int, n_max: int = 8) -> ConjectureReport:
    if not 1 <= k <= l <= 4:
        raise InvalidInput("need 1 <= k <= l <= 4")
    rows = []
    for p1 in all_patterns(k):
        for p2 in all_patterns(l):
            case = classify_pair(p1, p2)
            row = ConjectureRow(str(p1), str(p2), case)
            if case == "i":
                row.left, row.right = set_name([p1, p2]), set_name([p1, p2.complement()])
            elif case == "ii":
                row.left = set_name([p1, p2])
                row.right = set_name([p1.complement(), p2.complement()])
            if row.tested:
                row.left_counts = _counts(row.left, n_max)
                row.right_counts = _counts(row.right, n_max)
            rows.append(row)
    return ConjectureReport(k, l, n_max, rows)

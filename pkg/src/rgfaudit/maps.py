"""Explicit bijections between avoidance classes and their verification.

Each map has a domain and codomain given as (class, sub-case predicate) and a
transport contract: pairs (s, t) such that t(map(w)) == s(w) pointwise.
``verify_bijection`` checks a map exhaustively at one length.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .avoid import avoidance_class, word_contains
from .classify import decompose, get_class
from .core import (
    InvalidInput,
    Word,
    classify_letters,
    complement_word,
    format_word,
    is_weakly_increasing,
    runs,
)
from .stats import KINDS, StatKind, distribution, stat

BS = "block-singleton"
SB = "singleton-block"


# -- sub-case predicates -----------------------------------------------------

def _max(w):
    return max(w)


def in_a1(w) -> bool:
    """13/2/4 or 1/24/3 member with m <= 2 or weakly increasing."""
    return _max(w) <= 2 or is_weakly_increasing(w)


def in_a2(w) -> bool:
    """13/2/4: weakly increasing word ending in m, then a run of z <= m-2."""
    if not get_class("13/2/4").predicate(w) or in_a1(w):
        return False
    d = decompose(w, "13/2/4")
    return d.case == "C" and d.params["z"] <= d.params["m"] - 2


def in_a3(w) -> bool:
    """13/2/4: after the first m only m-1 and m, with some m-1 after an m."""
    if not get_class("13/2/4").predicate(w) or in_a1(w):
        return False
    d = decompose(w, "13/2/4")
    return d.case == "D" or d.params["z"] == d.params["m"] - 1


def in_b2(w) -> bool:
    """1/24/3: a run of 1s inserted after the last x >= 3 of a weakly increasing word."""
    if not get_class("1/24/3").predicate(w) or in_a1(w):
        return False
    d = decompose(w, "1/24/3")
    return d.case == "C" and d.params["x"] >= 3


def in_b3(w) -> bool:
    """1/24/3: non-increasing prefix over {1,2}, weakly increasing from the first 3."""
    if not get_class("1/24/3").predicate(w) or in_a1(w):
        return False
    d = decompose(w, "1/24/3")
    return d.case == "D" or d.params["x"] == 2


def _member_of(cid):
    spec = get_class(cid)

    def pred(w):
        return not any(word_contains(w, p) for p in spec.patterns)
    pred.__doc__ = f"member of R_n({spec.name})"
    return pred


# -- F_COMPL: complement the increasing part, move the z-run to a 1-run -----

def _f_compl(w):
    m = max(w)
    z = w[-1]
    k = len(w)
    while w[k - 1] == z:
        k -= 1
    u, b = w[:k], len(w) - k
    base = complement_word(u)
    x = m - z + 1
    cut = len(base) - base[::-1].index(x)
    return base[:cut] + (1,) * b + base[cut:]


def _f_compl_inv(y):
    d = decompose(y, "1/24/3")
    cut, b, x = d.params["cut"], d.params["b1"], d.params["x"]
    base = y[:cut] + y[cut + b:]
    m = max(y)
    return complement_word(base) + (m - x + 1,) * b


# -- H_SWAP: shift the middle down, complement the prefix up ----------------

def _h_swap(w):
    m, z = max(w), w[-1]
    k = len(w)
    while w[k - 1] == z:
        k -= 1
    first_z = w.index(z)
    a, b, c = w[:first_z], w[first_z:k], len(w) - k
    top = tuple(x + (m - z + 1) for x in complement_word(a)) if a else ()
    return tuple(x - (z - 1) for x in b) + (1,) * c + top


def _h_swap_inv(y):
    d = decompose(y, "1/24/3")
    cut, c, x = d.params["cut"], d.params["b1"], d.params["x"]
    m = max(y)
    z = m - x + 1
    p, s = y[:cut], y[cut + c:]
    a = complement_word(tuple(v - x for v in s)) if s else ()
    return a + tuple(v + (z - 1) for v in p) + (z,) * c


# -- G_SWAP: reverse the {m-1, m} middle onto {2, 1} ------------------------

def _g_swap(w):
    m = max(w)
    last_low = max(i for i, v in enumerate(w) if v == m - 2)
    last_m = len(w) - 1 - w[::-1].index(m)
    a = w[:last_low + 1]
    b = w[last_low + 1:last_m + 1]
    k = len(w) - last_m - 1
    tilde = tuple(1 if v == m else 2 for v in reversed(b))
    return tilde + (1,) * k + tuple(v + 2 for v in complement_word(a))


def _g_swap_inv(y):
    m = max(y)
    f3 = y.index(3)
    prefix, suffix = y[:f3], y[f3:]
    k = 0
    while prefix[len(prefix) - 1 - k] == 1:
        k += 1
    tilde = prefix[:len(prefix) - k]
    b = tuple(m if v == 1 else m - 1 for v in reversed(tilde))
    a = complement_word(tuple(v - 2 for v in suffix))
    return a + b + (m - 1,) * k


# -- PHI_FLIP: block-singleton letters become singleton-block letters --------

def _letter_runs(w, a):
    return [(s, length) for x, s, length in runs(w) if x == a]


def _flip_once(w, a):
    (p, L), (s, _one) = _letter_runs(w, a)
    mid = w[p + L:s]
    return w[:p] + (a,) + mid + (a,) * L + w[s + 1:]


def _unflip_once(w, a):
    (p, _one), (t, L) = _letter_runs(w, a)
    mid = w[p + 1:t]
    return w[:p] + (a,) * L + mid + (a,) + w[t + L:]


def _flippable(w, kind):
    out = []
    for a, kinds in classify_letters(w).items():
        r = _letter_runs(w, a)
        if len(r) == 2 and r[0][1] + r[1][1] > 2 and any(k.value == kind for k in kinds):
            out.append(a)
    return out


def phi_flip(w):
    """Flip each block-singleton letter, smallest letter first."""
    w = tuple(w)
    for a in sorted(_flippable(w, BS)):
        w = _flip_once(w, a)
    return w


def phi_flip_inv(y):
    y = tuple(y)
    for a in sorted(_flippable(y, SB), reverse=True):
        y = _unflip_once(y, a)
    return y


# -- PHI_PAIR: swap prefix and suffix roles on 12/3+1/24/3 -------------------

def _phi_pair(w):
    m = max(w)
    if m == 1:
        return w
    b = w[m:]
    if all(v == m for v in b):
        return (1,) * (len(b) + 1) + tuple(range(2, m + 1))
    return (1,) * len(b) + tuple(range(2, m + 1)) + (1,)


def _phi_pair_inv(y):
    m = max(y)
    if m == 1:
        return y
    if y[-1] == 1:
        k = len(y) - m
        return tuple(range(1, m + 1)) + (1,) * k
    k = len(y) - m + 1
    return tuple(range(1, m)) + (m,) * k


# -- registry ------------------------------------------------------------------

@dataclass(frozen=True)
class Bijection:
    id: str
    domain_class: str
    codomain_class: str
    forward: Callable = field(repr=False)
    inverse: Callable = field(repr=False)
    domain: Callable = field(repr=False)
    codomain: Callable = field(repr=False)
    transports: tuple = ()  # (s, t): t(f(w)) == s(w)
    multiset: bool = False  # letter multiplicities preserved
    note: str = ""


def _in_class(cid):
    spec = get_class(cid)
    return lambda w: spec.predicate(w)


BIJECTIONS = {b.id: b for b in [
    Bijection("F_COMPL", "13/2/4", "1/24/3", _f_compl, _f_compl_inv, in_a2, in_b2,
              transports=(("ls", "rb"),),
              note="complement of the increasing part; the z-run becomes a 1-run after x = m-z+1"),
    Bijection("H_SWAP", "13/2/4", "1/24/3", _h_swap, _h_swap_inv, in_a2, in_b2,
              transports=(("rs", "rs"),),
              note="letters z..m shift down to 1.., the z-run becomes a 1-run, the prefix is complemented on top"),
    Bijection("G_SWAP", "13/2/4", "1/24/3", _g_swap, _g_swap_inv, in_a3, in_b3,
              transports=(("rb", "ls"),),
              note="the {m-1, m} middle is reversed onto {2, 1}, the prefix is complemented on top"),
    Bijection("PHI_FLIP", "134/2", "124/3", phi_flip, phi_flip_inv,
              _member_of("134/2"), _member_of("124/3"),
              transports=(("ls", "ls"),), multiset=True,
              note="each block-singleton letter becomes singleton-block"),
    Bijection("PHI_PAIR", "12/3+1/24/3", "1/23+13/2/4", _phi_pair, _phi_pair_inv,
              _member_of("12/3+1/24/3"), _member_of("1/23+13/2/4"),
              transports=(("rb", "ls"), ("rs", "lb"))),
]}

# PHI_FLIP restricted to pair classes; the contracts here are claims under test
CONTEXTS = {b.id: b for b in [
    Bijection("PHI_FLIP@1/24/3", "1/24/3+134/2", "1/24/3+124/3", phi_flip, phi_flip_inv,
              _member_of("1/24/3+134/2"), _member_of("1/24/3+124/3"),
              transports=(("ls", "ls"), ("rs", "rs")), multiset=True),
    Bijection("PHI_FLIP@13/2/4", "13/2/4+134/2", "13/2/4+124/3", phi_flip, phi_flip_inv,
              _member_of("13/2/4+134/2"), _member_of("13/2/4+124/3"),
              transports=(("ls", "ls"), ("rs", "rs")), multiset=True),
]}


def get_bijection(bid: str) -> Bijection:
    key = bid.strip().upper() if "@" not in bid else bid.strip()
    found = BIJECTIONS.get(key) or CONTEXTS.get(bid.strip())
    if found is None:
        raise InvalidInput(f"unknown bijection {bid!r}")
    return found


def apply(bid: str, w: Word) -> Word:
    b = get_bijection(bid)
    w = tuple(w)
    if not b.domain(w):
        raise InvalidInput(f"{format_word(w)} is not in the domain of {b.id}: "
                           f"{b.domain.__doc__ or b.domain_class}")
    return b.forward(w)


def apply_inverse(bid: str, y: Word) -> Word:
    b = get_bijection(bid)
    y = tuple(y)
    if not b.codomain(y):
        raise InvalidInput(f"{format_word(y)} is not in the codomain of {b.id}: "
                           f"{b.codomain.__doc__ or b.codomain_class}")
    return b.inverse(y)


# -- verification --------------------------------------------------------------

@dataclass
class BijectionReport:
    id: str
    n: int
    domain_size: int
    codomain_size: int
    checks: dict
    failures: dict
    transports: dict
    observed: list

    @property
    def ok(self) -> bool:
        return all(self.checks.values()) and all(self.transports.values())

    def to_dict(self) -> dict:
        return {"id": self.id, "n": self.n, "domain": self.domain_size,
                "codomain": self.codomain_size, "checks": self.checks,
                "transports": self.transports, "observed_transports": self.observed,
                "failures": self.failures, "ok": self.ok}


def _safe(fn, w):
    try:
        return fn(w)
    except (ValueError, IndexError, KeyError):
        return None


def verify_bijection(bid: str, n: int, keep: int = 5) -> BijectionReport:
    """Exhaustive check of one map at length n."""
    b = get_bijection(bid)
    dom = [w for w in avoidance_class(n, get_class(b.domain_class).patterns).members
           if b.domain(w)]
    cod = [y for y in avoidance_class(n, get_class(b.codomain_class).patterns).members
           if b.codomain(y)]
    cod_set = set(cod)
    fails: dict = {k: [] for k in ("image", "injective", "surjective", "round_trip",
                                   "multiset")}
    images = {}
    for w in dom:
        y = _safe(b.forward, w)
        images[w] = y
        if y is None or y not in cod_set:
            fails["image"].append(format_word(w))
            continue
        back = _safe(b.inverse, y)
        if back != w:
            fails["round_trip"].append(format_word(w))
        if b.multiset and sorted(w) != sorted(y):
            fails["multiset"].append(format_word(w))
    seen: dict = {}
    for w, y in images.items():
        if y is not None:
            if y in seen:
                fails["injective"].append(f"{format_word(seen[y])},{format_word(w)}")
            seen.setdefault(y, w)
    for y in cod:
        if y not in seen:
            fails["surjective"].append(format_word(y))
        back = _safe(b.inverse, y)
        if back is None or _safe(b.forward, back) != y:
            fails["round_trip"].append(format_word(y))
    if not b.multiset:
        del fails["multiset"]
    pairs = [(w, y) for w, y in images.items() if y is not None]
    transports = {f"{t}(f(w))={s}(w)": all(stat(y, t) == stat(w, s) for w, y in pairs)
                  for s, t in b.transports}
    observed = [f"{t.value}(f(w))={s.value}(w)" for s in KINDS for t in KINDS
                if pairs and all(stat(y, t) == stat(w, s) for w, y in pairs)]
    checks = {k: not v for k, v in fails.items()}
    return BijectionReport(b.id, n, len(dom), len(cod), checks,
                           {k: v[:keep] for k, v in fails.items() if v},
                           transports, observed)


# -- piecewise equidistribution between 13/2/4 and 1/24/3 ---------------------

PIECES = (("A1", in_a1, in_a1), ("A2", in_a2, in_b2), ("A3", in_a3, in_b3))
PIECE_MAPS = {"A2": ("F_COMPL", "H_SWAP"), "A3": ("G_SWAP",)}


@dataclass
class PieceResult:
    piece: str
    left: str
    right: str
    method: str
    holds: bool


def piecewise_equidistribution(n: int, pairs=(("ls", "rb"), ("rb", "ls"),
                                                ("lb", "lb"), ("rs", "rs"))) -> list:
    """Check s(13/2/4) ~ t(1/24/3) piece by piece.

    A piece is settled pointwise when one of its maps transports s to t;
    otherwise the two pieces' distributions are compared as multisets and the
    row is flagged with method "multiset".
    """
    left = avoidance_class(n, "13/2/4").members
    right = avoidance_class(n, "1/24/3").members
    out = []
    for name, pa, pb in PIECES:
        wa = [w for w in left if pa(w)]
        wb = [w for w in right if pb(w)]
        for s, t in pairs:
            method, holds = "multiset", None
            for bid in PIECE_MAPS.get(name, ()):
                f = BIJECTIONS[bid].forward
                if all(stat(f(w), t) == stat(w, s) for w in wa):
                    method, holds = f"pointwise:{bid}", len(wa) == len(wb)
                    break
            if holds is None:
                holds = (distribution(wa, StatKind.parse(s), n)
                         == distribution(wb, StatKind.parse(t), n))
            out.append(PieceResult(name, s, t, method, holds))
    return out


def restricted_transport(bid: str, domain_class: str, codomain_class: str, n: int) -> dict:
    """Which transports a map realizes on words of another class (report only)."""
    b = BIJECTIONS[bid]
    dom = [w for w in avoidance_class(n, domain_class).members if b.domain(w)]
    target = set(avoidance_class(n, codomain_class).members)
    images = [(w, _safe(b.forward, w)) for w in dom]
    inside = [(w, y) for w, y in images if y in target]
    return {"map": bid, "domain": domain_class, "codomain": codomain_class, "n": n,
            "words": len(dom), "images_in_codomain": len(inside),
            "transports": [f"{t.value}(f(w))={s.value}(w)" for s in KINDS for t in KINDS
                           if inside and all(stat(y, t) == stat(w, s) for w, y in inside)]}

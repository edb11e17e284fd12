import json

import pytest

from rgfaudit.equi import (
    KNOWN_CLAIMS,
    check_claim,
    check_conjecture,
    classify_pair,
    equidistributed,
    scan,
    scan_json,
)
from rgfaudit.avoid import Pattern

KINDS = ("lb", "ls", "rb", "rs")


def test_examples():
    assert equidistributed(("13/2/4", "ls"), ("1/24/3", "rb"), 6)
    assert equidistributed(("13/2/4", "rs"), ("1/24/3", "rs"), 7)


@pytest.mark.parametrize("n", [3, 6])
def test_symmetric_and_reflexive(n):
    sides = [(c, k) for c in ("13/2/4", "1/24/3", "12/3") for k in KINDS]
    for a in sides:
        assert equidistributed(a, a, n)
        for b in sides:
            assert equidistributed(a, b, n) == equidistributed(b, a, n)


def test_scan_split_classes():
    claims = scan(["13/2/4", "1/24/3"], KINDS, 7)
    cross = {c.tag for c in claims if c.left[0] != c.right[0]}
    assert cross == {"split-classes:ls~rb", "split-classes:rb~ls",
                     "split-classes:lb~lb", "split-classes:rs~rs"}


def test_scan_single_class_has_trivial_identities():
    claims = scan(["1/24/3"], KINDS, 6)
    assert sum(c.trivial for c in claims) == 4


def test_scan_flip_classes():
    claims = scan(["124/3", "134/2"], KINDS, 7)
    assert "flip:ls~ls" in {c.tag for c in claims}


def test_scan_order_invariant():
    a = scan_json(scan(["1/24/3", "13/2/4", "12/3"], KINDS, 6))
    b = scan_json(scan(["12/3", "13/2/4", "1/24/3"], KINDS[::-1], 6))
    assert a == b


def test_scan_records_failing_n():
    claims = scan(["1/24/3+134/2", "1/24/3+124/3"], ["rs"], 6, keep_failed=True)
    c = [c for c in claims if c.tag == "flip-with-1/24/3:rs~rs"][0]
    assert not c.holds and c.failing_n == 5 and c.verified_to == 4
    assert json.loads(scan_json([c]))[0]["failing_n"] == 5


def test_known_claims_well_formed():
    assert len(KNOWN_CLAIMS) == 16
    for left, right in KNOWN_CLAIMS.values():
        assert check_claim(left, right, 3).verified_to == 3


def test_conjecture_cases():
    assert classify_pair(Pattern.parse("13/2"), Pattern.parse("123/4")) == "i"
    assert classify_pair(Pattern.parse("12/3"), Pattern.parse("1/24/3")) == "ii"
    assert classify_pair(Pattern.parse("12/3"), Pattern.parse("12/3/4")) == "degenerate"


def test_conjecture_sweep_small():
    r = check_conjecture(3, 4, 6)
    assert len(r.rows) == 5 * 15
    row = [x for x in r.rows if (x.pi1, x.pi2) == ("13/2", "123/4")][0]
    assert row.verdict == "holds" and row.right == "13/2+1/234"
    assert "verdict" in r.table()
    assert json.loads(r.to_json())["summary"] == r.summary()

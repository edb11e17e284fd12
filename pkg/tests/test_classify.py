import pytest
from hypothesis import given, settings

from rgfaudit.avoid import avoidance_class
from rgfaudit.classify import (
    KNOWN_DISCREPANCIES,
    class_ids,
    compose,
    decomposable_classes,
    decompose,
    get_class,
    is_in_class,
    schemes,
    validate_class,
)
from rgfaudit.core import InvalidInput, parse_word

from conftest import rgfs


def test_registry_sizes():
    assert len(class_ids("size-3")) == 5
    assert len(class_ids("size-4")) == 10
    assert len(class_ids("pair")) == 12
    assert get_class("1/24/3,12/3").name == "12/3+1/24/3"
    with pytest.raises(InvalidInput):
        get_class("1/2")


@pytest.mark.parametrize("word,cid,expected", [
    ("12345131", "12/3/4", True),
    ("1122", "13/2", True),
    ("1212", "13/2", False),
])
def test_membership_examples(word, cid, expected):
    assert is_in_class(parse_word(word), cid) is expected


@pytest.mark.parametrize("cid", class_ids())
def test_predicate_matches_oracle_small(cid):
    for n in range(1, 8):
        r = validate_class(cid, n)
        if cid in KNOWN_DISCREPANCIES:
            continue
        assert r.equal, (cid, n, r.only_predicate, r.only_oracle)


@pytest.mark.parametrize("cid", sorted(KNOWN_DISCREPANCIES))
def test_discrepancies_have_witnesses(cid):
    found = [validate_class(cid, n) for n in range(1, 8)]
    bad = [r for r in found if not r.equal]
    assert bad
    for r in bad:
        assert r.only_predicate or r.only_oracle
        for w in r.only_oracle:
            assert not is_in_class(w, cid)
            assert w in avoidance_class(r.n, get_class(cid).patterns)


def test_validate_examples():
    r = validate_class("1/2/3/4", 4)
    assert r.equal and r.predicate_count == r.oracle_count == 14
    r = validate_class("13/2", 3)
    assert r.equal and r.oracle_count == 4


def test_decompose_split_class():
    d = decompose(parse_word("1234422"), "13/2/4")
    assert d.case == "C"
    assert d.params["z"] == 2 and d.params["b_z"] == 2 and d.params["m"] == 4
    assert "".join(map(str, d.segment("u"))) == "123"
    d = decompose(parse_word("112233"), "13/2/4")
    assert d.case == "B"
    assert (d.a(1), d.a(2), d.a(3)) == (2, 2, 2)


def test_decompose_insertion_class():
    d = decompose(parse_word("1123114"), "1/24/3")
    assert d.case == "C"
    assert d.params["x"] == 3 and d.params["b1"] == 2


def test_decompose_rejects_non_members():
    with pytest.raises(InvalidInput):
        decompose(parse_word("1213"), "13/2/4")


@pytest.mark.parametrize("cid", decomposable_classes())
def test_decompose_compose_round_trip(cid):
    spec = get_class(cid)
    for n in range(1, 8):
        for w in avoidance_class(n, spec.patterns).members:
            if not spec.predicate(w):
                continue
            for scheme in schemes(cid):
                d = decompose(w, cid, scheme)
                assert compose(d) == w
                assert d.to_dict()["case"] == d.case


@settings(max_examples=200, deadline=None)
@given(rgfs(max_size=9))
def test_cases_are_exhaustive_on_members(w):
    for cid in decomposable_classes():
        if is_in_class(w, cid):
            assert decompose(w, cid).case

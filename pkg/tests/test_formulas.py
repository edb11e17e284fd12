import json

import pytest

from rgfaudit.avoid import count_avoiders
from rgfaudit.formulas import (
    FORMULAS,
    OUT_OF_RANGE,
    UNDEFINED,
    WILF_PAIRS,
    WI_COUNT,
    S,
    audit_cardinality,
    complement_duality,
    formula_ids,
    formula_value,
    oracle_sequence,
    wilf_pairs,
)
from rgfaudit.core import InvalidInput


def test_values():
    assert formula_value("card:1/2/3/4", 5) == 41
    assert formula_value("card:12/3+1/24/3", 5) == 8
    assert formula_value(WI_COUNT, 4, 2) == 3
    assert S(-1, 2) == 0 and S(5, 3) == 25


def test_markers():
    assert formula_value("card:1234-stmt", 13) is OUT_OF_RANGE
    assert formula_value("card:12/3/4-stmt", 6) is UNDEFINED
    with pytest.raises(InvalidInput):
        formula_value("card:nope", 3)


def test_ids_are_unique_and_registered():
    ids = formula_ids()
    assert len(ids) == len(set(ids))
    assert WI_COUNT in ids and all(i in FORMULAS or i == WI_COUNT for i in ids)


def test_clean_formulas_match():
    for fid in ("card:1/2/3/4", "card:13/2/4", "card:1/24/3"):
        assert set(audit_cardinality(fid, 1, 8).verdicts(fid).values()) == {"match"}
    r = audit_cardinality(WI_COUNT, 1, 7)
    assert {row.verdict for row in r.rows} == {"match"}


def test_two_n_minus_two():
    for fid in ("card:12/3+1/24/3", "card:1/23+13/2/4"):
        v = audit_cardinality(fid, 3, 8).verdicts(fid)
        assert set(v.values()) == {"match"}


def test_report_is_complete_and_serializable():
    fid = "card:1/234"
    r = audit_cardinality(fid, 1, 6)
    assert sorted(r.verdicts(fid)) == list(range(1, 7))
    rows = json.loads(r.to_json())
    assert {x["verdict"] for x in rows} <= {"match", "mismatch", "out-of-range", "undefined"}
    assert all(x["oracle"] == count_avoiders(x["n"], "1/234") for x in rows)
    assert r.table().startswith("id")


def test_oracle_sequence():
    assert oracle_sequence("1/2/3", 5) == [1, 2, 4, 8, 16]


def test_complement_duality_small():
    r = complement_duality(4, 7)
    assert {row.verdict for row in r.rows} == {"match"}
    assert len({row.id for row in r.rows}) == 15


def test_wilf_pairs_small():
    r = wilf_pairs(7)
    assert len({row.id for row in r.rows}) == len(WILF_PAIRS)
    assert {row.verdict for row in r.rows} == {"match"}

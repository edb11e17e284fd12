import pytest
from hypothesis import given, settings, strategies as st

from rgfaudit.avoid import (
    Pattern,
    all_patterns,
    avoidance_class,
    brute_force_class,
    contains,
    count_avoiders,
    pattern_set,
    set_name,
    word_contains,
)
from rgfaudit.core import InvalidInput, parse_partition, partition_from_rgf
from rgfaudit.enumeration import bell, stirling2

from conftest import rgfs


def test_pattern_parsing_and_names():
    assert Pattern.parse("13/2").word == (1, 2, 1)
    assert str(Pattern.parse("1/24/3")) == "1/24/3"
    assert set_name("1/24/3, 12/3") == "12/3+1/24/3"
    assert set_name(["12/3", "1/24/3"]) == set_name(["1/24/3", "12/3"])
    with pytest.raises(InvalidInput):
        pattern_set("12/3,,1/2")


def test_containment_example():
    # positions {1,2,4,7} of 1347/25/68 form a copy of 134/2
    p = parse_partition("1347/25/68")
    assert contains(p, "134/2")
    assert not contains(parse_partition("12/3"), "1/2/3")


@settings(max_examples=150, deadline=None)
@given(rgfs(max_size=8), st.sampled_from(all_patterns(3) + all_patterns(4)[::3]))
def test_word_and_partition_containment_agree(w, pat):
    assert word_contains(w, pat) == contains(partition_from_rgf(w), pat)


@pytest.mark.parametrize("pats", [["1/2/3"], ["12/3"], ["13/2"], ["1/24/3"],
                                  ["12/3", "1/24/3"], ["14/2/3", "13/2/4"]])
@pytest.mark.parametrize("n", [1, 4, 6])
def test_pruned_generator_matches_filter(pats, n):
    assert avoidance_class(n, pats).members == brute_force_class(n, pats)


def test_two_block_bound():
    # avoiding 1/2/3 means at most two blocks
    for n in range(1, 9):
        assert count_avoiders(n, "1/2/3") == stirling2(n, 1) + stirling2(n, 2)


def test_no_patterns_is_everything():
    assert len(avoidance_class(5, [])) == bell(5)


@pytest.mark.parametrize("pat", [str(p) for p in all_patterns(4)])
def test_complement_preserves_counts(pat):
    c = str(Pattern.parse(pat).complement())
    assert [count_avoiders(n, pat) for n in range(1, 8)] == \
        [count_avoiders(n, c) for n in range(1, 8)]

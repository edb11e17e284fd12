import pytest
from hypothesis import given

from rgfaudit.core import (
    InvalidInput,
    LetterClass,
    as_partition,
    classify_letters,
    complement,
    complement_word,
    format_partition,
    format_word,
    multiplicities,
    parse_partition,
    parse_word,
    partition_from_rgf,
    restrict,
    rgf_from_partition,
    standardize,
)

from conftest import rgfs


def test_complement_example():
    p = parse_partition("1246/37/5")
    assert format_partition(complement(p)) == "15/2467/3"


def test_restrict_then_standardize_example():
    p = parse_partition("1347/25/68")
    assert format_partition(standardize(restrict(p, {1, 2, 4, 7}))) == "134/2"


def test_rgf_of_partition():
    assert rgf_from_partition(parse_partition("13/2")) == (1, 2, 1)
    assert partition_from_rgf((1, 1, 2)) == ((1, 2), (3,))


@given(rgfs())
def test_rgf_partition_round_trip(w):
    assert rgf_from_partition(partition_from_rgf(w)) == w


@given(rgfs())
def test_complement_is_involution(w):
    assert complement_word(complement_word(w)) == w
    assert sorted(multiplicities(complement_word(w))) == sorted(multiplicities(w))


@given(rgfs())
def test_word_text_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_long_words_use_separators():
    w = tuple(range(1, 12))
    assert format_word(w) == "1 2 3 4 5 6 7 8 9 10 11"
    assert parse_word("1,2,3,4,5,6,7,8,9,10,11") == w


@pytest.mark.parametrize("text", ["", "2", "13", "1x", "0"])
def test_bad_words(text):
    with pytest.raises(InvalidInput):
        parse_word(text)


@pytest.mark.parametrize("text", ["12/2", "1/3", "1//2", "a/b"])
def test_bad_partitions(text):
    with pytest.raises(InvalidInput):
        parse_partition(text)


def test_as_partition_orders_blocks():
    assert as_partition([[3], [2, 1]]) == ((1, 2), (3,))


def test_letter_classes():
    c = classify_letters((1, 2, 2, 2, 3, 3, 2, 1, 3))
    assert c[1] == {LetterClass.BLOCK_SINGLETON, LetterClass.SINGLETON_BLOCK}
    assert c[2] == {LetterClass.BLOCK_SINGLETON}
    assert c[3] == {LetterClass.BLOCK_SINGLETON}
    c = classify_letters((1, 2, 1, 1, 3, 2, 1))
    assert c[1] == {LetterClass.OTHER}
    assert c[2] == {LetterClass.BLOCK_SINGLETON, LetterClass.SINGLETON_BLOCK}
    assert c[3] == {LetterClass.BLOCK}

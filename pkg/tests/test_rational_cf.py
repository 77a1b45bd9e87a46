from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twobridge import rational_cf
from twobridge.enumeration import EnumerationPlan, enumerate_presentations
from twobridge.errors import InvalidInput, NotPositiveKnot, ParseError, ZeroDenominator


def test_eval_cf_examples():
    assert rational_cf.eval_cf([3]) == Fraction(3, 1)
    assert rational_cf.eval_cf([2, 2, 1]) == Fraction(7, 3)
    assert rational_cf.eval_cf([-2, 2]) == Fraction(-3, 2)
    assert rational_cf.eval_cf([1, 2, 2]) == Fraction(7, 5)


def test_eval_cf_empty_rejected():
    with pytest.raises(InvalidInput):
        rational_cf.eval_cf([])


def test_eval_cf_zero_tail_rejected():
    # tail [0] evaluates to 0, so 2 + 1/0 is undefined
    with pytest.raises(ZeroDenominator):
        rational_cf.eval_cf([2, 0])
    with pytest.raises(ZeroDenominator):
        rational_cf.eval_cf([3, 1, -1])  # tail [1, -1] = 1 - 1 = 0


@pytest.mark.parametrize("word,expected", [
    ([3], True),
    ([1, 1, 1], False),   # even-position entry must be even
    ([2, 2], False),      # even length / even sum is a link
    ([2, 2, 1], True),
    ([1, 2, 2], True),
    ([0, 2, 1], False),
    ([1], False),         # sum below 3 is the unknot
])
def test_is_positive_knot_form(word, expected):
    assert rational_cf.is_positive_knot_form(word) is expected


def test_crossing_count():
    assert rational_cf.crossing_count([3]) == 3
    assert rational_cf.crossing_count([2, 2, 1]) == 5
    assert rational_cf.crossing_count([1, 2, 2]) == 5


@pytest.mark.parametrize("p,q,expected,value", [
    (3, 1, (-2, 2), Fraction(-3, 2)),
    (7, 3, (-2, 4), Fraction(-7, 4)),
    (5, 1, (-2, 2, -2, 2), Fraction(-5, 4)),
    (7, 5, (-4, 2), Fraction(-7, 2)),
])
def test_to_even_cf_examples(p, q, expected, value):
    ecf = rational_cf.to_even_cf(p, q)
    assert ecf == expected
    assert rational_cf.eval_cf(ecf) == value


def test_to_even_cf_rejects_bad_input():
    with pytest.raises(InvalidInput):
        rational_cf.to_even_cf(3, 5)   # |p| <= |q|
    with pytest.raises(InvalidInput):
        rational_cf.to_even_cf(4, 1)   # even p
    with pytest.raises(InvalidInput):
        rational_cf.to_even_cf(9, 3)   # not coprime


def test_canonical_key_examples():
    assert rational_cf.canonical_key(7, 5) == (7, 3)
    assert rational_cf.canonical_key(7, 3) == (7, 3)
    assert rational_cf.canonical_key(3, 1) == (3, 1)


def test_positive_cf_from_rational_examples():
    assert rational_cf.positive_cf_from_rational(7, 3) == (2, 2, 1)
    assert rational_cf.positive_cf_from_rational(3, 1) == (3,)
    with pytest.raises(NotPositiveKnot):
        rational_cf.positive_cf_from_rational(5, 3)  # figure-eight class


def test_round_trip_over_enumeration():
    # positive_cf_from_rational(eval_cf(w)) lands on the same knot as w
    for word in enumerate_presentations(EnumerationPlan(13)):
        value = rational_cf.eval_cf(word)
        key = rational_cf.canonical_key(value.numerator, value.denominator)
        back = rational_cf.positive_cf_from_rational(value.numerator, value.denominator)
        assert rational_cf.is_positive_knot_form(back)
        value2 = rational_cf.eval_cf(back)
        assert rational_cf.canonical_key(value2.numerator, value2.denominator) == key


def test_even_cf_same_canonical_key_over_enumeration():
    for word in enumerate_presentations(EnumerationPlan(13)):
        value = rational_cf.eval_cf(word)
        p, q = value.numerator, value.denominator
        ecf = rational_cf.to_even_cf(p, q)
        assert len(ecf) % 2 == 0
        assert all(a != 0 and a % 2 == 0 for a in ecf)
        even_value = rational_cf.eval_cf(ecf)
        p2, q2 = abs(even_value.numerator), even_value.denominator
        assert p2 == p
        # same knot up to mirror: q' is congruent to +/- q or +/- 1/q mod p
        residues = {q % p, -q % p, pow(q, -1, p), -pow(q, -1, p) % p}
        assert q2 % p in residues


@st.composite
def positive_form_words(draw, max_len=9, max_entry=8):
    length = draw(st.integers(0, max_len // 2)) * 2 + 1
    word = []
    for i in range(length):
        if i % 2 == 1:
            word.append(draw(st.integers(1, max_entry // 2)) * 2)
        else:
            word.append(draw(st.integers(1, max_entry)))
    if sum(word) % 2 == 0:
        word[0] += 1
    if sum(word) < 3:
        word[0] += 2
    return tuple(word)


@given(positive_form_words())
def test_eval_cf_of_positive_form_is_p_over_q_with_p_odd(word):
    assert rational_cf.is_positive_knot_form(word)
    value = rational_cf.eval_cf(word)
    p, q = value.numerator, value.denominator
    assert p > q >= 1
    assert p % 2 == 1


def test_parse_and_format():
    assert rational_cf.parse_cf("2,2,1") == (2, 2, 1)
    assert rational_cf.format_cf((2, 2, 1)) == "2,2,1"
    assert rational_cf.parse_fraction("7/3") == Fraction(7, 3)
    with pytest.raises(ParseError):
        rational_cf.parse_cf("2,,1")
    with pytest.raises(ParseError):
        rational_cf.parse_fraction("7:3")

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primegraphs.bigbound import BigBound, bb_add, bb_log2, bb_mul, bb_pow, bb_pow2, combine

ints = st.integers(1, 10 ** 40)


def test_small_values_stay_exact():
    b = bb_add(bb_mul(3, 7), 1)
    assert b.is_int and b.exact and b.as_int() == 22
    assert bb_pow2(10).as_int() == 1024
    assert bb_log2(1024).as_int() == 10
    assert str(BigBound.of_int(5)) == "5"


@given(ints, ints)
def test_exact_arithmetic_matches_python(a, b):
    assert bb_add(a, b).as_int() == a + b
    assert bb_mul(a, b).as_int() == a * b


@given(st.integers(1, 60), st.integers(0, 30))
def test_pow_matches_python(a, e):
    assert bb_pow(a, e).as_int() == a ** e


@given(st.integers(2, 10 ** 30))
def test_log2_encloses_true_value(a):
    lg = bb_log2(a)
    exact = math.log2(a)
    assert lg.certainly_le(BigBound.of_int(math.ceil(exact) + 1))
    assert BigBound.of_int(math.floor(exact) - 1).certainly_le(lg)


def test_towers_compare_correctly():
    a = bb_pow2(bb_pow2(100))
    b = bb_pow2(bb_pow2(101))
    assert not a.is_int and a.certainly_lt(b)
    assert not b.certainly_le(a)
    c = bb_pow2(bb_pow2(bb_pow2(40)))
    assert a.certainly_lt(c)
    assert bb_add(a, 1).certainly_le(bb_mul(a, 2))


def test_polarity_propagates():
    up = BigBound.of_int(10, "upper")
    assert bb_add(up, 1).polarity == "upper"
    assert bb_mul(up, 3).polarity == "upper"
    assert combine("exact", "exact") == "exact"
    assert combine("upper", "exact") == "upper"
    with pytest.raises(ValueError):
        BigBound.of_int(3, "sideways")


def test_json_shapes():
    j = BigBound.of_int(7).to_json()
    assert j == {"exact": True, "polarity": "exact", "value": "7"}
    big = bb_pow2(bb_pow2(10 ** 6)).to_json()
    assert big["exact"] is False or big["polarity"] in ("exact", "upper")
    key = next(k for k in big if k.startswith("log2"))
    lo, hi = big[key]
    assert "*2^" in lo or lo.lstrip("-").isdigit()
    assert "approx" in big


def test_huge_int_is_not_stringified():
    b = BigBound.of_int(1 << 20000)
    assert not b.is_int and b.exact
    assert BigBound.of_int(1 << 19999).certainly_lt(b)

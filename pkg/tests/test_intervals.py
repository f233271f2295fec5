from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtk.intervals import Interval, envelope_max, interval_sum, sqrt_bounds

fractions = st.builds(
    Fraction,
    st.integers(min_value=0, max_value=10**12),
    st.integers(min_value=1, max_value=10**6),
)


@given(value=fractions, bits=st.integers(min_value=4, max_value=128))
@settings(max_examples=200, deadline=None)
def test_sqrt_bounds_enclose(value, bits):
    lo, hi = sqrt_bounds(value, bits)
    assert lo * lo <= value <= hi * hi
    assert hi - lo <= Fraction(1, 2**bits)
    assert lo >= 0


@given(root=st.integers(min_value=0, max_value=10**9))
@settings(max_examples=100, deadline=None)
def test_sqrt_bounds_exact_on_perfect_squares(root):
    lo, hi = sqrt_bounds(Fraction(root * root), 8)
    assert lo == hi == root


def test_sqrt_bounds_exact_on_rational_squares():
    lo, hi = sqrt_bounds(Fraction(49, 64), 8)
    assert lo == hi == Fraction(7, 8)


def test_sqrt_rejects_negative():
    with pytest.raises(ValueError):
        sqrt_bounds(Fraction(-1), 8)


signed = st.builds(
    Fraction,
    st.integers(min_value=-10**6, max_value=10**6),
    st.integers(min_value=1, max_value=10**4),
)


@given(a=signed, b=signed)
@settings(max_examples=150, deadline=None)
def test_point_interval_arithmetic_tracks_rationals(a, b):
    ia, ib = Interval.point(a), Interval.point(b)
    assert (ia + ib).lo == a + b
    assert (ia - ib).hi == a - b
    assert (ia * ib).lo == (ia * ib).hi == a * b
    if b != 0:
        q = ia / ib
        assert q.lo == q.hi == a / b


@given(a=signed, b=signed, wa=fractions, wb=fractions)
@settings(max_examples=150, deadline=None)
def test_widened_intervals_still_contain_the_truth(a, b, wa, wb):
    ia = Interval(a, a + wa)
    ib = Interval(b, b + wb)
    assert a + b in ia + ib
    assert a - (b + wb) in ia - ib
    assert a * b in ia * ib


def test_division_by_zero_straddling_interval():
    with pytest.raises(ZeroDivisionError):
        Interval.point(1) / Interval(Fraction(-1), Fraction(1))


def test_certified_comparisons():
    a = Interval(Fraction(1), Fraction(2))
    b = Interval(Fraction(3), Fraction(4))
    assert a.certainly_lt(b) and b.certainly_gt(a)
    assert a.certainly_le(Fraction(2)) and not a.certainly_lt(Fraction(2))
    overlap = Interval(Fraction(3, 2), Fraction(5, 2))
    assert not a.certainly_lt(overlap) and not overlap.certainly_lt(a)
    assert a.overlaps(overlap) and not a.overlaps(b)


def test_envelope_max_and_sum():
    ivs = [Interval(Fraction(0), Fraction(2)), Interval(Fraction(1), Fraction(3)),
           Interval.point(Fraction(1, 2))]
    env = envelope_max(ivs)
    assert env.lo == 1 and env.hi == 3
    total = interval_sum(ivs)
    assert total.lo == Fraction(3, 2) and total.hi == Fraction(11, 2)


def test_magnitude():
    assert Interval(Fraction(-3), Fraction(1)).magnitude() == Interval(Fraction(0), Fraction(3))
    assert Interval(Fraction(-3), Fraction(-1)).magnitude() == Interval(Fraction(1), Fraction(3))


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Interval(Fraction(2), Fraction(1))

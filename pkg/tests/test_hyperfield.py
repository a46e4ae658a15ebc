import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lorpoly.hyperfield import is_null

INF = math.inf


@pytest.mark.parametrize("values,q,expected", [
    ((3, 4, 5), 1, True),
    ((9, 16, 25), 2, True),        # square roots 3,4,5
    ((1, 1, 3), 1, False),
    ((1, 1), 0, True),
    ((1, 1), 1, True),
    ((1, 1), INF, True),
    ((2, 1, 1), 0, False),         # max must appear twice
    ((2, 2, 1), 0, True),
    ((5, 1, 1), INF, True),        # three nonzero values suffice
    ((5, 1), INF, False),
    ((), 1, True),                 # the empty (zero) sum
    ((0, 0, 0), 0, True),
    ((7,), 2, False),              # a single nonzero value never sums to zero
])
def test_examples(values, q, expected):
    assert is_null(values, q) is expected


def test_exact_boundaries_at_q1_and_q2():
    # q=1 compares a <= b + c exactly on rationals
    assert is_null((Fraction(2, 3), Fraction(1, 3), Fraction(1, 3)), 1)
    assert not is_null((Fraction(2, 3) + Fraction(1, 10 ** 30),
                        Fraction(1, 3), Fraction(1, 3)), 1)
    # q=2 compares square roots; (9,16,49) hits the boundary 7 = 3 + 4
    assert is_null((9, 16, 49), 2)
    assert not is_null((9, 16, Fraction(49) + Fraction(1, 10 ** 30)), 2)


def test_negative_values_rejected():
    with pytest.raises(ValueError):
        is_null((1, -1), 1)
    with pytest.raises(ValueError):
        is_null((-2,), 0)


scalars = st.one_of(
    st.integers(min_value=0, max_value=50),
    st.fractions(min_value=0, max_value=50),
    st.floats(min_value=0, max_value=50, allow_nan=False),
)


@given(st.lists(scalars, max_size=6))
def test_monotone_in_q(values):
    chain = [0, Fraction(1, 2), 1, 2, 8, INF]
    verdicts = [is_null(values, q) for q in chain]
    for earlier, later in zip(verdicts, verdicts[1:]):
        assert not (earlier and not later)


@given(st.lists(st.fractions(min_value=0, max_value=20), max_size=5),
       st.sampled_from([Fraction(1, 3), 1, 2, 5]))
def test_scale_invariance(values, q):
    scaled = [Fraction(7, 3) * v for v in values]
    assert is_null(values, q) == is_null(scaled, q)


@given(st.lists(st.integers(min_value=0, max_value=10), max_size=5))
def test_power_law_squares(values):
    # raising everything to the power 2 moves the test from q to 2q; small
    # integers keep both float paths exact (squares and their roots are
    # representable), so the verdicts must agree to the bit
    assert (is_null([float(v) for v in values], 1)
            == is_null([float(v * v) for v in values], 2))

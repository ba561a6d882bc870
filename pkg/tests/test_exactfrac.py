from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lenscap.errors import BadModulus, NegativeInput, NotCoprime, OddP, QZeroModP, ZeroOverZero
from lenscap.exactfrac import INF, ZERO, ExtRational, distance, normalize_lens, reduce, size

from . import strategies


@pytest.mark.parametrize(
    "n, d, expected",
    [(4, 6, (2, 3)), (-2, -4, (1, 2)), (-1, 0, (1, 0)), (1, 0, (1, 0)), (7, 0, (1, 0)), (0, -5, (0, 1)), (3, -9, (-1, 3))],
)
def test_reduce(n, d, expected):
    assert reduce(n, d) == ExtRational(*expected)


def test_reduce_zero_over_zero():
    with pytest.raises(ZeroOverZero):
        reduce(0, 0)


@pytest.mark.parametrize("n, d", [(2, 4), (1, -1), (-1, 0), (0, 0), (0, 3)])
def test_constructor_rejects_non_canonical(n, d):
    with pytest.raises(ValueError):
        ExtRational(n, d)


@given(strategies.big, strategies.big)
def test_reduce_matches_fraction(n, d):
    if d == 0:
        if n != 0:
            assert reduce(n, d) == INF
        return
    x = reduce(n, d)
    f = Fraction(n, d)
    assert (x.num, x.den) == (f.numerator, f.denominator)


def test_distance_examples():
    assert distance(ZERO, reduce(2, 1)) == 2
    assert distance(reduce(8, 3), reduce(8, 3)) == 0
    assert distance(reduce(8, 3), reduce(2, 1)) == 2
    assert distance(ZERO, INF) == 1


def test_size_examples():
    assert size(reduce(8, 3)) == 11
    assert size(INF) == 1
    assert size(ZERO) == 1
    with pytest.raises(NegativeInput):
        size(reduce(-2, 3))


@given(strategies.ext_fractions, strategies.ext_fractions)
def test_distance_symmetric_and_separating(a, b):
    assert distance(a, b) == distance(b, a) >= 0
    assert (distance(a, b) == 0) == (a == b)


@given(strategies.fractions, strategies.fractions)
def test_distance_reflection(a, b):
    assert distance(-a, -b) == distance(a, b)


@given(strategies.even_vertices(), st.integers(1, 10**6), st.integers(-10**6, 10**6))
def test_parity_heredity(a, s, k):
    # every r/s at distance 2 from a = p/q solves p*s - q*r = +-2
    p, q = a.num, a.den
    for delta in (2, -2):
        if (p * s - delta) % q == 0:
            r = (p * s - delta) // q
            b = reduce(r, s)
            if distance(a, b) == 2:
                assert b.num % 2 == 0


@given(strategies.ext_fractions, strategies.ext_fractions)
def test_order_matches_fraction_with_infinity_on_top(a, b):
    if a.is_inf or b.is_inf:
        assert (a < b) == (b.is_inf and not a.is_inf)
    else:
        assert (a < b) == (Fraction(a.num, a.den) < Fraction(b.num, b.den))


@given(strategies.ext_fractions)
def test_string_round_trip(x):
    assert ExtRational.parse(str(x)) == x


@pytest.mark.parametrize("p, q, qn", [(8, 11, 3), (8, 5, 3), (8, 3, 3), (2, 1, 1), (10, -3, 3), (10, 7, 3), (12, 13, 1)])
def test_normalize_lens(p, q, qn):
    lp = normalize_lens(p, q)
    assert (lp.p, lp.q, lp.q_normalized) == (p, q, qn)


@pytest.mark.parametrize(
    "p, q, err",
    [(7, 2, OddP), (1, 1, BadModulus), (0, 1, BadModulus), (8, 6, NotCoprime), (8, 16, QZeroModP), (2, 0, QZeroModP)],
)
def test_normalize_lens_errors(p, q, err):
    with pytest.raises(err):
        normalize_lens(p, q)


@given(strategies.lens())
def test_normalize_lens_idempotent_and_in_range(pq):
    p, q = pq
    lp = normalize_lens(p, q)
    assert 1 <= lp.q_normalized <= p // 2
    assert (lp.q_normalized - q) % p == 0 or (lp.q_normalized + q) % p == 0
    assert normalize_lens(p, lp.q_normalized).q_normalized == lp.q_normalized

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from clusterwb.laurent import (
    LaurentPoly,
    NonExactDivision,
    denominator_vector,
    exact_div,
    parse_laurent,
    positivity_check,
    reduced_form,
)

N = 3


def ev(p, point):
    """Rational evaluation, used as an oracle independent of the term arithmetic."""
    total = Fraction(0)
    for e, c in p.terms.items():
        t = Fraction(c)
        for v, x in zip(point, e):
            t *= Fraction(v) ** x
        total += t
    return total


@st.composite
def laurents(draw, n=N, max_terms=4, lo=-2, hi=3):
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        e = tuple(draw(st.integers(lo, hi)) for _ in range(n))
        terms[e] = draw(st.integers(-4, 4))
    return LaurentPoly(n, terms)


nonzero_laurents = laurents().filter(lambda p: not p.is_zero())
points = st.tuples(*[st.sampled_from([-3, -2, -1, 1, 2, 3, Fraction(1, 2), Fraction(-2, 3)])] * N)


@given(laurents(), laurents(), laurents())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero(N)


@given(laurents(), laurents(), points)
def test_arithmetic_matches_evaluation(a, b, pt):
    assert ev(a * b, pt) == ev(a, pt) * ev(b, pt)
    assert ev(a + b, pt) == ev(a, pt) + ev(b, pt)


@given(laurents(), nonzero_laurents)
def test_exact_division_recovers_factor(a, b):
    assert exact_div(a * b, b) == a


@given(nonzero_laurents, points)
def test_power(a, pt):
    assert ev(a**3, pt) == ev(a, pt) ** 3


def test_non_exact_division_raises():
    y1, y2, y3 = (LaurentPoly.variable(i, N) for i in range(N))
    with pytest.raises(NonExactDivision):
        exact_div(y1 + y2, y1 + y3)
    with pytest.raises(NonExactDivision):
        exact_div(y1 * y1 + 1, y1 + 2)
    with pytest.raises(ZeroDivisionError):
        exact_div(y1, LaurentPoly.zero(N))


def test_monomial_division_is_shift():
    y1, y2, _ = (LaurentPoly.variable(i, N) for i in range(N))
    p = (y1 + y2) / (y1 * y2)
    assert denominator_vector(p) == (1, 1, 0)
    assert p == LaurentPoly(N, {(0, -1, 0): 1, (-1, 0, 0): 1})


@given(nonzero_laurents)
def test_reduced_form(p):
    f, d = reduced_form(p)
    assert f.is_polynomial()
    assert all(m == 0 for m in f.min_exponents())
    assert f == p.shift(d)
    assert denominator_vector(p) == d


@given(nonzero_laurents)
def test_fraction_string_round_trip(p):
    assert parse_laurent(p.fraction_str(), N) == p
    assert parse_laurent(p.to_str(), N) == p


def test_grlex_display_order():
    p = parse_laurent("1 + y3 + y1*y2 + y1^2", 3)
    assert p.to_str() == "y1^2 + y1*y2 + y3 + 1"


def test_fraction_display():
    p = parse_laurent("((y1 + y3)^2 + y2)/(y1*y2*y3)", 3)
    assert p.fraction_str() == "(y1^2 + 2*y1*y3 + y3^2 + y2) / (y1*y2*y3)"
    assert p.raw_str() == "y1^-1*y2^-1*y3^-1*(y1^2 + 2*y1*y3 + y3^2 + y2)"
    assert str(parse_laurent("2/y1", 1)) == "2 / y1"


@pytest.mark.parametrize("text", ["y4", "y1 +", "y1 ** y2", "x1", "1.5"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_laurent(text, 3)


def test_positivity():
    y1, y2, y3 = (LaurentPoly.variable(i, N) for i in range(N))
    assert positivity_check(y1 + y2 + y3)
    assert positivity_check(LaurentPoly.constant(1, N))
    # vanishes at (0,1,1)
    assert not positivity_check(y1 * y2 + y1)
    assert not positivity_check(y2 + y3 - 1)
    with pytest.raises(ValueError):
        positivity_check(y1 / y2)


def test_a2tilde_numerator_frozen():
    # numerator attached to the rank-2 tube module: y^(1,2,1) * X - x
    f = parse_laurent("y1^4 + y1^3*y3 + 2*y1^2*y2 + y1*y2*y3 + y2*y3^2 + y2^2", 3)
    assert f.is_polynomial()
    assert positivity_check(f)
    assert f.evaluate((0, 1, 1)) == 2
    assert f.evaluate((1, 0, 1)) == 2
    assert f.evaluate((1, 1, 0)) == 4


def test_huge_exponents_multiply_exactly():
    big = 1 << 31
    p = LaurentPoly(2, {(big, -big): 1, (0, 1): 2})
    q = LaurentPoly(2, {(big, 3): 1, (-1, 0): -1})
    got = p * q
    want = {(2 * big, 3 - big): 1, (big - 1, -big): -1, (big, 4): 2, (-1, 1): -2}
    assert got.terms == want

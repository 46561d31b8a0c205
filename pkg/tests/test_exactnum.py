"""Exact arithmetic layer: frozen examples plus algebraic property tests."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunklpoly.exactnum import (
    LaurentPoly,
    NotDivisible,
    NotPolynomial,
    RatFunc,
    ZeroDenominator,
    exact_polynomial_check,
    poly_divmod,
    poly_exact_div,
    poly_gcd,
)

X = LaurentPoly.x()


def lp(mapping):
    return LaurentPoly(mapping)


# -- frozen worked examples ---------------------------------------------------


def test_laurent_product_clears_pole():
    p = lp({-1: 1, 0: 1})
    assert p * X == lp({0: 1, 1: 1})


def test_laurent_derivative_negative_exponent():
    p = lp({-2: 3})
    assert p.derivative() == lp({-3: -6})


def test_substitute_affine_reflection_shift():
    assert X.substitute_affine(-1, -1) == lp({1: -1, 0: -1})


def test_ratfunc_reduction_cancels_common_factor():
    gamma = Fraction(1, 2)
    num = lp({3: 1, 1: -(gamma**2)})
    r = RatFunc.of(num, X)
    assert r.num == lp({2: 1, 0: Fraction(-1, 4)})
    assert r.den == LaurentPoly.one()


def test_exact_polynomial_check_difference_of_squares():
    gamma = Fraction(2, 3)
    num = lp({2: 1, 0: -(gamma**2)})
    den = lp({1: 1, 0: -gamma})
    assert exact_polynomial_check(RatFunc.of(num, den)) == lp({1: 1, 0: gamma})


def test_exact_polynomial_check_rejects_true_pole():
    r = RatFunc.of(lp({2: 1, 0: 1}), X)
    with pytest.raises(NotPolynomial):
        exact_polynomial_check(r)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominator):
        RatFunc.of(X, LaurentPoly.zero())


def test_degree_sentinels():
    assert LaurentPoly.zero().degree is None
    assert LaurentPoly.zero().min_exp is None
    assert lp({-3: 1, 2: 5}).degree == 2
    assert lp({-3: 1, 2: 5}).min_exp == -3


def test_no_zero_coefficients_stored():
    p = lp({0: 1, 1: 1}) - lp({1: 1})
    assert p.items() == ((0, Fraction(1)),)


def test_substitution_with_pole_and_shift_returns_ratfunc():
    p = lp({-1: 1})
    r = p.substitute_affine(1, 1)
    assert isinstance(r, RatFunc)
    assert r.num == LaurentPoly.one()
    assert r.den == lp({1: 1, 0: 1})


def test_poly_exact_div_and_remainder():
    a = lp({2: 1, 0: Fraction(-9, 25)})
    b = lp({1: 1, 0: Fraction(3, 5)})
    assert poly_exact_div(a, b) == lp({1: 1, 0: Fraction(-3, 5)})
    with pytest.raises(NotDivisible):
        poly_exact_div(a + LaurentPoly.one(), b)


def test_compose_sparse_horner():
    outer = lp({3: 2, 0: -1})
    inner = lp({1: 1, 0: 1})
    expected = 2 * inner * inner * inner - LaurentPoly.one()
    assert outer.compose(inner) == expected


def test_str_matches_cli_format():
    assert str(lp({2: 1, 0: Fraction(-3, 4)})) == "x^2 - 3/4"
    assert str(LaurentPoly.zero()) == "0"
    assert str(lp({1: Fraction(1, 2), -1: 1})) == "1/2*x + x^-1"


# -- property tests ------------------------------------------------------------

rationals = st.fractions(min_value=-40, max_value=40, max_denominator=12)


@st.composite
def laurents(draw, min_exp=-4, max_exp=6):
    exps = draw(st.lists(st.integers(min_exp, max_exp), max_size=5))
    return LaurentPoly({e: draw(rationals) for e in exps})


@st.composite
def plain_polys(draw, max_deg=5, nonzero=False):
    exps = draw(st.lists(st.integers(0, max_deg), min_size=1 if nonzero else 0, max_size=5))
    p = LaurentPoly({e: draw(rationals) for e in exps})
    if nonzero and p.is_zero:
        p = p + LaurentPoly.one()
    return p


@given(laurents(), laurents(), laurents())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(laurents())
def test_reflection_is_an_involution(p):
    assert p.substitute_affine(-1, 0).substitute_affine(-1, 0) == p


@given(plain_polys(), st.fractions(min_value=-6, max_value=6, max_denominator=4))
def test_shift_then_unshift(p, delta):
    assert p.substitute_affine(1, delta).substitute_affine(1, -delta) == p


@given(laurents(), laurents())
def test_product_rule(a, b):
    lhs = (a * b).derivative()
    assert lhs == a.derivative() * b + a * b.derivative()


@given(plain_polys(nonzero=True), plain_polys(nonzero=True), plain_polys(nonzero=True))
def test_gcd_cancellation_gives_equal_ratfunc(a, b, c):
    assert RatFunc.of(a * c, b * c) == RatFunc.of(a, b)


@given(plain_polys(), plain_polys(nonzero=True))
def test_divmod_identity(a, b):
    q, r = poly_divmod(a, b)
    assert q * b + r == a
    assert r.is_zero or r.degree < b.degree


@given(plain_polys(nonzero=True), plain_polys(nonzero=True))
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert poly_divmod(a, g)[1].is_zero
    assert poly_divmod(b, g)[1].is_zero
    assert g.leading_coeff() == 1


@settings(max_examples=60)
@given(laurents(), st.sampled_from([1, -1]), st.fractions(min_value=-5, max_value=5, max_denominator=3))
def test_substitution_is_evaluation_compatible(p, eps, delta):
    x0 = Fraction(3, 7)
    target = Fraction(eps) * x0 + delta
    if target == 0 and (p.min_exp or 0) < 0:
        return
    image = p.substitute_affine(eps, delta)
    assert image.evaluate(x0) == p.evaluate(target)

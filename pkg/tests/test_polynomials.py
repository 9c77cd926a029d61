from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from delannoy.polynomials import (
    ONE_PLUS_2X,
    X,
    X2_PLUS_X,
    IntPoly,
    NotDivisible,
    NotIntegral,
    RatPoly,
    delannoy_poly,
    divmod_rat,
    exact_div,
    format_poly,
    large_schroder_poly,
    little_schroder_poly,
    little_schroder_poly_alt,
    little_schroder_poly_table,
    parse_poly,
    poly_arith,
)
from delannoy.sequences import delannoy_direct, large_schroder, little_schroder_direct

x = sympy.Symbol("x")

small_ints = st.integers(-50, 50)
int_polys = st.lists(small_ints, max_size=8).map(IntPoly)
nonzero_int_polys = int_polys.filter(lambda p: p.degree >= 0)


def to_sympy(p):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x, domain="QQ")


def P(*coeffs):
    return IntPoly(coeffs)


# -- oracle examples ------------------------------------------------------------


def test_arith_examples():
    assert poly_arith(ONE_PLUS_2X, ONE_PLUS_2X, "mul") == P(1, 4, 4)
    assert poly_arith(X2_PLUS_X, IntPoly(), "add") == X2_PLUS_X
    assert poly_arith(P(1, 2), 3, "pow") == P(1, 6, 12, 8)
    assert poly_arith(P(1, 2), 5, "scale") == P(5, 10)
    assert poly_arith(P(1, 2), P(1, 2), "sub") == IntPoly()
    with pytest.raises(ValueError):
        poly_arith(X, X, "div")


def test_exact_div_examples():
    assert exact_div(P(0, 4, 4), X2_PLUS_X) == P(4)
    assert exact_div(30 * ONE_PLUS_2X**3, ONE_PLUS_2X**3) == P(30)
    with pytest.raises(NotDivisible) as err:
        exact_div(P(1, 0, 1), P(1, 1))
    assert err.value.remainder == 2


def test_exact_div_reports_non_integral_quotient():
    with pytest.raises(NotIntegral) as err:
        exact_div(P(1, 2), P(2))
    assert err.value.quotient == RatPoly([Fraction(1, 2), 1])


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod_rat(X, IntPoly())


def test_degree_and_zero():
    assert IntPoly().degree == -1
    assert IntPoly((0, 0, 0)) == IntPoly() == 0
    assert P(3, 0, 2, 0).degree == 2


def test_fraction_promotes_to_rational():
    r = X * Fraction(1, 3)
    assert isinstance(r, RatPoly)
    assert r.coeffs == (0, Fraction(1, 3))
    assert isinstance(r * 3, RatPoly) and (r * 3).is_integral()
    assert (r * 3).to_int() == X


@pytest.mark.parametrize("p,text", [(P(1, 5, 5), "1,5,5"), (IntPoly(), "0"), (P(0, -3), "0,-3")])
def test_format_round_trip(p, text):
    assert format_poly(p) == text
    assert parse_poly(text) == p


def test_parse_rational():
    assert parse_poly("1/2,3") == RatPoly([Fraction(1, 2), 3])


@pytest.mark.parametrize(
    "n,want",
    [(0, P(1)), (1, P(1, 2))],
)
def test_delannoy_poly_examples(n, want):
    assert delannoy_poly(n) == want


def test_family_values_at_one():
    assert delannoy_poly(2)(1) == 13
    assert large_schroder_poly(0) == P(1)
    assert large_schroder_poly(1) == P(1, 1)
    assert large_schroder_poly(2)(1) == 6


@pytest.mark.parametrize("n,want", [(1, P(1)), (2, P(1, 2)), (3, P(1, 5, 5))])
def test_little_schroder_poly_examples(n, want):
    assert little_schroder_poly(n) == want


def test_little_schroder_poly_table_examples():
    t = little_schroder_poly_table(4)
    assert t[0] == P(1)
    assert t[2] == P(1, 5, 5)
    assert t[3](1) == 45


# -- properties -----------------------------------------------------------------


@given(int_polys, int_polys)
def test_ring_operations_match_sympy(a, b):
    assert to_sympy(a + b) == to_sympy(a) + to_sympy(b)
    assert to_sympy(a - b) == to_sympy(a) - to_sympy(b)
    assert to_sympy(a * b) == to_sympy(a) * to_sympy(b)


@given(int_polys, int_polys, int_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(int_polys, nonzero_int_polys)
def test_exact_div_round_trip(q, d):
    assert exact_div(q * d, d) == q


@given(int_polys, nonzero_int_polys)
def test_divmod_matches_sympy(a, b):
    q, r = divmod_rat(a, b)
    sq, sr = sympy.div(to_sympy(a), to_sympy(b))
    assert to_sympy(q) == sq and to_sympy(r) == sr
    assert q * b + r == a
    assert r.degree < b.degree


@given(int_polys, st.integers(-20, 20))
def test_horner_matches_sympy(p, v):
    assert p(v) == to_sympy(p).eval(v)


@given(int_polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p)) == p


@settings(max_examples=40)
@given(st.integers(0, 60))
def test_families_evaluate_to_integer_sequences(n):
    assert delannoy_poly(n)(1) == delannoy_direct(n)
    assert large_schroder_poly(n)(1) == large_schroder(n)
    if n:
        assert little_schroder_poly(n)(1) == little_schroder_direct(n)


def test_little_schroder_forms_agree():
    table = little_schroder_poly_table(100)
    for n in range(1, 101):
        assert little_schroder_poly(n) == table[n - 1] == little_schroder_poly_alt(n)


@settings(max_examples=30)
@given(st.integers(1, 80))
def test_delannoy_poly_end_coefficients(n):
    d = delannoy_poly(n)
    assert d.coeffs[-1] == sympy.binomial(2 * n, n)
    assert d.coeffs[0] == 1

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgenocchi.qarith import QContext, q_add_pow
from qgenocchi.qpoly import (
    BiPoly,
    poly_eval,
    poly_substitute_scaled,
    q_add_pow_poly,
    q_derivative_x,
    q_derivative_y,
)

HALF = QContext(F(1, 2))
THIRD = QContext(F(1, 3))
CLASSICAL = QContext(F(1))

X = BiPoly.var_x()
Y = BiPoly.var_y()


rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


@st.composite
def bipolys(draw, max_degree=8, max_terms=6):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        i = draw(st.integers(0, max_degree))
        j = draw(st.integers(0, max_degree - i))
        terms[(i, j)] = draw(rationals)
    return BiPoly(terms)


def test_canonical_form_drops_zeros():
    p = BiPoly({(1, 0): F(0), (0, 1): F(2)})
    assert p == 2 * Y
    assert not BiPoly({(3, 3): F(0)})
    assert (X - X) == BiPoly.zero()


def test_additive_identity_and_simple_products():
    p = 3 * X + Y
    assert p + BiPoly.zero() == p
    assert X * Y == BiPoly({(1, 1): F(1)})
    assert (X + Y) ** 2 == X * X + 2 * (X * Y) + Y * Y


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): F(1)})


def test_eval_points():
    assert poly_eval(BiPoly.constant(F(5, 3)), F(7), F(-2)) == F(5, 3)
    p = X * X + HALF.q * (Y * Y)
    assert poly_eval(p, 1, 1) == F(3, 2)
    # x^2 at x=3: the order-0 special-value shape.
    assert poly_eval(X * X, 3, 0) == 9


def test_partial_evaluation():
    p = X * X * Y + 2 * X + 3 * (Y * Y)
    assert p.eval_x(2) == BiPoly({(0, 1): F(4), (0, 0): F(4), (0, 2): F(3)})
    assert p.eval_y(0) == BiPoly({(0, 0): F(0)}) + 2 * X
    assert p.eval_x(F(1, 2)).eval_y(F(3)) == BiPoly.constant(p.evaluate(F(1, 2), F(3)))


@settings(max_examples=60, deadline=None)
@given(bipolys(), bipolys(), rationals, rationals)
def test_eval_is_ring_homomorphism(p, r, x0, y0):
    assert (p * r).evaluate(x0, y0) == p.evaluate(x0, y0) * r.evaluate(x0, y0)
    assert (p + r).evaluate(x0, y0) == p.evaluate(x0, y0) + r.evaluate(x0, y0)


@settings(max_examples=40, deadline=None)
@given(bipolys(), bipolys(), bipolys())
def test_ring_axioms(p, r, s):
    assert p * r == r * p
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s


def test_q_derivative_monomials():
    assert not q_derivative_x(BiPoly.constant(9), HALF)
    q = HALF.q
    assert q_derivative_x(X * X, HALF) == (1 + q) * X
    assert q_derivative_y(Y * Y * Y, HALF) == (1 + q + q * q) * (Y * Y)
    # Holds the other variable fixed.
    assert q_derivative_x(X * Y, HALF) == Y


def test_q_derivative_classical_limit():
    p = 5 * (X * X * Y) + 3 * Y
    assert q_derivative_x(p, CLASSICAL) == 10 * (X * Y)
    assert q_derivative_y(p, CLASSICAL) == 5 * (X * X) + BiPoly.constant(3)


def _difference_quotient_x(p, ctx):
    # (p(qx, y) - p(x, y)) / ((q - 1) x), divided monomial by monomial.
    numerator = p.substitute_scaled("x", ctx.q) - p
    out = {}
    for (i, j), c in numerator.items():
        assert i >= 1, "x-free terms must cancel in the numerator"
        out[(i - 1, j)] = c / (ctx.q - 1)
    return BiPoly(out)


@settings(max_examples=60, deadline=None)
@given(bipolys())
def test_q_derivative_matches_difference_quotient(p):
    for ctx in (THIRD, HALF):
        assert q_derivative_x(p, ctx) == _difference_quotient_x(p, ctx)


def test_substitute_scaled():
    p = X * Y + Y * Y
    assert poly_substitute_scaled(p, "y", 1) == p
    assert poly_substitute_scaled(Y * Y, "y", HALF.q) == F(1, 4) * (Y * Y)
    assert poly_substitute_scaled(X * Y, "y", 2) == 2 * (X * Y)
    assert poly_substitute_scaled(p, "x", 3) == 3 * (X * Y) + Y * Y
    with pytest.raises(ValueError):
        poly_substitute_scaled(p, "t", 2)


def test_record_round_trip():
    p = F(-3, 4) * (X * X) + F(7, 2) * Y + BiPoly.constant(1)
    records = p.to_records()
    assert records == [
        {"i": 0, "j": 0, "c": "1"},
        {"i": 0, "j": 1, "c": "7/2"},
        {"i": 2, "j": 0, "c": "-3/4"},
    ]
    assert BiPoly.from_records(records) == p


def test_q_add_pow_poly_expansion():
    for ctx in (HALF, THIRD):
        q = ctx.q
        assert q_add_pow_poly(2, ctx) == X * X + (1 + q) * (X * Y) + q * (Y * Y)
        # Symbolic expansion agrees with the scalar evaluation.
        for n in range(7):
            p = q_add_pow_poly(n, ctx)
            for x0, y0 in ((F(1, 2), F(-1)), (F(2), F(3))):
                assert p.evaluate(x0, y0) == q_add_pow(x0, y0, n, ctx)


def test_str_rendering():
    p = F(1, 2) * (X * X) - Y
    assert str(p) == "-1*y + 1/2*x^2"
    assert str(BiPoly.zero()) == "0"

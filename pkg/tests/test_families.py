from fractions import Fraction as F
from math import comb

import pytest

from qgenocchi.qarith import QContext, q_binomial
from qgenocchi.qpoly import BiPoly, q_add_pow_poly
from qgenocchi.families import (
    FamilyId,
    FamilyKind,
    FamilyTable,
    appell_poly,
    build_table,
    classical_bernoulli,
    classical_genocchi,
    classical_xy_power,
    compute_numbers,
    compute_polys_direct,
    compute_polys_summation,
)

HALF = QContext(F(1, 2))
THIRD = QContext(F(1, 3))
CLASSICAL = QContext(F(1))

G1 = FamilyId(FamilyKind.GENOCCHI, 1)
B1 = FamilyId(FamilyKind.BERNOULLI, 1)


def test_family_id_rejects_negative_order():
    with pytest.raises(ValueError):
        FamilyId(FamilyKind.GENOCCHI, -1)


def test_genocchi_numbers_low_degrees():
    # Hand expansion of the reciprocal of (e_q + 1)/2 through order 2.
    for ctx in (HALF, THIRD):
        numbers = compute_numbers(G1, ctx, 2)
        assert numbers[0] == 0
        assert numbers[1] == 1
        assert numbers[2] == -(1 + ctx.q) / 2
    assert compute_numbers(G1, HALF, 2) == [0, 1, F(-3, 4)]


def test_bernoulli_numbers_low_degrees():
    for ctx in (HALF, THIRD):
        q = ctx.q
        numbers = compute_numbers(B1, ctx, 2)
        assert numbers[0] == 1
        assert numbers[1] == -1 / (1 + q)
        assert numbers[2] == 1 / (1 + q) - 1 / (1 + q + q * q)
    assert compute_numbers(B1, CLASSICAL, 2) == [1, F(-1, 2), F(1, 6)]


def test_classical_bernoulli_oracle():
    b = classical_bernoulli(12)
    assert b[0] == 1
    assert b[1] == F(-1, 2)
    assert b[2] == F(1, 6)
    assert b[4] == F(-1, 30)
    assert b[6] == F(1, 42)
    assert b[12] == F(-691, 2730)
    assert all(b[n] == 0 for n in range(3, 12, 2))


def test_classical_genocchi_oracle():
    g = classical_genocchi(12)
    assert g[:3] == [0, 1, -1]
    assert g[4] == 1
    assert g[6] == -3
    assert g[8] == 17
    assert g[10] == -155
    assert g[12] == 2073
    assert all(g[n] == 0 for n in range(3, 12, 2))


def test_limit_to_classical_numbers():
    n = 12
    assert compute_numbers(G1, CLASSICAL, n) == classical_genocchi(n)
    assert compute_numbers(B1, CLASSICAL, n) == classical_bernoulli(n)


def test_order_zero_genocchi_polys_are_q_powers():
    for ctx in (HALF, CLASSICAL):
        fam = FamilyId(FamilyKind.GENOCCHI, 0)
        polys = compute_polys_direct(fam, ctx, 6)
        for n, p in enumerate(polys):
            assert p == q_add_pow_poly(n, ctx)
            assert p.eval_y(0) == BiPoly.term(1, n, 0)
            assert p.eval_x(0) == BiPoly.term(ctx.q_pow(n * (n - 1) // 2), 0, n)


def test_order_one_genocchi_poly_degree_one_is_constant():
    for ctx in (HALF, THIRD, CLASSICAL):
        polys = compute_polys_direct(G1, ctx, 1)
        assert polys[1] == BiPoly.one()


def test_classical_limit_of_polynomials():
    # At q = 1 the bivariate polynomials collapse to G_n(x + y), built here
    # from the independent classical oracle.
    g = classical_genocchi(8)
    polys = compute_polys_direct(G1, CLASSICAL, 8)
    for n in range(9):
        expected = BiPoly.zero()
        for k in range(n + 1):
            expected += comb(n, k) * g[k] * classical_xy_power(n - k)
        assert polys[n] == expected


def test_cross_path_equality():
    for ctx in (THIRD, HALF, CLASSICAL):
        for order in (0, 1, 2):
            for kind in FamilyKind:
                fam = FamilyId(kind, order)
                assert compute_polys_direct(fam, ctx, 6) == compute_polys_summation(fam, ctx, 6)


def test_cross_path_equality_above_one():
    # The engine is purely formal, so q > 1 works the same.
    ctx = QContext(F(3, 2))
    for kind in FamilyKind:
        fam = FamilyId(kind, 1)
        assert compute_polys_direct(fam, ctx, 5) == compute_polys_summation(fam, ctx, 5)


def test_order_convolution():
    # Numbers of order a+b are the q-binomial convolution of orders a and b.
    for ctx in (HALF, CLASSICAL):
        for kind in FamilyKind:
            na = compute_numbers(FamilyId(kind, 1), ctx, 10)
            nb = compute_numbers(FamilyId(kind, 2), ctx, 10)
            nab = compute_numbers(FamilyId(kind, 3), ctx, 10)
            for n in range(11):
                conv = sum(
                    q_binomial(n, k, ctx) * na[k] * nb[n - k] for k in range(n + 1)
                )
                assert nab[n] == conv


def test_genocchi_vanishing_below_order():
    for ctx in (HALF, THIRD, CLASSICAL):
        for order in (1, 2, 3):
            numbers = compute_numbers(FamilyId(FamilyKind.GENOCCHI, order), ctx, 8)
            assert all(numbers[n] == 0 for n in range(order))
            polys = compute_polys_direct(FamilyId(FamilyKind.GENOCCHI, order), ctx, order)
            assert all(not polys[n] for n in range(order))


def test_table_consistency_and_round_trip():
    table = build_table(G1, HALF, 5)
    for n in range(6):
        assert table.poly(n).evaluate(0, 0) == table.number(n)
    data = table.to_json_dict()
    assert data["family"] == "genocchi"
    assert data["numbers"][2] == "-3/4"
    assert FamilyTable.from_json_dict(data) == table
    thin = build_table(B1, HALF, 4, with_polys=False)
    assert "polys" not in thin.to_json_dict()
    assert FamilyTable.from_json_dict(thin.to_json_dict()) == thin
    with pytest.raises(ValueError):
        thin.poly(0)


def test_number_mutation_helper():
    table = build_table(G1, HALF, 4)
    mutated = table.with_number_mutation(2, F(1))
    assert mutated.number(2) == table.number(2) + 1
    assert mutated.number(3) == table.number(3)
    assert mutated.polys == table.polys


def test_appell_poly_matches_direct_expansion():
    b = classical_bernoulli(6)
    # B_2(x) = x^2 - x + 1/6.
    x = BiPoly.var_x()
    assert appell_poly(b, 2, "x") == x * x - x + BiPoly.constant(F(1, 6))
    # Appell shift identity: p_n(y + c) = sum C(n,k) p_k-coeff expansion.
    g = classical_genocchi(6)
    shifted = appell_poly(g, 3, "y", F(1, 2))
    direct = BiPoly.zero()
    y = BiPoly.var_y()
    for k in range(4):
        direct += comb(3, k) * g[k] * (y + BiPoly.constant(F(1, 2))) ** (3 - k)
    assert shifted == direct

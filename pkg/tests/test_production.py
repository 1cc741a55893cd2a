from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import coefficient_lists, nonzero_rationals, small_rationals
from riordan_moments.errors import NotInvertible, NotTridiagonal
from riordan_moments.expr import parse_series
from riordan_moments.expriordan import ExponentialRiordan
from riordan_moments.families import family, legendre_value
from riordan_moments.matrix import ProductionMatrix, TriangularMatrix
from riordan_moments.orthopoly import generate_polynomials
from riordan_moments.powerseries import PowerSeries
from riordan_moments.production import (
    ThreeTermRecurrence,
    characteristic_polynomial,
    extract_recurrence,
    is_tridiagonal,
    production_matrix,
    riordan_stieltjes,
)
from riordan_moments.riordan import OrdinaryRiordan

N = 14
X = PowerSeries.x(N)


def chebyshev_like(num, a, b, order=N):
    x = PowerSeries.x(order)
    den = 1 + a * x + b * x * x
    return OrdinaryRiordan(num / den, x / den)


def test_production_examples():
    r, s = 2, 3
    inv = chebyshev_like(PowerSeries.one(N), r, s).inverse()
    p = production_matrix(inv.realize(10))
    assert p.size == 9
    assert p.tridiagonal_verdict()
    assert p.bands() == {"sub": [3] * 8, "diag": [2] * 9, "super": [1] * 9}
    assert production_matrix(TriangularMatrix.identity(6)) == ProductionMatrix.shift(5)


def test_legendre_coefficient_inverse_production():
    # monic-free Legendre: rows are the coefficients of P_n(x); its inverse's production
    # has super-diagonal (n+1)/(2n+1), so it is banded but not unit tri-diagonal
    rows = []
    for n in range(9):
        poly = sympy.Poly(sympy.legendre(n, sympy.Symbol("x")), sympy.Symbol("x"))
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())]
        rows.append(coeffs)
    p = production_matrix(TriangularMatrix(rows).inverse())
    assert p.square(3) == [[0, 1, 0], [Fraction(1, 3), 0, Fraction(2, 3)], [0, Fraction(2, 5), 0]]
    bands = p.bands()
    assert bands["super"] == [Fraction(n + 1, 2 * n + 1) for n in range(p.size)]
    assert bands["sub"] == [Fraction(n, 2 * n + 1) for n in range(1, p.size)]
    verdict = p.tridiagonal_verdict()
    assert not verdict and verdict.witness == (1, 2)


def test_singular_matrix_rejected():
    with pytest.raises(NotInvertible):
        production_matrix(TriangularMatrix([[1], [2, 0], [1, 1, 1]]))


def test_is_tridiagonal_examples():
    lag = ExponentialRiordan(1 / (1 - X), X / (1 - X))
    v = is_tridiagonal(production_matrix(lag.realize(8)))
    assert v
    assert is_tridiagonal(ProductionMatrix.shift(4))
    charlier = ExponentialRiordan(X.exp(), (1 / (1 - X)).log())
    v = is_tridiagonal(production_matrix(charlier.realize(8)))
    assert not v and v.witness == (3, 1)


def test_extract_recurrence_examples():
    p = production_matrix(family("hermite", 3).moment_array.realize(10))
    rec = extract_recurrence(p)
    assert rec.alphas == (6,) * 9
    assert rec.betas == tuple(-2 * n for n in range(1, 9))
    rec = extract_recurrence(ProductionMatrix.shift(5))
    assert rec.alphas == (0,) * 5 and rec.degenerate == [1, 2, 3, 4]
    assert not rec.is_orthogonal
    p = production_matrix(family("shifted-legendre", 2).moment_array.realize(8))
    rec = extract_recurrence(p)
    assert rec.alphas == (3,) * 7 and rec.betas == (4, 2, 2, 2, 2, 2)


def test_extract_recurrence_rejects_non_tridiagonal():
    charlier = ExponentialRiordan(X.exp(), (1 / (1 - X)).log())
    with pytest.raises(NotTridiagonal) as info:
        extract_recurrence(production_matrix(charlier.realize(8)))
    assert info.value.witness == (3, 1)


def test_riordan_stieltjes_examples():
    lam, mu, a, b = 1, 1, 2, 3
    inv = chebyshev_like(1 - lam * X - mu * X * X, a, b).inverse()
    p = riordan_stieltjes(inv, 8)
    assert p.square(3) == [[a + lam, 1, 0], [b + mu, a, 1], [0, b, a]]
    assert p.tridiagonal_verdict() and set(p.bands()["diag"][1:]) == {a} and set(p.bands()["sub"][1:]) == {b}
    assert riordan_stieltjes(OrdinaryRiordan.identity(N), 6) == ProductionMatrix.shift(6)
    k = 2
    inv = chebyshev_like(1 + lam * X + mu * X * X, a + k, b).inverse()
    p = riordan_stieltjes(inv, 8)
    assert p.square(2) == [[a + k - lam, 1], [b - mu, a + k]]
    # same array as (..)(1/(1+kx), x/(1+kx)), then inverted
    product = chebyshev_like(1 + lam * X + mu * X * X, a, b) * OrdinaryRiordan(1 / (1 + k * X), X / (1 + k * X))
    assert product.inverse() == inv


def test_binomial_conjugation_shifts_diagonal():
    a, b, k = 1, 2, 3
    base = chebyshev_like(PowerSeries.one(N), a, b).inverse()
    bk = OrdinaryRiordan(1 / (1 - k * X), X / (1 - k * X))
    p = riordan_stieltjes(bk * base, 8)
    assert p.bands()["diag"] == [a + k] * 8 and p.bands()["sub"] == [b] * 7


def test_eventually_constant_a_and_z_sequences():
    # A = 1 + a x + b x^2 and Z = a1 + b1 x  give bands (a1, b1) then (a, b), n >= 1
    a, b, a1, b1 = Fraction(1, 2), -2, 3, 5
    f = (X / (1 + a * X + b * X * X)).revert()
    g = 1 / (1 - a1 * X - b1 * X * f)
    p = riordan_stieltjes(OrdinaryRiordan(g, f), 8)
    assert p.bands()["diag"] == [a1] + [a] * 7
    assert p.bands()["sub"] == [b1] + [b] * 6


def arrays():
    yield OrdinaryRiordan(1 / (1 - X), X / (1 - X))
    yield chebyshev_like(1 - X - X * X, 2, 3).inverse()
    yield OrdinaryRiordan(parse_series("(1-sqrt(1-4x))/(2x)", N), parse_series("(1-sqrt(1-4x))/2", N))
    yield ExponentialRiordan(1 / (1 - X), X / (1 - X))
    yield ExponentialRiordan(X.exp(), (1 / (1 - X)).log())
    yield ExponentialRiordan(PowerSeries.one(N), X / (1 + X))
    yield ExponentialRiordan(parse_series("cosh(x)", N), X)


def test_numeric_equals_analytic_and_stacking_reconstructs():
    for arr in arrays():
        m = arr.realize(12)
        p = production_matrix(m)
        assert riordan_stieltjes(arr, p.size) == p
        assert p.stack(12) == m


def test_characteristic_polynomial_against_sympy():
    m = [[Fraction(1, 2), 1, 0], [3, -1, 1], [Fraction(2, 3), 4, 5]]
    x = sympy.Symbol("x")
    want = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in m]).charpoly(x)
    got = characteristic_polynomial(m)
    assert [sympy.Rational(c.numerator, c.denominator) for c in reversed(got)] == want.all_coeffs()


def test_characteristic_polynomials_are_rows_of_the_inverse():
    for arr in (family("legendre", 3, order=12).moment_array, family("hermite", Fraction(1, 2), order=12).moment_array):
        m = arr.realize(10)
        p = production_matrix(m)
        inv = m.inverse()
        for n in range(1, 9):
            assert tuple(characteristic_polynomial(p.square(n))) == inv.row(n)


@given(st.lists(small_rationals(), min_size=6, max_size=6), st.lists(nonzero_rationals(), min_size=5, max_size=5))
def test_tridiagonal_production_regenerates_polynomials(alphas, betas):
    rec = ThreeTermRecurrence(tuple(alphas), tuple(betas))
    moment_array = rec.production(6).stack(7)
    p = production_matrix(moment_array)
    assert extract_recurrence(p) == rec
    assert generate_polynomials(rec, 7).coefficients == moment_array.inverse()


def test_recurrence_accessors():
    rec = ThreeTermRecurrence.constant(1, 2, 3)
    assert rec.alphas == (1, 1, 1, 1) and rec.betas == (2, 2, 2)
    assert rec.truncate(1) == ThreeTermRecurrence((1, 1), (2,))
    with pytest.raises(Exception):
        rec.beta(0)
    with pytest.raises(Exception):
        rec.alpha(4)

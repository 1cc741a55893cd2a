from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import nonzero_rationals, small_rationals
from riordan_moments.errors import NotEnoughCoefficients, NotEnoughMoments, SingularHankel
from riordan_moments.expriordan import ExponentialRiordan
from riordan_moments.families import hermite_value, shifted_legendre_array, unitary_hermite_value, unitary_hermite_hankel
from riordan_moments.matrix import TriangularMatrix
from riordan_moments.orthopoly import (
    MomentSequence,
    binomial_transform,
    expand_in_family,
    generate_polynomials,
    hankel_direct,
    hankel_matrix,
    hankel_product,
    hankel_transform,
    jfraction_from_moments,
    moments_from_array_column,
    moments_from_recurrence,
    recurrence_from_moments,
)
from riordan_moments.powerseries import PowerSeries
from riordan_moments.production import ThreeTermRecurrence
from riordan_moments.riordan import OrdinaryRiordan

CATALAN = [oracles.catalan(n) for n in range(12)]
AERATED_CATALAN = [oracles.catalan(n // 2) if n % 2 == 0 else 0 for n in range(12)]


def recurrences(depth):
    return st.builds(
        lambda a, b: ThreeTermRecurrence(tuple(a), tuple(b)),
        st.lists(small_rationals(), min_size=depth + 1, max_size=depth + 1),
        st.lists(nonzero_rationals(), min_size=depth, max_size=depth),
    )


def test_generate_polynomials_examples():
    r = 2
    rec = ThreeTermRecurrence.from_functions(lambda n: 2 * r - 1, lambda n: 2 * r * (r - 1) if n == 1 else r * (r - 1), 8)
    fam = generate_polynomials(rec, 8)
    assert fam.coefficients == shifted_legendre_array(r, 10).realize(8).inverse()
    assert fam.monic
    zero = generate_polynomials(ThreeTermRecurrence.constant(0, 0, 6), 6)
    assert zero.coefficients == TriangularMatrix.identity(6)
    he = generate_polynomials(ThreeTermRecurrence.from_functions(lambda n: 0, lambda n: n, 6), 6)
    assert he.coefficients.to_strings()[:5] == [["1"], ["0", "1"], ["-1", "0", "1"], ["0", "-3", "0", "1"], ["3", "0", "-6", "0", "1"]]


def test_polynomial_evaluation():
    he = generate_polynomials(ThreeTermRecurrence.from_functions(lambda n: 0, lambda n: n, 8), 8)
    for n in range(8):
        assert he.evaluate(n, Fraction(3, 2)) == unitary_hermite_value(n, Fraction(3, 2))


def test_moments_from_recurrence_examples():
    assert list(moments_from_recurrence(ThreeTermRecurrence.constant(0, 1, 6), 12)) == AERATED_CATALAN
    c = Fraction(5, 3)
    assert list(moments_from_recurrence(ThreeTermRecurrence.constant(c, 0, 6), 9)) == [c**n for n in range(9)]
    rec = ThreeTermRecurrence.from_functions(lambda n: 2, lambda n: -2 * n, 6)
    assert list(moments_from_recurrence(rec, 5)) == [1, 2, 2, -4, -20]
    assert list(moments_from_recurrence(rec, 12)) == [hermite_value(n, 1) for n in range(12)]


def test_moments_need_only_influential_coefficients():
    # 2 moments need alpha_0 only; 3 need beta_1 too
    assert list(moments_from_recurrence(ThreeTermRecurrence((7,), ()), 2)) == [1, 7]
    with pytest.raises(NotEnoughCoefficients):
        moments_from_recurrence(ThreeTermRecurrence((7,), ()), 3)


@given(recurrences(6), st.integers(1, 13))
def test_jfraction_depth_matches_path_counting(rec, count):
    got = list(moments_from_recurrence(rec, count))
    assert got == oracles.moments_by_path_counting(rec.alphas, rec.betas, count)


@given(recurrences(6))
def test_moments_match_stacked_production(rec):
    m = rec.production(6).stack(7)
    assert list(moments_from_recurrence(rec, 7)) == m.first_column()


def test_moments_from_array_column_examples():
    arr = shifted_legendre_array(2, 10)
    assert list(moments_from_array_column(arr, count=4)) == [1, 3, 13, 63]
    assert list(moments_from_array_column(arr.realize(4))) == [1, 3, 13, 63]
    ident = ExponentialRiordan.identity(6)
    assert list(moments_from_array_column(ident)) == [1, 0, 0, 0, 0, 0, 0]
    x = PowerSeries.x(8)
    herm = ExponentialRiordan.appell((2 * x - x * x).exp())
    assert list(moments_from_array_column(herm, count=5)) == [1, 2, 2, -4, -20]
    assert list(moments_from_array_column(herm.g, exponential=True, count=5)) == [1, 2, 2, -4, -20]
    with pytest.raises(NotEnoughMoments):
        moments_from_array_column(herm, count=20)


def test_hankel_direct_examples():
    assert hankel_direct(CATALAN, 1) == 1
    assert hankel_direct([Fraction(7, 3)], 0) == Fraction(7, 3)
    he0 = [unitary_hermite_value(n, 0) for n in range(7)]
    assert he0 == [1, 0, -1, 0, 3, 0, -15]
    assert hankel_direct(he0, 2) == -2 == unitary_hermite_hankel(2)
    with pytest.raises(NotEnoughMoments):
        hankel_direct([1, 2, 3], 2)


def test_hankel_direct_matches_leibniz():
    mu = [Fraction(n * n - 3, n + 1) for n in range(9)]
    for n in range(5):
        assert hankel_direct(mu, n) == oracles.laplace_det(hankel_matrix(mu, n))


def test_hankel_product_examples():
    ones = ThreeTermRecurrence.constant(2, 1, 8)
    assert [hankel_product(ones, 1, n) for n in range(8)] == [1] * 8
    assert hankel_transform(CATALAN, 5) == [1] * 6
    assert hankel_product(ones, Fraction(3, 5), 0) == Fraction(3, 5)
    r = Fraction(7, 3)
    sl = ThreeTermRecurrence.from_functions(lambda n: 2 * r - 1, lambda n: 2 * r * (r - 1) if n == 1 else r * (r - 1), 7)
    assert [hankel_product(sl, 1, n) for n in range(7)] == [2**n * (r * (r - 1)) ** comb(n + 1, 2) for n in range(7)]
    with pytest.raises(NotEnoughCoefficients):
        hankel_product(ThreeTermRecurrence.constant(0, 1, 2), 1, 4)


def test_recurrence_from_moments_examples():
    rec = recurrence_from_moments(AERATED_CATALAN, 4)
    assert rec.alphas == (0,) * 5 and rec.betas == (1,) * 4
    with pytest.raises(SingularHankel) as info:
        recurrence_from_moments([Fraction(2) ** n for n in range(8)], 3)
    assert info.value.depth == 1
    legendre = [1, 3, 13, 63, 321, 1683, 8989, 48639]
    rec = recurrence_from_moments(legendre, 3)
    assert rec.alphas == (3, 3, 3, 3) and rec.betas == (4, 2, 2)


def test_geometric_moments_are_degenerate_via_jfraction():
    with pytest.raises(SingularHankel):
        jfraction_from_moments([Fraction(2) ** n for n in range(8)], 3)
    rec = jfraction_from_moments([Fraction(2) ** n for n in range(2)], 0)
    assert rec.alphas == (2,) and rec.betas == ()


@given(recurrences(6), st.integers(0, 6))
def test_moment_recurrence_roundtrip(rec, n):
    rec = rec.truncate(n)
    mu = moments_from_recurrence(rec, 2 * n + 2)
    assert recurrence_from_moments(mu, n) == rec
    assert jfraction_from_moments(mu, n) == rec


@given(recurrences(5), nonzero_rationals())
def test_hankel_direct_equals_product(rec, mu0):
    mu = moments_from_recurrence(rec, 11, mu0)
    for n in range(6):
        assert hankel_direct(mu, n) == hankel_product(rec, mu0, n)


def test_binomial_transform_examples():
    assert list(binomial_transform([1, 0, 0, 0])) == [1, 1, 1, 1]
    cat = binomial_transform(CATALAN[:5])
    assert list(cat) == [1, 2, 5, 15, 51]


@given(st.lists(st.integers(-9, 9), min_size=11, max_size=11))
def test_binomial_transform_preserves_hankel(seq):
    b = binomial_transform(seq)
    assert hankel_transform(seq, 5) == hankel_transform(b, 5)


@given(recurrences(6))
def test_polynomials_invert_moment_array(rec):
    moment_array = rec.production(7).stack(8)
    fam = generate_polynomials(rec, 8)
    assert fam.coefficients == moment_array.inverse()
    for n in range(8):
        assert expand_in_family(fam, moment_array, n) == [0] * n + [1]


def test_coefficient_recurrence_entrywise():
    rec = ThreeTermRecurrence.from_functions(lambda n: Fraction(n, 2), lambda n: -n - 1, 8)
    a = generate_polynomials(rec, 9).coefficients
    for n in range(1, 8):
        for k in range(n + 2):
            want = a[n, k - 1] - rec.alpha(n) * a[n, k] - rec.beta(n) * a[n - 1, k]
            assert a[n + 1, k] == want


@given(small_rationals(), nonzero_rationals())
def test_f_over_x_identity(a, b):
    x = PowerSeries.x(12)
    f = (x / (1 + a * x + b * x * x)).revert()
    u = f.shift(-1)
    assert u == 1 / (1 - a * x.truncate(11) - b * x.truncate(11) * x.truncate(11) * u)


def test_moment_sequence_type():
    mu = MomentSequence((1, "1/2", 3))
    assert mu.normalized and len(mu) == 3 and mu.to_strings() == ["1", "1/2", "3"]
    assert not MomentSequence((2,)).normalized
    with pytest.raises(ValueError):
        MomentSequence(())
    assert mu.as_series() == PowerSeries([1, Fraction(1, 2), 3])


def test_jfraction_from_odd_count_gives_betas():
    rec = jfraction_from_moments(CATALAN[:9], 4)
    assert rec.betas == (1, 1, 1, 1) and len(rec.alphas) == 4

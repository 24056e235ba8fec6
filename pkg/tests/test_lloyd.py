from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from quasicount.actions import qc_sum
from quasicount.lloyd import PowerSeries, lloyd_coefficient, lloyd_series
from quasicount.numtheory import is_prime
from quasicount.oracle import prime_tuple_classes

PRIMES = [p for p in range(5, 98) if is_prime(p)]


@pytest.mark.parametrize("order", [0, 1, 5, 20])
def test_geometric_inverse(order):
    one_minus_x = PowerSeries([1, -1], order)
    assert one_minus_x * one_minus_x ** -1 == PowerSeries.one(order)
    assert (one_minus_x ** -1).coeffs == [1] * (order + 1)


def test_negative_power_gives_binomials():
    s = PowerSeries([1, -1], 8) ** -3
    assert s.coeffs == [comb(k + 2, 2) for k in range(9)]


@pytest.mark.parametrize("ell, dual", [(2, 3), (3, 2), (5, 1), (4, 4)])
def test_substitution_matches_direct_reciprocal(ell, dual):
    order = 24
    direct = (PowerSeries.one(order) - PowerSeries.monomial(1, ell, order)) ** -dual
    via = (PowerSeries([1, -1], order) ** -dual).substitute_power(ell)
    assert direct == via


@given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=8),
       st.lists(st.fractions(max_denominator=20), min_size=1, max_size=8))
def test_multiplication_commutes(a, b):
    assert PowerSeries(a) * PowerSeries(b) == PowerSeries(b) * PowerSeries(a)


def test_reciprocal_needs_constant_term():
    with pytest.raises(ZeroDivisionError):
        PowerSeries([0, 1], 4).reciprocal()


def test_truncation_is_not_zero_fill():
    s = PowerSeries([1, 2, 3])
    with pytest.raises(IndexError):
        s[3]


@pytest.mark.parametrize("p, expected", [(5, 1), (7, 2)])
def test_small_prime_coefficients(p, expected):
    assert lloyd_coefficient(p, 3) == expected


def test_rho_three_at_13():
    assert lloyd_coefficient(13, 3) == 3 == qc_sum(13)


@pytest.mark.parametrize("p, rho", [(11, 4), (7, 5), (5, 6), (13, 4)])
def test_higher_rho_against_enumeration(p, rho):
    assert lloyd_coefficient(p, rho) == prime_tuple_classes(p, rho)


def test_cubic_coefficient_is_qc():
    for p in PRIMES:
        assert lloyd_coefficient(p, 3) == qc_sum(p), p


def test_p_three_cubic_coefficient():
    # the Euclidean (3, 3, 3) action is counted by the series, not by QC
    assert lloyd_coefficient(3, 3) == 1
    assert qc_sum(3) == 0


def test_low_coefficients(caplog):
    for p in (3, 5, 7, 11, 13):
        s = lloyd_series(p, 6)
        assert [s[k] for k in range(3)] == [1, 0, 1]


def test_coefficients_are_nonnegative_integers():
    for p in (5, 7, 11, 13, 17):
        s = lloyd_series(p, 10)
        for k in range(3, 11):
            assert s[k].denominator == 1 and s[k] >= 0, (p, k)


def test_free_term_share():
    # the (1-x)^-(p-1) term contributes C(p+1, 3) / (p(p-1)) to x^3
    for p in PRIMES:
        assert Fraction(comb(p + 1, 3), p * (p - 1)) == Fraction(p + 1, 6)


@pytest.mark.parametrize("p", [1, 2, 4, 9, 15])
def test_rejects_bad_primes(p):
    with pytest.raises(ValueError):
        lloyd_series(p, 5)


def test_rejects_short_order():
    with pytest.raises(ValueError):
        lloyd_series(7, 2)
    with pytest.raises(ValueError):
        lloyd_coefficient(7, 2)

"""Ring and truncation behaviour of the exact polynomial core."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qschur.qpoly import QPoly, XSeries


def poly_strategy(max_terms=6, max_half=40, max_coeff=10 ** 6, min_half=None):
    lo = -max_half if min_half is None else min_half
    pair = st.tuples(st.integers(lo, max_half),
                     st.integers(-max_coeff, max_coeff))
    return st.lists(pair, max_size=max_terms).map(
        lambda ps: QPoly._raw({e: c for e, c in ps if c}))


polys = poly_strategy()
nonneg_polys = poly_strategy(min_half=0)


def test_constructors_agree():
    assert QPoly.zero().is_zero()
    assert QPoly.one() == 1
    assert QPoly.q_power(3) == QPoly.monomial(1, 6)
    assert QPoly.from_q_coeffs({0: 1, 5: 2}) == \
        QPoly.one() + QPoly.monomial(2, 10)


def test_zero_coefficients_are_dropped():
    p = QPoly({4: 0, 2: 1})
    assert list(p.items()) == [(2, 1)]
    assert (p - p).is_zero()


@given(polys, polys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(polys, polys, polys)
def test_multiplication_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys, polys, polys)
def test_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(polys, polys)
def test_eval_at_one_is_multiplicative(a, b):
    assert (a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one()


@given(polys, st.integers(0, 5))
def test_pow_matches_repeated_product(a, n):
    expected = QPoly.one()
    for _ in range(n):
        expected = expected * a
    assert a ** n == expected


@given(polys)
def test_negation_cancels(a):
    assert (a + (-a)).is_zero()
    assert a - a == QPoly.zero()


@given(polys, st.integers(-8, 8))
def test_shift_adds_to_exponents(a, h):
    shifted = a.shift(h)
    assert shifted.eval_at_one() == a.eval_at_one()
    for e, c in a.items():
        assert shifted.coefficient(e + h) == c


@given(polys, st.integers(1, 4))
def test_substitute_stretches_exponents(a, k):
    sub = a.substitute_q_power(k)
    for e, c in a.items():
        assert sub.coefficient(e * k) == c
    assert sub.eval_at_one() == a.eval_at_one()


@given(polys)
def test_substitute_inverse_is_an_involution(a):
    assert a.substitute_q_power(-1).substitute_q_power(-1) == a


@given(nonneg_polys, nonneg_polys, st.integers(0, 25))
def test_truncated_product_consistent(a, b, t):
    # cutting inputs at degree t cannot change the product below t,
    # provided no negative exponents can pull high terms back down
    full = (a * b).truncate(t)
    short = (a.truncate(t) * b.truncate(t)).truncate(t)
    assert full == short


@given(polys, st.integers(0, 25))
def test_truncate_bound(a, t):
    cut = a.truncate(t)
    top = cut.max_half_exponent()
    assert top is None or top <= 2 * t


def test_kronecker_product_against_schoolbook():
    # same pair multiplied through both internal paths
    a = QPoly._raw({0: 3, 5: -2, 11: 7})
    b = QPoly._raw({-4: 1, 3: 10 ** 30})
    assert QPoly._mul_dict(a._c, b._c) == QPoly._mul_packed(a._c, b._c)


def test_big_coefficients_survive_roundtrip():
    p = QPoly.monomial(10 ** 40 + 7, 3)
    assert QPoly.from_pairs(p.to_pairs()) == p


def test_comparison_with_ints():
    assert QPoly.from_q_coeffs({0: 5}) == 5
    assert QPoly.zero() == 0
    assert QPoly.q_power(1) != 1


def test_min_max_exponent_on_zero():
    assert QPoly.zero().min_half_exponent() is None
    assert QPoly.zero().max_half_exponent() is None


def test_xseries_strata_and_sum():
    s = XSeries.term(10, 0, QPoly.one()) + XSeries.term(10, 2, QPoly.q_power(1))
    assert s.x_degrees() == [0, 2]
    assert s.stratum(1).is_zero()
    assert s.at_x_one() == QPoly.one() + QPoly.q_power(1)


def test_xseries_product_convolves_x_degrees():
    a = XSeries.term(20, 1, QPoly.q_power(1))
    b = XSeries.term(20, 2, QPoly.q_power(2)) + XSeries.term(20, 0, QPoly.one())
    prod = a * b
    assert prod.stratum(3) == QPoly.q_power(3)
    assert prod.stratum(1) == QPoly.q_power(1)


def test_xseries_product_truncates_q_degree():
    a = XSeries.term(3, 0, QPoly.q_power(2))
    b = XSeries.term(3, 0, QPoly.q_power(2))
    assert (a * b).stratum(0).is_zero()


def test_xseries_mismatched_truncation_rejected():
    a = XSeries.zero(5)
    b = XSeries.zero(6)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


@settings(max_examples=30)
@given(poly_strategy(max_terms=4, max_half=12),
       poly_strategy(max_terms=4, max_half=12))
def test_xseries_at_x_one_is_additive(a, b):
    sa = XSeries.term(30, 0, a.truncate(30))
    sb = XSeries.term(30, 1, b.truncate(30))
    assert (sa + sb).at_x_one() == a.truncate(30) + b.truncate(30)

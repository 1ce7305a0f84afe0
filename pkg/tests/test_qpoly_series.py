from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glhom.exact import InputError
from glhom.qpoly import QPolynomial
from glhom.series import TruncatedSeries, series_exp, series_log

small_ints = st.integers(-20, 20)
polys = st.builds(
    lambda low, cs: QPolynomial.from_coeffs(cs, low),
    st.integers(-5, 5),
    st.lists(small_ints, max_size=8),
)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == QPolynomial()


@given(polys, polys, st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, b, x):
    if x == 0:
        return
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(polys, polys)
def test_exact_division_roundtrip(a, b):
    if not b:
        return
    assert (a * b).exact_div(b) == a


@given(polys)
def test_qpoly_json_roundtrip(a):
    assert QPolynomial.from_json(a.to_json()) == a


@given(polys, st.integers(1, 4))
def test_substitute_power(a, k):
    assert a.substitute_power(k)(2) == a(2**k)


def test_kronecker_matches_schoolbook_on_large_input():
    a = QPolynomial.from_coeffs([(-1) ** i * (i * i + 1) for i in range(300)])
    b = QPolynomial.from_coeffs([3 - i for i in range(250)])
    for x in (2, -3, Fraction(1, 2)):
        assert (a * b)(x) == a(x) * b(x)


def test_series_product_examples():
    one_plus = TruncatedSeries.from_sparse({0: 1, 1: 1}, 4)
    one_minus = TruncatedSeries.from_sparse({0: 1, 1: -1}, 4)
    assert one_plus * one_minus == TruncatedSeries.from_sparse({0: 1, 2: -1}, 4)
    assert one_plus * TruncatedSeries.one(4) == one_plus


def test_order_mismatch_is_an_error():
    with pytest.raises(InputError):
        TruncatedSeries.one(3) + TruncatedSeries.one(4)


def test_exp_log_examples():
    assert series_exp(TruncatedSeries.zero(6)) == TruncatedSeries.one(6)
    mercator = series_log(TruncatedSeries.from_sparse({0: 1, 1: 1}, 6))
    assert list(mercator) == [0] + [Fraction((-1) ** (n + 1), n) for n in range(1, 7)]


def test_exp_needs_zero_constant_term():
    with pytest.raises(InputError):
        series_exp(TruncatedSeries.one(3))
    with pytest.raises(InputError):
        series_log(TruncatedSeries.zero(3))


fracs = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 50))


@settings(max_examples=40)
@given(st.lists(fracs, min_size=1, max_size=12))
def test_exp_log_roundtrip(cs):
    a = TruncatedSeries([Fraction(0)] + cs, len(cs))
    assert series_log(series_exp(a)) == a
    b = TruncatedSeries([Fraction(1)] + cs, len(cs))
    assert series_exp(series_log(b)) == b


@settings(max_examples=30)
@given(st.lists(fracs, min_size=2, max_size=10), st.lists(fracs, min_size=2, max_size=10))
def test_exp_turns_sums_into_products(xs, ys):
    N = min(len(xs), len(ys))
    a = TruncatedSeries([Fraction(0)] + xs[:N], N)
    b = TruncatedSeries([Fraction(0)] + ys[:N], N)
    assert series_exp(a + b) == series_exp(a) * series_exp(b)


@given(st.lists(fracs, min_size=1, max_size=10))
def test_series_json_roundtrip(cs):
    a = TruncatedSeries(cs, len(cs) - 1)
    assert TruncatedSeries.from_json(a.to_json()) == a


def test_stretch():
    a = TruncatedSeries.from_sparse({0: 1, 1: 2, 2: 3}, 2)
    assert a.stretch(3, 7) == TruncatedSeries.from_sparse({0: 1, 3: 2, 6: 3}, 7)

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glhom.exact import InputError, binom, cyclotomic, is_squarefree
from glhom.qpoly import QPolynomial
from glhom.qseries import (
    dwork_check,
    f_series,
    g_series,
    h_coefficient_from_p,
    h_series,
    h_stretched,
    min_valuation,
    p_poly,
    q_catalan,
    q_poly,
    r_poly,
)
from glhom.series import TruncatedSeries, series_exp, series_log

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786]


def test_f_coefficients():
    f = f_series(3, 4)
    assert f[0] == 1
    assert f[1] == Fraction(1, 2)
    assert f[2] == Fraction(1, 48)


def test_f_squared_linear_term():
    f = f_series(3, 4)
    assert (f * f)[1] == 1


def test_degenerate_q_rejected():
    for q in (0, 1, -1):
        with pytest.raises(InputError):
            f_series(q, 3)


@pytest.mark.parametrize("q", [2, 3, 5, Fraction(1, 2), Fraction(-7, 3)])
def test_f_coefficient_recurrence(q):
    # ratio of consecutive coefficients: f_n / f_{n-1} = -1 / (q^{n-1} (1 - q^n))
    f = f_series(q, 12)
    for n in range(1, 13):
        assert (1 - q**n) * q ** (n - 1) * f[n] == -f[n - 1]


def test_h_examples():
    assert h_series(3, 3)[1] == Fraction(1, 2)
    assert h_series(5, 3)[1] == Fraction(1, 4)


def test_exp_log_roundtrip_on_f():
    f = f_series(3, 20)
    assert series_exp(series_log(f)) == f


@pytest.mark.parametrize("q", [2, 3, 7])
def test_h_stretched_matches_substitution(q):
    N = 12
    direct = h_stretched(q, 3, N)
    base = h_series(q**3, N // 3)
    for n in range(N + 1):
        assert direct[n] == (base[n // 3] if n % 3 == 0 else 0)


def test_q_catalan_examples():
    assert q_catalan(0) == QPolynomial.constant(1)
    assert q_catalan(2) == QPolynomial.from_coeffs([1, 1])
    assert q_catalan(3) == QPolynomial.from_coeffs([1, 1, 2, 1])


@pytest.mark.parametrize("n", range(len(CATALAN)))
def test_q_catalan_at_one(n):
    assert q_catalan(n)(1) == CATALAN[n]


def test_g_examples():
    g = g_series(4)
    assert g[1] == QPolynomial.constant(1)
    assert g[2] == QPolynomial.monomial(-1, -1)


def test_g_functional_equation():
    # g(q,z) g(q,z/q) = g(q,z/q) + z
    N = 14
    g = g_series(N)
    g_shift = TruncatedSeries([g[n].shift(-n) for n in range(N + 1)], N)
    lhs = g * g_shift
    rhs = g_shift + TruncatedSeries.from_sparse({1: QPolynomial.constant(1)}, N, g.ring)
    assert lhs == rhs


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_g_is_ratio_of_f(q):
    N = 10
    f = f_series(q, N)
    f_shift = TruncatedSeries([f[n] * Fraction(q) ** n for n in range(N + 1)], N)
    g = g_series(N)
    g_at_q = TruncatedSeries([g[n](Fraction(q)) for n in range(N + 1)], N)
    assert g_at_q * f == f_shift


def test_p_examples():
    assert p_poly(1) == QPolynomial.constant(1)
    assert r_poly(1) == QPolynomial.constant(1)
    assert q_poly(1) == QPolynomial.constant(1)


@pytest.mark.parametrize("n", range(1, 13))
def test_p_poly_shape(n):
    P = p_poly(n)
    assert P.is_integral()
    assert P.degree() == binom(n, 2)
    assert P(1) == binom(2 * n - 1, n - 1)


@pytest.mark.parametrize("d,n", [(d, n) for d in range(2, 13) for n in range(1, 12 // d + 1)])
def test_p_poly_at_roots_of_unity(d, n):
    assert not (p_poly(d * n) - binom(2 * n - 1, n - 1)) % cyclotomic(d)


@pytest.mark.parametrize("n", range(1, 13))
def test_q_poly_parity(n):
    Q = q_poly(n)
    assert Q.is_integral()
    assert (Q(1) % 2 == 1) == is_squarefree(n)


@settings(max_examples=20)
@given(st.integers(1, 9), st.sampled_from([2, 3, 4, 5, 9, Fraction(1, 3)]))
def test_h_coefficient_from_p(n, q):
    assert h_series(q, n)[n] == h_coefficient_from_p(q, n)


def test_dwork_examples():
    log_1pz = series_log(TruncatedSeries.from_sparse({0: 1, 1: 1}, 12))
    assert dwork_check(log_1pz, 2).passed
    z = TruncatedSeries.from_sparse({1: 1}, 12)
    rep = dwork_check(z, 2)
    assert not rep.passed
    assert min_valuation(series_exp(z), 2) < 0


@settings(max_examples=30)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(-30, 30), min_size=1, max_size=10))
def test_dwork_agrees_with_integrality(p, coeffs):
    # 1 + sum c_n z^n with integer c_n has integral log, and exp of that log is integral
    N = len(coeffs)
    a = series_log(TruncatedSeries([1] + coeffs, N))
    assert dwork_check(a, p).passed
    assert min_valuation(series_exp(a), p) >= 0

"""The named series f, h, g and the polynomial families C_n, P_n, R_n, Q_n."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import (
    ConsistencyError,
    InputError,
    binom,
    divisors,
    moebius,
    q_pochhammer,
    vp,
)
from .qpoly import QPolynomial
from .series import QPOLY, RATIONAL, TruncatedSeries, series_log

DEFAULT_ORDER = 40
LOG_G_BLOCK = 16


def _check_q(q) -> Fraction:
    q = Fraction(q)
    if q in (0, 1, -1):
        raise InputError(f"q = {q} makes the series denominators vanish")
    return q


def f_coefficient(q, n: int) -> Fraction:
    """(-1)^n / (q^C(n,2) (q;q)_n)."""
    q = _check_q(q)
    return Fraction((-1) ** n) / (q ** binom(n, 2) * q_pochhammer(n, q))


def f_series(q, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    q = _check_q(q)
    coeffs = [Fraction(1)]
    denom = Fraction(1)  # q^C(n,2) (q;q)_n, built incrementally
    for n in range(1, N + 1):
        denom *= q ** (n - 1) * (1 - q**n)
        coeffs.append((-1) ** n / denom)
    return TruncatedSeries(coeffs, N, RATIONAL)


@lru_cache(maxsize=256)
def _h_cached(q: Fraction, N: int) -> TruncatedSeries:
    return series_log(f_series(q, N))


def h_series(q, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """h(q, z) = log f(q, z)."""
    return _h_cached(_check_q(q), N)


def h_stretched(q, k: int, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """h(q^k, z^k) as a series in z up to order N, built directly."""
    q = _check_q(q)
    return h_series(q**k, N // k).stretch(k, N)


@lru_cache(maxsize=None)
def q_catalan(n: int) -> QPolynomial:
    """Carlitz-Riordan q-Catalan number C_n(q)."""
    if n < 0:
        raise InputError("q-Catalan index must be non-negative")
    if n == 0:
        return QPolynomial.constant(1)
    m_ = n - 1
    total = QPolynomial()
    for m in range(m_ + 1):
        total = total + (q_catalan(m) * q_catalan(m_ - m)).shift((m_ - m) * (m + 1))
    return total


def g_coefficient(n: int) -> QPolynomial:
    if n == 0:
        return QPolynomial.constant(1)
    return (q_catalan(n - 1) * (-1) ** (n - 1)).shift(-binom(n, 2))


def g_series(N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """g(q, z) = f(q, qz) / f(q, z) with Laurent-polynomial coefficients."""
    return TruncatedSeries([g_coefficient(n) for n in range(N + 1)], N, QPOLY)


@lru_cache(maxsize=8)
def _log_g(N: int) -> TruncatedSeries:
    return series_log(g_series(N))


def _log_g_for(n: int) -> TruncatedSeries:
    # one shared log computation covers every index up to LOG_G_BLOCK
    return _log_g(max(n, LOG_G_BLOCK))


@lru_cache(maxsize=None)
def p_poly(n: int) -> QPolynomial:
    """P_n(q) = (-1)^{n-1} n q^C(n,2) [z^n] log g(q, z)."""
    if n < 1:
        raise InputError("P_n is defined for n >= 1")
    coeff = _log_g_for(n)[n]
    P = (coeff * (n * (-1) ** (n - 1))).shift(binom(n, 2))
    if not P.is_integral():
        raise ConsistencyError(f"P_{n} is not an integer polynomial")
    if P.degree() != binom(n, 2):
        raise ConsistencyError(f"deg P_{n} = {P.degree()} != C({n},2)")
    return P


@lru_cache(maxsize=None)
def r_poly(n: int) -> QPolynomial:
    """R_n(q) = sum_{d|n} (-1)^{n-d} mu(n/d) q^{C(n,2) - (n/d) C(d,2)} P_d(q^{n/d})."""
    if n < 1:
        raise InputError("R_n is defined for n >= 1")
    total = QPolynomial()
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0:
            continue
        term = p_poly(d).substitute_power(n // d).shift(binom(n, 2) - (n // d) * binom(d, 2))
        total = total + term * ((-1) ** (n - d) * mu)
    return total


@lru_cache(maxsize=None)
def q_poly(n: int) -> QPolynomial:
    """Q_n(q) = R_n(q) (q - 1) / (n (q^n - 1)), exact."""
    R = r_poly(n)
    num = R * QPolynomial.from_coeffs([-1, 1])
    den = QPolynomial.from_coeffs([-1] + [0] * (n - 1) + [1])
    try:
        Q = num.exact_div(den) / n
    except ConsistencyError as exc:
        raise ConsistencyError(f"(q^{n}-1)/(q-1) does not divide R_{n}") from exc
    if not Q.is_integral():
        raise ConsistencyError(f"Q_{n} is not an integer polynomial")
    return Q


def h_coefficient_from_p(q, n: int) -> Fraction:
    """[z^n] h(q, z) through P_n: (-1)^{n-1} P_n(q) / (n q^C(n,2) (q^n - 1))."""
    q = _check_q(q)
    return Fraction((-1) ** (n - 1)) * p_poly(n)(q) / (n * q ** binom(n, 2) * (q**n - 1))


@dataclass(frozen=True)
class DworkReport:
    prime: int
    min_valuation: float
    argmin: int | None
    passed: bool


def dwork_check(a: TruncatedSeries, p: int) -> DworkReport:
    """min over n >= 1 of v_p([z^n](p a(z) - a(z^p))); passes when >= 1."""
    if a.ring != RATIONAL:
        raise InputError("dwork_check needs a rational series")
    if a[0] != 0:
        raise InputError("dwork_check needs zero constant term")
    N = a.order
    diff = a.scale(p) - a.stretch(p, N)
    best, where = float("inf"), None
    for n in range(1, N + 1):
        v = vp(diff[n], p)
        if v < best:
            best, where = v, n
    return DworkReport(p, best, where, best >= 1)


def is_p_integral(a: TruncatedSeries, p: int, start: int = 0) -> bool:
    return all(vp(c, p) >= 0 for c in a.coeffs[start:])


def min_valuation(a: TruncatedSeries, p: int, start: int = 0):
    return min(vp(c, p) for c in a.coeffs[start:])

"""Exact integer/rational kernel: p-adic valuations and small number theory.

Rationals are plain :class:`fractions.Fraction` (or ``int``) values.  A
valuation is an ``int``, or :data:`INF` for the input 0; ``INF`` is
``math.inf`` so it is absorbing under ``+`` and maximal under comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

INF = math.inf

# Trial-division bound for is_prime; all primes used here are tiny.
PRIME_BOUND = 10**12


class InputError(ValueError):
    """A precondition on the arguments of an operation is violated."""


class ConsistencyError(ArithmeticError):
    """An internal identity that must hold exactly has failed."""


class VerificationError(AssertionError):
    """A checked lower bound or equality claim failed on concrete data."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n > PRIME_BOUND:
        raise InputError(f"primality of {n} is beyond the trial-division bound")
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise InputError(f"{p} is not prime")


def _vp_int(n: int, p: int) -> int:
    n = abs(n)
    e = 0
    # strip large powers first so huge numerators stay cheap
    pk, k = p, 1
    while n % pk == 0:
        n //= pk
        e += k
        pk, k = pk * pk, 2 * k
    while n % p == 0:
        n //= p
        e += 1
    return e


def vp(x, p: int):
    """p-adic valuation of an integer or rational; ``INF`` for zero."""
    _check_prime(p)
    if x == 0:
        return INF
    if isinstance(x, int):
        return _vp_int(x, p)
    x = Fraction(x)
    return _vp_int(x.numerator, p) - _vp_int(x.denominator, p)


def factorize(n: int) -> dict[int, int]:
    if n < 1:
        raise InputError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def moebius(n: int) -> int:
    if n < 1:
        raise InputError("moebius is defined for n >= 1")
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def is_squarefree(n: int) -> bool:
    return moebius(n) != 0


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, v)`` with ``q == p**v``, or ``None``."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    return next(iter(f.items()))


def binom(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def vp_factorial(n: int, p: int) -> int:
    """Legendre: v_p(n!) = sum_i floor(n / p^i)."""
    total, pk = 0, p
    while pk <= n:
        total += n // pk
        pk *= p
    return total


def digit_sum(n: int, base: int = 2) -> int:
    s = 0
    while n:
        n, r = divmod(n, base)
        s += r
    return s


def odd_harmonic(d: int) -> Fraction:
    """sum_{i=1}^{d} 1/(2i-1)."""
    return sum((Fraction(1, 2 * i - 1) for i in range(1, d + 1)), Fraction(0))


def multiplicative_order(q: int, m: int) -> int:
    if math.gcd(q, m) != 1:
        raise InputError(f"{q} is not a unit modulo {m}")
    if m == 1:
        return 1
    k, x = 1, q % m
    while x != 1:
        x = x * q % m
        k += 1
    return k


def vp_q_power_minus_1(p: int, q: int, n: int):
    """v_p(q^n - 1) via the order d of q mod p and lambda_{v_p(n)}."""
    _check_prime(p)
    if q % p == 0:
        raise InputError("p divides q: only the non-modular kernel is supported")
    if n < 1:
        raise InputError("n must be positive")
    d = multiplicative_order(q, p)
    if n % d:
        return 0
    return vp_power_minus_1(p, q, d * p ** vp(n, p))


def vp_power_minus_1(p: int, q: int, e: int) -> int:
    """v_p(q^e - 1) for q^e != 1 mod p^inf, working modulo a growing power of p."""
    K = 32
    while True:
        mod = p**K
        x = (pow(q, e, mod) - 1) % mod
        if x:
            return vp(x, p)
        K *= 2


def q_pochhammer(n: int, x):
    """prod_{i=1}^{n} (1 - x^i) for ``x`` in any ring supporting ``*`` and ``**``."""
    result = 1
    for i in range(1, n + 1):
        result = result * (1 - x**i)
    return result


@lru_cache(maxsize=None)
def _cyclotomic_coeffs(d: int) -> tuple[int, ...]:
    # x^d - 1 divided by Phi_e for every proper divisor e; ascending coefficients
    num = [-1] + [0] * (d - 1) + [1]
    for e in divisors(d)[:-1]:
        num = _exact_div_monic(num, list(_cyclotomic_coeffs(e)))
    return tuple(num)


def _exact_div_monic(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    db = len(b) - 1
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            quot[i - db] = c
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    if any(a[:db]):
        raise ConsistencyError("cyclotomic division was not exact")
    return quot


def cyclotomic(d: int):
    """The d-th cyclotomic polynomial as a :class:`~glhom.qpoly.QPolynomial`."""
    if d < 1:
        raise InputError("cyclotomic index must be positive")
    from .qpoly import QPolynomial

    return QPolynomial.from_coeffs(_cyclotomic_coeffs(d))

"""Nilpotent matrix counts a_{n,k} = #{B in F_q^{n x n} : B^k = 0} as polynomials in q.

Two independent routes: summing conjugacy class sizes over Jordan types, and
the recurrence that strips off the blocks of size m > k.  The counts give
#Hom(C_{p^u}, GL_n(F_{p^v})) through A -> A - I.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple

from .exact import InputError, VerificationError, binom, is_prime, vp
from .qpoly import QPolynomial


@dataclass(frozen=True)
class Partition:
    """A partition of ``n`` as multiplicities: ``mults[i-1]`` parts equal to i."""

    n: int
    mults: tuple[int, ...]

    def __post_init__(self):
        if sum(i * a for i, a in enumerate(self.mults, 1)) != self.n:
            raise InputError(f"multiplicities {self.mults} do not sum to {self.n}")
        if any(a < 0 for a in self.mults):
            raise InputError("negative multiplicity")

    def a(self, i: int) -> int:
        return self.mults[i - 1] if 1 <= i <= len(self.mults) else 0

    @property
    def largest_part(self) -> int:
        return max((i for i, a in enumerate(self.mults, 1) if a), default=0)

    @property
    def num_parts(self) -> int:
        return sum(self.mults)

    def parts(self) -> tuple[int, ...]:
        """Parts in descending order."""
        return tuple(i for i in range(len(self.mults), 0, -1) for _ in range(self.mults[i - 1]))

    @classmethod
    def from_parts(cls, parts) -> "Partition":
        parts = list(parts)
        n = sum(parts)
        mults = [0] * n
        for x in parts:
            if x < 1:
                raise InputError("parts must be positive")
            mults[x - 1] += 1
        return cls(n, tuple(mults))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts())) + ")"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Every partition of n with parts <= max_part, each exactly once."""
    if n < 0:
        raise InputError("n must be non-negative")
    max_part = n if max_part is None else min(max_part, n)

    def rec(rest: int, top: int) -> Iterator[list[int]]:
        if rest == 0:
            yield []
            return
        for x in range(min(rest, top), 0, -1):
            for tail in rec(rest - x, x):
                yield [x] + tail

    for parts in rec(n, max_part):
        mults = [0] * n
        for x in parts:
            mults[x - 1] += 1
        yield Partition(n, tuple(mults))


def beta_stat(lam: Partition) -> int:
    """C(n,2) + sum_j C(a_j+1, 2) - sum_j (a_j + ... + a_n)^2."""
    n = lam.n
    a = [lam.a(j) for j in range(1, n + 1)]
    tails, acc = [], 0
    for x in reversed(a):
        acc += x
        tails.append(acc)
    return binom(n, 2) + sum(binom(x + 1, 2) for x in a) - sum(t * t for t in tails)


@lru_cache(maxsize=None)
def poch_poly(n: int) -> QPolynomial:
    """(q;q)_n as a polynomial."""
    if n == 0:
        return QPolynomial.constant(1)
    return poch_poly(n - 1) * QPolynomial.from_terms({0: 1, n: -1})


def _poch_ratio(n: int, below) -> QPolynomial:
    # (q;q)_n / prod (q;q)_b, dividing out one factor (1 - q^i) at a time
    num = poch_poly(n)
    for b in below:
        for i in range(1, b + 1):
            num = num.exact_div(QPolynomial.from_terms({0: 1, i: -1}))
    return num


def class_size(lam: Partition) -> QPolynomial:
    """Size of the conjugacy class of nilpotent matrices with Jordan type lam."""
    n = lam.n
    sign = (-1) ** (n - lam.num_parts)
    ratio = _poch_ratio(n, [x for x in lam.mults if x])
    return (ratio * sign).shift(beta_stat(lam))


@lru_cache(maxsize=None)
def a_nk_partition(n: int, k: int) -> QPolynomial:
    """a_{n,k} summed over Jordan types with all blocks of size <= k."""
    if n < 0 or k < 0:
        raise InputError("n and k must be non-negative")
    total = QPolynomial()
    for lam in partitions(n, k):
        total = total + class_size(lam)
    return total


def _f_exponent(l: int, m: int, n: int) -> int:
    # beta(lambda) - beta(mu) when l parts of size m are stacked on mu, a partition of n - l m
    return l * (n - l * m) * (m - 2) + binom(l * (m - 1), 2)


@lru_cache(maxsize=None)
def a_nk_recurrence(n: int, k: int) -> QPolynomial:
    """a_{n,k} from q^{n^2-n} by removing the blocks of size m > k."""
    if n < 0 or k < 0:
        raise InputError("n and k must be non-negative")
    if n == 0:
        return QPolynomial.constant(1)
    if k == 0:
        return QPolynomial()
    total = QPolynomial.monomial(n * n - n)
    for m in range(k + 1, n + 1):
        for l in range(1, n // m + 1):
            rest = a_nk_recurrence(n - l * m, m - 1)
            if not rest:
                continue
            ratio = _poch_ratio(n, [n - l * m, l])
            term = (ratio * rest).shift(_f_exponent(l, m, n))
            total = total - term * (-1) ** (l * (m - 1))
    return total


def a_nk_numeric(n: int, k: int, q) -> Fraction:
    """The recurrence evaluated in rational arithmetic at a number q (debug cross-check)."""
    q = Fraction(q)

    @lru_cache(maxsize=None)
    def a(n_: int, k_: int) -> Fraction:
        if n_ == 0:
            return Fraction(1)
        if k_ == 0:
            return Fraction(0)
        total = q ** (n_ * n_ - n_)
        for m in range(k_ + 1, n_ + 1):
            for l in range(1, n_ // m + 1):
                ratio = poch(n_) / (poch(n_ - l * m) * poch(l))
                total -= (-1) ** (l * (m - 1)) * ratio * q ** _f_exponent(l, m, n_) * a(n_ - l * m, m - 1)
        return total

    @lru_cache(maxsize=None)
    def poch(j: int) -> Fraction:
        return Fraction(1) if j == 0 else poch(j - 1) * (1 - q**j)

    return a(n, k)


class ModularBound(NamedTuple):
    n: int
    k: int
    bound: Fraction
    trailing_degree: int
    equality_expected: bool


def modular_bound(n: int, k: int) -> ModularBound:
    """Compare the q-adic order of a_{n,k} with (k-1)/(k+1) C(n,2)."""
    if n < 0 or k < 1:
        raise InputError("need n >= 0 and k >= 1")
    bound = Fraction(k - 1, k + 1) * binom(n, 2)
    t = a_nk_recurrence(n, k).trailing_degree()
    eq = n % (k + 1) in (0, 1)
    if t < bound:
        raise VerificationError(f"a_{{{n},{k}}} has q-order {t} < {bound}")
    if eq and t != bound:
        raise VerificationError(f"a_{{{n},{k}}} has q-order {t}, expected exactly {bound}")
    return ModularBound(n, k, bound, t, eq)


class ModularHom(NamedTuple):
    count: int
    vp: int
    bound: Fraction
    equality_expected: bool


def modular_hom(p: int, u: int, v: int, n: int, method: str = "recurrence") -> ModularHom:
    """#Hom(C_{p^u}, GL_n(F_{p^v})) = a_{n,p^u}(p^v), with its p-adic check."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if u < 1 or v < 1 or n < 0:
        raise InputError("need u, v >= 1 and n >= 0")
    k, q = p**u, p**v
    if method == "recurrence":
        count = a_nk_recurrence(n, min(k, n))(q)
    elif method == "partition":
        count = a_nk_partition(n, min(k, n))(q)
    else:
        raise InputError(f"unknown method {method!r}")
    bound = v * Fraction(k - 1, k + 1) * binom(n, 2)
    val = vp(count, p)
    eq = n % (k + 1) in (0, 1)
    if val < bound:
        raise VerificationError(f"v_{p} = {val} below the bound {bound}")
    if eq and val != bound:
        raise VerificationError(f"v_{p} = {val} but equality with {bound} was expected")
    return ModularHom(int(count), val, bound, eq)

"""Exact Laurent polynomials in one variable ``q`` over the rationals."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .exact import ConsistencyError, InputError


def _norm(c):
    # keep integral coefficients as int so the fast integer paths apply
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _is_int_list(xs) -> bool:
    return all(type(x) is int for x in xs)


def _kron_mul(a: list[int], b: list[int]) -> list[int]:
    """Integer polynomial product by packing into one big integer."""
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    B = bound.bit_length() + 2
    xa = 0
    for c in reversed(a):
        xa = (xa << B) + c
    xb = 0
    for c in reversed(b):
        xb = (xb << B) + c
    x = xa * xb
    mask = (1 << B) - 1
    half = 1 << (B - 1)
    out = []
    for _ in range(len(a) + len(b) - 1):
        r = x & mask
        x >>= B
        if r >= half:
            r -= 1 << B
            x += 1
        out.append(r)
    return out


def _school_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


class QPolynomial:
    """A Laurent polynomial ``sum_e c_e q^e`` with rational coefficients.

    Stored densely as ``low`` (exponent of the first coefficient) plus a
    tuple of coefficients with no zero at either end.  The zero polynomial
    has an empty tuple.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int = 0, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        self.low = low + start if end > start else 0
        self.coeffs = tuple(cs[start:end])

    # -- construction -------------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs, low: int = 0) -> "QPolynomial":
        return cls(low, coeffs)

    @classmethod
    def from_terms(cls, terms: dict) -> "QPolynomial":
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] = c
        return cls(lo, cs)

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "QPolynomial":
        return cls(exp, [coeff])

    @classmethod
    def constant(cls, c) -> "QPolynomial":
        return cls(0, [c])

    @classmethod
    def q(cls) -> "QPolynomial":
        return cls(1, [1])

    @staticmethod
    def _coerce(x) -> "QPolynomial":
        if isinstance(x, QPolynomial):
            return x
        if isinstance(x, Rational):
            return QPolynomial(0, [x])
        return NotImplemented

    # -- structure ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def degree(self) -> int:
        if not self.coeffs:
            raise InputError("degree of the zero polynomial")
        return self.high

    def trailing_degree(self) -> int:
        if not self.coeffs:
            raise InputError("trailing degree of the zero polynomial")
        return self.low

    def terms(self) -> dict:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def coeff(self, e: int):
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_integral(self) -> bool:
        """All coefficients integers and all exponents non-negative."""
        return (not self.coeffs or self.low >= 0) and _is_int_list(self.coeffs)

    # -- arithmetic ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        other = QPolynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(self.low, [-c for c in self.coeffs])

    def __add__(self, other) -> "QPolynomial":
        other = QPolynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        cs = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            cs[self.low - lo + i] += c
        for i, c in enumerate(other.coeffs):
            cs[other.low - lo + i] += c
        return QPolynomial(lo, cs)

    __radd__ = __add__

    def __sub__(self, other) -> "QPolynomial":
        other = QPolynomial._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, Rational):
            if other == 0:
                return QPolynomial()
            return QPolynomial(self.low, [c * other for c in self.coeffs])
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        a, b = self.coeffs, other.coeffs
        if len(a) > 16 and len(b) > 16 and _is_int_list(a) and _is_int_list(b):
            cs = _kron_mul(list(a), list(b))
        else:
            cs = _school_mul(a, b)
        return QPolynomial(self.low + other.low, cs)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QPolynomial":
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero")
            if isinstance(other, int):
                return QPolynomial(self.low, [Fraction(c, other) for c in self.coeffs])
            return QPolynomial(self.low, [c / other for c in self.coeffs])
        if isinstance(other, QPolynomial):
            return self.exact_div(other)
        return NotImplemented

    def __pow__(self, k: int) -> "QPolynomial":
        if not isinstance(k, int) or k < 0:
            raise InputError("only non-negative integer powers are supported")
        if len(self.coeffs) == 1:
            return QPolynomial(self.low * k, [self.coeffs[0] ** k])
        result = QPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return QPolynomial(self.low + k, self.coeffs)

    def substitute_power(self, k: int) -> "QPolynomial":
        """The polynomial in q^k, i.e. p(q) -> p(q^k) for k >= 1."""
        if k < 1:
            raise InputError("substitution exponent must be positive")
        if k == 1 or not self.coeffs:
            return self
        cs = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            cs[i * k] = c
        return QPolynomial(self.low * k, cs)

    def divmod(self, other: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Long division of ordinary polynomials (no negative exponents)."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.coeffs and self.low < 0 or other.low < 0:
            raise InputError("divmod needs ordinary polynomials; use exact_div for Laurent")
        a = [0] * self.low + list(self.coeffs) if self.coeffs else []
        b = [0] * other.low + list(other.coeffs)
        db = len(b) - 1
        lead = b[-1]
        nz = [(j, bj) for j, bj in enumerate(b[:-1]) if bj]
        if len(a) <= db:
            return QPolynomial(), QPolynomial(0, a)
        quot = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                t = c // lead if type(c) is int and type(lead) is int and c % lead == 0 else Fraction(c) / lead
                quot[i - db] = t
                a[i] = 0
                base = i - db
                for j, bj in nz:
                    a[base + j] -= t * bj
        return QPolynomial(0, quot), QPolynomial(0, a[:db])

    def __mod__(self, other) -> "QPolynomial":
        return self.divmod(QPolynomial._coerce(other))[1]

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Quotient of Laurent polynomials; raises if the division leaves a remainder."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return QPolynomial()
        a = QPolynomial(0, self.coeffs)
        b = QPolynomial(0, other.coeffs)
        quot, rem = a.divmod(b)
        if rem:
            raise ConsistencyError("polynomial division is not exact")
        return quot.shift(self.low - other.low)

    def __call__(self, x):
        """Evaluate at a rational (or another polynomial) by Horner's rule."""
        if not self.coeffs:
            return 0
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if isinstance(x, QPolynomial):
            if self.low < 0:
                raise InputError("cannot compose a Laurent polynomial")
            return acc * x**self.low
        if self.low >= 0:
            return acc * x**self.low
        return acc / Fraction(x) ** (-self.low)

    # -- display / serialization -------------------------------------------
    def __repr__(self) -> str:
        return f"QPolynomial({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.terms(), reverse=True):
            c = self.coeff(e)
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if mono and c == 1:
                s = mono
            elif mono and c == -1:
                s = "-" + mono
            else:
                s = f"{c}" + (f"*{mono}" if mono else "")
                if isinstance(c, Fraction):
                    s = f"({c})" + (f"*{mono}" if mono else "")
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"exp": e, "num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)}
                for e, c in sorted(self.terms().items())
            ]
        }

    @classmethod
    def from_json(cls, data: dict) -> "QPolynomial":
        return cls.from_terms(
            {int(t["exp"]): Fraction(int(t["num"]), int(t["den"])) for t in data["terms"]}
        )

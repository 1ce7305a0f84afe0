"""Truncated formal power series in ``z`` over exact coefficient rings."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .exact import InputError
from .qpoly import QPolynomial

RATIONAL = "rational"
QPOLY = "qpoly"


def _zero(ring):
    return QPolynomial() if ring == QPOLY else 0


def _one(ring):
    return QPolynomial.constant(1) if ring == QPOLY else 1


def _is_zero(c) -> bool:
    return not c if isinstance(c, QPolynomial) else c == 0


def _ring_of(c) -> str:
    return QPOLY if isinstance(c, QPolynomial) else RATIONAL


def _scale(c, k):
    # divide a coefficient by a nonzero integer, exactly
    if isinstance(c, QPolynomial):
        return c / k
    return Fraction(c, k) if isinstance(c, int) else c / k


class TruncatedSeries:
    """Coefficients of z^0 .. z^order; everything beyond is discarded.

    ``ring`` is either ``"rational"`` (ints/Fractions) or ``"qpoly"``
    (:class:`QPolynomial` coefficients).  Binary operations demand equal
    order and ring.
    """

    __slots__ = ("order", "coeffs", "ring")

    def __init__(self, coeffs, order: int | None = None, ring: str | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise InputError("order must be non-negative")
        if ring is None:
            ring = _ring_of(coeffs[0]) if coeffs else RATIONAL
        if ring not in (RATIONAL, QPOLY):
            raise InputError(f"unknown coefficient ring {ring!r}")
        coeffs = coeffs[: order + 1] + [_zero(ring)] * (order + 1 - len(coeffs))
        if ring == RATIONAL:
            coeffs = [c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c for c in coeffs]
            if any(isinstance(c, QPolynomial) for c in coeffs):
                raise InputError("polynomial coefficient in a rational series")
        else:
            coeffs = [c if isinstance(c, QPolynomial) else QPolynomial.constant(c) for c in coeffs]
        self.order = order
        self.coeffs = coeffs
        self.ring = ring

    @classmethod
    def zero(cls, order: int, ring: str = RATIONAL) -> "TruncatedSeries":
        return cls([], order, ring)

    @classmethod
    def one(cls, order: int, ring: str = RATIONAL) -> "TruncatedSeries":
        return cls([_one(ring)], order, ring)

    @classmethod
    def from_sparse(cls, terms: dict, order: int, ring: str = RATIONAL) -> "TruncatedSeries":
        cs = [_zero(ring)] * (order + 1)
        for n, c in terms.items():
            if n <= order:
                cs[n] = c
        return cls(cs, order, ring)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise InputError("expected a TruncatedSeries")
        if other.order != self.order or other.ring != self.ring:
            raise InputError(
                f"mismatched series: order {self.order}/{other.order}, ring {self.ring}/{other.ring}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.ring == other.ring and self.coeffs == other.coeffs

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.ring)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.ring)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order, self.ring)

    def scale(self, c) -> "TruncatedSeries":
        """Multiply every coefficient by a scalar from the coefficient ring."""
        if self.ring == RATIONAL and isinstance(c, QPolynomial):
            raise InputError("cannot scale a rational series by a polynomial")
        return TruncatedSeries([a * c for a in self.coeffs], self.order, self.ring)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (Rational, QPolynomial)):
            return self.scale(other)
        self._check(other)
        N = self.order
        a, b = self.coeffs, other.coeffs
        nz_a = [(i, x) for i, x in enumerate(a) if not _is_zero(x)]
        nz_b = [(j, y) for j, y in enumerate(b) if not _is_zero(y)]
        out = [_zero(self.ring)] * (N + 1)
        for i, x in nz_a:
            for j, y in nz_b:
                if i + j > N:
                    break
                out[i + j] = out[i + j] + x * y
        return TruncatedSeries(out, N, self.ring)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if k < 0:
            raise InputError("negative series power")
        result = TruncatedSeries.one(self.order, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise InputError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order, self.ring)

    def stretch(self, k: int, order: int | None = None) -> "TruncatedSeries":
        """Substitute z -> z^k, keeping terms up to ``order`` (default: own order)."""
        if k < 1:
            raise InputError("stretch factor must be positive")
        order = self.order if order is None else order
        if order // k > self.order:
            raise InputError("not enough coefficients to stretch to the requested order")
        terms = {k * n: c for n, c in enumerate(self.coeffs) if k * n <= order}
        return TruncatedSeries.from_sparse(terms, order, self.ring)

    def rescale(self, c) -> "TruncatedSeries":
        """Substitute z -> c*z (multiplies coefficient n by c^n)."""
        out, pw = [], _one(self.ring) if self.ring == RATIONAL else 1
        for a in self.coeffs:
            out.append(a * pw)
            pw = pw * c
        return TruncatedSeries(out, self.order, self.ring)

    def derivative_weighted(self) -> list:
        """Coefficients of z * a'(z)."""
        return [n * a for n, a in enumerate(self.coeffs)]

    def exp(self) -> "TruncatedSeries":
        return series_exp(self)

    def log(self) -> "TruncatedSeries":
        return series_log(self)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:6])
        more = ", ..." if self.order >= 6 else ""
        return f"TruncatedSeries([{shown}{more}], order={self.order}, ring={self.ring})"

    def to_json(self) -> dict:
        if self.ring == QPOLY:
            return {"order": self.order, "ring": QPOLY, "coeffs": [c.to_json() for c in self.coeffs]}
        return {
            "order": self.order,
            "coeffs": [
                {"num": str(Fraction(c).numerator), "den": str(Fraction(c).denominator)} for c in self.coeffs
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        if data.get("ring") == QPOLY:
            return cls([QPolynomial.from_json(c) for c in data["coeffs"]], int(data["order"]), QPOLY)
        return cls(
            [Fraction(int(c["num"]), int(c["den"])) for c in data["coeffs"]], int(data["order"]), RATIONAL
        )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) for a_0 = 0, from (exp a)' = a' exp a:  n e_n = sum_k k a_k e_{n-k}."""
    if not _is_zero(a.coeffs[0]):
        raise InputError("exp needs a series with zero constant term")
    N, ring = a.order, a.ring
    ka = [(k, k * c) for k, c in enumerate(a.coeffs) if k and not _is_zero(c)]
    e = [_one(ring)] + [_zero(ring)] * N
    for n in range(1, N + 1):
        acc = _zero(ring)
        for k, kc in ka:
            if k > n:
                break
            if not _is_zero(e[n - k]):
                acc = acc + kc * e[n - k]
        e[n] = _scale(acc, n)
    return TruncatedSeries(e, N, ring)


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a_0 = 1:  n b_n = n a_n - sum_{k<n} k b_k a_{n-k}."""
    one = _one(a.ring)
    if a.coeffs[0] != one:
        raise InputError("log needs a series with constant term 1")
    N, ring = a.order, a.ring
    nz = [(j, c) for j, c in enumerate(a.coeffs) if j and not _is_zero(c)]
    kb = [_zero(ring)] * (N + 1)  # k * b_k
    for n in range(1, N + 1):
        acc = n * a.coeffs[n]
        for j, c in nz:
            if j >= n:
                break
            if not _is_zero(kb[n - j]):
                acc = acc - kb[n - j] * c
        kb[n] = acc
    b = [_zero(ring)] + [_scale(kb[n], n) for n in range(1, N + 1)]
    return TruncatedSeries(b, N, ring)

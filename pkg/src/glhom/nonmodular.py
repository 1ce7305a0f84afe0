"""Homomorphism counts G -> GL_n(F_q) for p not dividing q, and their p-adic lower bounds.

The generating function is

    F(G, q; z) = sum_n (-1)^n #Hom(G, GL_n(F_q)) / (q^C(n,2) (q;q)_n) z^n
               = prod_e f(q^e, z^e)^{n_e}

with n_e the number of e-dimensional irreducible representations.  All
bounds below are the closed forms obtained by feeding the b- and
a-sequences through the exp/valuation framework.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .exact import (
    INF,
    ConsistencyError,
    InputError,
    binom,
    multiplicative_order,
    q_pochhammer,
    vp,
)
from .groups import AbelianPGroup, irred_dim_counts, lambda_value
from .qseries import DEFAULT_ORDER, f_series, h_stretched
from .series import TruncatedSeries, series_exp


def _check_nonmodular(G: AbelianPGroup, q: int) -> None:
    if q < 2:
        raise InputError("q must be at least 2")
    if q % G.p == 0:
        raise InputError(f"p = {G.p} divides q = {q}: use the modular counts")


def log_F_series(G: AbelianPGroup, q: int, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """sum_e n_e h(q^e, z^e)."""
    _check_nonmodular(G, q)
    total = TruncatedSeries.zero(N)
    for e, n_e in irred_dim_counts(G, q).items():
        if e <= N:
            total = total + h_stretched(q, e, N).scale(n_e)
    return total


@lru_cache(maxsize=128)
def F_series(G: AbelianPGroup, q: int, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    return series_exp(log_F_series(G, q, N))


def F_series_product(G: AbelianPGroup, q: int, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """prod_e f(q^e, z^e)^{n_e} by binary powering; an independent route to F."""
    _check_nonmodular(G, q)
    out = TruncatedSeries.one(N)
    for e, n_e in irred_dim_counts(G, q).items():
        if e <= N:
            out = out * f_series(q**e, N // e).stretch(e, N) ** n_e
    return out


class HomCount(NamedTuple):
    count: int
    vp: float


def _count_from_coefficient(c, q: int, n: int) -> int:
    value = Fraction(c) * (-1) ** n * q ** binom(n, 2) * q_pochhammer(n, q)
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(f"#Hom for n={n} came out as {value}")
    return value.numerator


def hom_count(G: AbelianPGroup, q: int, n: int, N: int | None = None) -> HomCount:
    """#Hom(G, GL_n(F_q)) and its p-adic valuation."""
    if n < 0:
        raise InputError("n must be non-negative")
    N = max(n, 1) if N is None else N
    if n > N:
        raise InputError("n exceeds the truncation order")
    count = _count_from_coefficient(F_series(G, q, N)[n], q, n)
    return HomCount(count, vp(count, G.p))


def hom_counts(G: AbelianPGroup, q: int, N: int) -> list[HomCount]:
    F = F_series(G, q, N)
    out = []
    for n in range(N + 1):
        c = _count_from_coefficient(F[n], q, n)
        out.append(HomCount(c, vp(c, G.p)))
    return out


def gln_order(n: int, q: int) -> int:
    return q ** binom(n, 2) * (-1) ** n * q_pochhammer(n, q)


def gln_vp(n: int, q: int, p: int) -> int:
    """v_p |GL_n(F_q)| = sum_i lambda_i (floor(n/dp^i) - floor(n/dp^{i+1}))."""
    if q % p == 0:
        raise InputError("p divides q")
    d = multiplicative_order(q, p)
    total, i = 0, 0
    while d * p**i <= n:
        total += lambda_value(p, q, d, i) * (n // (d * p**i) - n // (d * p ** (i + 1)))
        i += 1
    return total


# ---------------------------------------------------------------------------
# b- and a-sequences


@dataclass(frozen=True)
class BASequences:
    p: int
    q: int
    d: int
    lambdas: tuple[int, ...]
    b: tuple[int, ...]
    a: tuple  # ints, or INF where the term vanishes in the alternative decomposition
    l_first: int
    first_unique: bool
    l: int
    a_l: int
    a_unique: bool


def b_values(G: AbelianPGroup, q: int, m: int) -> tuple[int, ...]:
    """b_0 .. b_{m-1}, independent of the scan horizon."""
    _check_nonmodular(G, q)
    p, d = G.p, multiplicative_order(q, G.p)
    lams = [lambda_value(p, q, d, i) for i in range(m)]
    return tuple(G.c(lam) - lam - i for i, lam in enumerate(lams))


def _argmin(values) -> tuple[int, bool]:
    best = min(values)
    hits = [i for i, v in enumerate(values) if v == best]
    return hits[0], len(hits) == 1


def b_a_sequences(G: AbelianPGroup, q: int) -> BASequences:
    """b_i = c_{lambda_i} - lambda_i - i, the masked a_i, and both minimizers."""
    if G.is_trivial:
        raise InputError("bounds need a nontrivial group")
    _check_nonmodular(G, q)
    p, r, rp = G.p, G.r, G.r_prime
    d = multiplicative_order(q, p)
    lams, b = [], []
    # Horizon: stop two indices after lambda_i > r and b_i <= -1.  From there on
    # b drops by exactly 2 per step, and the objective p^-i (b_i - 1/(p-1))
    # changes by p^{-i-1}(-1 - (p-1) b_i) >= 0, so nothing later can win.
    stop = None
    i = 0
    while stop is None or i <= stop:
        lam = lambda_value(p, q, d, i)
        lams.append(lam)
        b.append(G.c(lam) - lam - i)
        if stop is None and lam > r and b[-1] <= -1:
            stop = i + 2
        i += 1
    a = tuple(INF if rp <= lam <= r else bi for lam, bi in zip(lams, b))

    def objective(x, i):
        return Fraction(x) / p**i - Fraction(1, (p - 1) * p**i) if x != INF else INF

    for j in range(1, len(b) - 1):
        if lams[j] > r and b[j + 1] - b[j] != -2:
            raise ConsistencyError("b does not drop by 2 beyond lambda_i > r")
    l_first, first_unique = _argmin([objective(x, i) for i, x in enumerate(b)])
    neg = [i for i, x in enumerate(a) if x < 0]
    if not neg:
        raise ConsistencyError("no negative a_i inside the scan horizon")
    l = neg[0]
    l_obj, a_unique = _argmin([objective(x, i) for i, x in enumerate(a)])
    if l_obj != l:
        raise ConsistencyError(f"first negative a_i at {l} but the objective is minimized at {l_obj}")
    return BASequences(
        p, q, d, tuple(lams), tuple(b), a, l_first, first_unique, l, int(a[l]), a_unique
    )


# ---------------------------------------------------------------------------
# bounds


@dataclass(frozen=True)
class BoundReport:
    theorem: str  # "first" | "main1" | "main2" | "main3"
    d: int
    l: int
    coefficient: int  # b_l for "first", a_l otherwise
    n: int
    bound: int
    tight_claim: bool
    modulus: int  # n must be divisible by this for the claimed equality

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "d": self.d,
            "l": self.l,
            "coefficient": self.coefficient,
            "n": self.n,
            "bound": self.bound,
            "tight_claim": self.tight_claim,
            "modulus": self.modulus,
        }


def bound_first(G: AbelianPGroup, q: int, n: int) -> BoundReport:
    seq = b_a_sequences(G, q)
    p, d, l = G.p, seq.d, seq.l_first
    bl = seq.b[l]
    lam0, lam1 = seq.lambdas[0], seq.lambdas[1]
    tail = sum(n // (d * p**i) for i in range(l + 1))
    if p >= 3 or lam0 >= 2:
        value = bl * (n // (d * p**l)) + tail + (lam0 - 1) * (n // d)
    else:
        value = bl * (n // 2**l) + tail + (lam1 - 2) * (n // 2)
    modulus = d * p**l
    return BoundReport("first", d, l, bl, n, value, seq.first_unique and n % modulus == 0, modulus)


def main_case_table(G: AbelianPGroup, q: int) -> tuple[str, int, int]:
    """(theorem, l, a_l) from the closed-form case split on lambda_0 / lambda_1, r, s."""
    p, r, s = G.p, G.r, G.s
    d = multiplicative_order(q, p)
    lam0 = lambda_value(p, q, d, 0)
    if p >= 3 or lam0 >= 2:
        t = r + s - lam0
        if lam0 > r + s:
            return "main1", 0, t
        if r - s + 2 <= lam0 <= r + s:
            return ("main1", (t + 2) // 2, -2) if t % 2 == 0 else ("main1", (t + 1) // 2, -1)
        return "main1", r - lam0 + 1, -r + s + lam0 - 2
    # p = 2 and q = 3 mod 4
    lam1 = lambda_value(p, q, d, 1)
    t = r + s - lam1
    # lambda_1 = r with s = 0 satisfies the first inequality but lambda_1 is not yet past r
    if lam1 > r + s - 1 and lam1 > r:
        return "main2", 1, t - 1
    if r - s + 3 <= lam1 <= r + s - 1:
        # the first negative a_i sits at floor((t + 3) / 2)
        return ("main2", (t + 3) // 2, -2) if t % 2 == 1 else ("main2", (t + 2) // 2, -1)
    return "main2", r - lam1 + 2, -r + s + lam1 - 3


def _main_unrefined(G: AbelianPGroup, q: int, n: int) -> tuple[BoundReport, BASequences]:
    seq = b_a_sequences(G, q)
    theorem, l, a_l = main_case_table(G, q)
    if (l, a_l) != (seq.l, seq.a_l):
        raise ConsistencyError(
            f"case table gives l={l}, a_l={a_l}; sequence scan gives l={seq.l}, a_l={seq.a_l}"
        )
    p, d = G.p, seq.d
    if theorem == "main1":
        value = seq.lambdas[0] * (n // d) + sum(n // (d * p**i) for i in range(1, l + 1)) + a_l * (n // (d * p**l))
        modulus = d * p**l
    else:
        value = n + (seq.lambdas[1] - 1) * (n // 2) + sum(n // 2**i for i in range(2, l + 1)) + a_l * (n // 2**l)
        modulus = 2**l
    tight = n % modulus == 0 and not (p == 2 and a_l == -1)
    return BoundReport(theorem, d, l, a_l, n, value, tight, modulus), seq


def bound_main(G: AbelianPGroup, q: int, n: int) -> BoundReport:
    report, _ = _main_unrefined(G, q, n)
    if G.p == 2 and report.coefficient == -1:
        return bound_refined(G, q, n)
    return report


def bound_refined(G: AbelianPGroup, q: int, n: int) -> BoundReport:
    """Main bound plus floor(n/2^{l+1}) - floor(n/2^{l+2}) when p = 2 and a_l = -1."""
    base, _ = _main_unrefined(G, q, n)
    if G.p != 2 or base.coefficient != -1:
        raise InputError("the refinement applies only for p = 2 with a_l = -1")
    l = base.l
    value = base.bound + n // 2 ** (l + 1) - n // 2 ** (l + 2)
    modulus = 2 ** (l + 2)
    return BoundReport("main3", base.d, l, -1, n, value, n % modulus == 0, modulus)


def applicable_bounds(G: AbelianPGroup, q: int, n: int) -> list[BoundReport]:
    return [bound_first(G, q, n), bound_main(G, q, n)]


# ---------------------------------------------------------------------------
# decompositions of log F


def _h_bracket(q: int, k: int, p: int, N: int) -> TruncatedSeries:
    """h(q^k, z^k) - (1/p) h(q^{kp}, z^{kp}), truncated at N."""
    first = h_stretched(q, k, N)
    if k * p <= N:
        return first - h_stretched(q, k * p, N).scale(Fraction(1, p))
    return first


def head_term(p: int, q: int, N: int) -> TruncatedSeries:
    """h(q, z) - (1/d) h(q^d, z^d)."""
    d = multiplicative_order(q, p)
    if d == 1:
        return TruncatedSeries.zero(N)
    out = h_stretched(q, 1, N)
    if d <= N:
        out = out - h_stretched(q, d, N).scale(Fraction(1, d))
    return out


def _layer_sum(p: int, q: int, N: int, weight) -> TruncatedSeries:
    # (1/d) sum_i weight(i, lambda_i) (h_{dp^i} - h_{dp^{i+1}}/p) over dp^i <= N
    d = multiplicative_order(q, p)
    total = TruncatedSeries.zero(N)
    i = 0
    while d * p**i <= N:
        w = weight(i, lambda_value(p, q, d, i))
        if w:
            total = total + _h_bracket(q, d * p**i, p, N).scale(Fraction(w) / d)
        i += 1
    return total


def log_F_layered(G: AbelianPGroup, q: int, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """log F written with the c-sequence: head + (1/d) sum_i p^{c_{lambda_i} - i} (...)."""
    _check_nonmodular(G, q)
    p = G.p
    return head_term(p, q, N) + _layer_sum(p, q, N, lambda i, lam: Fraction(p) ** (G.c(lam) - i))


def log_F_limit(p: int, q: int, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """lim_k log F(C_{p^k}, q; z), truncated at N (c_{lambda_i} replaced by lambda_i)."""
    return head_term(p, q, N) + _layer_sum(p, q, N, lambda i, lam: Fraction(p) ** (lam - i))


@dataclass(frozen=True)
class AltDecomposition:
    limit_part: TruncatedSeries  # p^s lim log F(C_{p^k})
    head_part: TruncatedSeries  # -(p^s - 1)(h - h_d/d)
    layers: tuple[TruncatedSeries, ...]  # log F_i^*, one per i with dp^i <= N
    layer_valuations: tuple  # a_i as used for each layer

    def total(self) -> TruncatedSeries:
        out = self.limit_part + self.head_part
        for layer in self.layers:
            out = out + layer
        return out


def alt_decomposition(G: AbelianPGroup, q: int, N: int = DEFAULT_ORDER) -> AltDecomposition:
    _check_nonmodular(G, q)
    p, s = G.p, G.s
    d = multiplicative_order(q, p)
    limit_part = log_F_limit(p, q, N).scale(p**s)
    head_part = head_term(p, q, N).scale(-(p**s - 1))
    layers, vals = [], []
    i = 0
    while d * p**i <= N:
        lam = lambda_value(p, q, d, i)
        w = Fraction(p) ** (G.c(lam) - i) - Fraction(p) ** (lam + s - i)
        layers.append(_h_bracket(q, d * p**i, p, N).scale(w / d))
        vals.append(INF if G.r_prime <= lam <= G.r else G.c(lam) - lam - i)
        i += 1
    return AltDecomposition(limit_part, head_part, tuple(layers), tuple(vals))


def limit_F_series(p: int, q: int, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    return series_exp(log_F_limit(p, q, N))


def cyclic_group_at_limit(p: int, q: int, N: int) -> AbelianPGroup:
    """A cyclic p-group whose F agrees with the k -> infinity limit up to z^N."""
    d = multiplicative_order(q, p)
    i = 0
    while d * p ** (i + 1) <= N:
        i += 1
    k = lambda_value(p, q, d, i + 1)
    return AbelianPGroup(p, (0,) * (k - 1) + (1,))


"""Named verification suites: each binds one claimed identity or bound to a grid of checks.

A suite is a list of picklable case specs plus a case runner.  ``run_suite``
evaluates the cases (optionally in worker processes) and assembles a
:class:`SuiteReport` in case order, so output is identical for any ``jobs``.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact import (
    INF,
    InputError,
    binom,
    cyclotomic,
    digit_sum,
    divisors,
    is_squarefree,
    moebius,
    multiplicative_order,
    odd_harmonic,
    prime_power,
    vp,
    vp_factorial,
    vp_q_power_minus_1,
)
from .groups import AbelianPGroup, lambda_profile
from .modular import (
    a_nk_partition,
    a_nk_recurrence,
    class_size,
    modular_bound,
    modular_hom,
    partitions,
)
from .nonmodular import (
    alt_decomposition,
    b_a_sequences,
    b_values,
    bound_first,
    bound_main,
    gln_order,
    hom_counts,
    log_F_limit,
    log_F_series,
    head_term,
)
from .qpoly import QPolynomial
from .qseries import (
    DEFAULT_ORDER,
    dwork_check,
    h_coefficient_from_p,
    h_series,
    h_stretched,
    is_p_integral,
    min_valuation,
    p_poly,
    q_poly,
)
from .series import TruncatedSeries, series_exp, series_log

SAMPLE_GRID = ((2, 3), (2, 5), (2, 7), (2, 31), (3, 7), (3, 17), (3, 163), (5, 11))
RANDOM_CASES = 200

ERRATUM_DWORK = (
    "Dwork criterion is applied with threshold v_p(p a(z) - a(z^p)) >= 1; the weaker "
    "requirement v_p >= 0 would accept a = z although exp(z) is not p-integral."
)
ERRATUM_DWORK_EXAMPLE = (
    "log F(C_4, 3) fails the criterion: F(C_4, 3) itself is not 2-integral "
    "([z^2]F = 20/48), so failing is the correct verdict."
)
ERRATUM_EXP_B0 = (
    "Exponential valuation law: equality v_p([z^n] exp f) = n b - v_p(n!) needs b < 0; at b = 0 "
    "the minimum over m is not unique and only the inequality holds (exp(z - z^2/2), odd p)."
)
ERRATUM_REFINED = (
    "p = 2 refinement evaluated as main bound + floor(n/2^(l+1)) - floor(n/2^(l+2)); the "
    "closed forms written out per case assume l >= 1 and are wrong for l = 0 (C_2, q = 5)."
)
ERRATUM_MAIN2 = (
    "q = 3 mod 4 case table: the first case needs lambda_1 > r as well as lambda_1 > r+s-1; "
    "for cyclic G with lambda_1 = r (e.g. C_16, q = 7) the scan gives l = 2, a_l = -3."
)
ERRATUM_RECURRENCE = (
    "Nilpotent recurrence exponent uses the weight of the remaining partition: "
    "l (n - l m)(m - 2) + C(l(m - 1), 2); with the full n the recurrence disagrees with "
    "the partition sum already at a_{3,2}."
)


@dataclass
class CaseRecord:
    index: int
    inputs: dict
    expected: str
    observed: dict
    passed: bool

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "inputs": _jsonable(self.inputs),
            "expected": self.expected,
            "observed": _jsonable(self.observed),
            "passed": self.passed,
        }


@dataclass
class SuiteReport:
    name: str
    params: dict
    cases: list[CaseRecord] = field(default_factory=list)
    errata: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list[CaseRecord]:
        return [c for c in self.cases if not c.passed]

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "params": _jsonable(self.params),
            "status": self.status,
            "num_cases": len(self.cases),
            "num_failed": len(self.failures()),
            "errata": list(self.errata),
            "cases": [c.to_json() for c in self.cases],
        }


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x if abs(x) < 2**53 else str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return "inf" if x == INF else ("-inf" if x == -INF else x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


# ---------------------------------------------------------------------------
# helpers shared by several suites


def _group(p: int, factors) -> AbelianPGroup:
    return AbelianPGroup.from_factors(p, factors)


def _gdesc(G: AbelianPGroup) -> str:
    return str(G)


def _series_min_vp(a: TruncatedSeries, p: int, start: int = 1):
    return min_valuation(a, p, start) if a.order >= start else INF


def _rand_unit(rng: random.Random, p: int, size: int = 50) -> Fraction:
    while True:
        a, b = rng.randrange(-size, size + 1), rng.randrange(1, size + 1)
        if a % p and b % p:
            return Fraction(a, b)


# ---------------------------------------------------------------------------
# case builders: each returns a list of (kind, args) pairs


def _cases_case1(params, N, rng):
    return [("case1", (p, q, N)) for p, q in params.get("grid", SAMPLE_GRID) if q % p == 1 % p]


def _run_case1(p, q, N):
    s = (h_series(q, N) - h_stretched(q, p, N).scale(Fraction(1, p))).scale(q - 1)
    m = _series_min_vp(s, p)
    return {"p": p, "q": q, "N": N}, "v_p >= 0 for all coefficients", {"min_vp": m}, m >= 0


def _cases_case2(params, N, rng):
    qs = params.get("qs")
    if qs is None:
        qs = sorted({q for q in range(3, 28) if q % 2 and prime_power(q)} | {q for p, q in SAMPLE_GRID if q % 2})
    return [("case2", (q, N)) for q in qs]


def _run_case2(q, N):
    s = (h_series(q, N) - h_stretched(q, 2, N).scale(Fraction(1, 2))).scale(q - 1)
    c1, c2 = s[1], s[2]
    m = _series_min_vp(s, 2, 3)
    ok = c1 == 1 and c2 == Fraction(-1, q) and m >= 1
    return {"q": q, "N": N}, "[z]=1, [z^2]=-1/q, v_2 >= 1 from z^3", {"z1": c1, "z2": c2, "min_vp_tail": m}, ok


def _cases_cased(params, N, rng):
    grid = params.get("grid", SAMPLE_GRID + ((3, 2), (3, 5), (5, 2), (5, 3), (7, 3)))
    return [("cased", (p, q, N)) for p, q in grid if q % p != 1 % p and q % p]


def _run_cased(p, q, N):
    d = multiplicative_order(q, p)
    e = series_exp(head_term(p, q, N))
    m = _series_min_vp(e, p, 0)
    return {"p": p, "q": q, "d": d, "N": N}, "v_p >= 0 for all coefficients", {"min_vp": m}, m >= 0


def _cases_pinfty(params, N, rng):
    out = []
    for p, q in params.get("grid", SAMPLE_GRID):
        out.append(("pinfty", (p, q, N)))
        out.append(("altdecomp", (p, (1, 2), q, min(N, 24))))
    return out


def _run_pinfty(p, q, N):
    F = series_exp(log_F_limit(p, q, N))
    m = _series_min_vp(F, p, 0)
    return {"p": p, "q": q, "N": N}, "limit series p-integral", {"min_vp": m}, m >= 0


def _run_altdecomp(p, factors, q, N):
    G = _group(p, factors)
    alt = alt_decomposition(G, q, N)
    same = alt.total() == log_F_series(G, q, N)
    m1 = _series_min_vp(series_exp(alt.limit_part), p, 0)
    m2 = _series_min_vp(series_exp(alt.head_part), p, 0)
    obs = {"reassembles": same, "min_vp_limit_factor": m1, "min_vp_head_factor": m2}
    return {"G": _gdesc(G), "q": q, "N": N}, "sum equals log F; both factors p-integral", obs, same and m1 >= 0 and m2 >= 0


def _cases_dwork(params, N, rng):
    out = [
        ("dwork_named", ("log(1+z)", 2, N)),
        ("dwork_named", ("z", 2, N)),
        ("dwork_named", ("logF(C_4,3)", 2, min(N, 24))),
    ]
    for p, q in params.get("grid", SAMPLE_GRID):
        out.append(("dwork_limit", (p, q, N)))
        out.append(("dwork_h", (p, q, N)))
    return out


def _dwork_vs_direct(a: TruncatedSeries, p: int):
    rep = dwork_check(a, p)
    direct = is_p_integral(series_exp(a), p)
    obs = {"dwork_min_vp": rep.min_valuation, "dwork_pass": rep.passed, "exp_integral": direct}
    return obs, rep.passed == direct


def _run_dwork_named(name, p, N):
    if name == "log(1+z)":
        a = series_log(TruncatedSeries([1, 1], N))
    elif name == "z":
        a = TruncatedSeries([0, 1], N)
    else:
        a = log_F_series(_group(2, [2]), 3, N)
    obs, ok = _dwork_vs_direct(a, p)
    return {"series": name, "p": p, "N": N}, "Dwork verdict equals integrality of exp", obs, ok


def _run_dwork_limit(p, q, N):
    obs, ok = _dwork_vs_direct(log_F_limit(p, q, N), p)
    ok = ok and obs["dwork_pass"]
    return {"series": "lim log F(C_p^k)", "p": p, "q": q, "N": N}, "criterion passes; exp integral", obs, ok


def _run_dwork_h(p, q, N):
    obs, ok = _dwork_vs_direct(h_series(q, N), p)
    return {"series": "h(q,z)", "p": p, "q": q, "N": N}, "Dwork verdict equals integrality of exp", obs, ok


def _cases_pnroots(params, N, rng):
    n_max = params.get("n_max", 14)
    out = [("pn", (n,)) for n in range(1, n_max + 1)]
    out += [("pn_root", (d, n)) for d in range(1, n_max + 1) for n in range(1, n_max // d + 1)]
    out += [("pn_h", (n, q)) for n in range(1, min(n_max, 10) + 1) for q in (2, 3, 5)]
    return out


def _run_pn(n):
    P = p_poly(n)
    obs = {"integral": P.is_integral(), "degree": P.degree(), "P(1)": P(1)}
    ok = obs["integral"] and obs["degree"] == binom(n, 2) and obs["P(1)"] == binom(2 * n - 1, n - 1)
    return {"n": n}, "integral, degree C(n,2), P_n(1) = C(2n-1, n-1)", obs, ok


def _run_pn_root(d, n):
    diff = p_poly(d * n) - binom(2 * n - 1, n - 1)
    rem = diff % cyclotomic(d)
    return {"d": d, "n": n}, "Phi_d divides P_dn - C(2n-1, n-1)", {"remainder": str(rem)}, not rem


def _run_pn_h(n, q):
    a, b = h_series(q, n)[n], h_coefficient_from_p(q, n)
    return {"n": n, "q": q}, "[z^n]h(q,z) matches P_n", {"series": a, "from_P": b}, a == b


def _cases_qn(params, N, rng):
    return [("qn", (n,)) for n in range(1, params.get("n_max", 14) + 1)]


def _run_qn(n):
    Q = q_poly(n)
    odd = Q(1) % 2 == 1
    obs = {"integral": Q.is_integral(), "Q(1)": Q(1), "squarefree": is_squarefree(n)}
    return {"n": n}, "Q_n integral; Q_n(1) odd iff n squarefree", obs, obs["integral"] and odd == is_squarefree(n)


# -- randomized multivariate Moebius sums -----------------------------------
def _mpoly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _cases_moebius(params, N, rng):
    count = params.get("cases", RANDOM_CASES)
    d_max = params.get("d_max", 12)
    out = []
    for _ in range(count):
        nvars = rng.randint(1, 3)
        terms = {}
        for _ in range(rng.randint(1, 6)):
            deg = rng.randint(0, 4)
            e = [0] * nvars
            for _ in range(deg):
                e[rng.randrange(nvars)] += 1
            c = rng.randint(-9, 9)
            if c:
                terms[tuple(e)] = terms.get(tuple(e), 0) + c
        out.append(("moebius", (nvars, tuple(sorted(terms.items())), d_max)))
    return out


def _run_moebius(nvars, terms, d_max):
    f = {e: c for e, c in terms if c}
    powers = [{(0,) * nvars: 1}]
    for _ in range(d_max):
        powers.append(_mpoly_mul(powers[-1], f))
    bad = []
    for d in range(1, d_max + 1):
        total: dict = {}
        for e in divisors(d):
            mu = moebius(d // e)
            if not mu:
                continue
            k = d // e
            for ex, c in powers[e].items():
                key = tuple(x * k for x in ex)
                total[key] = total.get(key, 0) + mu * c
        if any(c % d for c in total.values()):
            bad.append(d)
    return {"f": [[list(e), c] for e, c in terms]}, f"all d <= {d_max} divide the sum", {"failing_d": bad}, not bad


def _cases_harmonic(params, N, rng):
    return [("harmonic", (d,)) for d in range(1, params.get("d_max", 256) + 1)]


def _run_harmonic(d):
    v = vp(odd_harmonic(d), 2)
    return {"d": d}, "v_2 = 2 v_2(d)", {"v2": v}, v == 2 * vp(d, 2)


def _cases_binomial2(params, N, rng):
    return [("binomial2", (d,)) for d in range(1, params.get("d_max", 128) + 1)]


def _run_binomial2(d):
    x = binom(4 * d - 1, 2 * d - 1) - (-1) ** d * binom(2 * d - 1, d - 1)
    v = vp(x, 2)
    want = 2 + 2 * vp(d, 2) + digit_sum(d - 1, 2)
    return {"d": d}, "2 + 2 v_2(d) + s_2(d-1)", {"v2": v, "want": want}, v == want


def _cases_exppdiv(params, N, rng):
    primes = (2, 3, 5, 7)
    out = []
    for _ in range(params.get("cases", RANDOM_CASES)):
        p = rng.choice(primes)
        b = rng.randint(-3, 2)
        coeffs = [Fraction(0), _rand_unit(rng, p) * Fraction(p) ** b]
        for _ in range(2, 21):
            if rng.random() < 0.3:
                coeffs.append(Fraction(0))
            else:
                coeffs.append(_rand_unit(rng, p) * Fraction(p) ** (b + rng.randint(0, 3)))
        out.append(("exppdiv", (p, b, tuple(coeffs))))
    out += [("exppdiv_b0", (p,)) for p in (3, 5, 7)]
    return out


def _run_exppdiv(p, b, coeffs):
    e = series_exp(TruncatedSeries(list(coeffs), len(coeffs) - 1))
    vals = [vp(e[n], p) for n in range(len(coeffs))]
    want = [n * b - vp_factorial(n, p) for n in range(len(coeffs))]
    if b < 0:
        ok, expected = vals == want, "v_p([z^n] exp) = n b - v_p(n!)"
    elif b == 0:
        # n b - v_p(n!) is only non-increasing here, so only the inequality survives
        ok, expected = all(v >= w for v, w in zip(vals, want)), "v_p([z^n] exp) >= -v_p(n!)"
    else:
        ok, expected = all(v >= b for v in vals[1:]), "v_p([z^n] exp) >= b for n > 0"
    return {"p": p, "b": b}, expected, {"vp": vals}, ok


def _run_exppdiv_b0_counterexample(p):
    # exp(z - z^2/2) has [z^2] = 0 although v_p(a_1) = 0 and all v_p(a_n) >= 0
    e = series_exp(TruncatedSeries([0, 1, Fraction(-1, 2)], 4))
    v2 = vp(e[2], p)
    obs = {"vp_z2": v2, "equality_value": -vp_factorial(2, p)}
    return {"p": p, "series": "z - z^2/2"}, "equality fails at b = 0", obs, v2 != -vp_factorial(2, p)


def _cases_special2(params, N, rng):
    out = []
    for _ in range(params.get("cases", RANDOM_CASES)):
        u = _rand_unit(rng, 2) / 2
        v = _rand_unit(rng, 2) / 8
        w = _rand_unit(rng, 2) / 8
        out.append(("special2", (u, v, w, params.get("n_max", 32))))
    return out


def _run_special2(u, v, w, n_max):
    e = series_exp(TruncatedSeries.from_sparse({1: u, 2: v, 4: w}, n_max))
    bad = []
    for n in range(1, n_max + 1):
        bound = -n - 2 * (n // 4) - vp_factorial(n // 4, 2)
        x = vp(e[n], 2)
        if x < bound or (n % 4 == 0 and x != bound):
            bad.append(n)
    return {"u": u, "v": v, "w": w}, "bound holds, equality at 4 | n", {"failing_n": bad}, not bad


# -- Table 1 and bound soundness ---------------------------------------------
TABLE1 = (
    # (p, factors, q, b prefix, bold indices, actual bound, first-bound column)
    (2, (1,), 3, (0, -3, -5, -7), (1,), "n - n//2", "n - n//2"),
    (2, (2, 2, 2), 47, (2, 0, -2, -4), (2,), "n + 4*(n//2) - n//4", "n + 4*(n//2) - n//4"),
    (3, (3,), 163, (-1, -3, -5, -7), (0,), "3*n", "3*n"),
    (3, (2,), 17, (0, -2, -4, -6), (1,), "2*(n//2) - n//6", "2*(n//2) - n//6"),
    (2, (1,), 5, (-1, -3, -5, -7), (0, 1), "n + n//2 - n//4", "n"),
    (2, (2, 2, 2), 31, (2, -1, -3, -5), (1, 2), "n + 4*(n//2) + n//4 - n//8", "n + 4*(n//2)"),
    (3, (3,), 7, (0, -1, -2, -4), (0, 1), "n + n//3 + n//9 - 3*(n//27)", "n"),
    (3, (2,), 5, (0, -1, -3, -5), (0, 1), "n//2 + n//6 - 2*(n//18)", "n//2"),
)

BOUND_GRID_GROUPS = ((2, (1,)), (2, (2,)), (2, (3,)), (2, (1, 1)), (2, (2, 2, 2)), (3, (2,)), (3, (3,)), (3, (1, 2)), (2, (4,)))
BOUND_GRID_QS = (3, 5, 7, 13, 17, 31, 47, 163)


def _eval_formula(expr: str, n: int) -> int:
    return eval(expr, {"__builtins__": {}}, {"n": n})


def _cases_table1(params, N, rng):
    n_max = params.get("n_max", 24)
    return [("table1", (i, n_max)) for i in range(len(TABLE1))]


def _run_table1(i, n_max):
    p, factors, q, bpre, bold, actual, first = TABLE1[i]
    G = _group(p, factors)
    seq = b_a_sequences(G, q)
    b = b_values(G, q, len(bpre))
    # minimizers of p^-i (b_i - 1/(p-1)) over the scan horizon
    objs = [Fraction(x, p**j) - Fraction(1, (p - 1) * p**j) for j, x in enumerate(seq.b)]
    mins = tuple(j for j, o in enumerate(objs) if o == min(objs))
    counts = hom_counts(G, q, n_max)
    bad_first, bad_main, bad_sound, bad_tight = [], [], [], []
    for n in range(n_max + 1):
        bf, bm = bound_first(G, q, n), bound_main(G, q, n)
        if bf.bound != _eval_formula(first, n):
            bad_first.append(n)
        if bm.bound != _eval_formula(actual, n):
            bad_main.append(n)
        v = counts[n].vp
        for rep in (bf, bm):
            if v < rep.bound:
                bad_sound.append((rep.theorem, n))
            if rep.tight_claim and v != rep.bound:
                bad_tight.append((rep.theorem, n))
    obs = {
        "b_prefix": b,
        "minimizers": mins,
        "first_column_mismatch": bad_first,
        "actual_column_mismatch": bad_main,
        "unsound": bad_sound,
        "not_tight": bad_tight,
    }
    ok = b == bpre and mins == bold and not (bad_first or bad_main or bad_sound or bad_tight)
    inputs = {"G": _gdesc(G), "p": p, "q": q, "n_max": n_max}
    return inputs, "row reproduced for every n", obs, ok


def _cases_bounds(params, N, rng):
    n_max = params.get("n_max", 24)
    out = []
    for p, factors in params.get("groups", BOUND_GRID_GROUPS):
        for q in params.get("qs", BOUND_GRID_QS):
            if q % p:
                out.append(("bounds", (p, tuple(factors), q, n_max)))
    return out


def _run_bounds(p, factors, q, n_max):
    G = _group(p, factors)
    counts = hom_counts(G, q, n_max)
    unsound, not_tight = [], []
    tags = set()
    for n in range(n_max + 1):
        v = counts[n].vp
        for rep in (bound_first(G, q, n), bound_main(G, q, n)):
            tags.add(rep.theorem)
            if v < rep.bound:
                unsound.append((rep.theorem, n))
            if rep.tight_claim and v != rep.bound:
                not_tight.append((rep.theorem, n))
    obs = {"theorems": sorted(tags), "unsound": unsound, "not_tight": not_tight}
    return {"G": _gdesc(G), "q": q, "n_max": n_max}, "bounds sound; tight where claimed", obs, not (unsound or not_tight)


# -- lambda ------------------------------------------------------------------
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19)


def _cases_lambda(params, N, rng):
    out = [("lambda_grid", (p,)) for p in _SMALL_PRIMES]
    for _ in range(params.get("cases", RANDOM_CASES)):
        p = rng.choice(_SMALL_PRIMES)
        while True:
            q = rng.randrange(2, 10**5)
            if q % p and prime_power(q):
                break
        out.append(("lambda_random", (p, q)))
    return out


def _run_lambda_grid(p):
    bad = []
    for q in range(2, 30):
        if q % p == 0:
            continue
        for n in range(1, 13):
            if vp_q_power_minus_1(p, q, n) != vp(q**n - 1, p):
                bad.append((q, n))
    return {"p": p, "q<": 30, "n<=": 12}, "matches direct factorization", {"mismatches": bad}, not bad


def _run_lambda_random(p, q):
    prof = lambda_profile(p, q, 8)  # raises if the growth law fails
    lams = prof.lambdas
    if p >= 3 or lams[0] >= 2:
        ok = all(lams[i] == lams[0] + i for i in range(len(lams)))
    else:
        ok = all(lams[i] == lams[1] + i - 1 for i in range(1, len(lams)))
    return {"p": p, "q": q}, "lambda grows by one per step", {"d": prof.d, "lambdas": lams}, ok


# -- modular -----------------------------------------------------------------
def _cases_modular(params, N, rng):
    out = [("mod_classes", (n,)) for n in range(params.get("class_n_max", 10) + 1)]
    out += [("mod_equal", (n,)) for n in range(params.get("equal_n_max", 12) + 1)]
    out += [("mod_bound", (n, k)) for n in range(params.get("bound_n_max", 20) + 1) for k in range(1, 7)]
    out += [
        ("mod_hom", (p, u, v, n))
        for (p, u, v) in ((2, 1, 1), (2, 1, 2), (2, 2, 1), (3, 1, 1))
        for n in range(params.get("bound_n_max", 20) + 1)
    ]
    return out


def _run_mod_classes(n):
    total = QPolynomial()
    for lam in partitions(n):
        total = total + class_size(lam)
    want = QPolynomial.monomial(n * n - n)
    return {"n": n}, "class sizes sum to q^(n^2-n)", {"sum": str(total)}, total == want


def _run_mod_equal(n):
    bad = [k for k in range(n + 1) if a_nk_partition(n, k) != a_nk_recurrence(n, k)]
    return {"n": n}, "partition sum equals recurrence for all k <= n", {"mismatched_k": bad}, not bad


def _run_mod_bound(n, k):
    try:
        rep = modular_bound(n, k)
    except AssertionError as exc:
        return {"n": n, "k": k}, "q-order bound", {"error": str(exc)}, False
    obs = {"trailing_degree": rep.trailing_degree, "bound": rep.bound, "equality_expected": rep.equality_expected}
    return {"n": n, "k": k}, "q-order >= bound, equality at n = 0,1 mod k+1", obs, True


def _run_mod_hom(p, u, v, n):
    try:
        rep = modular_hom(p, u, v, n)
    except AssertionError as exc:
        return {"p": p, "u": u, "v": v, "n": n}, "p-adic bound", {"error": str(exc)}, False
    obs = {"count": rep.count, "vp": rep.vp, "bound": rep.bound, "equality_expected": rep.equality_expected}
    return {"p": p, "u": u, "v": v, "n": n}, "v_p >= bound, equality at n = 0,1 mod p^u+1", obs, True


# -- cross-check against brute force ------------------------------------------
CROSS_GROUPS = ((2, (1,)), (3, (1,)), (2, (2,)), (2, (1, 1)))


def _cases_crosscheck(params, N, rng):
    from .oracle import ENUM_BUDGET

    out = []
    for p, factors in CROSS_GROUPS:
        for q in (2, 3, 5):
            if q % p == 0:
                continue
            for n in range(4):
                if n <= 2 or q ** (n * n) <= ENUM_BUDGET:
                    out.append(("cross_hom", (p, factors, q, n)))
    for n, q in ((2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 2)):
        out.append(("cross_nil", (n, q)))
    out.append(("cross_fields", (2, 3, 2)))
    out.append(("cross_fields", (3, 2, 2)))
    return out


def _field(q: int, modulus=None):
    from .oracle import ff_make

    p, v = prime_power(q)
    return ff_make(p, v, modulus)


def _run_cross_hom(p, factors, q, n):
    from .oracle import hom_count_bruteforce

    G = _group(p, factors)
    brute = hom_count_bruteforce(G, _field(q), n)
    series = hom_counts(G, q, max(n, 1))[n].count
    order = gln_order(n, q)
    yoshida = brute % gcd(G.order, order) == 0
    obs = {"brute": brute, "series": series, "gcd_divides": yoshida}
    return {"G": _gdesc(G), "q": q, "n": n}, "brute force equals series; gcd(|G|,|GL|) divides", obs, brute == series and yoshida


def _run_cross_nil(n, q):
    from .oracle import nilpotent_count_bruteforce

    F = _field(q)
    bad = []
    for k in range(n + 1):
        b = nilpotent_count_bruteforce(n, F, k)
        if not (b == a_nk_partition(n, k)(q) == a_nk_recurrence(n, k)(q)):
            bad.append(k)
    return {"n": n, "q": q}, "brute force equals both polynomials for all k <= n", {"mismatched_k": bad}, not bad


def _run_cross_fields(p, v, n):
    from .oracle import (
        element_orders,
        ff_make,
        is_irreducible,
        nilpotent_count_bruteforce,
    )

    import itertools

    moduli = [tuple(c) + (1,) for c in itertools.product(range(p), repeat=v)]
    moduli = [m for m in moduli if is_irreducible(list(m), p)][:2]
    results = []
    for m in moduli:
        F = ff_make(p, v, m)
        nil = nilpotent_count_bruteforce(n, F, n)
        orders = element_orders(F, n)
        results.append((nil, sorted(orders.tolist())))
    same = all(r == results[0] for r in results)
    # Frobenius: #{A : A^m = 1} is a multiple of m for every m dividing |GL|
    orders = results[0][1]
    size = len(orders)
    frob = all(sum(1 for o in orders if m % o == 0) % m == 0 for m in divisors(size))
    obs = {"moduli": [list(m) for m in moduli], "nilpotent": [r[0] for r in results], "frobenius": frob}
    return {"q": p**v, "n": n}, "counts independent of modulus; Frobenius divisibility", obs, same and len(moduli) == 2 and frob


# ---------------------------------------------------------------------------
# registry and driver

_BUILDERS = {
    "case1": _cases_case1,
    "case2": _cases_case2,
    "cased": _cases_cased,
    "pinfty": _cases_pinfty,
    "dwork": _cases_dwork,
    "pn-roots": _cases_pnroots,
    "qn": _cases_qn,
    "moebius": _cases_moebius,
    "harmonic": _cases_harmonic,
    "binomial2": _cases_binomial2,
    "exp-pdiv": _cases_exppdiv,
    "special2": _cases_special2,
    "table1": _cases_table1,
    "bounds": _cases_bounds,
    "lambda": _cases_lambda,
    "modular": _cases_modular,
    "cross-check": _cases_crosscheck,
}

_RUNNERS = {
    "case1": _run_case1,
    "case2": _run_case2,
    "cased": _run_cased,
    "pinfty": _run_pinfty,
    "altdecomp": _run_altdecomp,
    "dwork_named": _run_dwork_named,
    "dwork_limit": _run_dwork_limit,
    "dwork_h": _run_dwork_h,
    "pn": _run_pn,
    "pn_root": _run_pn_root,
    "pn_h": _run_pn_h,
    "qn": _run_qn,
    "moebius": _run_moebius,
    "harmonic": _run_harmonic,
    "binomial2": _run_binomial2,
    "exppdiv": _run_exppdiv,
    "exppdiv_b0": _run_exppdiv_b0_counterexample,
    "special2": _run_special2,
    "table1": _run_table1,
    "bounds": _run_bounds,
    "lambda_grid": _run_lambda_grid,
    "lambda_random": _run_lambda_random,
    "mod_classes": _run_mod_classes,
    "mod_equal": _run_mod_equal,
    "mod_bound": _run_mod_bound,
    "mod_hom": _run_mod_hom,
    "cross_hom": _run_cross_hom,
    "cross_nil": _run_cross_nil,
    "cross_fields": _run_cross_fields,
}

_ERRATA = {
    "dwork": [ERRATUM_DWORK, ERRATUM_DWORK_EXAMPLE],
    "exp-pdiv": [ERRATUM_EXP_B0],
    "table1": [ERRATUM_REFINED],
    "bounds": [ERRATUM_REFINED, ERRATUM_MAIN2],
    "modular": [ERRATUM_RECURRENCE],
}

SUITE_NAMES = tuple(_BUILDERS)


def _run_one(spec):
    kind, args = spec
    return _RUNNERS[kind](*args)


def suite_cases(name: str, params: dict | None = None, N: int = DEFAULT_ORDER, seed: int = 0) -> list:
    if name not in _BUILDERS:
        raise InputError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    return _BUILDERS[name](dict(params or {}), N, random.Random(f"{name}:{seed}"))


def run_suite(
    name: str, params: dict | None = None, N: int = DEFAULT_ORDER, seed: int = 0, jobs: int = 1
) -> SuiteReport:
    """Run every case of a suite; the report is ordered by case index whatever ``jobs`` is."""
    specs = suite_cases(name, params, N, seed)
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, specs))
    else:
        results = [_run_one(s) for s in specs]
    report = SuiteReport(name, {"N": N, "seed": seed, **(params or {})}, errata=list(_ERRATA.get(name, [])))
    for i, (inputs, expected, observed, ok) in enumerate(results):
        report.cases.append(CaseRecord(i, inputs, expected, observed, bool(ok)))
    return report

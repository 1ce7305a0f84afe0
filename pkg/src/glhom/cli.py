"""Command line interface: ``glhom count | bound | modular | series | poly | verify``.

Exit status: 0 success, 1 a verification failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import ConsistencyError, InputError, VerificationError, cyclotomic, prime_power
from .groups import AbelianPGroup
from .qseries import DEFAULT_ORDER

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_GLOBAL_DEFAULTS = {"format": "text", "trunc": DEFAULT_ORDER, "seed": 0, "jobs": 1, "cases": None}


class UsageError(Exception):
    pass


def _parse_factors(text: str) -> list[int]:
    try:
        exps = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--factors expects comma-separated integers, got {text!r}")
    if any(e < 1 for e in exps):
        raise UsageError("factor exponents must be positive")
    return exps


def _group(args) -> AbelianPGroup:
    return AbelianPGroup.from_factors(args.p, _parse_factors(args.factors))


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(text_lines))


# -- count -------------------------------------------------------------------
def cmd_count(args) -> int:
    G = _group(args)
    q, n = args.q, args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    pp = prime_power(q)
    if pp is None:
        raise UsageError(f"q = {q} is not a prime power")
    modular = pp[0] == G.p
    if args.method == "brute":
        from .oracle import ff_make, hom_count_bruteforce
        from .exact import vp

        count = hom_count_bruteforce(G, ff_make(*pp), n)
        val = vp(count, G.p)
    elif modular:
        if len(G.factors()) != 1:
            raise UsageError("modular counts are only available for cyclic G")
        from .modular import modular_hom

        rep = modular_hom(G.p, G.r, pp[1], n)
        count, val = rep.count, rep.vp
    else:
        from .nonmodular import hom_count

        count, val = hom_count(G, q, n, max(n, 1))
    payload = {"group": str(G), "q": q, "n": n, "method": args.method, "count": str(count), "vp": val}
    _emit(args, payload, [f"#Hom({G}, GL_{n}(F_{q})) = {count}", f"v_{G.p} = {val}"])
    return EXIT_OK


# -- bound -------------------------------------------------------------------
def cmd_bound(args) -> int:
    from .nonmodular import bound_first, bound_main, hom_counts

    G = _group(args)
    q = args.q
    if args.n_max < 0:
        raise UsageError("--n-max must be non-negative")
    actual = hom_counts(G, q, max(args.n_max, 1)) if args.compare else None
    rows, unsound = [], 0
    for n in range(args.n_max + 1):
        bf, bm = bound_first(G, q, n), bound_main(G, q, n)
        row = {
            "n": n,
            "bound_first": bf.bound,
            "bound_main": bm.bound,
            "theorem": bm.theorem,
            "l": bm.l,
            "coefficient": bm.coefficient,
            "tight": bm.tight_claim,
        }
        if actual is not None:
            v = actual[n].vp
            row["actual_vp"] = v
            if v < bf.bound or v < bm.bound or (bm.tight_claim and v != bm.bound) or (bf.tight_claim and v != bf.bound):
                row["violation"] = True
                unsound += 1
        rows.append(row)
    payload = {"group": str(G), "p": G.p, "q": q, "rows": rows, "status": "fail" if unsound else "pass"}
    header = f"{'n':>3} {'first':>7} {'main':>7} {'thm':>6} {'tight':>6}" + (f" {'actual':>7}" if actual else "")
    lines = [f"G = {G}, q = {q}", header]
    for r in rows:
        line = f"{r['n']:>3} {r['bound_first']:>7} {r['bound_main']:>7} {r['theorem']:>6} {str(r['tight']):>6}"
        if actual is not None:
            line += f" {r['actual_vp']:>7}" + ("  <-- violation" if r.get("violation") else "")
        lines.append(line)
    _emit(args, payload, lines)
    return EXIT_FAIL if unsound else EXIT_OK


# -- modular -----------------------------------------------------------------
def cmd_modular_poly(args) -> int:
    from .modular import a_nk_partition, a_nk_recurrence

    if args.n < 0 or args.k < 0:
        raise UsageError("--n and --k must be non-negative")
    fn = a_nk_partition if args.method == "partition" else a_nk_recurrence
    P = fn(args.n, args.k)
    payload = {"n": args.n, "k": args.k, "method": args.method, "poly": P.to_json()}
    _emit(args, payload, [f"a_{{{args.n},{args.k}}}(q) = {P}"])
    return EXIT_OK


def cmd_modular_count(args) -> int:
    from .exact import binom, vp
    from .modular import modular_hom

    p, u, v, n = args.p, args.u, args.v, args.n
    if args.method == "brute":
        from .oracle import ff_make, nilpotent_count_bruteforce

        count = nilpotent_count_bruteforce(n, ff_make(p, v), p**u)
        val = vp(count, p)
        bound = v * Fraction(p**u - 1, p**u + 1) * binom(n, 2)
        if val < bound:
            raise VerificationError(f"v_{p} = {val} below the bound {bound}")
    else:
        rep = modular_hom(p, u, v, n, args.method)
        count, val, bound = rep.count, rep.vp, rep.bound
    payload = {"p": p, "u": u, "v": v, "n": n, "method": args.method, "count": str(count), "vp": val, "bound": str(bound)}
    _emit(args, payload, [f"#Hom(C_{p**u}, GL_{n}(F_{p**v})) = {count}", f"v_{p} = {val} >= {bound}"])
    return EXIT_OK


def cmd_modular_bound(args) -> int:
    from .modular import modular_bound

    if args.k < 1 or args.n_max < 0:
        raise UsageError("need --k >= 1 and --n-max >= 0")
    rows = []
    for n in range(args.n_max + 1):
        rep = modular_bound(n, args.k)
        rows.append({"n": n, "trailing_degree": rep.trailing_degree, "bound": str(rep.bound), "equality_expected": rep.equality_expected})
    payload = {"k": args.k, "rows": rows}
    lines = [f"k = {args.k}", f"{'n':>3} {'v_q':>5} {'bound':>8} {'eq':>6}"]
    lines += [f"{r['n']:>3} {r['trailing_degree']:>5} {r['bound']:>8} {str(r['equality_expected']):>6}" for r in rows]
    _emit(args, payload, lines)
    return EXIT_OK


# -- series / poly -----------------------------------------------------------
def cmd_series(args) -> int:
    from . import qseries

    N = args.trunc
    name = args.name
    if name in ("f", "h"):
        if args.q is None:
            raise UsageError(f"series {name} needs --q")
        s = qseries.f_series(Fraction(args.q), N) if name == "f" else qseries.h_series(Fraction(args.q), N)
    elif name == "g":
        s = qseries.g_series(N)
    else:
        if args.q is None or args.p is None or args.factors is None:
            raise UsageError(f"series {name} needs --p, --factors and --q")
        from .nonmodular import F_series, log_F_series

        G = _group(args)
        s = F_series(G, args.q, N) if name == "F" else log_F_series(G, args.q, N)
    payload = {"name": name, "series": s.to_json()}
    _emit(args, payload, [f"[z^{n}] {c}" for n, c in enumerate(s.coeffs)])
    return EXIT_OK


def cmd_poly(args) -> int:
    from . import qseries

    fam, n = args.family, args.n
    builders = {
        "catalan": qseries.q_catalan,
        "P": qseries.p_poly,
        "R": qseries.r_poly,
        "Q": qseries.q_poly,
        "cyclotomic": cyclotomic,
    }
    P = builders[fam](n)
    payload = {"family": fam, "n": n, "poly": P.to_json()}
    _emit(args, payload, [f"{fam}_{n}(q) = {P}"])
    return EXIT_OK


# -- verify ------------------------------------------------------------------
def cmd_verify(args) -> int:
    from .suites import SUITE_NAMES, run_suite

    names = SUITE_NAMES if args.suite == "all" else [args.suite]
    if args.suite != "all" and args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(SUITE_NAMES)}")
    params = {} if args.cases is None else {"cases": args.cases}
    reports = [run_suite(n, params, args.trunc, args.seed, args.jobs) for n in names]
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = reports[0].to_json() if len(reports) == 1 else {"suites": [r.to_json() for r in reports], "status": "pass" if ok else "fail"}
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            print(f"{r.name}: {r.status} ({len(r.cases)} cases, {len(r.failures())} failed)")
            for note in r.errata:
                print(f"  erratum: {note}")
            for c in r.failures():
                print(f"  FAIL #{c.index} {c.inputs}: expected {c.expected}; observed {c.observed}")
            if args.verbose:
                for c in r.cases:
                    print(f"  #{c.index} {'ok ' if c.passed else 'BAD'} {c.inputs} {c.observed}")
    return EXIT_OK if ok else EXIT_FAIL


# -- parser ------------------------------------------------------------------
def _common() -> argparse.ArgumentParser:
    # SUPPRESS so that flags given before or after the subcommand both work
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    c.add_argument("--trunc", type=int, default=argparse.SUPPRESS, help="series truncation order (default 40)")
    c.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    c.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    c.add_argument("--cases", type=int, default=argparse.SUPPRESS, help="randomized cases per suite")
    return c


def _group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--factors", required=True, help="cyclic factor exponents, e.g. 2,2,2 for C_4^3")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="glhom", parents=[common], description="Homomorphism counts into GL_n(F_q) and their p-adic bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="#Hom(G, GL_n(F_q))")
    _group_args(c)
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--method", choices=("series", "brute"), default="series")
    c.set_defaults(func=cmd_count)

    b = sub.add_parser("bound", parents=[common], help="lower bounds for v_p #Hom, n = 0..n-max")
    _group_args(b)
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--n-max", type=int, required=True)
    b.add_argument("--compare", action="store_true", help="also compute the actual valuation")
    b.set_defaults(func=cmd_bound)

    m = sub.add_parser("modular", parents=[common], help="nilpotent counts in characteristic p")
    msub = m.add_subparsers(dest="modular_command", required=True)
    mp = msub.add_parser("poly", parents=[common])
    mp.add_argument("--n", type=int, required=True)
    mp.add_argument("--k", type=int, required=True)
    mp.add_argument("--method", choices=("recurrence", "partition"), default="recurrence")
    mp.set_defaults(func=cmd_modular_poly)
    mc = msub.add_parser("count", parents=[common])
    for flag in ("--p", "--u", "--v", "--n"):
        mc.add_argument(flag, type=int, required=True)
    mc.add_argument("--method", choices=("recurrence", "partition", "brute"), default="recurrence")
    mc.set_defaults(func=cmd_modular_count)
    mb = msub.add_parser("bound", parents=[common])
    mb.add_argument("--n-max", type=int, required=True)
    mb.add_argument("--k", type=int, required=True)
    mb.set_defaults(func=cmd_modular_bound)

    s = sub.add_parser("series", parents=[common], help="truncated series f, h, g, F or logF")
    s.add_argument("--name", choices=("f", "h", "g", "F", "logF"), required=True)
    s.add_argument("--q", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--factors")
    s.set_defaults(func=cmd_series)

    pl = sub.add_parser("poly", parents=[common], help="q-Catalan, P_n, R_n, Q_n or cyclotomic polynomials")
    pl.add_argument("--family", choices=("catalan", "P", "R", "Q", "cyclotomic"), required=True)
    pl.add_argument("--n", type=int, required=True)
    pl.set_defaults(func=cmd_poly)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", required=True, help="suite name or 'all'")
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for key, value in _GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.trunc < 1 or args.jobs < 1:
        print("glhom: --trunc and --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, InputError) as exc:
        print(f"glhom: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (VerificationError, ConsistencyError) as exc:
        print(f"glhom: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

"""Finite Abelian p-groups, the c- and lambda-sequences, and irreducible dimensions."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .exact import ConsistencyError, InputError, is_prime, multiplicative_order, vp_power_minus_1


@dataclass(frozen=True)
class AbelianPGroup:
    """G = prod_j C_{p^j}^{k_j}; ``mults[j-1]`` is k_j."""

    p: int
    mults: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")
        if any(k < 0 for k in self.mults):
            raise InputError("multiplicities must be non-negative")
        m = list(self.mults)
        while m and m[-1] == 0:
            m.pop()
        object.__setattr__(self, "mults", tuple(m))

    @classmethod
    def from_factors(cls, p: int, exponents) -> "AbelianPGroup":
        """Build from cyclic factor exponents: C_4^3 is ``from_factors(2, [2, 2, 2])``."""
        exponents = list(exponents)
        if any(e < 0 for e in exponents):
            raise InputError("factor exponents must be non-negative")
        r = max(exponents, default=0)
        counts = Counter(e for e in exponents if e > 0)
        return cls(p, tuple(counts.get(j, 0) for j in range(1, r + 1)))

    @property
    def is_trivial(self) -> bool:
        return not self.mults

    @property
    def r(self) -> int:
        return len(self.mults)

    @property
    def log_order(self) -> int:
        return sum(j * k for j, k in enumerate(self.mults, 1))

    @property
    def order(self) -> int:
        return self.p**self.log_order

    @property
    def exponent(self) -> int:
        return self.p**self.r

    @property
    def s(self) -> int:
        """log_p |G_0| where G = C_{p^r} x G_0."""
        return self.log_order - self.r

    @property
    def r_prime(self) -> int:
        """log_p exp(G_0)."""
        if self.is_trivial:
            return 0
        if self.mults[-1] >= 2:
            return self.r
        for j in range(self.r - 1, 0, -1):
            if self.mults[j - 1] > 0:
                return j
        return 0

    def factors(self) -> list[int]:
        """Cyclic factor exponents, descending."""
        return sorted((j for j, k in enumerate(self.mults, 1) for _ in range(k)), reverse=True)

    def c(self, i: int) -> int:
        """c_i = sum_j min(i, j) k_j = log_p #{g : g^{p^i} = 1}."""
        if i < 0:
            raise InputError("c_i needs i >= 0")
        return sum(min(i, j) * k for j, k in enumerate(self.mults, 1))

    def __str__(self) -> str:
        if self.is_trivial:
            return "1"
        parts = []
        for j, k in enumerate(self.mults, 1):
            if k:
                parts.append(f"C_{self.p ** j}" + (f"^{k}" if k > 1 else ""))
        return " x ".join(parts)


def group_profile(p: int, mults) -> AbelianPGroup:
    return AbelianPGroup(p, tuple(mults))


@dataclass(frozen=True)
class LambdaProfile:
    p: int
    q: int
    d: int
    lambdas: tuple[int, ...] = field(repr=True)

    def __getitem__(self, i: int) -> int:
        if i < len(self.lambdas):
            return self.lambdas[i]
        # beyond the stored horizon lambda grows by exactly one per step
        return self.lambdas[-1] + (i - len(self.lambdas) + 1)


def lambda_value(p: int, q: int, d: int, i: int) -> int:
    """v_p(q^{d p^i} - 1)."""
    return vp_power_minus_1(p, q, d * p**i)


def lambda_profile(p: int, q: int, m: int) -> LambdaProfile:
    """d = ord_p(q) and lambda_0..lambda_m, checked against the +1 growth law."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if q % p == 0:
        raise InputError("p divides q")
    if m < 1:
        raise InputError("need at least lambda_0 and lambda_1")
    d = multiplicative_order(q, p)
    lams = tuple(lambda_value(p, q, d, i) for i in range(m + 1))
    if any(b < a for a, b in zip(lams, lams[1:])):
        raise ConsistencyError(f"lambda sequence not nondecreasing: {lams}")
    if p >= 3 or lams[0] >= 2:
        ok = all(lams[i] == lams[0] + i for i in range(m + 1))
    else:
        ok = all(lams[i] == lams[1] + i - 1 for i in range(1, m + 1))
    if not ok:
        raise ConsistencyError(f"lambda growth law fails for p={p}, q={q}: {lams}")
    return LambdaProfile(p, q, d, lams)


def default_horizon(G: AbelianPGroup, p: int, q: int) -> int:
    """Smallest i with lambda_i > r, plus 4."""
    d = multiplicative_order(q, p)
    i = 0
    while lambda_value(p, q, d, i) <= G.r:
        i += 1
    return i + 4


def irred_dim_counts(G: AbelianPGroup, q: int) -> dict[int, int]:
    """{dimension e: number n_e of irreducible F_q-representations of G of dimension e}."""
    p = G.p
    if q % p == 0:
        raise InputError("p divides q")
    if G.is_trivial:
        return {1: 1}
    d = multiplicative_order(q, p)
    counts: dict[int, int] = {}

    def put(e: int, num: int, den: int) -> None:
        if num % den:
            raise ConsistencyError(f"n_{e} = {num}/{den} is not an integer")
        if num // den:
            counts[e] = num // den

    i = 0
    prev = G.c(lambda_value(p, q, d, 0))
    if d > 1:
        counts[1] = 1
        put(d, p**prev - 1, d)
    else:
        counts[1] = p**prev
    # once c_{lambda_i} reaches log_p|G| every later n_{dp^i} vanishes
    while prev < G.log_order:
        i += 1
        cur = G.c(lambda_value(p, q, d, i))
        put(d * p**i, p**cur - p**prev, d * p**i)
        prev = cur
    if sum(e * n for e, n in counts.items()) != G.order:
        raise ConsistencyError("dimension counts do not add up to |G|")
    return dict(sorted(counts.items()))


def orbit_counts_bruteforce(G: AbelianPGroup, q: int) -> dict[int, int]:
    """Cycle lengths of x -> q x on the additive model prod_j (Z/p^j)^{k_j}."""
    mods = [G.p**j for j in G.factors()]
    seen = set()
    counts: Counter = Counter()
    for x in itertools.product(*(range(m) for m in mods)):
        if x in seen:
            continue
        length, y = 0, x
        while True:
            seen.add(y)
            length += 1
            y = tuple(q * a % m for a, m in zip(y, mods))
            if y == x:
                break
        counts[length] += 1
    return dict(sorted(counts.items()))

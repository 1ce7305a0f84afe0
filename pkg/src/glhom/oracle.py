"""Brute-force ground truth by enumerating every n x n matrix over a small field.

Field elements are the integers 0..q-1, read as coefficient vectors in base p
(digit i is the coefficient of x^i).  Arithmetic goes through lookup tables,
so whole batches of matrices are multiplied with numpy fancy indexing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .exact import InputError, is_prime
from .groups import AbelianPGroup

FIELD_BUDGET = 16
ENUM_BUDGET = 2**20
CHUNK = 1 << 15


def _poly_mulmod(a, b, modulus, p):
    # ascending coefficient lists; modulus is monic of degree v
    v = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, v - 1, -1):
        c = prod[i]
        if c:
            for j in range(v + 1):
                prod[i - v + j] = (prod[i - v + j] - c * modulus[j]) % p
    return (prod + [0] * v)[:v]


def _polymod(a, b, p):
    """Remainder of a by the monic b over F_p (ascending lists)."""
    a = list(a)
    db = len(b) - 1
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c:
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return [x % p for x in a[:db]]


def _monic_polys(p: int, deg: int):
    for low in itertools.product(range(p), repeat=deg):
        yield list(reversed(low)) + [1]


def is_irreducible(poly, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for e in range(1, deg // 2 + 1):
        for f in _monic_polys(p, e):
            if not any(_polymod(poly, f, p)):
                return False
    return True


def least_irreducible(p: int, v: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree v (compared from x^{v-1} down)."""
    for f in _monic_polys(p, v):
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


@dataclass(eq=False)
class FiniteField:
    p: int
    v: int
    modulus: tuple[int, ...]
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray

    @property
    def q(self) -> int:
        return self.p**self.v

    def __repr__(self) -> str:
        terms = [f"x^{i}" if i > 1 else ("x" if i == 1 else "1") for i, c in enumerate(self.modulus) if c]
        return f"FiniteField(q={self.q}, modulus={' + '.join(reversed(terms))})"


def _digits(x: int, p: int, v: int) -> list[int]:
    out = []
    for _ in range(v):
        x, r = divmod(x, p)
        out.append(r)
    return out


def _undigits(ds, p: int) -> int:
    return sum(d * p**i for i, d in enumerate(ds))


def ff_make(p: int, v: int = 1, modulus=None) -> FiniteField:
    """F_{p^v} by tables; the modulus defaults to the least monic irreducible."""
    if not is_prime(p):
        raise InputError(f"{p} is not prime")
    if v < 1:
        raise InputError("degree must be positive")
    if p**v > FIELD_BUDGET:
        raise InputError(f"q = {p**v} exceeds the enumeration budget {FIELD_BUDGET}")
    if modulus is None:
        modulus = (0, 1) if v == 1 else least_irreducible(p, v)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != v + 1 or modulus[-1] != 1:
        raise InputError("modulus must be monic of degree v (ascending coefficients)")
    if not is_irreducible(list(modulus), p):
        raise InputError(f"modulus {modulus} is reducible over F_{p}")
    q = p**v
    elems = [_digits(x, p, v) for x in range(q)]
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for x in range(q):
        for y in range(q):
            add[x, y] = _undigits([(a + b) % p for a, b in zip(elems[x], elems[y])], p)
            mul[x, y] = _undigits(_poly_mulmod(elems[x], elems[y], modulus, p), p)
    neg = np.array([_undigits([(-a) % p for a in elems[x]], p) for x in range(q)], dtype=np.int64)
    field = FiniteField(p, v, modulus, add, mul, neg)
    _check_axioms(field)
    return field


def _check_axioms(F: FiniteField) -> None:
    q = F.q
    for x in range(1, q):
        if 1 not in F.mul[x]:
            raise AssertionError(f"{x} has no inverse")
    # every nonzero element has multiplicative order dividing q - 1
    for g in range(1, q):
        y, k = g, 1
        while y != 1:
            y = int(F.mul[y, g])
            k += 1
            if k > q:
                raise AssertionError("multiplicative group is not finite of order q - 1")
        if (q - 1) % k:
            raise AssertionError(f"order {k} of {g} does not divide {q - 1}")


# -- batched matrix arithmetic ---------------------------------------------
def _matmul(F: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    n = A.shape[-1]
    out = np.zeros(np.broadcast_shapes(A.shape, B.shape), dtype=np.int64)
    for t in range(n):
        out = F.add[out, F.mul[A[..., :, t, None], B[..., None, t, :]]]
    return out


def _matpow(F: FiniteField, A: np.ndarray, e: int) -> np.ndarray:
    result = np.broadcast_to(_identity(A.shape[-1]), A.shape).copy()
    base = A
    while e:
        if e & 1:
            result = _matmul(F, result, base)
        e >>= 1
        if e:
            base = _matmul(F, base, base)
    return result


def _identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def _det(F: FiniteField, A: np.ndarray) -> np.ndarray:
    """Leibniz expansion over the field."""
    n = A.shape[-1]
    total = np.zeros(A.shape[:-2], dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        term = np.ones(A.shape[:-2], dtype=np.int64)
        for i, j in enumerate(perm):
            term = F.mul[term, A[..., i, j]]
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        if inversions % 2:
            term = F.neg[term]
        total = F.add[total, term]
    return total


def _check_budget(q: int, n: int) -> None:
    if n < 0:
        raise InputError("n must be non-negative")
    if q ** (n * n) > ENUM_BUDGET:
        raise InputError(f"q^(n^2) = {q ** (n * n)} exceeds the enumeration budget {ENUM_BUDGET}")


def all_matrices(F: FiniteField, n: int):
    """Yield every n x n matrix over F, in batches of shape (m, n, n)."""
    _check_budget(F.q, n)
    q, total = F.q, F.q ** (n * n)
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        digits = np.empty((len(idx), n * n), dtype=np.int64)
        for c in range(n * n):
            idx, digits[:, c] = np.divmod(idx, q)
        yield digits.reshape(-1, n, n)


def nilpotent_count_bruteforce(n: int, F: FiniteField, k: int) -> int:
    """#{B in M_n(F) : B^k = 0} by enumeration."""
    if k < 0:
        raise InputError("k must be non-negative")
    if n == 0:
        return 1
    count = 0
    for B in all_matrices(F, n):
        count += int(np.all(_matpow(F, B, k) == 0, axis=(1, 2)).sum())
    return count


def invertible_matrices(F: FiniteField, n: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0, 0), dtype=np.int64)
    return np.concatenate([B[_det(F, B) != 0] for B in all_matrices(F, n)])


def element_orders(F: FiniteField, n: int, mats: np.ndarray | None = None) -> np.ndarray:
    """Multiplicative order of every invertible matrix, by stepping through powers."""
    A = invertible_matrices(F, n) if mats is None else mats
    orders = np.zeros(len(A), dtype=np.int64)
    eye = _identity(n)
    cur = A.copy()
    j = 1
    while True:
        hit = (orders == 0) & np.all(cur == eye, axis=(1, 2))
        orders[hit] = j
        if np.all(orders):
            return orders
        cur = _matmul(F, cur, A)
        j += 1


def hom_count_bruteforce(G: AbelianPGroup, F: FiniteField, n: int) -> int:
    """Tuples of pairwise commuting A_j in GL_n(F) with A_j^{p^{e_j}} = I."""
    exps = G.factors()
    if n == 0 or not exps:
        return 1
    GL = invertible_matrices(F, n)
    eye = _identity(n)
    pools = {}
    for e in set(exps):
        pools[e] = GL[np.all(_matpow(F, GL, G.p**e) == eye, axis=(1, 2))]
    if len(exps) == 1:
        count = len(pools[exps[0]])
        orders = element_orders(F, n, GL)
        by_order = int(np.sum(G.p ** exps[0] % orders == 0))
        if by_order != count:
            raise AssertionError("power test and order filtering disagree")
        return count
    # union of candidate matrices with a boolean commuting table
    keys = {}
    for e in sorted(pools):
        for M in pools[e]:
            keys.setdefault(M.tobytes(), M)
    mats = np.array(list(keys.values()))
    index = {key: i for i, key in enumerate(keys)}
    AB = _matmul(F, mats[:, None], mats[None, :])
    BA = _matmul(F, mats[None, :], mats[:, None])
    commute = np.all(AB == BA, axis=(2, 3))
    members = [[index[M.tobytes()] for M in pools[e]] for e in exps]

    def extend(chosen: list[int], j: int) -> int:
        if j == len(members):
            return 1
        return sum(extend(chosen + [x], j + 1) for x in members[j] if all(commute[x, y] for y in chosen))

    return extend([], 0)

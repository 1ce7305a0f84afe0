import numpy as np
import pytest

from glhom.exact import InputError
from glhom.groups import AbelianPGroup
from glhom.modular import a_nk_partition
from glhom.nonmodular import gln_order, hom_count
from glhom.oracle import (
    element_orders,
    ff_make,
    hom_count_bruteforce,
    invertible_matrices,
    is_irreducible,
    least_irreducible,
    nilpotent_count_bruteforce,
)


def test_least_irreducibles():
    assert least_irreducible(2, 2) == (1, 1, 1)
    assert least_irreducible(2, 3) == (1, 1, 0, 1)
    assert least_irreducible(3, 2) == (1, 0, 1)
    assert not is_irreducible([1, 0, 1], 2)


@pytest.mark.parametrize("p,v", [(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4)])
def test_field_tables(p, v):
    F = ff_make(p, v)
    q = F.q
    assert np.all(F.add[0] == np.arange(q))
    assert np.all(F.mul[1] == np.arange(q))
    assert np.all(F.add == F.add.T) and np.all(F.mul == F.mul.T)
    for x in range(q):
        assert F.add[x, F.neg[x]] == 0
    # distributivity on every triple
    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q), indexing="ij")
    assert np.all(F.mul[a, F.add[b, c]] == F.add[F.mul[a, b], F.mul[a, c]])


def test_field_rejects_bad_input():
    with pytest.raises(InputError):
        ff_make(4)
    with pytest.raises(InputError):
        ff_make(2, 2, (1, 0, 1))
    with pytest.raises(InputError):
        ff_make(2, 5)


@pytest.mark.parametrize("n,q", [(1, 2), (1, 5), (2, 2), (2, 3), (3, 2)])
def test_invertible_count(n, q):
    F = ff_make(*{2: (2, 1), 3: (3, 1), 5: (5, 1)}[q])
    assert len(invertible_matrices(F, n)) == gln_order(n, q)


def test_gl2_f2_orders():
    F = ff_make(2)
    orders = sorted(element_orders(F, 2).tolist())
    assert orders == [1, 2, 2, 2, 3, 3]


@pytest.mark.parametrize("n,q", [(2, 2), (2, 3), (3, 2), (2, 4)])
def test_nilpotent_counts(n, q):
    F = ff_make(*{2: (2, 1), 3: (3, 1), 4: (2, 2)}[q])
    for k in range(n + 1):
        assert nilpotent_count_bruteforce(n, F, k) == a_nk_partition(n, k)(q)


def test_hom_count_anchor():
    F = ff_make(3)
    assert hom_count_bruteforce(AbelianPGroup.from_factors(2, [1]), F, 2) == 14


@pytest.mark.parametrize(
    "p,factors,q,n",
    [(2, (1,), 3, 1), (2, (2,), 3, 2), (2, (1, 1), 3, 2), (3, (1,), 2, 2), (3, (1,), 2, 3), (2, (1, 1), 5, 1)],
)
def test_hom_count_matches_series(p, factors, q, n):
    G = AbelianPGroup.from_factors(p, factors)
    F = ff_make(q)
    assert hom_count_bruteforce(G, F, n) == hom_count(G, q, n).count


def test_trivial_cases():
    F = ff_make(3)
    assert hom_count_bruteforce(AbelianPGroup(2, ()), F, 2) == 1
    assert hom_count_bruteforce(AbelianPGroup.from_factors(2, [1]), F, 0) == 1
    assert nilpotent_count_bruteforce(0, F, 0) == 1


def test_budget_enforced():
    with pytest.raises(InputError):
        nilpotent_count_bruteforce(4, ff_make(3), 2)

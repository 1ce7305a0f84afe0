import pytest
from hypothesis import given, settings, strategies as st

from glhom.exact import InputError, vp
from glhom.groups import (
    AbelianPGroup,
    default_horizon,
    group_profile,
    irred_dim_counts,
    lambda_profile,
    orbit_counts_bruteforce,
)


def G(p, *factors):
    return AbelianPGroup.from_factors(p, factors)


def test_c_sequence_examples():
    c2 = group_profile(2, (1,))
    assert [c2.c(i) for i in range(4)] == [0, 1, 1, 1]
    assert (c2.r, c2.s, c2.r_prime) == (1, 0, 0)
    c4_3 = G(2, 2, 2, 2)
    assert [c4_3.c(i) for i in range(4)] == [0, 3, 6, 6]
    assert (c4_3.r, c4_3.s, c4_3.r_prime) == (2, 4, 2)
    c27 = G(3, 3)
    assert [c27.c(i) for i in range(5)] == [0, 1, 2, 3, 3]
    assert (c27.r, c27.s, c27.r_prime) == (3, 0, 0)


def test_trivial_group_flagged():
    assert group_profile(2, (0, 0)).is_trivial
    assert irred_dim_counts(group_profile(3, ()), 7) == {1: 1}


def test_bad_inputs():
    with pytest.raises(InputError):
        AbelianPGroup(4, (1,))
    with pytest.raises(InputError):
        lambda_profile(2, 4, 3)


groups = st.builds(
    lambda p, ks: AbelianPGroup(p, tuple(ks)),
    st.sampled_from([2, 3, 5]),
    st.lists(st.integers(0, 3), min_size=1, max_size=4),
).filter(lambda g: not g.is_trivial)


@given(groups)
def test_c_sequence_invariants(g):
    c = [g.c(i) for i in range(g.r + 4)]
    assert c[0] == 0
    assert all(b >= a for a, b in zip(c, c[1:]))
    assert all(c[i + 1] - c[i] <= c[i] - c[i - 1] for i in range(1, len(c) - 1))
    assert all(c[i] == g.r + g.s for i in range(g.r, len(c)))
    assert all(c[i] == i + g.s for i in range(g.r_prime, g.r + 1))
    assert all(c[i + 1] - c[i] >= 2 for i in range(g.r_prime))
    assert g.p ** c[g.r] == g.order


def test_lambda_examples():
    prof = lambda_profile(2, 3, 4)
    assert prof.d == 1 and prof.lambdas == (1, 3, 4, 5, 6)
    prof = lambda_profile(2, 5, 3)
    assert prof.d == 1 and prof.lambdas == (2, 3, 4, 5)
    prof = lambda_profile(3, 17, 2)
    assert prof.d == 2 and prof.lambdas[0] == 2


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(2, 3000), st.integers(1, 4))
def test_lambda_matches_direct_valuation(p, q, m):
    if q % p == 0:
        return
    prof = lambda_profile(p, q, m)
    for i in range(m + 1):
        assert prof[i] == vp(q ** (prof.d * p**i) - 1, p)


def test_irred_dim_examples():
    assert irred_dim_counts(G(2, 1), 3) == {1: 2}
    assert irred_dim_counts(G(3, 2), 17) == {1: 1, 2: 4}
    assert irred_dim_counts(G(3, 3), 7) == {1: 3, 3: 2, 9: 2}


@settings(max_examples=60)
@given(groups, st.integers(2, 200))
def test_dimensions_account_for_every_character(g, q):
    if q % g.p == 0 or g.order > 3**6:
        return
    counts = irred_dim_counts(g, q)
    assert sum(e * n for e, n in counts.items()) == g.order


@settings(max_examples=40)
@given(groups, st.integers(2, 100))
def test_dimensions_match_orbit_bruteforce(g, q):
    if q % g.p == 0 or g.order > 2**8:
        return
    assert irred_dim_counts(g, q) == orbit_counts_bruteforce(g, q)


def test_default_horizon_passes_r():
    g = G(2, 3)
    h = default_horizon(g, 2, 7)
    assert lambda_profile(2, 7, h)[h - 4] > g.r


SMALL = [(2, (1,)), (2, (2,)), (2, (1, 1)), (2, (3, 1)), (2, (2, 2, 2)), (3, (1, 2)), (3, (3,)), (5, (1, 1)), (2, (8,))]


@pytest.mark.parametrize(
    "p,factors,q",
    [(p, f, q) for p, f in SMALL for q in (3, 5, 7, 11, 13, 17, 31, 47, 163) if q % p],
)
def test_dimensions_match_orbits_on_fixed_grid(p, factors, q):
    g = G(p, *factors)
    assert irred_dim_counts(g, q) == orbit_counts_bruteforce(g, q)

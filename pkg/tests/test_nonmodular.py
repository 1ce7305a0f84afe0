from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glhom.exact import INF, InputError, vp
from glhom.groups import AbelianPGroup
from glhom.nonmodular import (
    F_series,
    F_series_product,
    alt_decomposition,
    applicable_bounds,
    b_a_sequences,
    b_values,
    bound_first,
    bound_main,
    bound_refined,
    cyclic_group_at_limit,
    gln_order,
    gln_vp,
    hom_count,
    hom_counts,
    limit_F_series,
    log_F_layered,
    log_F_series,
    main_case_table,
)


def G(p, *factors):
    return AbelianPGroup.from_factors(p, factors)


def test_hom_count_examples():
    assert hom_count(G(2, 1), 3, 1).count == 2
    assert hom_count(G(2, 1), 3, 2) == (14, 1)
    assert hom_count(G(3, 2, 1), 7, 0).count == 1


def test_modular_pair_rejected():
    with pytest.raises(InputError):
        hom_count(G(2, 1), 4, 2)


def test_gln_examples():
    assert gln_order(2, 3) == 48
    assert gln_vp(2, 3, 2) == 4
    assert gln_vp(1, 5, 2) == 2


@pytest.mark.parametrize("n", range(9))
@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_gln_vp_matches_order(n, q):
    for p in (2, 3, 5, 7):
        if q % p:
            assert gln_vp(n, q, p) == vp(gln_order(n, q), p)


CASES = [(2, (1,), 3), (2, (2,), 5), (2, (1, 1), 7), (3, (1,), 7), (3, (2,), 17), (2, (2, 2, 2), 31), (5, (1,), 11)]


@pytest.mark.parametrize("p,factors,q", CASES)
def test_F_two_routes_agree(p, factors, q):
    g = G(p, *factors)
    assert F_series(g, q, 16) == F_series_product(g, q, 16)


@pytest.mark.parametrize("p,factors,q", CASES)
def test_layered_log_agrees(p, factors, q):
    g = G(p, *factors)
    assert log_F_layered(g, q, 20) == log_F_series(g, q, 20)


@pytest.mark.parametrize("p,factors,q", CASES)
def test_alt_decomposition_sums_back(p, factors, q):
    g = G(p, *factors)
    dec = alt_decomposition(g, q, 20)
    assert dec.total() == log_F_series(g, q, 20)


@pytest.mark.parametrize("p,q", [(2, 3), (2, 5), (3, 7), (3, 17), (5, 11)])
def test_limit_matches_large_cyclic_group(p, q):
    N = 16
    g = cyclic_group_at_limit(p, q, N)
    assert limit_F_series(p, q, N) == F_series(g, q, N)


@pytest.mark.parametrize("p,factors,q", CASES)
def test_counts_are_integers_divisible_by_gcd(p, factors, q):
    from math import gcd

    g = G(p, *factors)
    for n, hc in enumerate(hom_counts(g, q, 10)):
        assert hc.count % gcd(g.order, gln_order(n, q)) == 0


def test_b_sequence_examples():
    assert b_values(G(2, 1), 3, 4) == (0, -3, -5, -7)
    seq = b_a_sequences(G(2, 2, 2, 2), 31)
    assert seq.b[:4] == (2, -1, -3, -5)
    assert (seq.l, seq.a_l) == (1, -1)
    seq = b_a_sequences(G(3, 3), 7)
    assert seq.b[:4] == (0, -1, -2, -4)
    assert seq.a[:3] == (INF, INF, INF)
    assert (seq.l, seq.a_l) == (3, -4)


def test_bound_examples():
    for n in range(25):
        assert bound_first(G(2, 1), 3, n).bound == n - n // 2
        assert bound_first(G(3, 3), 163, n).bound == 3 * n
        assert bound_first(G(2, 1), 5, n).bound == n
        assert bound_main(G(3, 2), 17, n).bound == 2 * (n // 2) - n // 6
        assert bound_main(G(3, 3), 7, n).bound == n + n // 3 + n // 9 - 3 * (n // 27)
        assert bound_main(G(2, 1), 3, n).bound == n - n // 2
        assert bound_refined(G(2, 1), 5, n).bound == n + n // 2 - n // 4
        assert bound_refined(G(2, 2, 2, 2), 31, n).bound == n + 4 * (n // 2) + n // 4 - n // 8
    rep = bound_main(G(2, 1), 3, 4)
    assert (rep.theorem, rep.l, rep.coefficient) == ("main2", 1, -3)
    rep = bound_main(G(3, 2), 17, 6)
    assert (rep.theorem, rep.l, rep.coefficient) == ("main1", 1, -2)
    rep = bound_refined(G(2, 1), 5, 1)
    assert rep.bound == 1 == hom_count(G(2, 1), 5, 1).vp


def test_refinement_needs_minus_one():
    with pytest.raises(InputError):
        bound_refined(G(3, 2), 17, 4)


groups = st.builds(
    lambda p, ks: AbelianPGroup(p, tuple(ks)),
    st.sampled_from([2, 3]),
    st.lists(st.integers(0, 2), min_size=1, max_size=4),
).filter(lambda g: not g.is_trivial)


@settings(max_examples=60)
@given(groups, st.integers(3, 400))
def test_case_table_matches_sequence_scan(g, q):
    if q % g.p == 0:
        return
    seq = b_a_sequences(g, q)
    _, l, a_l = main_case_table(g, q)
    assert (l, a_l) == (seq.l, seq.a_l)


@settings(max_examples=25)
@given(groups, st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23, 31, 43]))
def test_bounds_sound_and_tight(g, q):
    if q % g.p == 0 or g.order > 3**5:
        return
    counts = hom_counts(g, q, 16)
    for n in range(17):
        for rep in applicable_bounds(g, q, n):
            assert counts[n].vp >= rep.bound
            if rep.tight_claim:
                assert counts[n].vp == rep.bound


def test_bound_json_fields():
    data = bound_main(G(2, 1), 5, 8).to_json()
    assert set(data) == {"theorem", "d", "l", "coefficient", "n", "bound", "tight_claim", "modulus"}
    assert data["bound"] == 8 + 4 - 2
    assert Fraction(data["bound"]) == bound_main(G(2, 1), 5, 8).bound

"""Listing order, positions and basic arithmetic of exponent-tuple monomials."""
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

import oracles
from slpkit.monomials import (
    BasisIndex,
    Monomial,
    enumerate_squarefree,
    revlex_compare,
    revlex_sort_key,
    squarefree_rank,
    squarefree_unrank,
)


def test_golden_listing_four_vars_degree_two():
    listing = [str(m) for m in enumerate_squarefree(4, 2)]
    assert listing == ["x1*x2", "x1*x3", "x2*x3", "x1*x4", "x2*x4", "x3*x4"]


def test_golden_listing_five_vars_degree_three():
    listing = [str(m) for m in enumerate_squarefree(5, 3)]
    assert listing == [
        "x1*x2*x3",
        "x1*x2*x4",
        "x1*x3*x4",
        "x2*x3*x4",
        "x1*x2*x5",
        "x1*x3*x5",
        "x2*x3*x5",
        "x1*x4*x5",
        "x2*x4*x5",
        "x3*x4*x5",
    ]


def test_listing_starts_with_initial_segment():
    for n in range(1, 9):
        for t in range(1, n + 1):
            first = enumerate_squarefree(n, t)[0]
            assert first == Monomial.from_support(n, range(t))


def test_counts_match_binomials():
    for n in range(13):
        for t in range(-1, n + 2):
            assert len(enumerate_squarefree(n, t)) == (comb(n, t) if 0 <= t <= n else 0)


def test_listing_matches_brute_force_enumeration():
    for n in range(8):
        for t in range(n + 1):
            got = [m.exponents for m in enumerate_squarefree(n, t)]
            want = oracles.brute_standard_monomials((2,) * n, t)
            assert got == want


def test_rank_inverts_enumeration_exhaustively():
    for n in range(1, 9):
        for t in range(n + 1):
            for k, m in enumerate(enumerate_squarefree(n, t)):
                assert squarefree_rank(m) == BasisIndex(t, k)
                assert squarefree_unrank(n, t, k) == m


def test_listing_is_strictly_decreasing():
    # the comparator returns +1 exactly when its first argument comes earlier
    for n in range(1, 7):
        for t in range(n + 1):
            listing = enumerate_squarefree(n, t)
            for u, v in zip(listing, listing[1:]):
                assert revlex_compare(u, v) == 1
                assert revlex_compare(v, u) == -1


def test_comparator_matches_independent_rule():
    for n in range(1, 6):
        monomials = [m for t in range(n + 1) for m in enumerate_squarefree(n, t)]
        for u, v in combinations(monomials, 2):
            got = revlex_compare(u, v)
            if u.degree != v.degree:
                want = 1 if u.degree > v.degree else -1
            elif oracles.earlier_in_listing(u.exponents, v.exponents):
                want = 1
            else:
                want = -1
            assert got == want
            assert revlex_compare(u, u) == 0


def test_sort_key_recovers_the_listing():
    for n in range(1, 7):
        for t in range(n + 1):
            listing = list(enumerate_squarefree(n, t))
            shuffled = sorted(listing, key=lambda m: m.exponents)
            assert sorted(shuffled, key=revlex_sort_key) == listing


def test_split_by_last_variable():
    # degree-t listing = (monomials without xn) then xn * (degree t-1 listing)
    for n in range(2, 8):
        for t in range(1, n + 1):
            listing = enumerate_squarefree(n, t)
            without = [m for m in listing if m.exponents[-1] == 0]
            with_last = [m for m in listing if m.exponents[-1] == 1]
            assert list(listing) == without + with_last
            assert [m.exponents[:-1] for m in without] == [
                m.exponents for m in enumerate_squarefree(n - 1, t)
            ]
            assert [m.exponents[:-1] for m in with_last] == [
                m.exponents for m in enumerate_squarefree(n - 1, t - 1)
            ]


@given(st.data())
def test_unrank_rank_roundtrip(data):
    n = data.draw(st.integers(min_value=1, max_value=12))
    t = data.draw(st.integers(min_value=0, max_value=n))
    position = data.draw(st.integers(min_value=0, max_value=comb(n, t) - 1))
    m = squarefree_unrank(n, t, position)
    assert m.is_squarefree() and m.degree == t and m.nvars == n
    assert squarefree_rank(m) == BasisIndex(t, position)


def test_monomial_basics():
    m = Monomial((1, 0, 2))
    assert m.nvars == 3 and m.degree == 3
    assert not m.is_squarefree()
    assert m.support() == (0, 2)
    assert str(m) == "x1*x3^2"
    assert str(Monomial.constant(2)) == "1"
    assert Monomial.variable(3, 1) == Monomial((0, 1, 0))
    assert m * Monomial((0, 1, 0)) == Monomial((1, 1, 2))
    assert Monomial.from_json(m.to_json()) == m
    assert Monomial.from_support(4, (3, 1)) == Monomial((0, 1, 0, 1))


def test_validation_errors():
    with pytest.raises(ValueError):
        Monomial((1, -1))
    with pytest.raises(ValueError):
        Monomial.variable(2, 5)
    with pytest.raises(ValueError):
        Monomial((1, 0)) * Monomial((1, 0, 0))
    with pytest.raises(ValueError):
        squarefree_rank(Monomial((2, 0)))
    with pytest.raises(ValueError):
        squarefree_unrank(4, 2, 6)
    with pytest.raises(ValueError):
        squarefree_unrank(4, 5, 0)
    with pytest.raises(ValueError):
        revlex_compare(Monomial((1,)), Monomial((1, 0)))
    with pytest.raises(ValueError):
        BasisIndex(-1, 0)

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from yukawa_length.polyring import (
    Monomial,
    Polynomial,
    bidegree,
    character,
    count_monomials,
    enumerate_monomials,
    grlex_key,
    is_invariant,
    multiply,
    times_monomial,
)


def brute_monomials(m, r, p, q, chi=None):
    chi = tuple(c % r for c in chi) if chi is not None else (0,) * m
    out = set()
    for mu in product(range(p + 1), repeat=m - 2):
        if sum(mu) != p:
            continue
        for y in product(range(q + 1), repeat=m):
            if sum(y) == q and all(e % r == c for e, c in zip(y, chi)):
                out.add(Monomial(mu, y))
    return out


def test_monomial_basics():
    mono = Monomial.make(6, {1: 1}, {1: 4})
    assert bidegree(mono) == (1, 4)
    assert character(mono, 2) == (0,) * 6
    assert is_invariant(mono, 2)
    assert str(mono) == "mu1*y1^4"
    assert str(Monomial.one(4)) == "1"
    odd = Monomial.make(6, {}, {0: 1, 2: 3})
    assert character(odd, 2) == (1, 0, 1, 0, 0, 0)
    assert not is_invariant(odd, 2)


@pytest.mark.parametrize(
    "m,r,p,q,expected",
    [(4, 2, 0, 2, 4), (4, 2, 0, 0, 1), (6, 2, 1, 4, 84), (6, 3, 1, 9, 224)],
)
def test_invariant_counts(m, r, p, q, expected):
    mons = enumerate_monomials(m, r, p, q)
    assert len(mons) == expected == len(brute_monomials(m, r, p, q))
    assert set(mons) == brute_monomials(m, r, p, q)


def test_all_characters_count_84():
    # mu-degree 1 in 4 mus, y-degree 2 in 6 ys: 4 * C(7, 2) = 84 monomials total
    m, r = 6, 2
    total = sum(len(enumerate_monomials(m, r, 1, 2, chi)) for chi in product(range(r), repeat=m))
    assert total == 84 == count_monomials(m - 2, 1) * count_monomials(m, 2)


def test_empty_and_bad_character():
    assert enumerate_monomials(4, 2, -1, 2) == []
    assert enumerate_monomials(4, 2, 0, 3) == []
    with pytest.raises(ValueError):
        enumerate_monomials(4, 2, 0, 2, (0, 0))


def test_order_is_decreasing_grlex():
    mons = enumerate_monomials(6, 2, 1, 4)
    keys = [grlex_key(x) for x in mons]
    assert keys == sorted(keys, reverse=True)
    assert mons[0] == Monomial.make(6, {0: 1}, {0: 4})


@given(st.integers(2, 4), st.integers(0, 2), st.integers(0, 5), st.data())
def test_enumeration_matches_brute_force(r, p, q, data):
    m = 2 * r if r < 4 else 4
    m = max(m, 4)
    chi = data.draw(st.lists(st.integers(0, r - 1), min_size=m, max_size=m))
    assert set(enumerate_monomials(m, r, p, q, chi)) == brute_monomials(m, r, p, q, chi)


@given(st.integers(0, 5), st.integers(1, 5))
def test_stars_and_bars(degree, nvars):
    brute = sum(1 for v in product(range(degree + 1), repeat=nvars) if sum(v) == degree)
    assert count_monomials(nvars, degree) == brute


def monomials_of(m):
    return st.builds(
        Monomial,
        st.tuples(*[st.integers(0, 2)] * (m - 2)),
        st.tuples(*[st.integers(0, 3)] * m),
    )


def polys(m=4):
    return st.dictionaries(monomials_of(m), st.integers(-3, 3), max_size=4).map(Polynomial)


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert multiply(f, g) == multiply(g, f)
    assert multiply(f, g + h) == multiply(f, g) + multiply(f, h)
    assert multiply(multiply(f, g), h) == multiply(f, multiply(g, h))
    assert f - f == Polynomial()
    assert not (f - f)


@given(polys(), monomials_of(4))
def test_times_monomial_matches_multiply(f, mono):
    assert times_monomial(f, mono) == multiply(f, Polynomial.monomial(mono))


@given(monomials_of(4), monomials_of(4))
def test_bidegree_additive(a, b):
    ab = a.times(b)
    assert bidegree(ab) == tuple(x + y for x, y in zip(bidegree(a), bidegree(b)))
    assert character(ab, 2) == tuple((x + y) % 2 for x, y in zip(character(a, 2), character(b, 2)))


def test_polynomial_drops_zeros_and_hashes():
    x = Monomial.make(4, {0: 1})
    f = Polynomial({x: Fraction(1, 2)})
    g = Polynomial({x: 1}).scale(Fraction(1, 2))
    assert f == g and hash(f) == hash(g)
    assert Polynomial({x: 0}) == Polynomial()
    assert f.bidegrees() == {(1, 0)}

from fractions import Fraction
from itertools import permutations
from math import comb

import numpy as np
import pytest
from hypothesis import given, strategies as st

from yukawa_length import errors
from yukawa_length.higgs import (
    HiggsPencil,
    arrangement_pencil,
    certify,
    colex_subsets,
    coupling_length,
    coupling_length_diagonal,
    first_vanishing_grade,
    hodge_numbers_v1,
    hodge_numbers_w1,
    is_surjective,
    iterated_higgs,
    structural_upper_bound,
    wedge_power_higgs,
)
from yukawa_length.jacobian import default_point, validate_params
from yukawa_length.linalg import Matrix, rank


def pencil(n, k1, mats):
    return HiggsPencil(n, k1, tuple(Matrix.from_rows(m, n) for m in mats))


@st.composite
def pencils(draw, max_n=4, max_dirs=3):
    n = draw(st.integers(1, max_n))
    k1 = draw(st.integers(0, n))
    d = draw(st.integers(1, max_dirs))
    entry = st.integers(-3, 3)
    mats = [
        [[draw(entry) for _ in range(n)] for _ in range(k1)] for _ in range(d)
    ]
    return pencil(n, k1, mats)


# --- independent exterior algebra: a word is a tuple of generator labels ---
# F^{1,0} generators are ("e", i), F^{0,1} generators are ("f", t); e's precede f's.


def _sort_word(word):
    key = [(0 if g[0] == "e" else 1, g[1]) for g in word]
    if len(set(key)) < len(key):
        return None, 0
    order = sorted(range(len(key)), key=lambda i: key[i])
    sign, seen = 1, [False] * len(order)
    for i in range(len(order)):  # parity via cycle decomposition
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = order[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return tuple(word[i] for i in order), sign


def oracle_theta(eta_rows, S, T):
    """theta applied to e_S ^ f_T by expanding every factor, as a dict word -> coeff."""
    out = {}
    word = [("e", s) for s in S] + [("f", t) for t in T]
    for pos, s in enumerate(S):
        for t in range(len(eta_rows)):
            c = eta_rows[t][s]
            if not c:
                continue
            new = list(word)
            new[pos] = ("f", t)
            sorted_word, sign = _sort_word(new)
            if sorted_word is not None:
                out[sorted_word] = out.get(sorted_word, 0) + sign * c
    return {w: c for w, c in out.items() if c}


def as_word(S, T):
    return tuple(("e", s) for s in S) + tuple(("f", t) for t in T)


@given(pencils(max_dirs=1))
def test_derivation_matches_exterior_oracle(P):
    W = wedge_power_higgs(P)
    eta = P.eta_basis[0].to_lists()
    for q in range(W.n):
        theta = W.theta(q, (1,))
        for col, (S, T) in enumerate(W.grades[q]):
            expected = oracle_theta(eta, S, T)
            got = {
                as_word(*W.grades[q + 1][row]): theta[row, col]
                for row in range(theta.rows)
                if theta[row, col]
            }
            assert got == expected


def test_hodge_examples():
    p = validate_params
    assert hodge_numbers_w1(p(6, 2)) == (2, 2)
    assert hodge_numbers_w1(p(6, 3)) == (3, 1)
    assert hodge_numbers_w1(p(8, 2)) == (3, 3)
    assert hodge_numbers_v1(p(6, 2)).h == (1, 4, 1)
    assert hodge_numbers_v1(p(6, 3)).h == (1, 3, 0, 0)
    assert hodge_numbers_v1(p(8, 2)).h == (1, 9, 9, 1)
    assert hodge_numbers_v1(p(8, 4)).h == (1, 5, 0, 0, 0, 0)
    assert hodge_numbers_v1(p(9, 3)).h == (1, 10, 10, 0, 0, 0)


@pytest.mark.parametrize("m,r,bound,vanish", [(6, 2, 2, 3), (8, 2, 3, 4), (8, 4, 1, 2), (4, 2, 1, 2)])
def test_structural_bound(m, r, bound, vanish):
    params = validate_params(m, r)
    assert structural_upper_bound(params) == bound
    assert first_vanishing_grade(params) == vanish


def test_wedge_examples():
    W = wedge_power_higgs(pencil(1, 1, [[[5]]]))
    assert W.theta(0, (1,)).to_lists() == [[5]]
    assert coupling_length_diagonal(W, (1,)) == 1

    W = wedge_power_higgs(pencil(2, 2, [[[1, 0], [0, 1]]]))
    assert W.grade_dims() == [1, 4, 1]
    first = W.theta(0, (1,))
    assert sum(1 for x in first.column(0) if x) == 2
    assert iterated_higgs(W, [(1,), (1,)]).to_lists() == [[2]]
    assert coupling_length_diagonal(W, (1,)) == 2

    W = wedge_power_higgs(pencil(3, 2, [[[0] * 3] * 2]))
    assert all(m.is_zero() for m in W.maps[0])
    assert coupling_length_diagonal(W, (1,)) == 0


def test_iterated_edge_cases():
    W = wedge_power_higgs(pencil(2, 1, [[[1, 1]], [[1, -1]]]))
    assert iterated_higgs(W, []) == Matrix.identity(1)
    assert iterated_higgs(W, [(0, 0)]).is_zero()
    assert iterated_higgs(W, [(1, 0), (0, 1)]).shape == (0, 1)
    with pytest.raises(errors.TooDeep):
        iterated_higgs(W, [(1, 0)] * 3)


def test_pencil_shape_errors():
    with pytest.raises(errors.ShapeMismatch):
        HiggsPencil(2, 1, (Matrix.from_rows([[1, 2, 3]]),))
    with pytest.raises(errors.ShapeMismatch):
        HiggsPencil(2, 1, ())
    with pytest.raises(errors.ShapeMismatch):
        pencil(1, 2, [[[1], [1]]])


def test_colex():
    assert colex_subsets(3, 2) == [(0, 1), (0, 2), (1, 2)]
    assert colex_subsets(2, 0) == [()]


@given(pencils(), st.data())
def test_grade_dims_formula(P, data):
    W = wedge_power_higgs(P)
    assert W.grade_dims() == [comb(P.dim_F10, P.dim_F10 - q) * comb(P.dim_F01, q) for q in range(P.dim_F10 + 1)]


@given(pencils(), st.data())
def test_directions_commute(P, data):
    W = wedge_power_higgs(P)
    q = data.draw(st.integers(0, W.n))
    dirs = [data.draw(st.tuples(*[st.integers(-3, 3)] * W.directions)) for _ in range(q)]
    base = iterated_higgs(W, dirs)
    for perm in list(permutations(range(q)))[:24]:
        assert iterated_higgs(W, [dirs[i] for i in perm]) == base


@given(pencils(), st.data())
def test_iterated_is_multilinear(P, data):
    W = wedge_power_higgs(P)
    if W.n == 0:
        return
    d = W.directions
    v = data.draw(st.tuples(*[st.integers(-3, 3)] * d))
    w = data.draw(st.tuples(*[st.integers(-3, 3)] * d))
    rest = [data.draw(st.tuples(*[st.integers(-3, 3)] * d)) for _ in range(data.draw(st.integers(0, W.n - 1)))]
    vw = tuple(a + b for a, b in zip(v, w))
    assert iterated_higgs(W, [vw] + rest) == iterated_higgs(W, [v] + rest) + iterated_higgs(W, [w] + rest)


@given(pencils(), st.data())
def test_diagonal_length_properties(P, data):
    W = wedge_power_higgs(P)
    v = data.draw(st.tuples(*[st.integers(-4, 4)] * W.directions))
    c = data.draw(st.fractions(min_value=-5, max_value=5, max_denominator=3).filter(bool))
    L = coupling_length_diagonal(W, v)
    assert L <= P.dim_F01
    assert coupling_length_diagonal(W, tuple(c * x for x in v)) == L
    if is_surjective(P.at(v)):
        assert L == P.dim_F01
    if not any(v):
        assert L == 0


def test_single_direction_length_is_rank():
    rng = np.random.Generator(np.random.PCG64(7))
    hits = 0
    for _ in range(40):
        n = int(rng.integers(1, 5))
        k1 = int(rng.integers(0, n + 1))
        mat = rng.integers(-2, 3, size=(k1, n)).tolist()
        W = wedge_power_higgs(pencil(n, k1, [mat]))
        L = coupling_length_diagonal(W, (1,))
        # the diagonal length is the rank of eta for a single direction
        assert L == rank(Matrix.from_rows(mat, n))
        hits += is_surjective(Matrix.from_rows(mat, n))
    assert hits > 0


@pytest.mark.parametrize("m,r,length", [(4, 2, 1), (6, 2, 2), (6, 3, 1), (8, 2, 3)])
def test_coupling_length_small(m, r, length):
    params = validate_params(m, r)
    cert = coupling_length(params, default_point(params))
    assert cert.length == length == cert.upper_bound
    assert cert.complete and cert.upper_reason.startswith("grade dim 0")
    assert not cert.witness.is_zero()


def test_arrangement_pencil_matches_grades():
    params = validate_params(6, 2)
    P = arrangement_pencil(params, default_point(params))
    W = wedge_power_higgs(P)
    assert (P.dim_F10, P.dim_F01, P.directions) == (2, 2, 3)
    assert W.grade_dims() == list(hodge_numbers_v1(params).h)
    for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        assert coupling_length_diagonal(W, v) <= 1  # one nonzero lambda gives rank at most one


def test_certify_incomplete_and_empty():
    params = validate_params(6, 2)
    W = wedge_power_higgs(arrangement_pencil(params, default_point(params)))
    cert = certify(params, W, [(1, 0, 0)])
    assert not cert.complete and cert.length == 1
    assert cert.upper_reason.startswith("incomplete")
    empty = certify(params, W, [])
    assert not empty.complete and empty.trials_used == 0


def test_certificate_stops_at_bound():
    params = validate_params(6, 2)
    W = wedge_power_higgs(arrangement_pencil(params, default_point(params)))
    cert = certify(params, W, [(1, 0, 0), (1, 1, 1), (2, 3, 5)])
    assert cert.trials_used == 2 and cert.diagonal_lengths == (1, 2)
    assert cert.direction == (Fraction(1), Fraction(1), Fraction(1))

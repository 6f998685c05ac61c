"""Tall-forest basis, rewrite, pairing, and symmetric-group structure."""

import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from confspace import forests
from confspace.linalg import QQ, ZZ, SparseMatrix, rank, smith_normal_form
from confspace.selftest import _iota_forest, _random_forest

import oracles


def test_tree_helpers():
    t = ((1, 3), 2)
    assert forests.tree_leaves(t) == (1, 3, 2)
    assert forests.tree_min(t) == 1
    assert forests.tree_degree(t, 3) == 4
    assert forests.shifted_degree(t, 3) == 6
    assert forests.is_tall(((1, 3), 2))
    assert not forests.is_tall((1, (3, 2)))


def test_parse_and_str_round_trip():
    for text in ("((12)3),(45)", "(1 10),((2 3) 4)"):
        f = forests.parse_forest(text)
        assert forests.parse_forest(forests.forest_str(f)) == f


def test_tall_basis_counts_are_stirling():
    for n in (2, 3):
        for k in range(1, 7):
            for j in range(k):
                dim = len(forests.tall_basis(k, n, j * (n - 1)))
                assert dim == oracles.stirling_cycles(k, k - j)


def test_rewrite_fixes_tall_forests():
    for n in (2, 3):
        for k in range(1, 6):
            for j in range(k):
                for f in forests.tall_basis(k, n, j * (n - 1)):
                    x = forests.rewrite_to_tall(f, n)
                    assert x.terms == {f: 1}


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6), st.integers(2, 4), st.integers(0, 10**6))
def test_rewrite_matches_tensor_oracle(k, n, seed):
    f = _random_forest(k, random.Random(seed))
    x = forests.rewrite_to_tall(f, n)
    got = {}
    for g, c in x.terms.items():
        for key, c2 in _iota_forest(g, n).items():
            v = got.get(key, 0) + c * c2
            if v:
                got[key] = v
            else:
                got.pop(key, None)
    assert got == _iota_forest(f, n)


def test_single_tree_antisymmetry():
    # [2,1] against [1,2]: the graft sign in both parities
    for n in (2, 3):
        a = forests.rewrite_to_tall(((1, 2),), n)
        b = forests.rewrite_to_tall(((2, 1),), n)
        sign = -((-1) ** ((n - 1) % 2))
        assert b.terms == {f: sign * c for f, c in a.terms.items()}


def test_component_reorder_sign():
    # two odd trees swap: for n = 2 each 2-leaf tree has odd degree
    fwd = forests.rewrite_to_tall(((1, 2), (3, 4)), 2)
    rev = forests.rewrite_to_tall(((3, 4), (1, 2)), 2)
    assert rev.terms == {f: -c for f, c in fwd.terms.items()}
    # for n = 3 degrees are even and the swap carries no sign
    fwd = forests.rewrite_to_tall(((1, 2), (3, 4)), 3)
    rev = forests.rewrite_to_tall(((3, 4), (1, 2)), 3)
    assert rev.terms == fwd.terms


def test_rewrite_rejects_bad_labels():
    with pytest.raises(forests.ForestError):
        forests.rewrite_to_tall(((1, 3),), 2)
    with pytest.raises(forests.ForestError):
        forests.rewrite_to_tall(((1, 1), 2), 2)


def test_pairing_unimodular_small():
    for n in (2, 3):
        for k in range(1, 5):
            for j in range(k):
                m = forests.pairing_matrix(k, n, j * (n - 1))
                factors, rnk = smith_normal_form(m)
                assert rnk == m.nrows == m.ncols
                assert all(x == 1 for x in factors)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(2, 3), st.integers(0, 10**6))
def test_action_matrix_is_multiplicative(k, n, seed):
    rng = random.Random(seed)
    j = rng.randrange(k)
    degree = j * (n - 1)
    basis = forests.tall_basis(k, n, degree)
    if not basis:
        return
    p = list(range(1, k + 1))
    q = list(range(1, k + 1))
    rng.shuffle(p)
    rng.shuffle(q)
    tp = {i + 1: p[i] for i in range(k)}
    tq = {i + 1: q[i] for i in range(k)}
    comp = {i: tq[tp[i]] for i in tp}
    mp = forests.action_matrix(tp, k, n, degree, basis)
    mq = forests.action_matrix(tq, k, n, degree, basis)
    mc = forests.action_matrix(comp, k, n, degree, basis)
    assert mq.matmul(mp) == mc


def coinvariant_dim_oracle(k, n, degree):
    """dim of coinvariants = rank of the averaging projector over Q."""
    basis = forests.tall_basis(k, n, degree)
    if not basis:
        return 0
    z = len(basis)
    acc = SparseMatrix.zero(z, z, QQ)
    perms = []

    def gen(rest, cur):
        if not rest:
            perms.append(tuple(cur))
            return
        for i, x in enumerate(rest):
            gen(rest[:i] + rest[i + 1:], cur + [x])

    gen(list(range(1, k + 1)), [])
    for p in perms:
        table = {i + 1: p[i] for i in range(k)}
        m = forests.action_matrix(table, k, n, degree, basis, domain=QQ)
        acc = acc.add(m)
    return rank(acc.scale(Fraction(1, factorial(k))))


def test_coinvariants_match_projector_oracle():
    for n in (2, 3):
        for k in (2, 3, 4):
            dims = forests.coinvariants_dims(k, n, QQ)
            for j in range(k):
                degree = j * (n - 1)
                assert dims.get(degree) == coinvariant_dim_oracle(k, n, degree)


def test_closed_form_unordered_betti():
    assert dict(forests.unordered_betti_rational(3, 2).items()) == {0: 1, 1: 1}
    assert dict(forests.unordered_betti_rational(3, 3).items()) == {0: 1}
    assert dict(forests.unordered_betti_rational(5, 4).items()) == {0: 1, 3: 1}
    with pytest.raises(Exception):
        forests.unordered_betti_rational(1, 2)

"""Sparse exact linear algebra against dense and sympy oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from confspace.linalg import (
    GF,
    QQ,
    ZZ,
    DomainError,
    SparseMatrix,
    invert,
    kernel_basis,
    rank,
    smith_normal_form,
)

import oracles


def dense(m):
    return m.to_dense()


small_int = st.integers(min_value=-6, max_value=6)


@st.composite
def int_matrix(draw, max_dim=7):
    nrows = draw(st.integers(min_value=0, max_value=max_dim))
    ncols = draw(st.integers(min_value=0, max_value=max_dim))
    rows = [[draw(small_int) for _ in range(ncols)] for _ in range(nrows)]
    return rows


@st.composite
def frac_matrix(draw, max_dim=6):
    nrows = draw(st.integers(min_value=0, max_value=max_dim))
    ncols = draw(st.integers(min_value=0, max_value=max_dim))
    rows = [[Fraction(draw(small_int), draw(st.integers(1, 5)))
             for _ in range(ncols)] for _ in range(nrows)]
    return rows


@settings(max_examples=120, deadline=None)
@given(int_matrix())
def test_rank_int_entries_matches_dense_oracle(rows):
    m = SparseMatrix.from_rows(rows, QQ)
    assert rank(m) == oracles.dense_rank_qq(rows)


def test_rank_over_zz_refused():
    m = SparseMatrix.from_rows([[2, 0], [0, 3]], ZZ)
    with pytest.raises(DomainError):
        rank(m)


@settings(max_examples=120, deadline=None)
@given(frac_matrix())
def test_rank_qq_matches_dense_oracle(rows):
    m = SparseMatrix.from_rows(rows, QQ)
    assert rank(m) == oracles.dense_rank_qq(rows)


@settings(max_examples=120, deadline=None)
@given(int_matrix(), st.sampled_from([2, 3, 5, 7]))
def test_rank_gf_matches_dense_oracle(rows, p):
    m = SparseMatrix.from_rows(rows, GF(p))
    assert rank(m) == oracles.dense_rank_mod(rows, p)


@settings(max_examples=100, deadline=None)
@given(int_matrix(max_dim=5))
def test_smith_matches_sympy(rows):
    m = SparseMatrix.from_rows(rows, ZZ)
    factors, rnk = smith_normal_form(m)
    want = oracles.sympy_smith(rows)
    assert sorted(factors) == want
    assert rnk == len(want) == oracles.dense_rank_qq(rows)


@settings(max_examples=100, deadline=None)
@given(int_matrix())
def test_smith_divisibility_chain(rows):
    m = SparseMatrix.from_rows(rows, ZZ)
    factors, rnk = smith_normal_form(m)
    assert len(factors) == rnk
    assert all(f > 0 for f in factors)
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


@settings(max_examples=100, deadline=None)
@given(frac_matrix())
def test_kernel_vectors_lie_in_kernel(rows):
    m = SparseMatrix.from_rows(rows, QQ)
    basis = kernel_basis(m)
    assert len(basis) == m.ncols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.mul_vec(v))


@settings(max_examples=60, deadline=None)
@given(int_matrix(max_dim=4), st.sampled_from([3, 5]))
def test_kernel_count_gf(rows, p):
    m = SparseMatrix.from_rows(rows, GF(p))
    basis = kernel_basis(m)
    assert len(basis) == m.ncols - oracles.dense_rank_mod(rows, p)
    for v in basis:
        assert all(x == 0 for x in m.mul_vec(v))


@settings(max_examples=60, deadline=None)
@given(int_matrix(max_dim=5), int_matrix(max_dim=5), small_int)
def test_linearity_of_add_scale(a_rows, b_rows, c):
    nrows = len(a_rows)
    ncols = len(a_rows[0]) if a_rows else 0
    b_rows = [[b_rows[i][j] if i < len(b_rows) and j < len(b_rows[i]) else 0
               for j in range(ncols)] for i in range(nrows)]
    a = SparseMatrix.from_rows(a_rows, ZZ)
    b = SparseMatrix.from_rows(b_rows, ZZ)
    left = a.add(b.scale(c)).to_dense()
    want = [[a_rows[i][j] + c * b_rows[i][j] for j in range(ncols)]
            for i in range(nrows)]
    assert left == want


def test_matmul_matches_dense():
    a = SparseMatrix.from_rows([[1, 2], [0, -3], [4, 0]], ZZ)
    b = SparseMatrix.from_rows([[2, 0, 1], [1, -1, 0]], ZZ)
    assert a.matmul(b).to_dense() == [[4, -2, 1], [-3, 3, 0], [8, 0, 4]]


def test_invert_roundtrip():
    m = SparseMatrix.from_rows([[2, 1], [1, 1]], QQ)
    inv = invert(m)
    assert m.matmul(inv).to_dense() == SparseMatrix.identity(2, QQ).to_dense()


def test_invert_rejects_singular():
    m = SparseMatrix.from_rows([[1, 2], [2, 4]], QQ)
    with pytest.raises(Exception):
        invert(m)


def test_gf_coerces_fractions():
    f = GF(7)
    assert f.coerce(Fraction(1, 2)) == 4
    with pytest.raises(DomainError):
        f.coerce(Fraction(1, 7))


def test_zero_and_identity_shapes():
    z = SparseMatrix.zero(3, 2, QQ)
    assert z.nnz == 0 and z.nrows == 3 and z.ncols == 2
    assert rank(z) == 0
    assert rank(SparseMatrix.identity(4, GF(3))) == 4


def test_stacking():
    a = SparseMatrix.from_rows([[1, 0]], ZZ)
    b = SparseMatrix.from_rows([[0, 2]], ZZ)
    assert SparseMatrix.vstack([a, b]).to_dense() == [[1, 0], [0, 2]]
    assert SparseMatrix.hstack([a, b]).to_dense() == [[1, 0, 0, 2]]


def test_transpose_rank_invariance():
    rows = [[0, 1, 2], [3, 0, 0]]
    m = SparseMatrix.from_rows(rows, QQ)
    assert rank(m) == rank(m.transpose()) == 2

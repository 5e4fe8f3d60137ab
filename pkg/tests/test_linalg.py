"""Exact linear algebra: elimination, kernels, and tensor index plumbing."""

from hypothesis import given, settings
from hypothesis import strategies as st

from wqhopf.linalg import (LinalgError, eye, flip_matrix, from_int_rows,
                           inverse, is_identity, kron, matmul, matmul_chain,
                           max_deviation, msub, nullspace, rank, reshape_vector,
                           rref, smul, solve, transpose, zeros)
from wqhopf.scalars import Cyc

import pytest

ONE = Cyc.rational(1)

entries = st.integers(min_value=-3, max_value=3)


def _mat(rows):
    return from_int_rows(rows, ONE)


@st.composite
def int_mats(draw, max_n=4):
    r = draw(st.integers(1, max_n))
    c = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c),
                         min_size=r, max_size=r))
    return _mat(rows)


@given(int_mats())
@settings(max_examples=80, deadline=None)
def test_rank_bounds_and_transpose(M):
    r = rank(M)
    assert 0 <= r <= min(len(M), len(M[0]))
    assert rank(transpose(M)) == r


@given(int_mats())
@settings(max_examples=80, deadline=None)
def test_rank_nullity(M):
    nc = len(M[0])
    ker = nullspace(M)
    assert rank(M) + len(ker) == nc
    for v in ker:
        img = matmul(M, [[x] for x in v])
        assert max_deviation(img) == 0.0


@given(int_mats())
@settings(max_examples=80, deadline=None)
def test_solve_consistency(M):
    # A x = A e is always consistent; solution must reproduce the image
    nc = len(M[0])
    x = [[ONE.rational(i + 1)] for i in range(nc)]
    B = matmul(M, x)
    sol = solve(M, B)
    assert sol is not None
    assert max_deviation(msub(matmul(M, sol), B)) == 0.0


def test_solve_inconsistent_returns_none():
    A = _mat([[1, 0], [1, 0]])
    B = _mat([[1], [2]])
    assert solve(A, B) is None


def test_inverse_round_trip():
    M = _mat([[2, 1], [1, 1]])
    assert is_identity(matmul(M, inverse(M)))
    with pytest.raises(LinalgError):
        inverse(_mat([[1, 2], [2, 4]]))


def test_rref_pivots_are_unit_columns():
    R, piv = rref(_mat([[1, 2, 3], [2, 4, 7]]))
    for k, c in enumerate(piv):
        col = [R[i][c] for i in range(len(R))]
        assert col[k] == ONE
        assert all(x.is_zero() for i, x in enumerate(col) if i != k)


@given(int_mats(max_n=3), int_mats(max_n=3))
@settings(max_examples=60, deadline=None)
def test_kron_mixed_product(A, B):
    # (A kron B)(A' kron B') = AA' kron BB' with square factors
    n, m = len(A[0]), len(B[0])
    A2 = [row[:] for row in A][: len(A)]
    if len(A) != n or len(B) != m:
        return
    lhs = matmul(kron(A, B), kron(A, B))
    rhs = kron(matmul(A, A), matmul(B, B))
    assert max_deviation(msub(lhs, rhs)) == 0.0


def test_flip_matrix_swaps_factors():
    A = _mat([[1, 2], [3, 4]])
    B = _mat([[0, 1], [1, 1], [2, 0]])
    # flip on the codomain (2 kron 3) against flip on the domain (2 kron 2)
    lhs = matmul(flip_matrix(2, 3, ONE), kron(A, B))
    rhs = matmul(kron(B, A), flip_matrix(2, 2, ONE))
    assert max_deviation(msub(lhs, rhs)) == 0.0
    assert is_identity(matmul(flip_matrix(3, 2, ONE), flip_matrix(2, 3, ONE)))


def test_reshape_vector_row_major():
    v = [ONE.rational(k) for k in (1, 2, 3, 4, 5, 6)]
    M = reshape_vector(v, 2, 3)
    assert M[0][2] == ONE.rational(3)
    assert M[1][0] == ONE.rational(4)


def test_zeros_eye_shapes():
    Z = zeros(2, 3, ONE)
    assert len(Z) == 2 and len(Z[0]) == 3
    assert max_deviation(Z) == 0.0
    assert is_identity(eye(4, ONE))
    assert max_deviation(msub(smul(ONE.rational(2), eye(2, ONE)),
                              _mat([[2, 0], [0, 2]]))) == 0.0

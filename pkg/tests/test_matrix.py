import pytest

from core.errors import DomainError, ShapeError
from linalg.fields import PrimeField
from linalg.matrix import Mat, column_space, determinant, inverse, kernel_basis, rank, row_reduce, solve


def test_row_reduce_and_rank(Q):
    M = Mat.from_ints(Q, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    R, pivots = row_reduce(M)
    assert pivots == [0, 1]
    assert R == Mat.from_ints(Q, [[1, 0, 1], [0, 1, 1], [0, 0, 0]])
    assert rank(M) == 2
    assert rank(Mat.zeros(Q, 3, 4)) == 0
    assert rank(Mat.identity(Q, 4)) == 4


def test_rank_depends_on_field():
    M = [[1, 1], [1, 3]]
    assert rank(Mat.from_ints(PrimeField(2), M)) == 1
    assert rank(Mat.from_ints(PrimeField(5), M)) == 2


def test_kernel_basis(Q):
    M = Mat.from_ints(Q, [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    basis = kernel_basis(M)
    assert len(basis) == 1
    assert M.apply(basis[0]) == [Q.zero] * 3
    assert len(kernel_basis(Mat.zeros(Q, 2, 3))) == 3
    assert kernel_basis(Mat.identity(Q, 3)) == []


def test_rank_nullity(Q, rng):
    for m, n in [(2, 5), (5, 2), (4, 4)]:
        M = Mat.random(Q, m, n, rng)
        kernel = kernel_basis(M)
        assert rank(M) + len(kernel) == n
        for x in kernel:
            assert all(Q.is_zero(v) for v in M.apply(x))


def test_inverse_and_determinant(GF, rng):
    M = Mat.random_invertible(GF, 4, rng)
    assert M @ inverse(M) == Mat.identity(GF, 4)
    assert GF.mul(determinant(M), determinant(inverse(M))) == GF.one
    A = Mat.random(GF, 4, 4, rng)
    assert determinant(A @ M) == GF.mul(determinant(A), determinant(M))


def test_determinant_examples(Q):
    assert determinant(Mat.from_ints(Q, [[0, 1], [1, 0]])) == -1
    assert determinant(Mat.from_ints(Q, [[1, 2], [2, 4]])) == 0
    assert determinant(Mat.from_ints(Q, [[2, 1, 0], [0, 3, 5], [0, 0, 4]])) == 24


def test_singular_inverse(Q):
    with pytest.raises(DomainError):
        inverse(Mat.from_ints(Q, [[1, 2], [2, 4]]))
    with pytest.raises(ShapeError):
        inverse(Mat.zeros(Q, 2, 3))


def test_solve(Q):
    A = Mat.from_ints(Q, [[1, 1], [1, -1], [2, 0]])
    B = Mat.from_ints(Q, [[3], [1], [4]])
    assert solve(A, B) == Mat.from_ints(Q, [[2], [1]])
    with pytest.raises(DomainError):
        solve(A, Mat.from_ints(Q, [[3], [1], [5]]))


def test_column_space(Q):
    M = Mat.from_ints(Q, [[1, 2, 0], [0, 0, 1], [1, 2, 1]])
    C = column_space(M)
    assert C == M.select_columns([0, 2])


def test_upper_triangular_sample(Q, rng):
    U = Mat.random_upper_triangular(Q, 4, rng)
    assert U.is_upper_triangular()
    assert rank(U) == 4


def test_shape_errors(Q):
    with pytest.raises(ShapeError):
        Mat.zeros(Q, 2, 3) @ Mat.zeros(Q, 2, 3)
    with pytest.raises(ShapeError):
        Mat(Q, [[Q.one, Q.zero], [Q.one]])
    with pytest.raises(ShapeError):
        Mat.zeros(Q, 2, 2).hstack(Mat.zeros(Q, 3, 1))

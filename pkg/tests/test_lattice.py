import random

from app.arith.lattice import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    is_hermite_normal_form,
)


def test_identity_is_its_own_normal_form():
    I = IntMatrix.identity(2)
    H, U = hermite_normal_form(I)
    assert H == I and U == I


def test_column_gcd():
    H, U = hermite_normal_form(IntMatrix.from_rows([[4], [6]]))
    assert H.rows == ((2,), (0,))
    assert U @ IntMatrix.from_rows([[4], [6]]) == H
    assert abs(determinant(U)) == 1


def _random_unimodular(rng: random.Random, n: int) -> IntMatrix:
    M = IntMatrix.identity(n)
    for _ in range(12):
        i, j = rng.sample(range(n), 2)
        E = [[int(r == c) for c in range(n)] for r in range(n)]
        E[i][j] = rng.randint(-3, 3)
        M = IntMatrix.from_rows(E) @ M
    return M


def test_unimodular_matrix_reduces_to_identity():
    rng = random.Random(11)
    for _ in range(10):
        M = _random_unimodular(rng, 4)
        assert abs(determinant(M)) == 1
        H, U = hermite_normal_form(M)
        assert H == IntMatrix.identity(4)
        assert U @ M == H
        assert abs(determinant(U)) == 1


def test_random_matrices_satisfy_normal_form_shape():
    rng = random.Random(3)
    for _ in range(20):
        M = IntMatrix.from_rows(
            [[rng.randint(-9, 9) for _ in range(3)] for _ in range(4)]
        )
        H, U = hermite_normal_form(M)
        assert is_hermite_normal_form(H)
        assert U @ M == H
        assert abs(determinant(U)) == 1


def test_determinant():
    assert determinant(IntMatrix.from_rows([[2, 1], [7, 4]])) == 1
    assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0

import random
from fractions import Fraction

import pytest
import sympy

from zecert.matrices import QMatrix, adjoint, kernel_basis, kron, rank, trace
from zecert.scalars import ONE, ZERO, qs


def rnd_matrix(rng, m, n, spread=5):
    return QMatrix(
        [
            [
                qs(
                    Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 4)),
                    Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 4)),
                )
                for _ in range(n)
            ]
            for _ in range(m)
        ]
    )


def to_sympy(M):
    return sympy.Matrix(
        M.m, M.n, lambda i, j: sympy.Rational(M[i, j].re) + sympy.I * sympy.Rational(M[i, j].im)
    )


def test_rank_against_sympy():
    rng = random.Random(21)
    for _ in range(100):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        M = rnd_matrix(rng, m, n, spread=3)
        assert M.rank() == to_sympy(M).rank()


def test_kernel_vectors_annihilate():
    rng = random.Random(22)
    for _ in range(120):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        M = rnd_matrix(rng, m, n, spread=3)
        kern = M.kernel_basis()
        assert len(kern) == n - M.rank()
        for v in kern:
            col = QMatrix.column(list(v))
            assert (M @ col).is_zero()


def test_solve_and_inverse():
    rng = random.Random(23)
    solved = 0
    for _ in range(80):
        n = rng.randrange(1, 5)
        A = rnd_matrix(rng, n, n, spread=3)
        x = rnd_matrix(rng, n, 1, spread=3)
        b = A @ x
        sol = A.solve([b[i, 0] for i in range(n)])
        if sol is not None:
            assert A @ QMatrix.column(list(sol)) == b
            solved += 1
        if A.rank() == n:
            inv = A.inverse()
            assert A @ inv == QMatrix.identity(n)
            assert inv @ A == QMatrix.identity(n)
    assert solved > 40


def test_rref_is_idempotent():
    rng = random.Random(24)
    for _ in range(60):
        M = rnd_matrix(rng, rng.randrange(1, 5), rng.randrange(1, 5), spread=3)
        pivots, R = M.rref()
        pivots2, R2 = R.rref()
        assert R2 == R
        assert pivots2 == pivots
        assert len(pivots) == M.rank()


def test_kron_mixed_product():
    rng = random.Random(25)
    for _ in range(40):
        A = rnd_matrix(rng, 2, 3, 2)
        C = rnd_matrix(rng, 3, 2, 2)
        B = rnd_matrix(rng, 2, 2, 2)
        D = rnd_matrix(rng, 2, 2, 2)
        assert kron(A, B) @ kron(C, D) == kron(A @ C, B @ D)


def test_adjoint_and_trace_laws():
    rng = random.Random(26)
    for _ in range(60):
        A = rnd_matrix(rng, 3, 3)
        B = rnd_matrix(rng, 3, 3)
        assert adjoint(A @ B) == adjoint(B) @ adjoint(A)
        assert adjoint(adjoint(A)) == A
        assert trace(A @ B) == trace(B @ A)
        assert trace(A + B) == trace(A) + trace(B)
        assert (A @ B).transpose() == B.transpose() @ A.transpose()


def test_psd_certificate_on_gram_matrices():
    rng = random.Random(27)
    for _ in range(60):
        n = rng.randrange(1, 5)
        B = rnd_matrix(rng, rng.randrange(1, 5), n, spread=3)
        G = adjoint(B) @ B
        ok, _ = G.psd_certificate()
        assert ok
        assert G.is_psd()
        # shifting below the smallest eigenvalue must break positivity
        shifted = G - QMatrix.identity(n).scale(qs(trace(G).re + 1))
        assert not shifted.is_psd()


def test_psd_factor_reconstructs():
    rng = random.Random(28)
    for _ in range(40):
        n = rng.randrange(1, 4)
        B = rnd_matrix(rng, n, n, spread=2)
        G = adjoint(B) @ B
        F = G.psd_factor()
        assert adjoint(F) @ F == G


def test_non_hermitian_is_not_psd():
    M = QMatrix([["0", "1"], ["0", "0"]])
    assert not M.is_psd()
    with pytest.raises(ValueError):
        QMatrix([["1", "2"], ["3"]])


def test_block_and_vec_round_trips():
    rng = random.Random(29)
    for _ in range(40):
        m, n = rng.randrange(1, 4), rng.randrange(1, 4)
        M = rnd_matrix(rng, m, n)
        assert QMatrix.unvec(M.vec(), m, n) == M
    A = rnd_matrix(rng, 2, 2)
    B = rnd_matrix(rng, 3, 3)
    BD = QMatrix.block_diag(A, B)
    assert BD.shape == (5, 5)
    assert BD.submatrix(range(2), range(2)) == A
    assert BD.submatrix(range(2, 5), range(2, 5)) == B


def test_module_level_helpers_match_methods():
    rng = random.Random(30)
    M = rnd_matrix(rng, 3, 4)
    assert rank(M) == M.rank()
    kern = kernel_basis(M)
    for col in kern:
        assert (M @ col).is_zero()

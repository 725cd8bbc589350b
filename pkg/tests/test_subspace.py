import random
from fractions import Fraction

import pytest

from zecert.matrices import QMatrix, adjoint, trace
from zecert.scalars import ONE, ZERO, qs
from zecert.subspace import OperatorSubspace, direct_sum_graph, from_spanning_set


def rnd_matrix(rng, n, spread=4):
    return QMatrix(
        [
            [
                qs(
                    Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 3)),
                    Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 3)),
                )
                for _ in range(n)
            ]
            for _ in range(n)
        ]
    )


def rnd_subspace(rng, n, gens=None):
    count = gens if gens is not None else rng.randrange(1, n * n + 2)
    return OperatorSubspace.span([rnd_matrix(rng, n) for _ in range(count)])


def test_perp_involution_and_dimension():
    # the double complement returns the subspace and dimensions pair up
    rng = random.Random(61)
    for _ in range(1000):
        n = rng.randrange(2, 4)
        S = rnd_subspace(rng, n)
        P = S.bilinear_perp()
        assert S.dim + P.dim == n * n
        assert P.bilinear_perp() == S


def test_perp_pairing_vanishes():
    rng = random.Random(62)
    for _ in range(100):
        n = rng.randrange(2, 4)
        S = rnd_subspace(rng, n)
        P = S.bilinear_perp()
        for A in S.basis():
            for B in P.basis():
                assert trace(A @ B).is_zero()


def test_span_idempotence_and_containment():
    rng = random.Random(63)
    for _ in range(100):
        n = rng.randrange(2, 4)
        mats = [rnd_matrix(rng, n) for _ in range(rng.randrange(1, 5))]
        S = OperatorSubspace.span(mats)
        for A in mats:
            assert S.contains(A)
        combo = QMatrix.zeros(n)
        for A in mats:
            combo = combo + A.scale(qs(rng.randrange(-3, 4)))
        assert S.contains(combo)
        assert OperatorSubspace.span(S.basis()) == S


def test_transforms_are_involutions():
    rng = random.Random(64)
    for _ in range(60):
        S = rnd_subspace(rng, 3)
        assert S.transpose_space().transpose_space() == S
        assert S.conj_space().conj_space() == S
        assert S.adjoint_space().adjoint_space() == S
        assert S.adjoint_space() == S.conj_space().transpose_space()
        assert S.is_symmetric() == (S.adjoint_space() == S)


def test_tensor_dimensions_multiply():
    rng = random.Random(65)
    for _ in range(30):
        S = rnd_subspace(rng, 2, gens=rng.randrange(1, 4))
        T = rnd_subspace(rng, 2, gens=rng.randrange(1, 4))
        prod = S.tensor(T)
        assert prod.ambient == 4
        assert prod.dim == S.dim * T.dim


def test_commutant_commutes_and_is_algebra():
    rng = random.Random(66)
    for _ in range(40):
        S = rnd_subspace(rng, 3, gens=rng.randrange(1, 3))
        C = S.commutant()
        for A in S.basis():
            for X in C.basis():
                assert A @ X == X @ A
        assert C.is_algebra()
        assert C.contains_identity()


def test_algebra_detection():
    diag = OperatorSubspace.span(
        [QMatrix.diag([1, 0, 0]), QMatrix.diag([0, 1, 0]), QMatrix.diag([0, 0, 1])]
    )
    assert diag.is_algebra()
    assert diag.is_noncommutative_graph()
    # span{I, E01} is an algebra but not symmetric
    E01 = QMatrix([["0", "1"], ["0", "0"]])
    S = OperatorSubspace.span([QMatrix.identity(2), E01])
    assert S.is_algebra()
    assert not S.is_symmetric()
    assert not S.is_noncommutative_graph()
    # span{E01} is not an algebra in the unital sense
    assert not OperatorSubspace.span([E01]).contains_identity()


def test_full_and_zero_and_scalar_spaces():
    full = OperatorSubspace.full(3)
    assert full.dim == 9
    assert full.bilinear_perp().dim == 0
    z = OperatorSubspace.zero(3)
    assert z.dim == 0
    assert z.bilinear_perp() == full
    s = OperatorSubspace.scalar_multiples_of_identity(3)
    assert s.dim == 1
    assert s.is_noncommutative_graph()
    assert s.commutant() == full


def test_direct_sum_graph_shape():
    rng = random.Random(67)
    for _ in range(20):
        n1, n2 = rng.randrange(2, 4), rng.randrange(2, 4)
        S = rnd_subspace(rng, n1, gens=2)
        T = rnd_subspace(rng, n2, gens=2)
        G = direct_sum_graph(S, T)
        assert G.ambient == n1 + n2
        assert G.dim == S.dim + T.dim + 2 * n1 * n2
        # diagonal blocks embed, corners are free
        for A in S.basis():
            big = QMatrix.block_diag(A, QMatrix.zeros(n2))
            assert G.contains(big)
    sym = direct_sum_graph(
        OperatorSubspace.scalar_multiples_of_identity(2),
        OperatorSubspace.scalar_multiples_of_identity(2),
    )
    assert sym.is_symmetric() and sym.contains_identity()


def test_from_spanning_set_infers_ambient():
    mats = [QMatrix.identity(2)]
    S = from_spanning_set(mats)
    assert S.ambient == 2 and S.dim == 1
    with pytest.raises(ValueError):
        from_spanning_set([])
    assert from_spanning_set([], ambient=2).dim == 0

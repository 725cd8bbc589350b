import random
from fractions import Fraction

import pytest

from zecert.channel import (
    KrausChannel,
    apply_channel,
    choi_rank,
    complementary,
    dephasing_channel,
    direct_sum,
    graph_from_gram,
    identity_channel,
    noncommutative_graph,
    outputs_orthogonal,
    random_channel,
    random_rank_one_kraus_channel,
    tensor,
)
from zecert.matrices import QMatrix, adjoint
from zecert.scalars import ONE, ZERO, qs
from zecert.subspace import OperatorSubspace


def rnd_vector(rng, n, spread=3):
    return [
        qs(
            Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 3)),
            Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 3)),
        )
        for _ in range(n)
    ]


def test_construction_demands_completeness():
    V = QMatrix([["1", "0"], ["0", "0"]])
    with pytest.raises(ValueError):
        KrausChannel(2, 2, (V,))
    # two halves of a projective measurement complete each other
    W = QMatrix([["0", "0"], ["0", "1"]])
    ch = KrausChannel(2, 2, (V, W))
    assert ch.kraus_count == 2


def test_graph_is_symmetric_and_unital():
    # the span of all V_j^H V_k contains I and is closed under adjoints
    rng = random.Random(91)
    for _ in range(200):
        n = rng.randrange(2, 5)
        ch = random_channel(n, rng.randrange(1, 4), rng)
        G = noncommutative_graph(ch)
        assert G.ambient == n
        assert G.contains_identity()
        assert G.is_symmetric()
        assert G.is_noncommutative_graph()


def test_dyad_kill_matches_support_orthogonality():
    # the complementary channel annihilates |phi><psi| exactly when the
    # channel outputs on phi and psi have orthogonal supports
    rng = random.Random(92)
    for _ in range(200):
        n = rng.randrange(2, 4)
        ch = random_channel(n, rng.randrange(1, 4), rng)
        phi = rnd_vector(rng, n)
        psi = rnd_vector(rng, n)
        if all(v.is_zero() for v in phi) or all(v.is_zero() for v in psi):
            continue
        x = QMatrix.column(phi)
        y = QMatrix.column(psi)
        out_phi = apply_channel(ch, x @ adjoint(x))
        out_psi = apply_channel(ch, y @ adjoint(y))
        supports_orthogonal = (out_phi @ out_psi).is_zero()
        dyad_killed = apply_channel(complementary(ch), x @ adjoint(y)).is_zero()
        assert outputs_orthogonal(ch, phi, psi) == supports_orthogonal
        assert dyad_killed == supports_orthogonal


def test_orthogonal_states_through_identity_channel():
    ch = identity_channel(3)
    e0 = [ONE, ZERO, ZERO]
    e1 = [ZERO, ONE, ZERO]
    assert outputs_orthogonal(ch, e0, e1)
    assert not outputs_orthogonal(ch, e0, e0)


def test_complementary_graph_relation():
    # complement of the complement acts like the original on dyad kills
    rng = random.Random(93)
    for _ in range(20):
        n = rng.randrange(2, 4)
        ch = random_channel(n, 2, rng)
        comp = complementary(ch)
        assert comp.dim_in == n
        assert comp.dim_out == ch.kraus_count
        # both presentations give the same graph
        assert noncommutative_graph(comp).bilinear_perp().ambient == n


def test_apply_channel_is_trace_preserving():
    rng = random.Random(94)
    for _ in range(40):
        n = rng.randrange(2, 4)
        ch = random_channel(n, rng.randrange(1, 4), rng)
        v = rnd_vector(rng, n)
        x = QMatrix.column(v)
        rho = x @ adjoint(x)
        out = apply_channel(ch, rho)
        assert out.trace() == rho.trace()
        assert out.is_hermitian()


def test_tensor_graph_cache_matches_brute_force():
    rng = random.Random(95)
    for _ in range(6):
        c1 = random_channel(rng.randrange(2, 4), rng.randrange(1, 3), rng)
        c2 = random_channel(rng.randrange(2, 4), rng.randrange(1, 3), rng)
        t = tensor(c1, c2)
        assert noncommutative_graph(t) == graph_from_gram(t)


def test_direct_sum_graph_cache_matches_brute_force():
    rng = random.Random(96)
    for _ in range(6):
        c1 = random_channel(rng.randrange(2, 4), rng.randrange(1, 3), rng)
        c2 = random_channel(rng.randrange(2, 4), rng.randrange(1, 3), rng)
        ds = direct_sum(c1, c2)
        assert noncommutative_graph(ds) == graph_from_gram(ds)


def test_dephasing_graph_is_diagonal_algebra():
    for n in (2, 3, 4):
        G = noncommutative_graph(dephasing_channel(n))
        assert G.dim == n
        assert G.is_algebra()
        diag = OperatorSubspace.span(
            [QMatrix.diag([1 if k == t else 0 for k in range(n)]) for t in range(n)]
        )
        assert G == diag


def test_identity_channel_graph_is_scalar():
    for n in (2, 3):
        G = noncommutative_graph(identity_channel(n))
        assert G == OperatorSubspace.scalar_multiples_of_identity(n)


def test_rank_one_kraus_channels_are_entanglement_breaking_shape():
    rng = random.Random(97)
    for _ in range(20):
        n = rng.randrange(2, 4)
        ch = random_rank_one_kraus_channel(n, rng)
        for V in ch.kraus:
            assert V.rank() == 1


def test_choi_rank_counts_independent_kraus():
    ch = dephasing_channel(3)
    assert choi_rank(ch) == 3
    assert choi_rank(identity_channel(4)) == 1

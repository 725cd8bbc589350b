import random
from fractions import Fraction

import pytest

from zecert.certificates import verify_certificate
from zecert.matrices import QMatrix, trace
from zecert.rank1 import (
    RATIONALIZE_RESIDUAL_GATE,
    DiagonalParametrization,
    heuristic_search,
    is_transitive,
    minor_ideal_emptiness,
    outer_product,
    perp_reduction_certificate,
    perp_witness_certificate,
    rank_one_decision_n2,
    rank_one_in_perp_of,
    rank_one_witness_certificate,
    rationalize_and_verify,
    staircase_certificate,
    tensor_nontransitivity,
    transformed_certificate,
    verify_rank_one_in,
)
from zecert.scalars import ONE, ZERO, qs
from zecert.subspace import OperatorSubspace


def rnd_scalar(rng, spread=4):
    return qs(
        Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 3)),
        Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 3)),
    )


def rnd_matrix(rng, n, spread=4):
    return QMatrix([[rnd_scalar(rng, spread) for _ in range(n)] for _ in range(n)])


def rnd_singular_2x2(rng):
    # a dyad has determinant zero
    x = [rnd_scalar(rng) for _ in range(2)]
    y = [rnd_scalar(rng) for _ in range(2)]
    if all(v.is_zero() for v in x):
        x[0] = ONE
    if all(v.is_zero() for v in y):
        y[0] = ONE
    return outer_product(x, y)


def det2(M):
    return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]


def test_n2_decision_against_determinant_oracle():
    # dim 0: no nonzero element at all; dim 1: rank one iff det of the
    # generator vanishes; dim >= 2: a binary quadratic over an
    # algebraically closed field always has a projective zero
    rng = random.Random(71)
    for trial in range(500):
        kind = trial % 5
        if kind == 0:
            gens = []
        elif kind == 1:
            gens = [rnd_matrix(rng, 2)]
        elif kind == 2:
            gens = [rnd_singular_2x2(rng)]
        else:
            gens = [rnd_matrix(rng, 2) for _ in range(rng.randrange(2, 5))]
        W = OperatorSubspace.span(gens) if gens else OperatorSubspace.zero(2)
        cert = rank_one_decision_n2(W)
        assert cert.is_decided()
        assert verify_certificate(cert), (trial, cert.strategy)
        if W.dim == 0:
            expect = "NO_RANK_ONE"
        elif W.dim == 1:
            expect = "RANK_ONE_FOUND" if det2(W.basis()[0]).is_zero() else "NO_RANK_ONE"
        else:
            expect = "RANK_ONE_FOUND"
        assert cert.verdict == expect, (trial, W.dim)


def test_rank_one_witness_certificates():
    rng = random.Random(72)
    for _ in range(60):
        n = rng.randrange(2, 4)
        x = [rnd_scalar(rng) for _ in range(n)]
        y = [rnd_scalar(rng) for _ in range(n)]
        if all(v.is_zero() for v in x) or all(v.is_zero() for v in y):
            continue
        W = OperatorSubspace.span([outer_product(x, y), rnd_matrix(rng, n)])
        assert verify_rank_one_in(W, x, y)
        cert = rank_one_witness_certificate(W, x, y)
        assert cert.verdict == "RANK_ONE_FOUND"
        assert verify_certificate(cert)


def test_perp_witness_route():
    # x y^T annihilating every generator under the trace pairing
    L = OperatorSubspace.span([QMatrix.diag([1, 1]), QMatrix.diag([1, -1])])
    x = [ONE, ZERO]
    y = [ZERO, ONE]
    assert rank_one_in_perp_of(L, x, y)
    cert = perp_witness_certificate(L, x, y)
    assert cert.verdict == "NOT_TRANSITIVE"
    assert verify_certificate(cert)


def test_rationalize_never_promotes_noise():
    # the gate: candidates at or above residual 1e-3 stay undecided,
    # whatever the vectors say
    rng = random.Random(73)
    W = OperatorSubspace.scalar_multiples_of_identity(2)
    for _ in range(200):
        candidate = {
            "x": [rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1) for _ in range(2)],
            "y": [rng.uniform(-1, 1) + 1j * rng.uniform(-1, 1) for _ in range(2)],
            "residual": 10 ** rng.uniform(-3, 2),
        }
        assert candidate["residual"] >= RATIONALIZE_RESIDUAL_GATE
        cert = rationalize_and_verify(W, candidate)
        assert cert.verdict == "UNDECIDED"
    # even below the gate, the exact re-check is what decides: the
    # scalar space has no rank-one element, so noise cannot pass
    for _ in range(100):
        candidate = {
            "x": [rng.uniform(-1, 1) for _ in range(2)],
            "y": [rng.uniform(-1, 1) for _ in range(2)],
            "residual": 10 ** rng.uniform(-9, -3.01),
        }
        cert = rationalize_and_verify(W, candidate)
        assert cert.verdict != "RANK_ONE_FOUND"


def test_heuristic_search_is_deterministic():
    rng = random.Random(74)
    W = OperatorSubspace.span([rnd_matrix(rng, 3) for _ in range(3)])
    a = heuristic_search(W, seed=9, iterations=25, tolerance=1e-18)
    b = heuristic_search(W, seed=9, iterations=25, tolerance=1e-18)
    assert a["x"] == b["x"] and a["y"] == b["y"] and a["residual"] == b["residual"]


def test_staircase_certificate_on_shifted_diagonals():
    # one shared parameter per off-main diagonal: any nonzero element
    # has an outermost diagonal with two equal entries, hence rank 2
    E = QMatrix([["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]])
    F = E.transpose()
    P = DiagonalParametrization.from_generators([E, F])
    cert = staircase_certificate(P)
    assert cert.verdict == "NO_RANK_ONE"
    assert verify_certificate(cert)
    # untying the entries reintroduces dyads and the staircase refuses
    G = QMatrix([["0", "1", "0"], ["0", "0", "0"], ["0", "0", "0"]])
    H = QMatrix([["0", "0", "0"], ["0", "0", "1"], ["0", "0", "0"]])
    refused = staircase_certificate(DiagonalParametrization.from_generators([G, H]))
    assert refused.verdict == "UNDECIDED"


def test_staircase_refuses_unstructured_spaces():
    rng = random.Random(75)
    gens = [rnd_matrix(rng, 3) for _ in range(2)]
    with pytest.raises(ValueError):
        DiagonalParametrization.from_generators(gens)


def test_minor_ideal_on_scalar_space():
    W = OperatorSubspace.scalar_multiples_of_identity(2)
    cert = minor_ideal_emptiness(W)
    assert cert.verdict == "NO_RANK_ONE"
    assert verify_certificate(cert)
    # a space containing an explicit dyad cannot be empty
    W2 = OperatorSubspace.span([outer_product([ONE, ZERO], [ONE, ONE])])
    cert2 = minor_ideal_emptiness(W2)
    assert cert2.verdict == "RANK_ONE_FOUND"
    assert verify_certificate(cert2)


def test_perp_reduction_flips_the_question():
    L = OperatorSubspace.scalar_multiples_of_identity(2).bilinear_perp()
    inner = minor_ideal_emptiness(L.bilinear_perp())
    cert = perp_reduction_certificate(L, inner)
    assert cert.verdict == "TRANSITIVE"
    assert verify_certificate(cert)


def test_transforms_preserve_verdicts():
    x = [ONE, qs(2)]
    y = [qs(3), -ONE]
    W = OperatorSubspace.span([outer_product(x, y), QMatrix.identity(2)])
    base = rank_one_witness_certificate(W, x, y)
    for transform in ("transpose", "conjugate", "adjoint"):
        cert = transformed_certificate(base, transform)
        assert cert.verdict == base.verdict
        assert verify_certificate(cert), transform


def test_tensor_nontransitivity_demands_exact_zeros():
    L = OperatorSubspace.scalar_multiples_of_identity(2)
    A = QMatrix.identity(2)
    F = QMatrix.identity(2)
    # Tr(F I A I^T) = 2 != 0: the pair check must refuse
    with pytest.raises(ValueError):
        tensor_nontransitivity(L, L, A, F)
    # a traceless pair passes all four generator pair checks
    A2 = QMatrix([["0", "1"], ["0", "0"]])
    cert = tensor_nontransitivity(L, L, A2, F)
    assert cert.verdict == "NOT_TRANSITIVE"
    assert cert.budget["pair_checks"] == 1
    assert verify_certificate(cert)


def test_is_transitive_on_decidable_families():
    rng = random.Random(76)
    # full ambient space: trivially transitive
    cert = is_transitive(OperatorSubspace.full(2))
    assert cert.verdict == "TRANSITIVE" and cert.strategy == "zero_perp"
    # diagonal algebra in M_2: perp contains the dyad E01
    diag = OperatorSubspace.span([QMatrix.diag([1, 0]), QMatrix.diag([0, 1])])
    cert = is_transitive(diag)
    assert cert.verdict == "NOT_TRANSITIVE"
    assert verify_certificate(cert)
    # random ambient-2 subspaces always decide
    for _ in range(40):
        W = OperatorSubspace.span(
            [rnd_matrix(rng, 2) for _ in range(rng.randrange(1, 4))]
        )
        cert = is_transitive(W)
        assert cert.is_decided()
        assert verify_certificate(cert)

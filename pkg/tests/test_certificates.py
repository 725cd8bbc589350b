import random
from fractions import Fraction

import pytest

from zecert.certificates import (
    Certificate,
    dec_matrix,
    dec_vector,
    enc_matrix,
    enc_subspace,
    enc_vector,
    register_verifier,
    subspace_subject,
    verify_certificate,
)
from zecert.matrices import QMatrix
from zecert.rank1 import (
    is_transitive,
    minor_ideal_emptiness,
    outer_product,
    rank_one_witness_certificate,
)
from zecert.scalars import ONE, ZERO, qs
from zecert.subspace import OperatorSubspace


def rnd_matrix(rng, n):
    return QMatrix(
        [
            [qs(Fraction(rng.randrange(-4, 5), rng.randrange(1, 3)), rng.randrange(-2, 3)) for _ in range(n)]
            for _ in range(n)
        ]
    )


def test_matrix_and_vector_codecs_round_trip():
    rng = random.Random(81)
    for _ in range(60):
        M = rnd_matrix(rng, rng.randrange(1, 4))
        assert dec_matrix(enc_matrix(M)) == M
    v = [qs(1, -2), ZERO, qs(Fraction(1, 3))]
    assert list(dec_vector(enc_vector(v))) == v


def test_subspace_encoding_is_canonical():
    # two spanning sets of the same space encode identically
    rng = random.Random(82)
    for _ in range(40):
        n = rng.randrange(2, 4)
        mats = [rnd_matrix(rng, n) for _ in range(3)]
        S = OperatorSubspace.span(mats)
        shuffled = list(mats)
        rng.shuffle(shuffled)
        shuffled = [m.scale(qs(2)) for m in shuffled] + [mats[0] + mats[1]]
        T = OperatorSubspace.span(shuffled)
        assert S == T
        assert enc_subspace(S) == enc_subspace(T)


def test_certificate_record_round_trip():
    x = [ONE, qs(2)]
    y = [qs(-1), qs(0, 1)]
    W = OperatorSubspace.span([outer_product(x, y), QMatrix.identity(2)])
    cert = rank_one_witness_certificate(W, x, y)
    rec = cert.to_record()
    assert rec["kind"] == "certificate"
    back = Certificate.from_record(rec)
    assert back == cert
    assert verify_certificate(back)


def test_round_trip_through_strategies():
    fixtures = [
        minor_ideal_emptiness(OperatorSubspace.scalar_multiples_of_identity(2)),
        is_transitive(OperatorSubspace.full(2)),
        is_transitive(
            OperatorSubspace.span([QMatrix.diag([1, 0]), QMatrix.diag([0, 1])])
        ),
    ]
    for cert in fixtures:
        back = Certificate.from_record(cert.to_record())
        assert verify_certificate(back), cert.strategy


def test_tampered_witness_fails_verification():
    x = [ONE, qs(2)]
    y = [qs(-1), qs(3)]
    W = OperatorSubspace.span([outer_product(x, y)])
    cert = rank_one_witness_certificate(W, x, y)
    rec = cert.to_record()
    rec["evidence"]["x"][0] = "7/2"
    tampered = Certificate.from_record(rec)
    assert not verify_certificate(tampered)


def test_unknown_strategy_is_rejected():
    cert = Certificate(
        "NO_RANK_ONE", "made_up_strategy", subspace_subject(OperatorSubspace.full(2)), {}
    )
    assert not verify_certificate(cert)


def test_undecided_passes_vacuously():
    cert = Certificate(
        "UNDECIDED", "search_log", subspace_subject(OperatorSubspace.full(2)), {"log": {}}
    )
    assert verify_certificate(cert)


def test_verifier_registry_dispatches():
    from zecert import certificates as mod

    @register_verifier("test_only_strategy")
    def accept_marked(cert):
        return cert.evidence.get("marker") == "yes"

    try:
        subject = subspace_subject(OperatorSubspace.full(2))
        good = Certificate("NO_RANK_ONE", "test_only_strategy", subject, {"marker": "yes"})
        bad = Certificate("NO_RANK_ONE", "test_only_strategy", subject, {})
        assert verify_certificate(good)
        assert not verify_certificate(bad)
    finally:
        del mod._VERIFIERS["test_only_strategy"]

import random
from fractions import Fraction

import pytest

from zecert.certificates import verify_certificate
from zecert.channel import (
    KrausChannel,
    dephasing_channel,
    identity_channel,
    noncommutative_graph,
    random_channel,
    random_rank_one_kraus_channel,
)
from zecert.matrices import QMatrix
from zecert.scalars import ONE, ZERO, qs
from zecert.subspace import OperatorSubspace
from zecert import zeroerr
from zecert.zeroerr import (
    CBAR0,
    CLASSICAL,
    EXTREME,
    NONE_PROVEN,
    POSITIVE,
    QBAR0,
    QUANTUM,
    SearchBudget,
    UNDECIDED,
    ZERO as CAP_ZERO,
    cbar0_positive,
    cbar0_witness_check,
    commutant_analysis,
    nonsuperactivation_ledger,
    qbar0_positive,
    qbar0_witness_check,
    ri2_classify,
    superactivation_check,
)


def rnd_qubit_channel(rng):
    return random_channel(2, rng.randrange(1, 4), rng)


def basis_vec(n, k):
    return tuple(ONE if i == k else ZERO for i in range(n))


def test_qbar0_complete_rule_on_qubits():
    # ambient 2 graphs always decide: dim 1 positive, dim >= 2 zero
    rng = random.Random(101)
    budget = SearchBudget()
    for _ in range(60):
        ch = rnd_qubit_channel(rng)
        G = noncommutative_graph(ch)
        verdict = qbar0_positive(G, budget)
        assert verdict.decided
        if G.dim == 1:
            assert verdict.status == POSITIVE
            phi, psi = verdict.witness
            assert qbar0_witness_check(G, phi, psi)
        else:
            assert verdict.status == CAP_ZERO
        assert verify_certificate(verdict.certificate)


def test_identity_channel_capacities():
    G = noncommutative_graph(identity_channel(3))
    budget = SearchBudget()
    c = cbar0_positive(G, budget)
    q = qbar0_positive(G, budget)
    assert c.status == POSITIVE
    assert q.status == POSITIVE
    phi, psi = q.witness
    assert qbar0_witness_check(G, phi, psi)
    assert cbar0_witness_check(G, *c.witness)


def test_capacity_consistency_on_random_graphs():
    # q positive forces c positive; c zero forces q zero
    rng = random.Random(102)
    budget = SearchBudget()
    for _ in range(40):
        ch = random_channel(rng.randrange(2, 4), rng.randrange(1, 4), rng)
        G = noncommutative_graph(ch)
        c = cbar0_positive(G, budget)
        q = qbar0_positive(G, budget)
        if q.status == POSITIVE:
            assert c.status in (POSITIVE, UNDECIDED)
        if c.status == CAP_ZERO:
            assert q.status == CAP_ZERO
        for verdict in (c, q):
            if verdict.certificate is not None:
                assert verify_certificate(verdict.certificate)


def test_witness_checks_reject_tampering():
    G = noncommutative_graph(identity_channel(3))
    q = qbar0_positive(G, SearchBudget())
    phi, psi = q.witness
    assert qbar0_witness_check(G, phi, psi)
    bad = list(psi)
    bad[0] = bad[0] + ONE
    assert not qbar0_witness_check(G, phi, tuple(bad))


def test_diagonal_balance_matters_for_quantum_witness():
    # e1, e1 has orthogonal cross terms trivially but fails the
    # reversibility balance against a non-unital-diagonal generator
    G = OperatorSubspace.span([QMatrix.identity(2), QMatrix.diag([1, 0])])
    e1 = basis_vec(2, 0)
    assert not qbar0_witness_check(G, e1, e1)


def test_commutant_analysis_fields():
    diag = noncommutative_graph(dephasing_channel(3))
    a = commutant_analysis(diag)
    assert a.dim == 3
    assert a.commutative
    assert a.algebra
    assert not a.trivial
    scalar = OperatorSubspace.scalar_multiples_of_identity(3)
    b = commutant_analysis(scalar)
    assert b.dim == 9 and not b.commutative
    full = commutant_analysis(OperatorSubspace.full(3))
    assert full.trivial and full.dim == 1


def test_dephasing_capacities_and_ri2():
    budget = SearchBudget()
    for n in (2, 3):
        ch = dephasing_channel(n)
        r = ri2_classify(ch, budget)
        assert r.value == 1
        assert r.cbar0.status == POSITIVE
        assert r.qbar0.status == CAP_ZERO
    r2 = ri2_classify(identity_channel(2), budget)
    assert r2.value == 2
    # a channel whose graph is everything has no zero-error capacity
    rng = random.Random(103)
    for _ in range(20):
        ch = random_channel(2, 4, rng)
        if noncommutative_graph(ch).dim == 4:
            assert ri2_classify(ch, budget).value == 0
            break
    else:
        pytest.fail("no full-graph qubit channel sampled")


def test_ri2_bounds_are_ordered():
    rng = random.Random(104)
    budget = SearchBudget()
    for _ in range(25):
        ch = random_channel(rng.randrange(2, 4), rng.randrange(1, 4), rng)
        r = ri2_classify(ch, budget)
        assert 0 <= r.lower <= r.upper <= 2
        if r.value != UNDECIDED:
            assert r.lower == r.value == r.upper


def test_ledger_fires_qubit_clauses():
    rng = random.Random(105)
    for _ in range(30):
        ch = rnd_qubit_channel(rng)
        report = nonsuperactivation_ledger(ch, ch)
        clauses = {(f.clause, f.capacity) for f in report.blockers}
        assert any(c.startswith("3") and cap == CBAR0 for c, cap in clauses)
        assert any(c.startswith("4") and cap == QBAR0 for c, cap in clauses)
        for f in report.blockers:
            assert f.statement
            assert f.asymptotic


def test_ledger_fires_algebra_clause():
    ch = dephasing_channel(3)
    report = nonsuperactivation_ledger(ch, ch)
    clauses = {f.clause for f in report.blockers}
    assert any(c.endswith("C") for c in clauses)
    # the masa clause fires for the diagonal algebra with identity basis
    assert any(c.endswith("A") for c in clauses)


def test_ledger_fires_rank_one_kraus_clause():
    rng = random.Random(106)
    ch = random_rank_one_kraus_channel(3, rng)
    report = nonsuperactivation_ledger(ch, ch)
    clauses = {f.clause for f in report.blockers}
    assert any(c.endswith("F") or c.endswith("E") for c in clauses)


def test_superactivation_never_classical_for_qubits():
    rng = random.Random(107)
    budget = SearchBudget()
    for _ in range(12):
        ch = rnd_qubit_channel(rng)
        report = superactivation_check(ch, ch, budget)
        assert report.kind != CLASSICAL
        assert report.kind != EXTREME


def test_superactivation_on_dephasing_pair_is_blocked():
    budget = SearchBudget()
    report = superactivation_check(dephasing_channel(2), dephasing_channel(3), budget)
    assert report.kind == NONE_PROVEN
    tc, tq = report.tensor
    assert tq.status == CAP_ZERO
    clauses = {f.clause for f in report.blockers}
    assert clauses


def test_superactivation_report_round_trips():
    budget = SearchBudget()
    report = superactivation_check(dephasing_channel(2), dephasing_channel(2), budget)
    rec = report.to_record()
    assert rec["kind"] == "superactivation_report"
    assert len(rec["components"]) == 2
    assert len(rec["tensor"]) == 2


def test_registered_witness_must_verify():
    G = OperatorSubspace.span([QMatrix.identity(2), QMatrix.diag([1, 0])])
    zeroerr.register_qbar0_witness(G, basis_vec(2, 0), basis_vec(2, 0))
    try:
        with pytest.raises(AssertionError):
            qbar0_positive(G, SearchBudget())
    finally:
        del zeroerr._QBAR0_WITNESSES[G]

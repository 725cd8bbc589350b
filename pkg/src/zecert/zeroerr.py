"""Positivity of one-shot zero-error capacities and superactivation.

Everything reduces to the noncommutative graph G of a channel, a
symmetric unital operator subspace:

  classical capacity positive  <=>  G is not transitive, i.e. some
      rank-one |phi><psi| annihilates G in the trace pairing;
  quantum capacity positive    <=>  some pair additionally balances
      the diagonal terms, <phi|A|phi> = <psi|A|psi> for all A in G.

Verdicts are certificate-backed: POSITIVE carries an exact witness
pair, ZERO carries a transitivity certificate or a structural
exclusion re-checkable from its premises.  Heuristic searches can only
ever produce POSITIVE (after exact re-verification); their failure
proves nothing and yields UNDECIDED.

Tensor products of graphs are never materialized.  Tensor verdicts
come from registered pair witnesses checked generator-pair by
generator-pair, from embeddings of component witnesses, or from the
structural exclusion clauses of the non-superactivation ledger.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .certificates import (
    Certificate,
    NO_RANK_ONE,
    NOT_TRANSITIVE,
    TRANSITIVE,
    UNDECIDED,
    dec_matrix,
    dec_subspace,
    dec_vector,
    enc_matrix,
    enc_vector,
    register_verifier,
    subspace_subject,
    verify_certificate,
)
from .channel import KrausChannel, noncommutative_graph
from .matrices import QMatrix, kernel_basis
from .rank1 import (
    is_transitive,
    perp_witness_certificate,
    tensor_nontransitivity,
    tensor_subject,
)
from .scalars import ONE, ZERO as SZERO, QScalar, qs, sqrt_in_qi
from .subspace import OperatorSubspace

CBAR0 = "CBAR0"
QBAR0 = "QBAR0"

POSITIVE = "POSITIVE"
ZERO = "ZERO"
# UNDECIDED is shared with the certificate module

NONE_PROVEN = "NONE_PROVEN"
CLASSICAL = "CLASSICAL"
QUANTUM = "QUANTUM"
EXTREME = "EXTREME"

KINDS = (NONE_PROVEN, CLASSICAL, QUANTUM, EXTREME, UNDECIDED)


@dataclass(frozen=True)
class SearchBudget:
    """Knobs for the search strategies; exact checks ignore it."""

    seed: int = 0
    iterations: int = 40
    tolerance: float = 1e-18
    max_denominator: int = 10**6
    minor_budget: int = 200000
    use_heuristic: bool = True
    use_minor_ideal: bool = True

    def transitivity_kwargs(self) -> dict:
        return {
            "seed": self.seed,
            "iterations": self.iterations,
            "tolerance": self.tolerance,
            "max_denominator": self.max_denominator,
            "minor_budget": self.minor_budget,
            "use_heuristic": self.use_heuristic,
            "use_minor_ideal": self.use_minor_ideal,
        }


_DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class PositivityVerdict:
    """One capacity, one channel (through its graph).

    witness is a pair of exact vectors when POSITIVE; it may be None
    in the single corner case where the backing certificate's rank-one
    element lives in a quadratic extension with no in-field
    conjugation, in which case the certificate still re-verifies.
    ZERO always carries a TRANSITIVE or NO_RANK_ONE certificate."""

    capacity: str
    status: str
    witness: tuple | None
    certificate: Certificate | None

    @property
    def decided(self) -> bool:
        return self.status != UNDECIDED

    def to_record(self) -> dict:
        rec = {
            "kind": "positivity_verdict",
            "capacity": self.capacity,
            "status": self.status,
            "witness": None,
            "certificate": None,
        }
        if self.witness is not None:
            phi, psi = self.witness
            rec["witness"] = {"phi": enc_vector(phi), "psi": enc_vector(psi)}
        if self.certificate is not None:
            rec["certificate"] = self.certificate.to_record()
        return rec


@dataclass(frozen=True)
class FiredClause:
    """One exclusion clause that applies to the examined channel(s).

    capacity says which kind of superactivation the clause rules out;
    side says which argument satisfies the premise."""

    clause: str
    side: str
    capacity: str
    statement: str
    asymptotic: str

    def to_record(self) -> dict:
        return {
            "kind": "fired_clause",
            "clause": self.clause,
            "side": self.side,
            "capacity": self.capacity,
            "statement": self.statement,
            "asymptotic": self.asymptotic,
        }


@dataclass(frozen=True)
class SuperactivationReport:
    kind: str
    components: tuple  # ((cbar0, qbar0) for each channel)
    tensor: tuple  # (cbar0, qbar0) of the product channel
    blockers: tuple  # FiredClause entries

    def to_record(self) -> dict:
        return {
            "kind": "superactivation_report",
            "classification": self.kind,
            "components": [
                [c.to_record(), q.to_record()] for c, q in self.components
            ],
            "tensor": [v.to_record() for v in self.tensor],
            "blockers": [b.to_record() for b in self.blockers],
        }


@dataclass(frozen=True)
class CommutantAnalysis:
    """Structure of the commutant of a graph and what it forces.

    implications lists (capacity, status) pairs valid for any channel
    with this graph; the ZERO directions appear only when the graph is
    an algebra, where the positive directions become equivalences."""

    dim: int
    trivial: bool
    commutative: bool
    algebra: bool
    implications: tuple

    def to_record(self) -> dict:
        return {
            "kind": "commutant_analysis",
            "dim": self.dim,
            "trivial": self.trivial,
            "commutative": self.commutative,
            "algebra": self.algebra,
            "implications": [list(p) for p in self.implications],
        }


@dataclass(frozen=True)
class Ri2Classification:
    """Reversibility index with respect to two-element families.

    0 means no two states are perfectly distinguishable, 2 means a
    two-dimensional subspace is perfectly recoverable, 1 sits between.
    lower and upper bracket the value when a verdict is undecided."""

    value: object  # 0 | 1 | 2 | UNDECIDED
    lower: int
    upper: int
    cbar0: PositivityVerdict
    qbar0: PositivityVerdict

    def to_record(self) -> dict:
        return {
            "kind": "ri2",
            "value": self.value,
            "lower": self.lower,
            "upper": self.upper,
            "cbar0": self.cbar0.to_record(),
            "qbar0": self.qbar0.to_record(),
        }


# ---------------------------------------------------------------------------
# witness registries
# ---------------------------------------------------------------------------

_QBAR0_WITNESSES: dict[OperatorSubspace, tuple] = {}
_TENSOR_CBAR0: dict[tuple, Callable[[], Certificate]] = {}
_TENSOR_QBAR0: dict[tuple, tuple] = {}


def register_qbar0_witness(G: OperatorSubspace, phi, psi):
    """Attach a known reversibility pair to a graph; consulted first
    by qbar0_positive and always re-verified before use."""
    _QBAR0_WITNESSES[G] = (tuple(phi), tuple(psi))


def register_tensor_cbar0_witness(G1, G2, producer: Callable[[], Certificate]):
    """Attach a producer of a pair-checked nontransitivity certificate
    for tensor(G1, G2); a transposed wrapper serves the swapped order."""
    if (G2, G1) not in _TENSOR_CBAR0 or G1 != G2:
        _TENSOR_CBAR0[(G2, G1)] = lambda: _swap_tensor_cbar0(G2, G1, producer())
    _TENSOR_CBAR0[(G1, G2)] = producer


def _swap_tensor_cbar0(G2, G1, cert: Certificate) -> Certificate:
    # Tr(F X A Y^T) = Tr(F^T Y A^T X^T), so transposing both matrices
    # of the witness serves the swapped factor order
    A = dec_matrix(cert.evidence["a"])
    F = dec_matrix(cert.evidence["f"])
    return tensor_nontransitivity(G2, G1, A.transpose(), F.transpose())


def _swap_tensor_vector(vec, n1: int, n2: int) -> tuple:
    out = [SZERO] * (n1 * n2)
    for idx, v in enumerate(vec):
        if not v.is_zero():
            a, b = divmod(idx, n2)
            out[n1 * b + a] = v
    return tuple(out)


def register_tensor_qbar0_witness(G1, G2, n1: int, n2: int, phi, psi):
    """Attach a reversibility pair for tensor(G1, G2), given as vectors
    of length n1*n2; the swapped order is registered automatically."""
    phi, psi = tuple(phi), tuple(psi)
    _TENSOR_QBAR0[(G2, G1)] = (
        n2,
        n1,
        _swap_tensor_vector(phi, n1, n2),
        _swap_tensor_vector(psi, n1, n2),
    )
    _TENSOR_QBAR0[(G1, G2)] = (n1, n2, phi, psi)


def tensor_cbar0_producer(G1, G2):
    """The registered classical tensor-witness producer, or None."""
    return _TENSOR_CBAR0.get((G1, G2))


def tensor_qbar0_witness(G1, G2):
    """The registered quantum tensor witness (n1, n2, phi, psi), or None."""
    return _TENSOR_QBAR0.get((G1, G2))


# ---------------------------------------------------------------------------
# witness checks
# ---------------------------------------------------------------------------


def _sandwich(v, A: QMatrix, w) -> QScalar:
    # <v|A|w> with sparse skipping; v, w plain sequences of scalars
    total = SZERO
    for i, vi in enumerate(v):
        if vi.is_zero():
            continue
        row = A.rows[i]
        s = SZERO
        for j, wj in enumerate(w):
            if not (wj.is_zero() or row[j].is_zero()):
                s = s + row[j] * wj
        total = total + vi.conj() * s
    return total


def _require_pair(phi, psi):
    phi, psi = list(phi), list(psi)
    if all(v.is_zero() for v in phi) or all(v.is_zero() for v in psi):
        raise ValueError("witness vectors must be nonzero")
    return phi, psi


def cbar0_witness_check(G: OperatorSubspace, phi, psi) -> bool:
    """<psi|A|phi> = 0 for every A in a basis of G."""
    phi, psi = _require_pair(phi, psi)
    for A in G.basis():
        if not _sandwich(psi, A, phi).is_zero():
            return False
    return True


def qbar0_witness_check(G: OperatorSubspace, phi, psi) -> bool:
    """Both reversibility conditions over a basis of G, exactly:
    <psi|A|phi> = 0 and <phi|A|phi> = <psi|A|psi>."""
    phi, psi = _require_pair(phi, psi)
    for A in G.basis():
        if not _sandwich(psi, A, phi).is_zero():
            return False
        if _sandwich(phi, A, phi) != _sandwich(psi, A, psi):
            return False
    return True


def tensor_sandwich(bra, M1: QMatrix, M2: QMatrix, ket, n2: int) -> QScalar:
    """<bra|M1 (x) M2|ket> evaluated on the supports of bra and ket.

    Vectors index C^{n1} (x) C^{n2} as n2*a + b; the cost is the
    product of the two support sizes, never the ambient dimension."""
    total = SZERO
    supp_k = [(divmod(i, n2), v) for i, v in enumerate(ket) if not v.is_zero()]
    for i, bv in enumerate(bra):
        if bv.is_zero():
            continue
        a, b = divmod(i, n2)
        c = bv.conj()
        row1 = M1.rows[a]
        row2 = M2.rows[b]
        for (a2, b2), kv in supp_k:
            m1 = row1[a2]
            if m1.is_zero():
                continue
            m2 = row2[b2]
            if not m2.is_zero():
                total = total + c * kv * m1 * m2
    return total


def qbar0_witness_check_pairs(G1: OperatorSubspace, G2: OperatorSubspace, phi, psi):
    """Reversibility conditions for tensor(G1, G2) over all generator
    pairs, without materializing the tensor subspace.

    Returns (ok, pairs_checked)."""
    phi, psi = _require_pair(phi, psi)
    n2 = G2.ambient
    pairs = 0
    for A in G1.basis():
        for B in G2.basis():
            pairs += 1
            if not tensor_sandwich(psi, A, B, phi, n2).is_zero():
                return False, pairs
            if tensor_sandwich(phi, A, B, phi, n2) != tensor_sandwich(psi, A, B, psi, n2):
                return False, pairs
    return True, pairs


def cbar0_witness_check_pairs(G1, G2, phi, psi):
    """First condition only, over all generator pairs."""
    phi, psi = _require_pair(phi, psi)
    n2 = G2.ambient
    pairs = 0
    for A in G1.basis():
        for B in G2.basis():
            pairs += 1
            if not tensor_sandwich(psi, A, B, phi, n2).is_zero():
                return False, pairs
    return True, pairs


# ---------------------------------------------------------------------------
# certificate strategies owned by this module
# ---------------------------------------------------------------------------


def reversibility_certificate(G: OperatorSubspace, phi, psi) -> Certificate:
    """NOT_TRANSITIVE backed by a full reversibility pair: the pair
    exhibits a rank-one annihilator of G, and the verifier re-checks
    the diagonal balance on top of it."""
    if not qbar0_witness_check(G, phi, psi):
        raise ValueError("pair fails the reversibility conditions")
    return Certificate(
        NOT_TRANSITIVE,
        "reversibility_witness",
        subspace_subject(G),
        {"phi": enc_vector(phi), "psi": enc_vector(psi)},
        budget={"pair_checks": G.dim},
    )


@register_verifier("reversibility_witness")
def _verify_reversibility(cert: Certificate) -> bool:
    if cert.verdict != NOT_TRANSITIVE:
        return False
    G = dec_subspace(cert.subject)
    phi = dec_vector(cert.evidence["phi"])
    psi = dec_vector(cert.evidence["psi"])
    return qbar0_witness_check(G, phi, psi)


def tensor_reversibility_certificate(G1, G2, phi, psi) -> Certificate:
    """NOT_TRANSITIVE for tensor(G1, G2) from a reversibility pair
    checked over every generator pair."""
    ok, pairs = qbar0_witness_check_pairs(G1, G2, phi, psi)
    if not ok:
        raise ValueError("pair fails the reversibility conditions")
    return Certificate(
        NOT_TRANSITIVE,
        "tensor_reversibility_witness",
        tensor_subject(G1, G2),
        {"phi": enc_vector(phi), "psi": enc_vector(psi)},
        budget={"pair_checks": pairs},
    )


@register_verifier("tensor_reversibility_witness")
def _verify_tensor_reversibility(cert: Certificate) -> bool:
    if cert.verdict != NOT_TRANSITIVE:
        return False
    G1 = dec_subspace(cert.subject["left"])
    G2 = dec_subspace(cert.subject["right"])
    phi = dec_vector(cert.evidence["phi"])
    psi = dec_vector(cert.evidence["psi"])
    ok, _ = qbar0_witness_check_pairs(G1, G2, phi, psi)
    return ok


def _qubit_exclusion_certificate(G: OperatorSubspace) -> Certificate:
    """No reversibility pair exists for a graph of ambient 2 with
    dim >= 2: the two conditions against the identity force the pair
    to be an orthogonal basis, in which every element of a symmetric
    graph would have to be scalar."""
    return Certificate(
        NO_RANK_ONE,
        "qubit_reversibility_exclusion",
        subspace_subject(G),
        {},
    )


@register_verifier("qubit_reversibility_exclusion")
def _verify_qubit_exclusion(cert: Certificate) -> bool:
    if cert.verdict != NO_RANK_ONE:
        return False
    G = dec_subspace(cert.subject)
    return (
        G.ambient == 2
        and G.dim >= 2
        and G.is_symmetric()
        and G.contains_identity()
    )


def _algebra_exclusion_certificate(G: OperatorSubspace) -> Certificate:
    """No reversibility pair exists for an algebra graph whose
    commutant is commutative; for algebras the commutant criterion is
    an equivalence."""
    return Certificate(
        NO_RANK_ONE,
        "algebra_commutant_exclusion",
        subspace_subject(G),
        {},
    )


@register_verifier("algebra_commutant_exclusion")
def _verify_algebra_exclusion(cert: Certificate) -> bool:
    if cert.verdict != NO_RANK_ONE:
        return False
    G = dec_subspace(cert.subject)
    if not (G.is_symmetric() and G.contains_identity() and G.is_algebra()):
        return False
    return _commutant_is_commutative(G.commutant())


def _commutant_is_commutative(K: OperatorSubspace) -> bool:
    basis = K.basis()
    for i, A in enumerate(basis):
        for B in basis[i + 1 :]:
            if A @ B != B @ A:
                return False
    return True


# structural exclusions for tensor products (the ledger clauses)


def _q_zero_backing(v: "PositivityVerdict") -> Certificate:
    if v.capacity != QBAR0 or v.status != ZERO or v.certificate is None:
        raise ValueError("need a certificate-backed quantum-zero verdict")
    return v.certificate


def tensor_classical_exclusion(
    G1, G2, clause: str, side: str, left_cert: Certificate, right_cert: Certificate,
    extra: dict | None = None,
) -> Certificate:
    """TRANSITIVE for tensor(G1, G2) from a structural clause about one
    factor plus transitivity of both factors.

    Premises re-checked by the verifier: both component certificates,
    and on the named side either near-full dimension (clause 3A),
    ambient 2 (3B), the algebra property (3C), or a presented rank-one
    Kraus family realizing the factor graph (3E/3F)."""
    evidence = {
        "clause": clause,
        "side": side,
        "left": left_cert.to_record(),
        "right": right_cert.to_record(),
    }
    if extra:
        evidence.update(extra)
    cert = Certificate(TRANSITIVE, "tensor_clause_exclusion", tensor_subject(G1, G2), evidence)
    if not verify_certificate(cert):
        raise ValueError("clause premises failed verification")
    return cert


def _clause_3_premise(G: OperatorSubspace, clause: str, evidence: dict) -> bool:
    if clause == "3A":
        return G.dim >= G.ambient * G.ambient - 1
    if clause == "3B":
        return G.ambient == 2
    if clause == "3C":
        return G.is_algebra()
    if clause in ("3E", "3F"):
        fam = [dec_matrix(rows) for rows in evidence.get("kraus", [])]
        if not fam:
            return False
        n = G.ambient
        total = QMatrix.zeros(n)
        for V in fam:
            if V.n != n or V.rank() != 1:
                return False
            total = total + V.adjoint() @ V
        if total != QMatrix.identity(n):
            return False
        gens = [v.adjoint() @ w for v in fam for w in fam]
        return OperatorSubspace.span(gens) == G
    return False


@register_verifier("tensor_clause_exclusion")
def _verify_tensor_clause(cert: Certificate) -> bool:
    if cert.verdict != TRANSITIVE:
        return False
    left = Certificate.from_record(cert.evidence["left"])
    right = Certificate.from_record(cert.evidence["right"])
    if left.verdict != TRANSITIVE or right.verdict != TRANSITIVE:
        return False
    G1 = dec_subspace(cert.subject["left"])
    G2 = dec_subspace(cert.subject["right"])
    if left.subject != subspace_subject(G1) or right.subject != subspace_subject(G2):
        return False
    side = cert.evidence["side"]
    if side not in ("left", "right"):
        return False
    G = G1 if side == "left" else G2
    if not _clause_3_premise(G, cert.evidence["clause"], cert.evidence):
        return False
    return verify_certificate(left) and verify_certificate(right)


def tensor_quantum_exclusion(
    G1, G2, clause: str, side: str, backing: dict,
) -> Certificate:
    """NO_RANK_ONE (no reversibility pair) for tensor(G1, G2).

    Clause 4A: the named side contains the standard (or a supplied)
    diagonal algebra and the other side's quantum capacity is zero.
    Clause 4B: the named side has ambient 2 and dim >= 2, same
    conclusion.  Clause 4C: both factors are algebras with zero
    quantum capacity.  backing carries the inner zero certificates
    (and the basis for 4A)."""
    evidence = {"clause": clause, "side": side}
    evidence.update(backing)
    cert = Certificate(
        NO_RANK_ONE, "tensor_reversibility_exclusion", tensor_subject(G1, G2), evidence
    )
    if not verify_certificate(cert):
        raise ValueError("clause premises failed verification")
    return cert


def _verify_q_zero_record(rec: dict, G: OperatorSubspace) -> bool:
    """A certificate record claiming the quantum capacity of the graph
    G vanishes: either transitivity of G or one of the structural
    exclusions about G."""
    try:
        cert = Certificate.from_record(rec)
    except Exception:
        return False
    if cert.verdict == TRANSITIVE:
        if cert.subject != subspace_subject(G):
            return False
    elif cert.verdict == NO_RANK_ONE and cert.strategy in (
        "qubit_reversibility_exclusion",
        "algebra_commutant_exclusion",
    ):
        if cert.subject != subspace_subject(G):
            return False
    else:
        return False
    return verify_certificate(cert)


def _contains_diagonal_algebra(G: OperatorSubspace, U: QMatrix) -> bool:
    n = G.ambient
    if U.shape != (n, n) or U.adjoint() @ U != QMatrix.identity(n):
        return False
    for k in range(n):
        col = U.col(k)
        proj = QMatrix([[a * b.conj() for b in col] for a in col])
        if not G.contains(proj):
            return False
    return True


@register_verifier("tensor_reversibility_exclusion")
def _verify_tensor_q_exclusion(cert: Certificate) -> bool:
    if cert.verdict != NO_RANK_ONE:
        return False
    G1 = dec_subspace(cert.subject["left"])
    G2 = dec_subspace(cert.subject["right"])
    clause = cert.evidence["clause"]
    side = cert.evidence.get("side")
    if clause == "4C":
        if not (G1.is_algebra() and G2.is_algebra()):
            return False
        return _verify_q_zero_record(cert.evidence["left"], G1) and _verify_q_zero_record(
            cert.evidence["right"], G2
        )
    if side not in ("left", "right"):
        return False
    G, other = (G1, G2) if side == "left" else (G2, G1)
    if clause == "4A":
        U = dec_matrix(cert.evidence["masa_basis"])
        if not _contains_diagonal_algebra(G, U):
            return False
    elif clause == "4B":
        if not (
            G.ambient == 2 and G.dim >= 2 and G.is_symmetric() and G.contains_identity()
        ):
            return False
    else:
        return False
    return _verify_q_zero_record(cert.evidence["other"], other)


# ---------------------------------------------------------------------------
# witness extraction from transitivity certificates
# ---------------------------------------------------------------------------


def _perp_pair_from_certificate(cert: Certificate):
    """The (x, y) with x y^T annihilating the subject, from any
    NOT_TRANSITIVE certificate whose witness stayed in Q(i)."""
    if cert.strategy == "perp_witness":
        return dec_vector(cert.evidence["x"]), dec_vector(cert.evidence["y"])
    if cert.strategy == "tensor_pair_checks":
        return (
            dec_vector(cert.evidence["witness_x"]),
            dec_vector(cert.evidence["witness_y"]),
        )
    if cert.strategy in ("reversibility_witness", "tensor_reversibility_witness"):
        phi = dec_vector(cert.evidence["phi"])
        psi = dec_vector(cert.evidence["psi"])
        return phi, [v.conj() for v in psi]
    if cert.strategy == "perp_reduction":
        inner = Certificate.from_record(cert.evidence["inner"])
        if inner.strategy == "rank_one_witness":
            return dec_vector(inner.evidence["x"]), dec_vector(inner.evidence["y"])
        if inner.strategy == "n2_quadratic" and inner.evidence.get("case") == "witness":
            return dec_vector(inner.evidence["x"]), dec_vector(inner.evidence["y"])
        return None
    if cert.strategy == "transform":
        inner = Certificate.from_record(cert.evidence["inner"])
        pair = _perp_pair_from_certificate(inner)
        if pair is None:
            return None
        x, y = pair
        t = cert.evidence["transform"]
        if t == "transpose":
            return y, x
        if t == "adjoint":
            return [v.conj() for v in y], [v.conj() for v in x]
        if t == "conjugate":
            return [v.conj() for v in x], [v.conj() for v in y]
        return None
    return None


def _capacity_witness_from(cert: Certificate, G: OperatorSubspace):
    pair = _perp_pair_from_certificate(cert)
    if pair is None:
        return None
    x, y = pair
    psi = [v.conj() for v in y]
    if not cbar0_witness_check(G, x, psi):
        return None
    return tuple(x), tuple(psi)


def unit_scaled(vec):
    """The vector scaled to exact unit norm when the norm is a square
    in Q(i); otherwise returned unchanged.  Witness conditions are
    projective, so scaling is cosmetic."""
    norm2 = SZERO
    for v in vec:
        norm2 = norm2 + qs(v.abs2())
    root = sqrt_in_qi(norm2)
    if root is None or root.is_zero():
        return tuple(vec)
    inv = root.inv()
    return tuple(v * inv for v in vec)


# ---------------------------------------------------------------------------
# commutant analysis and the witness constructions it supports
# ---------------------------------------------------------------------------


def commutant_analysis(G: OperatorSubspace) -> CommutantAnalysis:
    """Exact commutant of G and the capacity statements it forces.

    A nontrivial commutant forces positive classical capacity, a
    noncommutative one positive quantum capacity; when G is an algebra
    both directions are equivalences, so the negative statements
    appear as well."""
    K = G.commutant()
    trivial = K.dim == 1
    commutative = _commutant_is_commutative(K)
    algebra = G.is_algebra()
    implications = []
    if not trivial:
        implications.append((CBAR0, POSITIVE))
    if not commutative:
        implications.append((QBAR0, POSITIVE))
    if algebra:
        if trivial:
            implications.append((CBAR0, ZERO))
        if commutative:
            implications.append((QBAR0, ZERO))
    return CommutantAnalysis(K.dim, trivial, commutative, algebra, tuple(implications))


def _is_scalar_matrix(C: QMatrix) -> bool:
    return C == QMatrix.identity(C.n).scale(C[0, 0])


def _commutant_candidates(K: OperatorSubspace, cap: int = 96) -> list[QMatrix]:
    basis = K.basis()
    out = []
    seen = set()
    i_unit = qs(0, 1)

    def push(M: QMatrix):
        if len(out) >= cap or M.is_zero() or _is_scalar_matrix(M) or M in seen:
            return
        seen.add(M)
        out.append(M)

    for B in basis:
        push(B)
        push(B + B.adjoint())
        push((B - B.adjoint()).scale(i_unit))
    for A in basis:
        for B in basis:
            if len(out) >= cap:
                return out
            push(A @ B)
    return out


def cbar0_witness_from_commutant(G: OperatorSubspace):
    """Exact classical witness from an invariant subspace, when the
    commutant is nontrivial and exhibits one with rational data.

    Any kernel of C - mu I for C in the commutant is invariant under
    all of G, so a vector inside it and a vector orthogonal to it
    annihilate every generator.  mu runs over the diagonal entries of
    C and 0, +/-1, which covers commutants containing projections or
    any element with a rational eigenvalue there; a commutant that is
    a nontrivial division algebra has no rational invariant subspace
    and yields None."""
    K = G.commutant()
    if K.dim <= 1:
        return None
    n = G.ambient
    ident = QMatrix.identity(n)
    for C in _commutant_candidates(K):
        mus = {SZERO, ONE, -ONE}
        for k in range(n):
            mus.add(C[k, k])
        for mu in mus:
            cols = kernel_basis(C - ident.scale(mu))
            if not cols or len(cols) >= n:
                continue
            phi = tuple(col[i, 0] for i in range(n) for col in (cols[0],))
            rows = [[col[i, 0].conj() for i in range(n)] for col in cols]
            perp_cols = kernel_basis(QMatrix(rows))
            if not perp_cols:
                continue
            psi = tuple(perp_cols[0][i, 0] for i in range(n))
            if cbar0_witness_check(G, phi, psi):
                return phi, psi
    return None


def partial_isometry_witness(G: OperatorSubspace):
    """Reversibility pair from a partial isometry in the commutant
    with orthogonal initial and final projections.

    For such W and any column phi of P = W^H W, the pair
    (phi, W phi) passes both conditions against everything commuting
    with W, hence against G.  Only commutant basis elements and their
    pairwise products are screened; absence of a hit proves nothing."""
    K = G.commutant()
    for W in _commutant_candidates(K):
        P = W.adjoint() @ W
        if P @ P != P:
            continue
        Q = W @ W.adjoint()
        if Q @ Q != Q or not (P @ Q).is_zero():
            continue
        n = P.n
        col = None
        for j in range(n):
            if any(not P[i, j].is_zero() for i in range(n)):
                col = j
                break
        if col is None:
            continue
        phi = tuple(P[i, col] for i in range(n))
        psi_col = W @ QMatrix.column(list(phi))
        psi = tuple(psi_col[i, 0] for i in range(n))
        if any(not v.is_zero() for v in psi) and qbar0_witness_check(G, phi, psi):
            return phi, psi
    return None


# ---------------------------------------------------------------------------
# capacity deciders
# ---------------------------------------------------------------------------


def _require_graph(G: OperatorSubspace):
    if not G.is_symmetric():
        raise ValueError("not a channel graph: the subspace is not symmetric")
    if not G.contains_identity():
        raise ValueError("not a channel graph: the identity is missing")


def cbar0_positive(G: OperatorSubspace, budget: SearchBudget | None = None) -> PositivityVerdict:
    """Positivity verdict for the one-shot zero-error classical
    capacity of any channel with graph G.

    Delegates to the transitivity decision; a nontransitivity
    certificate yields the witness pair (phi, psi) with
    <psi|A|phi> = 0 by conjugating the second rank-one factor.  When
    the chain is undecided, a nontrivial commutant is still mined for
    an invariant-subspace witness."""
    _require_graph(G)
    budget = budget or _DEFAULT_BUDGET
    cert = is_transitive(G, **budget.transitivity_kwargs())
    if cert.verdict == TRANSITIVE:
        return PositivityVerdict(CBAR0, ZERO, None, cert)
    if cert.verdict == NOT_TRANSITIVE:
        witness = _capacity_witness_from(cert, G)
        return PositivityVerdict(CBAR0, POSITIVE, witness, cert)
    pair = cbar0_witness_from_commutant(G)
    if pair is not None:
        phi, psi = pair
        wcert = perp_witness_certificate(G, list(phi), [v.conj() for v in psi])
        return PositivityVerdict(CBAR0, POSITIVE, (phi, psi), wcert)
    return PositivityVerdict(CBAR0, UNDECIDED, None, cert)


def _qbar0_from_pair(G, phi, psi) -> PositivityVerdict:
    cert = reversibility_certificate(G, phi, psi)
    return PositivityVerdict(QBAR0, POSITIVE, (tuple(phi), tuple(psi)), cert)


def qbar0_positive(G: OperatorSubspace, budget: SearchBudget | None = None) -> PositivityVerdict:
    """Positivity verdict for the one-shot zero-error quantum capacity.

    Strategy chain: registered pairs, the complete ambient-2 rule, a
    partial-isometry screen of the commutant, the algebra equivalence,
    zero classical capacity (which dominates), then a numeric search
    whose candidates are rationalized and re-checked.  ZERO only ever
    comes from the structural arguments; heuristic failure leaves
    UNDECIDED.  The screen covers only commutant basis elements and
    their pairwise products, so a noncommutative commutant without a
    rational partial isometry among those stays undecided."""
    _require_graph(G)
    budget = budget or _DEFAULT_BUDGET
    registered = _QBAR0_WITNESSES.get(G)
    if registered is not None:
        phi, psi = registered
        if not qbar0_witness_check(G, phi, psi):
            raise AssertionError("registered reversibility pair failed its exact check")
        return _qbar0_from_pair(G, phi, psi)
    n = G.ambient
    if n == 2:
        if G.dim == 1:
            phi, psi = (ONE, SZERO), (SZERO, ONE)
            return _qbar0_from_pair(G, phi, psi)
        return PositivityVerdict(QBAR0, ZERO, None, _qubit_exclusion_certificate(G))
    pair = partial_isometry_witness(G)
    if pair is not None:
        return _qbar0_from_pair(G, *pair)
    if G.is_algebra() and _commutant_is_commutative(G.commutant()):
        return PositivityVerdict(QBAR0, ZERO, None, _algebra_exclusion_certificate(G))
    tcert = is_transitive(G, **budget.transitivity_kwargs())
    if tcert.verdict == TRANSITIVE:
        # a reversibility pair would exhibit a rank-one annihilator
        return PositivityVerdict(QBAR0, ZERO, None, tcert)
    pair = _heuristic_reversibility_pair(G, budget)
    if pair is not None:
        return _qbar0_from_pair(G, *pair)
    log = Certificate(
        UNDECIDED,
        "search_log",
        subspace_subject(G),
        {"log": {"note": "commutant screen and numeric search exhausted"}},
    )
    return PositivityVerdict(QBAR0, UNDECIDED, None, log)


def _rationalize(vals, max_denominator: int):
    pivot = max(vals, key=abs)
    if abs(pivot) == 0:
        return None
    out = []
    for v in vals:
        w = v / pivot
        out.append(
            QScalar(
                Fraction(w.real).limit_denominator(max_denominator),
                Fraction(w.imag).limit_denominator(max_denominator),
            )
        )
    return out


_HEURISTIC_GATE = 1e-3


def _heuristic_reversibility_pair(G: OperatorSubspace, budget: SearchBudget):
    """Numeric candidates for a reversibility pair, rationalized and
    exactly re-checked; None unless an exact pair comes out."""
    if not budget.use_heuristic:
        return None
    import numpy as np

    basis = [B.to_numpy() for B in G.basis()]
    n = G.ambient
    rng = np.random.default_rng(budget.seed)
    best = None
    for _ in range(8):
        phi = rng.normal(size=n) + 1j * rng.normal(size=n)
        phi /= np.linalg.norm(phi)
        for _ in range(12):
            # least singular direction of the stacked map x -> conj(x),
            # so that psi annihilates every A phi in the inner product
            stacked = np.array([A @ phi for A in basis])
            _, _, vh = np.linalg.svd(stacked)
            psi = vh[-1]
            stacked = np.array([(A.conj().T @ psi).conj() for A in basis])
            _, _, vh = np.linalg.svd(stacked)
            phi = vh[-1].conj()
            res = sum(abs(psi.conj() @ (A @ phi)) ** 2 for A in basis) + sum(
                abs(phi.conj() @ (A @ phi) - psi.conj() @ (A @ psi)) ** 2
                for A in basis
            )
            if best is None or res < best[0]:
                best = (res, phi.copy(), psi.copy())
    if best is None or best[0] >= _HEURISTIC_GATE:
        return None
    phi = _rationalize(list(best[1]), budget.max_denominator)
    psi = _rationalize(list(best[2]), budget.max_denominator)
    if phi is None or psi is None:
        return None
    if all(v.is_zero() for v in phi) or all(v.is_zero() for v in psi):
        return None
    psi = _match_norms(phi, psi)
    if psi is not None and qbar0_witness_check(G, phi, psi):
        return tuple(phi), tuple(psi)
    return None


def _match_norms(phi, psi):
    """Rescale psi so both vectors have the same exact norm, when the
    required ratio has a square root in Q; None when it does not
    (pivot scaling during rationalization breaks the balance)."""
    n_phi = sum((v.abs2() for v in phi), Fraction(0))
    n_psi = sum((v.abs2() for v in psi), Fraction(0))
    if n_psi == 0:
        return None
    if n_phi == n_psi:
        return list(psi)
    root = sqrt_in_qi(qs(n_phi / n_psi))
    if root is None:
        return None
    return [v * root for v in psi]


# ---------------------------------------------------------------------------
# the non-superactivation ledger
# ---------------------------------------------------------------------------

_C_STATEMENT = "classical zero-error capacity cannot be superactivated with any partner"
_C_ASYMPTOTIC = "asymptotic classical zero-error capacity is zero iff the one-shot one is"
_Q_STATEMENT = "quantum zero-error capacity cannot be superactivated"
_Q_ASYMPTOTIC = "asymptotic quantum zero-error capacity is zero iff the one-shot one is"


def _resolve_argument(arg):
    """(graph, channel, gaussian_spec) triple for a ledger argument."""
    if isinstance(arg, KrausChannel):
        return noncommutative_graph(arg), arg, None
    if isinstance(arg, OperatorSubspace):
        return arg, None, None
    from . import gaussian as gaussian_mod

    if isinstance(arg, gaussian_mod.GaussianSpec):
        return None, None, arg
    raise TypeError("expected a channel, a subspace, or a Gaussian spec")


def _all_kraus_rank_one(ch: KrausChannel) -> bool:
    return all(V.rank() == 1 for V in ch.kraus)


def _eb_family_matches(ch: KrausChannel, family) -> bool:
    """family is a rank-one Kraus representation of the same channel:
    checked by completeness plus equality of the spans of vectorized
    operators together with the exact Choi matrices."""
    if ch is None or not family:
        return False
    mats = list(family)
    n, b = ch.dim_in, ch.dim_out
    total = QMatrix.zeros(n)
    for V in mats:
        if V.shape != (b, n) or V.rank() != 1:
            return False
        total = total + V.adjoint() @ V
    if total != QMatrix.identity(n):
        return False
    choi_given = QMatrix.zeros(n * b)
    for V in ch.kraus:
        v = QMatrix.column(list(V.vec()))
        choi_given = choi_given + v @ v.adjoint()
    choi_fam = QMatrix.zeros(n * b)
    for V in mats:
        v = QMatrix.column(list(V.vec()))
        choi_fam = choi_fam + v @ v.adjoint()
    return choi_given == choi_fam


def nonsuperactivation_ledger(
    arg1,
    arg2=None,
    *,
    masa_basis: QMatrix | None = None,
    eb_kraus=None,
) -> tuple:
    """Evaluate every exclusion clause on the argument(s).

    Arguments may be channels, graphs, or Gaussian specs.  masa_basis
    optionally supplies a unitary whose diagonal algebra is tested for
    containment in each graph (the standard basis is always tried);
    eb_kraus optionally supplies a rank-one Kraus family accepted as
    an entanglement-breaking certificate for whichever argument it
    reproduces exactly."""
    sides = [("left", arg1)]
    if arg2 is not None:
        sides.append(("right", arg2))
    fired = []
    graphs = {}
    for side, arg in sides:
        G, ch, gspec = _resolve_argument(arg)
        graphs[side] = G
        if gspec is not None:
            fired.append(
                FiredClause("3D", side, CBAR0, "Gaussian channel: " + _C_STATEMENT, _C_ASYMPTOTIC)
            )
            fired.append(
                FiredClause("4D", side, QBAR0, "Gaussian channel: " + _Q_STATEMENT, _Q_ASYMPTOTIC)
            )
            continue
        n = G.ambient
        if G.dim >= n * n - 1:
            fired.append(
                FiredClause(
                    "3A", side, CBAR0,
                    "graph dimension at least ambient^2 - 1: " + _C_STATEMENT,
                    _C_ASYMPTOTIC,
                )
            )
        if n == 2:
            fired.append(
                FiredClause("3B", side, CBAR0, "ambient dimension 2: " + _C_STATEMENT, _C_ASYMPTOTIC)
            )
            fired.append(
                FiredClause("4B", side, QBAR0, "ambient dimension 2: " + _Q_STATEMENT, _Q_ASYMPTOTIC)
            )
        if G.is_algebra():
            fired.append(
                FiredClause("3C", side, CBAR0, "graph is an algebra: " + _C_STATEMENT, _C_ASYMPTOTIC)
            )
        rank_one_rep = ch is not None and _all_kraus_rank_one(ch)
        if rank_one_rep:
            fired.append(
                FiredClause(
                    "3F", side, CBAR0,
                    "presented Kraus operators all have rank one: " + _C_STATEMENT,
                    _C_ASYMPTOTIC,
                )
            )
        if rank_one_rep or (ch is not None and eb_kraus and _eb_family_matches(ch, eb_kraus)):
            fired.append(
                FiredClause(
                    "3E", side, CBAR0,
                    "entanglement breaking (rank-one Kraus certificate): " + _C_STATEMENT,
                    _C_ASYMPTOTIC,
                )
            )
        bases = [QMatrix.identity(n)]
        if masa_basis is not None and masa_basis.shape == (n, n):
            bases.append(masa_basis)
        if any(_contains_diagonal_algebra(G, U) for U in bases):
            fired.append(
                FiredClause(
                    "4A", side, QBAR0,
                    "graph contains a maximal commutative *-subalgebra: " + _Q_STATEMENT,
                    _Q_ASYMPTOTIC,
                )
            )
    if (
        len(sides) == 2
        and graphs["left"] is not None
        and graphs["right"] is not None
        and graphs["left"].is_algebra()
        and graphs["right"].is_algebra()
    ):
        fired.append(
            FiredClause("4C", "pair", QBAR0, "both graphs are algebras: " + _Q_STATEMENT, _Q_ASYMPTOTIC)
        )
    return tuple(fired)


# ---------------------------------------------------------------------------
# superactivation
# ---------------------------------------------------------------------------


def _embed_left(vec, n2: int):
    out = [SZERO] * (len(vec) * n2)
    for i, v in enumerate(vec):
        out[i * n2] = v
    return out


def _embed_right(vec, n1: int):
    n2 = len(vec)
    return list(vec) + [SZERO] * ((n1 - 1) * n2)


def _derived_q_zero(c: PositivityVerdict) -> PositivityVerdict:
    # a reversibility pair is in particular a classical witness, so
    # zero classical capacity forces zero quantum capacity
    return PositivityVerdict(QBAR0, ZERO, None, c.certificate)


def _tensor_cbar0_from_cert(G1, G2, cert: Certificate) -> PositivityVerdict:
    witness = _capacity_witness_from_tensor(cert, G1, G2)
    return PositivityVerdict(CBAR0, POSITIVE, witness, cert)


def _capacity_witness_from_tensor(cert: Certificate, G1, G2):
    pair = _perp_pair_from_certificate(cert)
    if pair is None:
        return None
    x, y = pair
    psi = [v.conj() for v in y]
    ok, _ = cbar0_witness_check_pairs(G1, G2, x, psi)
    if not ok:
        return None
    return unit_scaled(x), unit_scaled(psi)


def superactivation_check(
    ch1: KrausChannel, ch2: KrausChannel, budget: SearchBudget | None = None
) -> SuperactivationReport:
    """Full superactivation analysis of a channel pair.

    Component verdicts, tensor verdicts (through registered pair
    witnesses, embeddings of component witnesses, and the ledger's
    structural exclusions), the fired clauses, and the resulting
    classification.  EXTREME means both classical capacities vanish
    while the product's quantum capacity is positive; CLASSICAL and
    QUANTUM are the corresponding single-capacity statements."""
    budget = budget or _DEFAULT_BUDGET
    G1 = noncommutative_graph(ch1)
    G2 = noncommutative_graph(ch2)
    c1 = cbar0_positive(G1, budget)
    c2 = cbar0_positive(G2, budget)
    q1 = _derived_q_zero(c1) if c1.status == ZERO else qbar0_positive(G1, budget)
    q2 = _derived_q_zero(c2) if c2.status == ZERO else qbar0_positive(G2, budget)
    blockers = nonsuperactivation_ledger(ch1, ch2)
    fired = {(b.clause, b.side) for b in blockers}

    tq = _tensor_qbar0(G1, G2, q1, q2, fired)
    tc = _tensor_cbar0(G1, G2, c1, c2, tq, fired)
    if tq.status == UNDECIDED and tc.status == ZERO:
        tq = _derived_q_zero(tc)

    kind = _classify(c1, c2, q1, q2, tc, tq)
    return SuperactivationReport(kind, ((c1, q1), (c2, q2)), (tc, tq), blockers)


def _tensor_qbar0(G1, G2, q1, q2, fired) -> PositivityVerdict:
    registered = _TENSOR_QBAR0.get((G1, G2))
    if registered is not None:
        n1, n2, phi, psi = registered
        cert = tensor_reversibility_certificate(G1, G2, phi, psi)
        return PositivityVerdict(QBAR0, POSITIVE, (phi, psi), cert)
    if q1.status == POSITIVE and q1.witness is not None:
        phi = _embed_left(q1.witness[0], G2.ambient)
        psi = _embed_left(q1.witness[1], G2.ambient)
        cert = tensor_reversibility_certificate(G1, G2, phi, psi)
        return PositivityVerdict(QBAR0, POSITIVE, (tuple(phi), tuple(psi)), cert)
    if q2.status == POSITIVE and q2.witness is not None:
        phi = _embed_right(q2.witness[0], G1.ambient)
        psi = _embed_right(q2.witness[1], G1.ambient)
        cert = tensor_reversibility_certificate(G1, G2, phi, psi)
        return PositivityVerdict(QBAR0, POSITIVE, (tuple(phi), tuple(psi)), cert)
    # structural exclusions
    for side, G, other_G, other_q in (
        ("left", G1, G2, q2),
        ("right", G2, G1, q1),
    ):
        if other_q.status != ZERO or other_q.certificate is None:
            continue
        backing = {"other": other_q.certificate.to_record()}
        if ("4A", side) in fired:
            backing["masa_basis"] = enc_matrix(QMatrix.identity(G.ambient))
            cert = tensor_quantum_exclusion(G1, G2, "4A", side, backing)
            return PositivityVerdict(QBAR0, ZERO, None, cert)
        if ("4B", side) in fired and G.dim >= 2:
            cert = tensor_quantum_exclusion(G1, G2, "4B", side, backing)
            return PositivityVerdict(QBAR0, ZERO, None, cert)
    if (
        ("4C", "pair") in fired
        and q1.status == ZERO
        and q2.status == ZERO
        and q1.certificate is not None
        and q2.certificate is not None
    ):
        backing = {
            "left": q1.certificate.to_record(),
            "right": q2.certificate.to_record(),
        }
        cert = tensor_quantum_exclusion(G1, G2, "4C", "pair", backing)
        return PositivityVerdict(QBAR0, ZERO, None, cert)
    log = Certificate(UNDECIDED, "search_log", tensor_subject(G1, G2), {"log": {}})
    return PositivityVerdict(QBAR0, UNDECIDED, None, log)


def _tensor_cbar0(G1, G2, c1, c2, tq, fired) -> PositivityVerdict:
    producer = _TENSOR_CBAR0.get((G1, G2))
    if producer is not None:
        return _tensor_cbar0_from_cert(G1, G2, producer())
    if tq.status == POSITIVE:
        # the first reversibility condition is already a classical witness
        return PositivityVerdict(CBAR0, POSITIVE, tq.witness, tq.certificate)
    for verdict, embed, other in (
        (c1, _embed_left, G2.ambient),
        (c2, _embed_right, G1.ambient),
    ):
        if verdict.status != POSITIVE or verdict.witness is None:
            continue
        phi = embed(verdict.witness[0], other)
        psi = embed(verdict.witness[1], other)
        A = QMatrix.unvec(phi, G1.ambient, G2.ambient)
        F = QMatrix.unvec([v.conj() for v in psi], G1.ambient, G2.ambient).transpose()
        cert = tensor_nontransitivity(G1, G2, A, F)
        return PositivityVerdict(CBAR0, POSITIVE, (tuple(phi), tuple(psi)), cert)
    if c1.status == ZERO and c2.status == ZERO:
        for clause in ("3A", "3B", "3C", "3F", "3E"):
            for side, G in (("left", G1), ("right", G2)):
                if (clause, side) not in fired:
                    continue
                if clause in ("3E", "3F"):
                    # the graph-level premise needs the rank-one family;
                    # handled below through the algebra clause instead
                    continue
                cert = tensor_classical_exclusion(
                    G1, G2, clause, side, c1.certificate, c2.certificate
                )
                return PositivityVerdict(CBAR0, ZERO, None, cert)
    log = Certificate(UNDECIDED, "search_log", tensor_subject(G1, G2), {"log": {}})
    return PositivityVerdict(CBAR0, UNDECIDED, None, log)


def _classify(c1, c2, q1, q2, tc, tq) -> str:
    if c1.status == ZERO and c2.status == ZERO and tq.status == POSITIVE:
        return EXTREME
    if q1.status == ZERO and q2.status == ZERO and tq.status == POSITIVE:
        return QUANTUM
    if c1.status == ZERO and c2.status == ZERO and tc.status == POSITIVE:
        return CLASSICAL
    classical_excluded = (
        c1.status == POSITIVE or c2.status == POSITIVE or tc.status == ZERO
    )
    quantum_excluded = (
        q1.status == POSITIVE or q2.status == POSITIVE or tq.status == ZERO
    )
    extreme_excluded = (
        c1.status == POSITIVE or c2.status == POSITIVE or tq.status == ZERO
    )
    if classical_excluded and quantum_excluded and extreme_excluded:
        return NONE_PROVEN
    return UNDECIDED


# ---------------------------------------------------------------------------
# reversibility index
# ---------------------------------------------------------------------------


def ri2_classify(ch: KrausChannel, budget: SearchBudget | None = None) -> Ri2Classification:
    """0, 1 or 2 by the positivity pattern of the two capacities:
    0 when even the classical capacity vanishes, 2 when the quantum
    capacity is positive, 1 in between.  Undecided verdicts surface as
    value UNDECIDED with the bracketing bounds."""
    budget = budget or _DEFAULT_BUDGET
    G = noncommutative_graph(ch)
    c = cbar0_positive(G, budget)
    if c.status == ZERO:
        q = _derived_q_zero(c)
        return Ri2Classification(0, 0, 0, c, q)
    q = qbar0_positive(G, budget)
    if q.status == POSITIVE:
        if c.status != POSITIVE and q.witness is not None:
            phi, psi = q.witness
            wcert = perp_witness_certificate(G, list(phi), [v.conj() for v in psi])
            c = PositivityVerdict(CBAR0, POSITIVE, (phi, psi), wcert)
        return Ri2Classification(2, 2, 2, c, q)
    if c.status == POSITIVE and q.status == ZERO:
        return Ri2Classification(1, 1, 1, c, q)
    if c.status == POSITIVE:
        return Ri2Classification(UNDECIDED, 1, 2, c, q)
    if q.status == ZERO:
        return Ri2Classification(UNDECIDED, 0, 1, c, q)
    return Ri2Classification(UNDECIDED, 0, 2, c, q)

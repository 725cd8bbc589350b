"""Re-checkable verdict certificates.

A Certificate packages a verdict with enough exact evidence that an
independent verifier can re-check it without repeating any search.
Evidence is stored in JSON-ready form (scalars as grammar strings), so
serialization is the identity and a round-tripped certificate verifies
iff the original does.

Verdicts about a subspace W:
  RANK_ONE_FOUND / NO_RANK_ONE   presence of a rank-one element in W
Verdicts about transitivity of a subspace L (dual statements about
the bilinear complement of L):
  TRANSITIVE / NOT_TRANSITIVE
UNDECIDED carries a search log and proves nothing.

Budgets record step counts (pair checks, reduction steps); wall-clock
time never enters a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .matrices import QMatrix
from .scalars import QScalar, format_scalar, parse_scalar
from .subspace import OperatorSubspace

RANK_ONE_FOUND = "RANK_ONE_FOUND"
NO_RANK_ONE = "NO_RANK_ONE"
TRANSITIVE = "TRANSITIVE"
NOT_TRANSITIVE = "NOT_TRANSITIVE"
UNDECIDED = "UNDECIDED"

VERDICTS = (RANK_ONE_FOUND, NO_RANK_ONE, TRANSITIVE, NOT_TRANSITIVE, UNDECIDED)


@dataclass(frozen=True)
class Certificate:
    verdict: str
    strategy: str
    subject: dict
    evidence: dict
    budget: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_record(self) -> dict:
        return {
            "kind": "certificate",
            "verdict": self.verdict,
            "strategy": self.strategy,
            "subject": self.subject,
            "evidence": self.evidence,
            "budget": self.budget,
        }

    @staticmethod
    def from_record(rec: dict) -> "Certificate":
        if rec.get("kind") != "certificate":
            raise ValueError("not a certificate record")
        return Certificate(
            verdict=rec["verdict"],
            strategy=rec["strategy"],
            subject=rec["subject"],
            evidence=rec["evidence"],
            budget=rec.get("budget", {}),
        )

    def is_decided(self) -> bool:
        return self.verdict != UNDECIDED


# -- encoding helpers (scalars to grammar strings and back) -------------------


def enc_scalar(z: QScalar) -> str:
    return format_scalar(z)


def dec_scalar(s: str) -> QScalar:
    return parse_scalar(s)


def enc_vector(v) -> list:
    return [format_scalar(x) for x in v]


def dec_vector(v) -> list:
    return [parse_scalar(x) for x in v]


def enc_matrix(M: QMatrix) -> list:
    return [[format_scalar(x) for x in row] for row in M.rows]


def dec_matrix(rows) -> QMatrix:
    return QMatrix(rows)


def enc_subspace(S: OperatorSubspace) -> dict:
    """Canonical encoding: equal subspaces encode identically."""
    return {
        "ambient": S.n,
        "basis": [enc_matrix(b) for b in S.basis()],
    }


def dec_subspace(rec: dict) -> OperatorSubspace:
    n = rec["ambient"]
    mats = [dec_matrix(rows) for rows in rec["basis"]]
    if not mats:
        return OperatorSubspace.zero(n)
    return OperatorSubspace(n, n, mats)


def subspace_subject(S: OperatorSubspace) -> dict:
    return {"kind": "subspace", **enc_subspace(S)}


# -- verifier registry ---------------------------------------------------------


_VERIFIERS: dict[str, Callable[[Certificate], bool]] = {}


def register_verifier(strategy: str):
    def deco(fn):
        _VERIFIERS[strategy] = fn
        return fn

    return deco


def verify_certificate(cert: Certificate) -> bool:
    """Re-check a certificate from its evidence alone.

    UNDECIDED certificates verify trivially (they claim nothing).
    Any malformed evidence or failed re-check returns False rather
    than raising.
    """
    if cert.verdict == UNDECIDED:
        return True
    fn = _VERIFIERS.get(cert.strategy)
    if fn is None:
        return False
    try:
        return bool(fn(cert))
    except Exception:
        return False


def verify_record(rec: dict) -> bool:
    try:
        cert = Certificate.from_record(rec)
    except Exception:
        return False
    return verify_certificate(cert)

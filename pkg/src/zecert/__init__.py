"""zecert: exact-arithmetic certificates for zero-error capacity questions.

The package decides positivity of one-shot zero-error classical and
quantum capacities of finite-dimensional channels through their
noncommutative graphs, certifies superactivation and its absence, and
synthesizes channels realizing prescribed graphs.  Every verdict is
backed by a re-checkable exact certificate over the Gaussian rationals.
"""

from .scalars import QScalar, parse_scalar, format_scalar, qs
from .matrices import QMatrix
from .subspace import OperatorSubspace, from_spanning_set, direct_sum_graph
from .certificates import Certificate, verify_certificate
from .rank1 import is_transitive
from .channel import KrausChannel, noncommutative_graph, complementary
from .zeroerr import (
    cbar0_positive,
    qbar0_positive,
    superactivation_check,
    nonsuperactivation_ledger,
    ri2_classify,
    SearchBudget,
)
from .gaussian import GaussianSpec, classify_zero_error
from .constructions import PseudoDiagonalSpec, synthesize, exact_channel

__all__ = [
    "QScalar",
    "QMatrix",
    "OperatorSubspace",
    "from_spanning_set",
    "direct_sum_graph",
    "parse_scalar",
    "format_scalar",
    "qs",
    "Certificate",
    "verify_certificate",
    "is_transitive",
    "KrausChannel",
    "noncommutative_graph",
    "complementary",
    "cbar0_positive",
    "qbar0_positive",
    "superactivation_check",
    "nonsuperactivation_ledger",
    "ri2_classify",
    "SearchBudget",
    "GaussianSpec",
    "classify_zero_error",
    "PseudoDiagonalSpec",
    "synthesize",
    "exact_channel",
]

__version__ = "0.1.0"

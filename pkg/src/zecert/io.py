"""File formats: JSON documents with exact scalars as grammar strings.

Every document is an object with a "kind" key.  Matrices are lists of
rows except in subspace files, whose basis elements are flat row-major
lists.  Scalars use the shared text grammar and round-trip exactly.

Malformed structure raises FormatError, which the CLI maps to the
usage exit code; semantic failures (a Kraus family that is not
complete, a noise matrix violating the validity inequality) are left
to the domain constructors and checkers so they can be reported as
decided negative results instead of parse errors.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .certificates import Certificate
from .channel import KrausChannel
from .gaussian import GaussianSpec
from .matrices import QMatrix
from .scalars import QScalar, ScalarParseError, format_scalar, parse_scalar
from .subspace import OperatorSubspace, from_spanning_set


class FormatError(ValueError):
    """The file does not parse as the claimed document kind."""


def _scalar(text) -> QScalar:
    if not isinstance(text, str):
        raise FormatError(f"expected a scalar string, got {type(text).__name__}")
    try:
        return parse_scalar(text)
    except ScalarParseError as exc:
        raise FormatError(str(exc)) from None


def _real_scalar(text) -> QScalar:
    z = _scalar(text)
    if not z.is_real():
        raise FormatError(f"expected a rational, got {text!r}")
    return z


def _matrix(rows, m: int | None = None, n: int | None = None, real: bool = False) -> QMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError("expected a list of rows")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise FormatError("ragged matrix rows")
    conv = _real_scalar if real else _scalar
    mat = QMatrix([[conv(x) for x in r] for r in rows])
    if m is not None and mat.shape != (m, n):
        raise FormatError(f"expected a {m}x{n} matrix, got {mat.shape[0]}x{mat.shape[1]}")
    return mat


def _enc_matrix_rows(M: QMatrix) -> list:
    return [[format_scalar(x) for x in row] for row in M.rows]


def _dim(doc, key) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise FormatError(f"{key} must be a positive integer")
    return v


# ---------------------------------------------------------------------------
# subspace documents
# ---------------------------------------------------------------------------


def subspace_to_doc(S: OperatorSubspace) -> dict:
    return {
        "kind": "subspace",
        "ambient": S.ambient,
        "basis": [[format_scalar(x) for x in B.vec()] for B in S.basis()],
    }


def subspace_from_doc(doc: dict) -> OperatorSubspace:
    n = _dim(doc, "ambient")
    basis = doc.get("basis")
    if not isinstance(basis, list):
        raise FormatError("basis must be a list")
    mats = []
    for flat in basis:
        if not isinstance(flat, list) or len(flat) != n * n:
            raise FormatError("each basis element must be a flat list of ambient^2 scalars")
        entries = [_scalar(x) for x in flat]
        mats.append(QMatrix.unvec(entries, n, n))
    return from_spanning_set(mats, ambient=n)


# ---------------------------------------------------------------------------
# channel documents
# ---------------------------------------------------------------------------


def channel_to_doc(ch: KrausChannel) -> dict:
    return {
        "kind": "channel",
        "dim_in": ch.dim_in,
        "dim_out": ch.dim_out,
        "kraus": [_enc_matrix_rows(V) for V in ch.kraus],
    }


def channel_raw_from_doc(doc: dict):
    """(dim_in, dim_out, operators) with shapes checked but without
    the completeness requirement, so an incomplete family can still be
    reported as a failed validity check."""
    n = _dim(doc, "dim_in")
    b = _dim(doc, "dim_out")
    kraus = doc.get("kraus")
    if not isinstance(kraus, list) or not kraus:
        raise FormatError("kraus must be a nonempty list of matrices")
    ops = [_matrix(rows, b, n) for rows in kraus]
    return n, b, ops


def channel_from_doc(doc: dict) -> KrausChannel:
    n, b, ops = channel_raw_from_doc(doc)
    return KrausChannel(n, b, ops)


# ---------------------------------------------------------------------------
# gaussian documents
# ---------------------------------------------------------------------------


def gaussian_to_doc(spec: GaussianSpec) -> dict:
    return {
        "kind": "gaussian",
        "s_a": spec.s_a,
        "s_b": spec.s_b,
        "K": _enc_matrix_rows(spec.K),
        "l": [format_scalar(x) for x in spec.l],
        "alpha": _enc_matrix_rows(spec.alpha),
    }


def gaussian_from_doc(doc: dict) -> GaussianSpec:
    s_a = _dim(doc, "s_a")
    s_b = _dim(doc, "s_b")
    K = _matrix(doc.get("K"), 2 * s_a, 2 * s_b, real=True)
    alpha = _matrix(doc.get("alpha"), 2 * s_b, 2 * s_b, real=True)
    l = doc.get("l")
    if not isinstance(l, list) or len(l) != 2 * s_b:
        raise FormatError("l must be a list of length 2*s_b")
    try:
        return GaussianSpec(s_a, s_b, K, tuple(_real_scalar(x) for x in l), alpha)
    except ValueError as exc:
        # symmetry and shape are document invariants, not check results
        raise FormatError(str(exc)) from None


# ---------------------------------------------------------------------------
# synthesis spec documents
# ---------------------------------------------------------------------------


def pseudo_diagonal_to_doc(spec) -> dict:
    return {
        "kind": "pseudo_diagonal_spec",
        "n": spec.n,
        "d": spec.d,
        "m": spec.m,
        "output_bound": spec.output_bound,
        "positive_basis": [_enc_matrix_rows(A) for A in spec.positive_basis],
        "psi": [[format_scalar(x) for x in v] for v in spec.psi],
        "gram": _enc_matrix_rows(spec.gram),
    }


def pseudo_diagonal_from_doc(doc: dict):
    from .constructions import PseudoDiagonalSpec

    n = _dim(doc, "n")
    d = _dim(doc, "d")
    m = _dim(doc, "m")
    basis = doc.get("positive_basis")
    psi = doc.get("psi")
    if not isinstance(basis, list) or len(basis) != d:
        raise FormatError("positive_basis must list d matrices")
    if not isinstance(psi, list) or len(psi) != d:
        raise FormatError("psi must list d vectors")
    mats = tuple(_matrix(rows, n, n) for rows in basis)
    vecs = []
    for row in psi:
        if not isinstance(row, list) or len(row) != m:
            raise FormatError("each psi entry must be a length-m vector")
        vecs.append(tuple(_scalar(x) for x in row))
    gram = _matrix(doc.get("gram"), d, d)
    return PseudoDiagonalSpec(n, d, mats, m, tuple(vecs), gram)


# ---------------------------------------------------------------------------
# dispatch and file helpers
# ---------------------------------------------------------------------------

_DECODERS = {
    "subspace": subspace_from_doc,
    "channel": channel_from_doc,
    "gaussian": gaussian_from_doc,
    "pseudo_diagonal_spec": pseudo_diagonal_from_doc,
    "certificate": Certificate.from_record,
}


def object_from_doc(doc: dict):
    if not isinstance(doc, dict):
        raise FormatError("document must be an object")
    kind = doc.get("kind")
    decoder = _DECODERS.get(kind)
    if decoder is None:
        raise FormatError(f"unknown document kind: {kind!r}")
    if kind == "certificate":
        try:
            return decoder(doc)
        except (KeyError, ValueError, TypeError) as exc:
            raise FormatError(f"bad certificate document: {exc}") from None
    return decoder(doc)


def load_doc(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    return doc


def load_any(path: str):
    return object_from_doc(load_doc(path))


def save_doc(doc: dict, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")

"""Operator subspaces of M_n over Q(i).

An OperatorSubspace stores a canonical reduced row echelon form of its
vectorized generators (row-major), so equality of subspaces is bit
equality of canonical data.  All queries are exact.

The complement used throughout is the BILINEAR trace pairing
(A, B) -> Tr(A B), with no conjugation.  Under this pairing the
complement is an involution, dim(S) + dim(perp S) = n^2, and the
complement of the adjoint-closure is the adjoint-closure of the
complement.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .matrices import (
    QMatrix,
    _row_axpy,
    sparse_kernel,
    sparse_residual,
    sparse_rref,
)
from .scalars import ONE, ZERO, QScalar


class OperatorSubspace:
    __slots__ = ("m", "n", "pivots", "rref_rows", "_key")

    def __init__(self, m: int, n: int, generators: Iterable[QMatrix] = (), *, _sparse=None):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        if _sparse is None:
            rows = []
            for g in generators:
                if g.shape != (m, n):
                    raise ValueError(f"generator shape {g.shape} != ambient ({m}, {n})")
                rows.append(_sparse_vec(g))
        else:
            rows = list(_sparse)
        pivots, rref_rows = sparse_rref(rows)
        object.__setattr__(self, "pivots", tuple(pivots))
        object.__setattr__(self, "rref_rows", tuple(rref_rows))
        key = tuple(
            (p, tuple(sorted(r.items())))
            for p, r in zip(pivots, rref_rows)
        )
        object.__setattr__(self, "_key", (m, n, key))

    def __setattr__(self, name, value):
        raise AttributeError("OperatorSubspace is immutable")

    # -- constructors -----------------------------------------------------

    @staticmethod
    def span(generators: Sequence[QMatrix]) -> "OperatorSubspace":
        if not generators:
            raise ValueError("need at least one generator to fix the ambient")
        m, n = generators[0].shape
        return OperatorSubspace(m, n, generators)

    @staticmethod
    def zero(n: int) -> "OperatorSubspace":
        return OperatorSubspace(n, n, ())

    @staticmethod
    def full(n: int) -> "OperatorSubspace":
        rows = [{k: ONE} for k in range(n * n)]
        return OperatorSubspace(n, n, _sparse=rows)

    @staticmethod
    def scalar_multiples_of_identity(n: int) -> "OperatorSubspace":
        return OperatorSubspace(n, n, [QMatrix.identity(n)])

    # -- basic queries -------------------------------------------------------

    @property
    def shape(self):
        return (self.m, self.n)

    @property
    def ambient(self) -> int:
        if self.m != self.n:
            raise ValueError("rectangular ambient")
        return self.n

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def basis(self) -> list[QMatrix]:
        return [
            QMatrix.unvec([r.get(k, ZERO) for k in range(self.m * self.n)], self.m, self.n)
            for r in self.rref_rows
        ]

    def contains(self, A: QMatrix) -> bool:
        if A.shape != self.shape:
            raise ValueError(f"shape mismatch: {A.shape} vs ambient {self.shape}")
        return not sparse_residual(_sparse_vec(A), self.pivots, self.rref_rows)

    def residual(self, A: QMatrix) -> QMatrix:
        """A minus its projection along the canonical pivots; zero iff
        A is a member."""
        if A.shape != self.shape:
            raise ValueError("shape mismatch")
        r = sparse_residual(_sparse_vec(A), self.pivots, self.rref_rows)
        return QMatrix.unvec([r.get(k, ZERO) for k in range(self.m * self.n)], self.m, self.n)

    def coordinates_of(self, A: QMatrix):
        """Coefficients of A in the canonical basis, or None."""
        if A.shape != self.shape:
            return None
        r = dict(_sparse_vec(A))
        coords = []
        index = {p: row for p, row in zip(self.pivots, self.rref_rows)}
        for p in self.pivots:
            c = r.get(p, ZERO)
            coords.append(c)
            if not c.is_zero():
                _row_axpy(r, -c, index[p])
        if r:
            return None
        return coords

    def contains_subspace(self, other: "OperatorSubspace") -> bool:
        if other.shape != self.shape:
            return False
        return all(
            not sparse_residual(row, self.pivots, self.rref_rows)
            for row in other.rref_rows
        )

    def contains_identity(self) -> bool:
        if self.m != self.n:
            return False
        return self.contains(QMatrix.identity(self.n))

    # -- equality ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorSubspace):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"OperatorSubspace({self.m}x{self.n}, dim={self.dim})"

    # -- lattice / transform operations ----------------------------------------------

    def add(self, other: "OperatorSubspace") -> "OperatorSubspace":
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        rows = [dict(r) for r in self.rref_rows] + [dict(r) for r in other.rref_rows]
        return OperatorSubspace(self.m, self.n, _sparse=rows)

    def bilinear_perp(self) -> "OperatorSubspace":
        """Annihilator under (A, B) -> Tr(A B)."""
        m, n = self.m, self.n
        pairing_rows = []
        for r in self.rref_rows:
            # entry A[i][j] at vec index i*n + j pairs with B[j][i] at
            # vec index j*m + i of the n x m ambient
            pairing_rows.append({(k % n) * m + (k // n): v for k, v in r.items()})
        kern = sparse_kernel(pairing_rows, m * n, ONE)
        return OperatorSubspace(n, m, _sparse=kern)

    def transpose_space(self) -> "OperatorSubspace":
        rows = [
            {(k % self.n) * self.m + (k // self.n): v for k, v in r.items()}
            for r in self.rref_rows
        ]
        return OperatorSubspace(self.n, self.m, _sparse=rows)

    def conj_space(self) -> "OperatorSubspace":
        rows = [{k: v.conj() for k, v in r.items()} for r in self.rref_rows]
        return OperatorSubspace(self.m, self.n, _sparse=rows)

    def adjoint_space(self) -> "OperatorSubspace":
        rows = [
            {(k % self.n) * self.m + (k // self.n): v.conj() for k, v in r.items()}
            for r in self.rref_rows
        ]
        return OperatorSubspace(self.n, self.m, _sparse=rows)

    def schur_map(self, T: QMatrix) -> "OperatorSubspace":
        """Entrywise product of every member with T.

        T must have no zero entry, so the map is invertible and the
        image has the same dimension.
        """
        if T.shape != self.shape:
            raise ValueError("shape mismatch")
        tv = T.vec()
        if any(t.is_zero() for t in tv):
            raise ValueError("schur_map requires an entrywise-nonzero matrix")
        rows = []
        for r in self.rref_rows:
            rows.append({k: v * tv[k] for k, v in r.items()})
        return OperatorSubspace(self.m, self.n, _sparse=rows)

    def tensor(self, other: "OperatorSubspace") -> "OperatorSubspace":
        """Spatial tensor product; ambient M_{m m'} for square inputs.

        Materializes all basis kron pairs.  Fine up to a few hundred
        generators in an ambient of a few thousand columns; the
        256-dimensional ambients of the deep checks are handled
        pairwise elsewhere and never pass through here.
        """
        m2, n2 = other.m, other.n
        N = self.n * n2
        rows = []
        for ra in self.rref_rows:
            for rb in other.rref_rows:
                nr = {}
                for ka, va in ra.items():
                    ia, ja = divmod(ka, self.n)
                    for kb, vb in rb.items():
                        ib, jb = divmod(kb, other.n)
                        idx = (ia * m2 + ib) * N + (ja * n2 + jb)
                        nr[idx] = va * vb
                rows.append(nr)
        return OperatorSubspace(self.m * m2, N, _sparse=rows)

    def commutant(self) -> "OperatorSubspace":
        """All X with XB = BX for every member B."""
        n = self.ambient
        rows = []
        for b in self.basis():
            for i in range(n):
                for j in range(n):
                    row: dict[int, QScalar] = {}
                    for k in range(n):
                        c = b[k, j]
                        if not c.is_zero():
                            idx = i * n + k
                            row[idx] = row.get(idx, ZERO) + c
                    for k in range(n):
                        c = b[i, k]
                        if not c.is_zero():
                            idx = k * n + j
                            row[idx] = row.get(idx, ZERO) - c
                    row = {k: v for k, v in row.items() if not v.is_zero()}
                    if row:
                        rows.append(row)
        kern = sparse_kernel(rows, n * n, ONE)
        return OperatorSubspace(n, n, _sparse=kern)

    def sandwich_span(self, A: QMatrix) -> "OperatorSubspace":
        """Span of X A Y^T over basis elements X, Y."""
        n = self.ambient
        if A.shape != (n, n):
            raise ValueError("shape mismatch")
        bs = self.basis()
        prods = []
        for X in bs:
            XA = X @ A
            for Y in bs:
                prods.append(XA @ Y.transpose())
        return OperatorSubspace(n, n, prods)

    # -- structural predicates --------------------------------------------------------

    def is_symmetric(self) -> bool:
        """Closed under the adjoint."""
        if self.m != self.n:
            return False
        return all(self.contains(b.adjoint()) for b in self.basis())

    def is_algebra(self) -> bool:
        """Closed under multiplication (not necessarily unital)."""
        if self.m != self.n:
            return False
        bs = self.basis()
        return all(self.contains(a @ b) for a in bs for b in bs)

    def is_noncommutative_graph(self) -> bool:
        """Symmetric and contains the identity."""
        return self.contains_identity() and self.is_symmetric()


def from_spanning_set(mats: Sequence[QMatrix], ambient: int | None = None) -> OperatorSubspace:
    """Canonical subspace spanned by the given square matrices.

    An empty spanning set needs an explicit ambient dimension.
    """
    if not mats:
        if ambient is None:
            raise ValueError("empty spanning set: supply the ambient dimension")
        return OperatorSubspace.zero(ambient)
    m, n = mats[0].shape
    if m != n:
        raise ValueError("square matrices required")
    if ambient is not None and ambient != n:
        raise ValueError("ambient disagrees with generator shape")
    return OperatorSubspace(n, n, mats)


def direct_sum_graph(G1: OperatorSubspace, G2: OperatorSubspace) -> OperatorSubspace:
    """Block subspace {[[A, B], [C, D]] : A in G1, D in G2, B, C free}.

    dim = dim G1 + dim G2 + 2 n1 n2; symmetric and unital whenever G1
    and G2 are.  Any rank-one matrix in its bilinear complement is
    forced block-diagonal (the complement has zero off-diagonal
    blocks), so rank-one absence reduces to the two components.
    """
    n1, n2 = G1.ambient, G2.ambient
    n = n1 + n2
    rows = []
    for r in G1.rref_rows:
        rows.append({(k // n1) * n + (k % n1): v for k, v in r.items()})
    for r in G2.rref_rows:
        rows.append(
            {(n1 + k // n2) * n + n1 + (k % n2): v for k, v in r.items()}
        )
    for i in range(n1):
        for j in range(n2):
            rows.append({i * n + n1 + j: ONE})
            rows.append({(n1 + j) * n + i: ONE})
    return OperatorSubspace(n, n, _sparse=rows)


def _sparse_vec(A: QMatrix) -> dict:
    out = {}
    n = A.n
    for i in range(A.m):
        row = A.rows[i]
        base = i * n
        for j in range(n):
            if not row[j].is_zero():
                out[base + j] = row[j]
    return out

"""Exact dense matrices over Q(i) and a sparse elimination engine.

QMatrix is a small immutable dense matrix of QScalar entries, used for
channels, graph generators and certificates (dims stay modest).  The
elimination engine works on sparse rows (dict column -> scalar) so that
subspace canonicalization stays cheap on tensor-product ambients where
rows have tiny support inside a huge column space.

The engine is generic over the scalar field: entries only need the
arithmetic operators, is_zero(), and equality.  QScalar and ExtScalar
both qualify.  vec is row-major throughout: vec(M)[i*n + j] = M[i, j].
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import ONE, ZERO, QScalar, parse_scalar, two_gaussian_squares


def _coerce(x) -> QScalar:
    if isinstance(x, QScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QScalar(x, 0)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot use {type(x).__name__} as a matrix entry")


# ---------------------------------------------------------------------------
# sparse elimination engine
# ---------------------------------------------------------------------------


def sparse_rref(rows: Iterable[dict]):
    """Reduced row echelon form of sparse rows.

    Returns (pivot_cols, reduced_rows): pivot columns in increasing
    order and the matching rows, each normalized to a unit pivot and
    fully reduced against the others.  Input rows are not mutated.
    """
    pivot_rows: dict[int, dict] = {}
    for row in rows:
        r = dict(row)
        while r:
            hit = None
            for c in r:
                if c in pivot_rows:
                    hit = c if hit is None or c < hit else hit
            if hit is None:
                break
            _row_axpy(r, -r[hit], pivot_rows[hit])
        if not r:
            continue
        lead = min(r)
        inv = r[lead].inv() if hasattr(r[lead], "inv") else None
        if inv is None:
            one = r[lead] / r[lead]
            inv = one / r[lead]
        _row_scale(r, inv)
        pivot_rows[lead] = r
    pivots = sorted(pivot_rows)
    # back-substitute so every pivot column is cleared elsewhere
    for p in reversed(pivots):
        prow = pivot_rows[p]
        for q in pivots:
            if q >= p:
                break
            other = pivot_rows[q]
            if p in other:
                _row_axpy(other, -other[p], prow)
    return pivots, [pivot_rows[p] for p in pivots]


def _row_axpy(target: dict, coeff, source: dict):
    """target += coeff * source, dropping entries that become zero."""
    if coeff.is_zero():
        return
    for c, v in source.items():
        cur = target.get(c)
        nv = coeff * v if cur is None else cur + coeff * v
        if nv.is_zero():
            target.pop(c, None)
        else:
            target[c] = nv


def _row_scale(row: dict, coeff):
    for c in list(row):
        row[c] = row[c] * coeff


def sparse_rank(rows: Iterable[dict]) -> int:
    pivots, _ = sparse_rref(rows)
    return len(pivots)


def sparse_residual(vector: dict, pivots: Sequence[int], rref_rows: Sequence[dict]) -> dict:
    """Reduce a sparse vector against an RREF; empty dict <=> in span."""
    r = dict(vector)
    index = {p: row for p, row in zip(pivots, rref_rows)}
    for p in pivots:
        if p in r:
            _row_axpy(r, -r[p], index[p])
    return r


def sparse_kernel(rows: Iterable[dict], ncols: int, one) -> list[dict]:
    """Basis of the right kernel of the matrix with the given rows."""
    pivots, rref_rows = sparse_rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = {free: one}
        for p, row in zip(pivots, rref_rows):
            if free in row:
                v[p] = -row[free]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------


class QMatrix:
    __slots__ = ("rows", "m", "n")

    def __init__(self, rows):
        data = tuple(tuple(_coerce(x) for x in r) for r in rows)
        if not data:
            raise ValueError("QMatrix needs at least one row")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "m", len(data))
        object.__setattr__(self, "n", width)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zeros(m: int, n: int | None = None) -> "QMatrix":
        n = m if n is None else n
        return QMatrix([[ZERO] * n for _ in range(m)])

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def diag(entries) -> "QMatrix":
        es = [_coerce(e) for e in entries]
        n = len(es)
        return QMatrix(
            [[es[i] if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def column(entries) -> "QMatrix":
        return QMatrix([[e] for e in entries])

    @staticmethod
    def unvec(v: Sequence, m: int, n: int) -> "QMatrix":
        if len(v) != m * n:
            raise ValueError("length mismatch")
        return QMatrix([[v[i * n + j] for j in range(n)] for i in range(m)])

    @staticmethod
    def from_blocks(blocks) -> "QMatrix":
        """Assemble from a 2d grid of QMatrix blocks."""
        out_rows = []
        for brow in blocks:
            h = brow[0].m
            if any(b.m != h for b in brow):
                raise ValueError("inconsistent block heights")
            for i in range(h):
                row: list[QScalar] = []
                for b in brow:
                    row.extend(b.rows[i])
                out_rows.append(row)
        width = len(out_rows[0])
        if any(len(r) != width for r in out_rows):
            raise ValueError("inconsistent block widths")
        return QMatrix(out_rows)

    @staticmethod
    def block_diag(*mats: "QMatrix") -> "QMatrix":
        total_m = sum(a.m for a in mats)
        total_n = sum(a.n for a in mats)
        rows = [[ZERO] * total_n for _ in range(total_m)]
        ro = co = 0
        for a in mats:
            for i in range(a.m):
                for j in range(a.n):
                    rows[ro + i][co + j] = a.rows[i][j]
            ro += a.m
            co += a.n
        return QMatrix(rows)

    # -- access ----------------------------------------------------------

    @property
    def shape(self):
        return (self.m, self.n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int):
        return self.rows[i]

    def col(self, j: int):
        return tuple(self.rows[i][j] for i in range(self.m))

    def submatrix(self, row_idx, col_idx) -> "QMatrix":
        return QMatrix([[self.rows[i][j] for j in col_idx] for i in row_idx])

    def vec(self) -> list[QScalar]:
        return [x for r in self.rows for x in r]

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "QMatrix":
        c = _coerce(c)
        return QMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.n != other.m:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        bt = list(zip(*other.rows))
        out = []
        for r in self.rows:
            out_row = []
            for c in bt:
                acc = ZERO
                for a, b in zip(r, c):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return QMatrix(out)

    def _same_shape(self, other: "QMatrix"):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def transpose(self) -> "QMatrix":
        return QMatrix(list(zip(*self.rows)))

    def conj(self) -> "QMatrix":
        return QMatrix([[a.conj() for a in r] for r in self.rows])

    def adjoint(self) -> "QMatrix":
        return self.conj().transpose()

    def trace(self) -> QScalar:
        if self.m != self.n:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.m):
            acc = acc + self.rows[i][i]
        return acc

    def hadamard(self, other: "QMatrix") -> "QMatrix":
        self._same_shape(other)
        return QMatrix(
            [
                [a * b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def kron(self, other: "QMatrix") -> "QMatrix":
        out = []
        for i in range(self.m):
            for k in range(other.m):
                row = []
                for j in range(self.n):
                    a = self.rows[i][j]
                    if a.is_zero():
                        row.extend([ZERO] * other.n)
                    else:
                        row.extend(a * b for b in other.rows[k])
                out.append(row)
        return QMatrix(out)

    # -- structure tests ----------------------------------------------------

    def is_hermitian(self) -> bool:
        if self.m != self.n:
            return False
        for i in range(self.m):
            for j in range(i, self.n):
                if self.rows[i][j] != self.rows[j][i].conj():
                    return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        from .scalars import format_scalar

        body = "; ".join(
            " ".join(format_scalar(x) for x in r) for r in self.rows
        )
        return f"QMatrix[{self.m}x{self.n}: {body}]"

    # -- elimination-backed queries ------------------------------------------

    def _sparse_rows(self) -> list[dict]:
        out = []
        for r in self.rows:
            d = {j: x for j, x in enumerate(r) if not x.is_zero()}
            out.append(d)
        return out

    def rank(self) -> int:
        return sparse_rank(self._sparse_rows())

    def rref(self):
        pivots, rows = sparse_rref(self._sparse_rows())
        dense = []
        for r in rows:
            dense.append([r.get(j, ZERO) for j in range(self.n)])
        mat = QMatrix(dense) if dense else QMatrix.zeros(1, self.n)
        return pivots, mat

    def kernel_basis(self) -> list[list[QScalar]]:
        sparse = sparse_kernel(self._sparse_rows(), self.n, ONE)
        return [[v.get(j, ZERO) for j in range(self.n)] for v in sparse]

    def solve(self, b: Sequence[QScalar]):
        """One solution x of self @ x = b (as a list), or None."""
        if len(b) != self.m:
            raise ValueError("rhs length mismatch")
        aug = []
        for i, r in enumerate(self.rows):
            d = {j: x for j, x in enumerate(r) if not x.is_zero()}
            bi = _coerce(b[i])
            if not bi.is_zero():
                d[self.n] = bi
            aug.append(d)
        pivots, rows = sparse_rref(aug)
        if self.n in pivots:
            return None
        x = [ZERO] * self.n
        for p, row in zip(pivots, rows):
            x[p] = row.get(self.n, ZERO)
        return x

    def inverse(self) -> "QMatrix":
        if self.m != self.n:
            raise ValueError("inverse of a non-square matrix")
        n = self.n
        aug = []
        for i, r in enumerate(self.rows):
            d = {j: x for j, x in enumerate(r) if not x.is_zero()}
            d[n + i] = ONE
            aug.append(d)
        pivots, rows = sparse_rref(aug)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise ValueError("matrix is singular")
        inv_rows = []
        for row in rows[:n]:
            inv_rows.append([row.get(n + j, ZERO) for j in range(n)])
        return QMatrix(inv_rows)

    # -- positivity -----------------------------------------------------------

    def psd_certificate(self):
        """Exact PSD check via pivoted LDL^H.

        Returns (True, pivots) where pivots is a list of
        (rational_pivot, column_vector) with
        self == sum_k pivot_k * col_k col_k^H, or (False, None).
        Requires a Hermitian input.
        """
        if not self.is_hermitian():
            return False, None
        a = [list(r) for r in self.rows]
        n = self.n
        active = list(range(n))
        pivots = []
        while active:
            pos = None
            for idx in active:
                d = a[idx][idx]
                # diagonal of a Hermitian matrix is real
                if d.re < 0:
                    return False, None
                if d.re > 0:
                    pos = idx
                    break
            if pos is None:
                # all remaining diagonal entries vanish: PSD forces the
                # whole remaining block to vanish
                for i in active:
                    for j in active:
                        if not a[i][j].is_zero():
                            return False, None
                break
            d = a[pos][pos]
            colv = [ZERO] * n
            for i in range(n):
                colv[i] = a[i][pos] / d
            pivots.append((d.re, colv))
            active.remove(pos)
            for i in active:
                ci = a[i][pos]
                if ci.is_zero():
                    continue
                for j in active:
                    a[i][j] = a[i][j] - ci * (a[pos][j] / d)
            # clear the pivot row/column in the working copy
            for i in active:
                a[i][pos] = ZERO
                a[pos][i] = ZERO
        return True, pivots

    def is_psd(self) -> bool:
        ok, _ = self.psd_certificate()
        return ok

    def psd_factor(self):
        """A rational B with B^H B == self, or None if not PSD.

        B has at most 2*rank(self) rows: each LDL pivot d splits as
        |z1|^2 + |z2|^2 with z1, z2 Gaussian rationals.
        """
        ok, pivots = self.psd_certificate()
        if not ok:
            return None
        rows = []
        for d, colv in pivots:
            z1, z2 = two_gaussian_squares(d)
            for z in (z1, z2):
                if z.is_zero():
                    continue
                rows.append([z * x.conj() for x in colv])
        if not rows:
            rows = [[ZERO] * self.n]
        return QMatrix(rows)

    # -- numeric mirror ---------------------------------------------------------

    def to_numpy(self):
        import numpy as np

        out = np.empty((self.m, self.n), dtype=complex)
        for i in range(self.m):
            for j in range(self.n):
                out[i, j] = self.rows[i][j].to_complex()
        return out


# ---------------------------------------------------------------------------
# functional spellings of the core operations
# ---------------------------------------------------------------------------


def kron(a: QMatrix, b: QMatrix) -> QMatrix:
    return a.kron(b)


def adjoint(a: QMatrix) -> QMatrix:
    return a.adjoint()


def transpose(a: QMatrix) -> QMatrix:
    return a.transpose()


def trace(a: QMatrix) -> QScalar:
    return a.trace()


def rank(a: QMatrix) -> int:
    return a.rank()


def kernel_basis(a: QMatrix) -> list[QMatrix]:
    """Exact basis of the right null space, as column vectors."""
    return [QMatrix.column(v) for v in a.kernel_basis()]


def solve_linear(A: QMatrix, b: QMatrix):
    """Particular solution of A x = b as a column vector, or None."""
    if b.n != 1:
        raise ValueError("rhs must be a column vector")
    x = A.solve([b[i, 0] for i in range(b.m)])
    return None if x is None else QMatrix.column(x)


def is_psd_hermitian(a: QMatrix) -> bool:
    """Exact PSD decision; raises on a non-Hermitian input."""
    if a.m != a.n or not a.is_hermitian():
        raise ValueError("is_psd_hermitian requires a Hermitian matrix")
    return a.is_psd()

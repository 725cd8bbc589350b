"""Finite-dimensional quantum channels in Kraus form, over exact scalars.

A channel is a family of Kraus operators V_k (each dim_out x dim_in,
entries in Q(i)) with sum_k V_k^H V_k = I checked exactly at
construction.  Everything downstream -- the complementary channel, the
noncommutative graph span{V_j^H V_k}, Choi rank, tensor products and a
direct sum whose graph is the block direct-sum graph -- stays in exact
arithmetic.

Conventions.  apply() is rho -> sum V rho V^H.  The complementary
channel sends rho to the matrix [Tr(V_k rho V_l^H)]_{k,l}; on a dyad
|phi><psi| its (k,l) entry is <psi|V_l^H V_k|phi>, which is how the
output-orthogonality test is evaluated.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .matrices import QMatrix, kron
from .scalars import ONE, ZERO, QScalar, qs
from .subspace import OperatorSubspace, direct_sum_graph

# channels built by tensor() remember their factors, because the graph
# of a product factorizes and the factor route is far cheaper
_TENSOR_FACTORS: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()
_DIRECT_SUM_FACTORS: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def _as_column(vec) -> QMatrix:
    if isinstance(vec, QMatrix):
        if vec.n != 1:
            raise ValueError("expected a column vector")
        return vec
    return QMatrix.column(list(vec))


def _gram(a: QMatrix, b: QMatrix) -> QMatrix:
    """a^H b accumulated row by row, skipping zero entries.

    Kraus operators of structured channels (direct sums, complementary
    families) are mostly zeros; the dense product would spend almost
    all its time multiplying exact zeros.
    """
    acc = [[ZERO] * b.n for _ in range(a.n)]
    for i in range(a.m):
        ra, rb = a.row(i), b.row(i)
        nza = [(j, x.conj()) for j, x in enumerate(ra) if not x.is_zero()]
        if not nza:
            continue
        nzb = [(l, y) for l, y in enumerate(rb) if not y.is_zero()]
        for j, xc in nza:
            row = acc[j]
            for l, y in nzb:
                row[l] = row[l] + xc * y
    return QMatrix(acc)


@dataclass(frozen=True)
class KrausChannel:
    """Kraus family with exact completeness.

    Construction fails unless every operator is dim_out x dim_in and
    sum_k V_k^H V_k equals the identity exactly.
    """

    dim_in: int
    dim_out: int
    kraus: tuple

    def __post_init__(self):
        object.__setattr__(self, "kraus", tuple(self.kraus))
        if not self.kraus:
            raise ValueError("a channel needs at least one Kraus operator")
        for v in self.kraus:
            if v.shape != (self.dim_out, self.dim_in):
                raise ValueError(
                    "Kraus operator shape %r does not match (%d, %d)"
                    % (v.shape, self.dim_out, self.dim_in)
                )
        total = QMatrix.zeros(self.dim_in)
        for v in self.kraus:
            total = total + _gram(v, v)
        if total != QMatrix.identity(self.dim_in):
            raise ValueError("Kraus family is not exactly trace preserving")

    @property
    def kraus_count(self) -> int:
        return len(self.kraus)


def validate(ch: KrausChannel) -> bool:
    """Re-check the completeness relation sum V^H V = I exactly."""
    total = QMatrix.zeros(ch.dim_in)
    for v in ch.kraus:
        if v.shape != (ch.dim_out, ch.dim_in):
            return False
        total = total + _gram(v, v)
    return total == QMatrix.identity(ch.dim_in)


def identity_channel(n: int) -> KrausChannel:
    return KrausChannel(n, n, (QMatrix.identity(n),))


def apply_channel(ch: KrausChannel, rho: QMatrix) -> QMatrix:
    if rho.shape != (ch.dim_in, ch.dim_in):
        raise ValueError("state has wrong shape")
    out = QMatrix.zeros(ch.dim_out)
    for v in ch.kraus:
        out = out + v @ rho @ v.adjoint()
    return out


def complementary_apply(ch: KrausChannel, rho: QMatrix) -> QMatrix:
    """Environment output: the matrix with (k,l) entry Tr(V_k rho V_l^H)."""
    if rho.shape != (ch.dim_in, ch.dim_in):
        raise ValueError("state has wrong shape")
    d = ch.kraus_count
    rows = []
    for k in range(d):
        vk_rho = ch.kraus[k] @ rho
        row = []
        for l in range(d):
            # Tr(V_k rho V_l^H) as an entrywise contraction, no third product
            vl = ch.kraus[l]
            acc = ZERO
            for i in range(ch.dim_out):
                for j in range(ch.dim_in):
                    acc = acc + vk_rho[i, j] * vl[i, j].conj()
            row.append(acc)
        rows.append(row)
    return QMatrix(rows)


def complementary(ch: KrausChannel) -> KrausChannel:
    """A Kraus family for the complementary channel.

    The b-th operator collects the b-th rows of all the V_k, so its
    completeness sum is the original one regrouped; the identity
    apply(complementary(ch), rho) == complementary_apply(ch, rho) holds
    entry for entry.
    """
    d = ch.kraus_count
    ops = []
    for b in range(ch.dim_out):
        ops.append(QMatrix([list(ch.kraus[k].row(b)) for k in range(d)]))
    return KrausChannel(ch.dim_in, d, tuple(ops))


def noncommutative_graph(ch: KrausChannel) -> OperatorSubspace:
    """span{V_j^H V_k} over all Kraus pairs.

    A channel built by tensor() is resolved through its factors:
    (V (x) W)^H (V' (x) W') = (V^H V') (x) (W^H W'), so the graph is
    the tensor of the factor graphs, computed without touching the
    large product operators."""
    factors = _TENSOR_FACTORS.get(ch)
    if factors is not None:
        left, right = factors
        return noncommutative_graph(left).tensor(noncommutative_graph(right))
    factors = _DIRECT_SUM_FACTORS.get(ch)
    if factors is not None:
        # the coupled-sector recipe realizes the block sum graph exactly
        left, right = factors
        return direct_sum_graph(
            noncommutative_graph(left), noncommutative_graph(right)
        )
    return graph_from_gram(ch)


def graph_from_gram(ch: KrausChannel) -> OperatorSubspace:
    """The graph computed directly from the Kraus Gram family, ignoring
    any factor structure; the cross-check route for the caches above."""
    gens = []
    for vj in ch.kraus:
        for vk in ch.kraus:
            gens.append(_gram(vj, vk))
    return OperatorSubspace.span(gens)


def choi_rank(ch: KrausChannel) -> int:
    return QMatrix([v.vec() for v in ch.kraus]).rank()


def tensor(ch1: KrausChannel, ch2: KrausChannel) -> KrausChannel:
    ops = tuple(kron(v, w) for v in ch1.kraus for w in ch2.kraus)
    out = KrausChannel(
        ch1.dim_in * ch2.dim_in, ch1.dim_out * ch2.dim_out, ops
    )
    _TENSOR_FACTORS[out] = (ch1, ch2)
    return out


# ---------------------------------------------------------------------------
# direct sum
# ---------------------------------------------------------------------------


def _banded_isometries(tall: int, wide: int) -> list[QMatrix]:
    """Spanning family of tall x wide matrices with orthonormal columns.

    Shift embeddings J_s place column t at row (s+t) mod tall; sign
    flips on single band rows extend each J_s to a spanning set for the
    matrices supported on its band.  Requires tall >= wide.
    """
    fam = []
    for s in range(tall):
        base = [[ZERO] * wide for _ in range(tall)]
        for t in range(wide):
            base[(s + t) % tall][t] = ONE
        fam.append(QMatrix(base))
        for k in range(wide):
            flipped = [list(r) for r in base]
            flipped[(s + k) % tall][k] = -ONE
            fam.append(QMatrix(flipped))
    return fam


def direct_sum(ch1: KrausChannel, ch2: KrausChannel) -> KrausChannel:
    """Channel on the direct sum input whose graph is the block sum graph.

    Three output sectors: the first two carry scaled copies of the given
    channels acting on their own input blocks; the third family couples
    the blocks through pairs [c*I, c'*U] with U running over a spanning
    set of isometric-column corner matrices, four phase variants each so
    the completeness cross terms cancel exactly.  Products of the
    coupling operators contribute scalar diagonal blocks and decoupled
    full corner blocks, so the graph equals the block direct-sum graph
    of the component graphs.
    """
    n1, n2 = ch1.dim_in, ch2.dim_in
    b1, b2 = ch1.dim_out, ch2.dim_out
    n = n1 + n2
    tall, wide = max(n1, n2), min(n1, n2)
    family = _banded_isometries(tall, wide)
    r_count = len(family)
    # lam^2 + 4*R*alpha^2 = 1 with everything rational
    den = Fraction(4 * r_count + 1)
    lam = qs(Fraction(4 * r_count - 1) / den)
    alpha = qs(Fraction(2) / den)
    phases = (qs(1), qs(-1), qs(0, 1), qs(0, -1))

    dim_out = b1 + b2 + r_count * tall
    ops = []

    def _place(block: QMatrix, row0: int, col0: int) -> QMatrix:
        rows = [[ZERO] * n for _ in range(dim_out)]
        for i in range(block.m):
            for j in range(block.n):
                rows[row0 + i][col0 + j] = block[i, j]
        return QMatrix(rows)

    for v in ch1.kraus:
        ops.append(_place(v.scale(lam), 0, 0))
    for w in ch2.kraus:
        ops.append(_place(w.scale(lam), b1, n1))
    for r, u in enumerate(family):
        row0 = b1 + b2 + r * tall
        for gamma in phases:
            rows = [[ZERO] * n for _ in range(dim_out)]
            if n1 >= n2:
                # sector hosts alpha*I on block 1 and a scaled corner on block 2
                for i in range(n1):
                    rows[row0 + i][i] = alpha
                for i in range(tall):
                    for j in range(wide):
                        rows[row0 + i][n1 + j] = gamma * alpha * u[i, j]
            else:
                for i in range(n2):
                    rows[row0 + i][n1 + i] = alpha
                for i in range(tall):
                    for j in range(wide):
                        rows[row0 + i][j] = gamma * alpha * u[i, j]
            ops.append(QMatrix(rows))
    out = KrausChannel(n, dim_out, tuple(ops))
    _DIRECT_SUM_FACTORS[out] = (ch1, ch2)
    return out


# ---------------------------------------------------------------------------
# output orthogonality
# ---------------------------------------------------------------------------


def outputs_orthogonal(ch: KrausChannel, phi, psi) -> bool:
    """Whether the channel outputs on phi and psi have orthogonal supports.

    Decided through the environment: the supports are orthogonal exactly
    when every entry <psi|V_l^H V_k|phi> vanishes, i.e. the complementary
    channel kills the dyad |phi><psi|.
    """
    x = _as_column(phi)
    y = _as_column(psi)
    if x.is_zero() or y.is_zero():
        raise ValueError("output orthogonality needs nonzero vectors")
    dyad = x @ y.adjoint()
    return complementary_apply(ch, dyad).is_zero()


def supports_orthogonal(a: QMatrix, b: QMatrix) -> bool:
    """Exact support orthogonality of two PSD matrices (their product is 0)."""
    return (a @ b).is_zero()


# ---------------------------------------------------------------------------
# exact generators
# ---------------------------------------------------------------------------


def pythagorean_unit(n: int) -> list[QScalar]:
    """Deterministic rational unit vector in R^n with all entries nonzero."""
    if n < 1:
        raise ValueError("need a positive dimension")
    entries = [Fraction(1)]
    for _ in range(n - 1):
        entries = [Fraction(3, 5) * e for e in entries] + [Fraction(4, 5)]
    return [qs(e) for e in entries]


def fully_noisy_channel(n: int) -> KrausChannel:
    """Channel with noncommutative graph equal to all of M_n.

    Kraus operators c_i e_ij with a fixed rational unit vector c having
    no zero entries: completeness telescopes column by column, and the
    products (c_i e_ji)(c_k e_kl) sweep every matrix unit.
    """
    c = pythagorean_unit(n)
    ops = []
    for i in range(n):
        for j in range(n):
            rows = [[ZERO] * n for _ in range(n)]
            rows[i][j] = c[i]
            ops.append(QMatrix(rows))
    return KrausChannel(n, n, tuple(ops))


def dephasing_channel(n: int = 2) -> KrausChannel:
    ops = []
    for i in range(n):
        rows = [[ZERO] * n for _ in range(n)]
        rows[i][i] = ONE
        ops.append(QMatrix(rows))
    return KrausChannel(n, n, tuple(ops))


def random_channel(n: int, ops: int, rng, spread: int = 2) -> KrausChannel:
    """Exact random channel: small rational Kraus pieces plus a closer.

    Samples ops-1 operators with entries of magnitude <= spread over a
    denominator large enough that S = I - sum V^H V stays positive
    definite; the last Kraus block is an exact factor of S, split into
    n-row chunks.  Resamples in the rare case the PSD check fails.
    """
    if ops < 1:
        raise ValueError("need at least one Kraus operator")
    den = 4 * n * max(ops, 2) * spread
    while True:
        partial = []
        total = QMatrix.zeros(n)
        for _ in range(ops - 1):
            rows = [
                [
                    QScalar(
                        Fraction(rng.randint(-spread, spread), den),
                        Fraction(rng.randint(-spread, spread), den),
                    )
                    for _ in range(n)
                ]
                for _ in range(n)
            ]
            v = QMatrix(rows)
            partial.append(v)
            total = total + v.adjoint() @ v
        s = QMatrix.identity(n) - total
        factor = s.psd_factor()
        if factor is None:
            continue
        closers = []
        for start in range(0, factor.m, n):
            chunk = [list(factor.row(i)) for i in range(start, min(start + n, factor.m))]
            while len(chunk) < n:
                chunk.append([ZERO] * n)
            closers.append(QMatrix(chunk))
        if not closers:
            closers = [QMatrix.zeros(n)]
        return KrausChannel(n, n, tuple(partial + closers))


def random_rank_one_kraus_channel(n: int, rng) -> KrausChannel:
    """Exact channel all of whose Kraus operators have rank one.

    Column j of the coefficient array is a random signed permutation of
    a rational unit vector, so completeness telescopes exactly.
    """
    base = pythagorean_unit(n)
    ops = []
    for j in range(n):
        perm = list(range(n))
        rng.shuffle(perm)
        for i in range(n):
            rows = [[ZERO] * n for _ in range(n)]
            sign = ONE if rng.randint(0, 1) else -ONE
            rows[i][j] = sign * base[perm[i]]
            ops.append(QMatrix(rows))
    return KrausChannel(n, n, tuple(ops))

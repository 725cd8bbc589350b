"""Zero-error criteria for Bosonic Gaussian channels, as symplectic
linear algebra.

A Gaussian channel enters only through its finite matrix data: mode
counts s_a, s_b, the real-rational matrix K mapping the output
symplectic space into the input one, the row l (stored because the
interchange format carries it, unused by every criterion: a unitary
equivalence removes it), and the symmetric matrix alpha.  Weyl
operators and the CCR representation are never constructed.

Both one-shot capacities are decided by the kernel of alpha: the
classical one is positive iff the kernel is nonzero, the quantum one
iff the output symplectic form restricts to a nonzero form on that
kernel.  Positive values are infinite, and the asymptotic capacities
agree with the one-shot ones, so no regularization question arises.
Tensor products act as direct sums on the matrix data, which is why
Gaussian channels can never superactivate each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .matrices import QMatrix, kernel_basis
from .scalars import QScalar, qs

ZERO = "ZERO"
POSITIVE_INFINITE = "POSITIVE_INFINITE"

_HALF_I = qs(0, Fraction(1, 2))


def _require_real(M: QMatrix, name: str):
    for row in M.rows:
        for x in row:
            if not x.is_real():
                raise ValueError(f"{name} must be real-rational")


@dataclass(frozen=True)
class SymplecticForm:
    """Nondegenerate antisymmetric form on a 2s-dimensional space."""

    s: int
    Delta: QMatrix

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("at least one mode")
        if self.Delta.shape != (2 * self.s, 2 * self.s):
            raise ValueError("form must be 2s x 2s")
        _require_real(self.Delta, "Delta")
        if self.Delta.transpose() != -self.Delta:
            raise ValueError("form must be antisymmetric")
        if self.Delta.rank() != 2 * self.s:
            raise ValueError("form must be nondegenerate")


def standard_symplectic(s: int) -> SymplecticForm:
    """Per-mode [[0, 1], [-1, 0]] blocks; the convention every other
    operation in this module assumes."""
    block = QMatrix([[0, 1], [-1, 0]])
    return SymplecticForm(s, QMatrix.block_diag(*([block] * s)))


@dataclass(frozen=True)
class GaussianSpec:
    """Matrix data (K, l, alpha) of a Gaussian channel between s_a
    input modes and s_b output modes.

    Construction checks shapes, realness and the exact symmetry of
    alpha; the validity inequality is a separate decision (validate),
    not an invariant, so invalid specs can be loaded and reported."""

    s_a: int
    s_b: int
    K: QMatrix
    l: tuple
    alpha: QMatrix

    def __post_init__(self):
        if self.s_a < 1 or self.s_b < 1:
            raise ValueError("at least one mode on each side")
        if self.K.shape != (2 * self.s_a, 2 * self.s_b):
            raise ValueError("K must be 2s_a x 2s_b")
        if self.alpha.shape != (2 * self.s_b, 2 * self.s_b):
            raise ValueError("alpha must be 2s_b x 2s_b")
        l = tuple(x if isinstance(x, QScalar) else qs(Fraction(x)) for x in self.l)
        if len(l) != 2 * self.s_b:
            raise ValueError("l must have length 2s_b")
        object.__setattr__(self, "l", l)
        _require_real(self.K, "K")
        _require_real(self.alpha, "alpha")
        for x in l:
            if not x.is_real():
                raise ValueError("l must be real-rational")
        if self.alpha.transpose() != self.alpha:
            raise ValueError("alpha must be symmetric")

    def commutator_defect(self) -> QMatrix:
        """Delta_B - K^T Delta_A K: the antisymmetric form the noise
        matrix alpha has to dominate."""
        da = standard_symplectic(self.s_a).Delta
        db = standard_symplectic(self.s_b).Delta
        return db - self.K.transpose() @ da @ self.K


def validate(spec: GaussianSpec) -> bool:
    """Exact decision of the validity inequality: both Hermitian
    matrices alpha -/+ (i/2)(Delta_B - K^T Delta_A K) must be PSD."""
    C = spec.commutator_defect()
    upper = spec.alpha - C.scale(_HALF_I)
    lower = spec.alpha + C.scale(_HALF_I)
    return upper.is_psd() and lower.is_psd()


def _kernel(alpha: QMatrix) -> list:
    # alpha is real symmetric, so rref stays real and the kernel has a
    # real rational basis
    return kernel_basis(alpha)


def classify_zero_error(spec: GaussianSpec) -> dict:
    """One-shot and asymptotic zero-error positivity from ker alpha.

    cbar0 is positive iff the kernel is nonzero; qbar0 is positive iff
    some pair of kernel basis vectors has z1^T Delta_B z2 != 0.  The
    asymptotic values equal the one-shot values, and every positive
    capacity is infinite."""
    if not validate(spec):
        raise ValueError("spec violates the validity inequality")
    kern = _kernel(spec.alpha)
    cbar0 = POSITIVE_INFINITE if kern else ZERO
    qbar0 = ZERO
    if kern:
        db = standard_symplectic(spec.s_b).Delta
        images = [db @ z for z in kern]
        for z1 in kern:
            if any(
                not (z1.transpose() @ im)[0, 0].is_zero() for im in images
            ):
                qbar0 = POSITIVE_INFINITE
                break
    return {
        "cbar0": cbar0,
        "qbar0": qbar0,
        "asymptotic_cbar0": cbar0,
        "asymptotic_qbar0": qbar0,
        "kernel_dim": len(kern),
    }


def direct_sum_spec(spec1: GaussianSpec, spec2: GaussianSpec) -> GaussianSpec:
    """The tensor product of the two channels: mode counts add and all
    matrix data is block direct sum."""
    return GaussianSpec(
        spec1.s_a + spec2.s_a,
        spec1.s_b + spec2.s_b,
        QMatrix.from_blocks(
            [
                [spec1.K, QMatrix.zeros(2 * spec1.s_a, 2 * spec2.s_b)],
                [QMatrix.zeros(2 * spec2.s_a, 2 * spec1.s_b), spec2.K],
            ]
        ),
        spec1.l + spec2.l,
        QMatrix.block_diag(spec1.alpha, spec2.alpha),
    )


def gaussian_nonsuperactivation(spec1: GaussianSpec, spec2: GaussianSpec) -> dict:
    """Why two Gaussian channels can never superactivate: the product
    is Gaussian with alpha = alpha1 (+) alpha2, whose kernel splits as
    ker alpha1 (+) ker alpha2, so the product capacity is positive iff
    a component capacity already is.  The record shows the kernel
    computation and the resulting equivalences; it is symmetric in the
    arguments."""
    both = direct_sum_spec(spec1, spec2)
    c1 = classify_zero_error(spec1)
    c2 = classify_zero_error(spec2)
    ct = classify_zero_error(both)
    k1, k2, kt = c1["kernel_dim"], c2["kernel_dim"], ct["kernel_dim"]
    if k1 + k2 != kt:
        raise AssertionError("direct-sum kernel failed to decompose")
    equivalences = {}
    for cap in ("cbar0", "qbar0"):
        tensor_positive = ct[cap] == POSITIVE_INFINITE
        component_positive = (
            c1[cap] == POSITIVE_INFINITE or c2[cap] == POSITIVE_INFINITE
        )
        if tensor_positive != component_positive:
            raise AssertionError("tensor positivity failed to decompose")
        equivalences[cap] = tensor_positive
    return {
        "kind": "gaussian_nonsuperactivation",
        "kernel_dims": {"left": k1, "right": k2, "sum": kt},
        "kernel_splits": True,
        "tensor": {"cbar0": ct["cbar0"], "qbar0": ct["qbar0"]},
        "components": [
            {"cbar0": c1["cbar0"], "qbar0": c1["qbar0"]},
            {"cbar0": c2["cbar0"], "qbar0": c2["qbar0"]},
        ],
        "tensor_positive_iff_component_positive": equivalences,
        "superactivation_possible": False,
    }


# ---------------------------------------------------------------------------
# deterministic random instances for the property tests
# ---------------------------------------------------------------------------


def _rand_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randrange(-6, 7), rng.randrange(1, 5))


def random_symplectic(s: int, rng: random.Random) -> QMatrix:
    """Rational symplectic matrix for the standard form: a product of
    per-mode shears and scalings and of mode swaps."""
    dim = 2 * s
    out = QMatrix.identity(dim)
    for _ in range(6):
        kind = rng.randrange(3)
        g = [[QScalar(1) if i == j else QScalar(0) for j in range(dim)] for i in range(dim)]
        if kind == 0:
            m = rng.randrange(s)
            a = _rand_fraction(rng)
            g[2 * m][2 * m + 1] = qs(a)
        elif kind == 1:
            m = rng.randrange(s)
            a = _rand_fraction(rng)
            g[2 * m + 1][2 * m] = qs(a)
        else:
            m1, m2 = rng.randrange(s), rng.randrange(s)
            if m1 != m2:
                for off in (0, 1):
                    i, j = 2 * m1 + off, 2 * m2 + off
                    g[i][i] = QScalar(0)
                    g[j][j] = QScalar(0)
                    g[i][j] = QScalar(1)
                    g[j][i] = QScalar(1)
        out = out @ QMatrix(g)
    return out


def random_spec(rng: random.Random, max_modes: int = 2) -> GaussianSpec:
    """A valid spec with varied kernel structure.

    Half the draws use a symplectic K, which zeroes the commutator
    defect and admits any PSD alpha, including singular ones with
    interesting kernels; the rest use an arbitrary K with alpha pushed
    up to strict validity by a diagonally dominant shift."""
    s_b = rng.randrange(1, max_modes + 1)
    if rng.randrange(2):
        s_a = s_b
        K = random_symplectic(s_b, rng)
        rows = rng.randrange(0, 2 * s_b + 1)
        B = QMatrix(
            [[qs(_rand_fraction(rng)) for _ in range(2 * s_b)] for _ in range(rows)]
        ) if rows else None
        alpha = (
            B.transpose() @ B if B is not None else QMatrix.zeros(2 * s_b)
        )
    else:
        s_a = rng.randrange(1, max_modes + 1)
        K = QMatrix(
            [
                [qs(_rand_fraction(rng)) for _ in range(2 * s_b)]
                for _ in range(2 * s_a)
            ]
        )
        da = standard_symplectic(s_a).Delta
        db = standard_symplectic(s_b).Delta
        C = db - K.transpose() @ da @ K
        bound = Fraction(0)
        for row in C.rows:
            bound = max(bound, sum(abs(x.re) for x in row))
        shift = 1 + bound / 2
        alpha = QMatrix.diag([shift] * (2 * s_b))
    l = tuple(qs(_rand_fraction(rng)) for _ in range(2 * s_b))
    spec = GaussianSpec(s_a, s_b, K, l, alpha)
    if not validate(spec):
        raise AssertionError("random spec construction produced an invalid spec")
    return spec

"""Polynomials over the Gaussian rationals.

A polynomial is a list of QScalar coefficients, lowest degree first,
with no trailing zeros (the zero polynomial is the empty list).  These
are working objects for characteristic polynomials, minimal
polynomials, squarefreeness tests and gcd arguments; nothing here is
performance critical.
"""

from __future__ import annotations

from .matrices import QMatrix
from .scalars import ONE, ZERO, QScalar


Poly = list  # list[QScalar], low degree first


def ptrim(p: Poly) -> Poly:
    while p and p[-1].is_zero():
        p = p[:-1]
    return list(p)


def pdeg(p: Poly) -> int:
    return len(p) - 1


def pis_zero(p: Poly) -> bool:
    return not p


def padd(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    out = []
    for k in range(n):
        a = p[k] if k < len(p) else ZERO
        b = q[k] if k < len(q) else ZERO
        out.append(a + b)
    return ptrim(out)


def psub(p: Poly, q: Poly) -> Poly:
    return padd(p, [-c for c in q])


def pscale(p: Poly, c: QScalar) -> Poly:
    if c.is_zero():
        return []
    return ptrim([c * a for a in p])


def pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a.is_zero():
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return ptrim(out)


def pdivmod(p: Poly, q: Poly):
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [ZERO] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    while len(r) >= len(q) and r:
        c = r[-1] / lead
        k = len(r) - len(q)
        quo[k] = c
        for j, b in enumerate(q):
            r[k + j] = r[k + j] - c * b
        r = ptrim(r)
    return ptrim(quo), r


def pmonic(p: Poly) -> Poly:
    if not p:
        return []
    lead = p[-1]
    if lead.is_one():
        return list(p)
    inv = lead.inv()
    return [c * inv for c in p]


def pgcd(p: Poly, q: Poly) -> Poly:
    a, b = ptrim(p), ptrim(q)
    while b:
        _, r = pdivmod(a, b)
        a, b = b, r
    return pmonic(a)


def pxgcd(p: Poly, q: Poly):
    """Extended gcd: (g, u, v) monic g with u*p + v*q == g."""
    a, b = ptrim(p), ptrim(q)
    ua, va = [ONE], []
    ub, vb = [], [ONE]
    while b:
        quo, r = pdivmod(a, b)
        a, b = b, r
        ua, ub = ub, psub(ua, pmul(quo, ub))
        va, vb = vb, psub(va, pmul(quo, vb))
    if not a:
        return [], [], []
    lead_inv = a[-1].inv()
    return pmonic(a), pscale(ua, lead_inv), pscale(va, lead_inv)


def pderiv(p: Poly) -> Poly:
    out = []
    for k in range(1, len(p)):
        out.append(p[k] * QScalar(k, 0))
    return ptrim(out)


def peval(p: Poly, z: QScalar) -> QScalar:
    acc = ZERO
    for c in reversed(p):
        acc = acc * z + c
    return acc


def peval_matrix(p: Poly, M: QMatrix) -> QMatrix:
    n = M.n
    acc = QMatrix.zeros(n, n)
    for c in reversed(p):
        acc = acc @ M
        if not c.is_zero():
            acc = acc + QMatrix.identity(n).scale(c)
    return acc


def is_squarefree(p: Poly) -> bool:
    g = pgcd(p, pderiv(p))
    return pdeg(g) == 0


def charpoly_adjugate(M: QMatrix):
    """Characteristic polynomial and adjugate of t*I - M.

    Returns (p, Ns) where p is monic with p(t) = det(t*I - M) and
    Ns = [N_0, ..., N_{n-1}] are matrices with
    adj(t*I - M) = sum_k N_k t^(n-1-k).  Computed by the classical
    trace recursion; the identity (t*I - M) adj(t*I - M) = p(t) I is
    checked in the test suite, not assumed here.
    """
    if M.m != M.n:
        raise ValueError("square matrix required")
    n = M.n
    eye = QMatrix.identity(n)
    N = eye
    Ns = [N]
    cs = [ONE]  # coefficient of t^n
    for k in range(1, n + 1):
        MN = M @ N
        ck = -(MN.trace() / QScalar(k, 0))
        cs.append(ck)
        N = MN + eye.scale(ck)
        if k < n:
            Ns.append(N)
    if not N.is_zero():
        raise AssertionError("trace recursion failed to terminate at zero")
    # cs holds [1, c_1, ..., c_n] with p(t) = sum c_k t^(n-k)
    p = list(reversed(cs))
    return ptrim(p), Ns


def poly_entry(Ns, i: int, j: int) -> Poly:
    """Entry (i, j) of adj(t*I - M) as a polynomial in t."""
    n = len(Ns)
    out = [ZERO] * n
    for k, N in enumerate(Ns):
        out[n - 1 - k] = N[i, j]
    return ptrim(out)


def minimal_polynomial(M: QMatrix) -> Poly:
    """Monic minimal polynomial, via the first Krylov dependence on
    powers of M inside the matrix space."""
    if M.m != M.n:
        raise ValueError("square matrix required")
    n = M.n
    power = QMatrix.identity(n)
    vecs = [power.vec()]
    for _ in range(n * n):
        power = power @ M
        vecs.append(power.vec())
        coeffs = _first_dependency(vecs)
        if coeffs is not None:
            return pmonic(coeffs)
    raise AssertionError("powers of a matrix must become dependent")


def _first_dependency(vecs):
    """If the last vector depends on the earlier ones, return the monic
    relation coefficients (low degree first); else None."""
    k = len(vecs) - 1
    cols = QMatrix(vecs[:k]).transpose()
    sol = cols.solve(vecs[k])
    if sol is None:
        return None
    # vecs[k] = sum_j sol[j] vecs[j]  =>  M^k - sum sol_j M^j = 0
    coeffs = [-c for c in sol] + [ONE]
    return coeffs

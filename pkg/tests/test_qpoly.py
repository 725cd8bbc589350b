import random
from fractions import Fraction

from zecert.matrices import QMatrix
from zecert.qpoly import (
    charpoly_adjugate,
    is_squarefree,
    minimal_polynomial,
    pdeg,
    pdivmod,
    peval,
    peval_matrix,
    pgcd,
    pis_zero,
    pmul,
    pmonic,
    psub,
    ptrim,
    pxgcd,
    padd,
)
from zecert.scalars import ONE, ZERO, qs


def rnd_poly(rng, max_deg=5, spread=4):
    deg = rng.randrange(0, max_deg + 1)
    coeffs = [
        qs(Fraction(rng.randrange(-spread, spread + 1)), Fraction(rng.randrange(-2, 3)))
        for _ in range(deg + 1)
    ]
    return ptrim(coeffs)


def rnd_matrix(rng, n, spread=3):
    return QMatrix(
        [
            [qs(rng.randrange(-spread, spread + 1), rng.randrange(-1, 2)) for _ in range(n)]
            for _ in range(n)
        ]
    )


def test_division_invariant():
    rng = random.Random(31)
    for _ in range(150):
        p = rnd_poly(rng)
        q = rnd_poly(rng)
        if pis_zero(q):
            continue
        quot, rem = pdivmod(p, q)
        assert padd(pmul(quot, q), rem) == p or pis_zero(psub(padd(pmul(quot, q), rem), p))
        assert pis_zero(rem) or pdeg(rem) < pdeg(q)


def test_gcd_divides_and_bezout():
    rng = random.Random(32)
    for _ in range(100):
        p, q = rnd_poly(rng, 4), rnd_poly(rng, 4)
        if pis_zero(p) or pis_zero(q):
            continue
        g = pgcd(p, q)
        _, r1 = pdivmod(p, g)
        _, r2 = pdivmod(q, g)
        assert pis_zero(r1) and pis_zero(r2)
        g2, u, v = pxgcd(p, q)
        assert g2 == g
        assert psub(padd(pmul(u, p), pmul(v, q)), g) == [] or pis_zero(
            psub(padd(pmul(u, p), pmul(v, q)), g)
        )


def test_gcd_of_shared_factor():
    rng = random.Random(33)
    for _ in range(60):
        common = rnd_poly(rng, 2)
        if pis_zero(common) or pdeg(common) == 0:
            continue
        a = pmul(common, rnd_poly(rng, 2))
        b = pmul(common, rnd_poly(rng, 2))
        if pis_zero(a) or pis_zero(b):
            continue
        g = pgcd(a, b)
        _, rem = pdivmod(g, pmonic(common))
        assert pdeg(g) >= pdeg(common)


def test_squarefree_detection():
    x = [ZERO, ONE]                      # t
    x2 = pmul(x, x)                      # t^2
    shifted = padd(x, [ONE])             # t + 1
    assert is_squarefree(x)
    assert not is_squarefree(x2)
    assert is_squarefree(pmul(x, shifted))
    assert not is_squarefree(pmul(pmul(x, shifted), shifted))


def test_charpoly_annihilates_and_adjugate_identity():
    rng = random.Random(34)
    for _ in range(40):
        n = rng.randrange(1, 5)
        M = rnd_matrix(rng, n)
        chi, adj_coeffs = charpoly_adjugate(M)
        assert pdeg(chi) == n
        assert peval_matrix(chi, M).is_zero()
        # (tI - M) * adj(tI - M) = chi(t) * I at scalar points;
        # adj_coeffs[k] multiplies t^(n-1-k)
        for t in (qs(0), qs(1), qs(-2), qs(0, 1)):
            tIM = QMatrix.identity(n).scale(t) - M
            adj_t = QMatrix.zeros(n)
            for coeff_mat in adj_coeffs:
                adj_t = adj_t.scale(t) + coeff_mat
            assert tIM @ adj_t == QMatrix.identity(n).scale(peval(chi, t))


def test_minimal_polynomial_divides_charpoly():
    rng = random.Random(35)
    for _ in range(40):
        n = rng.randrange(1, 5)
        M = rnd_matrix(rng, n)
        mu = minimal_polynomial(M)
        assert peval_matrix(mu, M).is_zero()
        chi, _ = charpoly_adjugate(M)
        _, rem = pdivmod(chi, mu)
        assert pis_zero(rem)
    # a projection has minimal polynomial t^2 - t
    P = QMatrix([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "0"]])
    assert pdeg(minimal_polynomial(P)) == 2

"""Exact complex-rational scalars.

A QScalar is an element of Q(i): a pair of arbitrary-precision rationals.
All certified arithmetic in the package flows through this type; floats
appear only in the advisory search layer (see `search`).

Text form used by every file format::

    RAT  :=  INT | INT "/" POSINT
    CPX  :=  RAT | RAT SIGN RAT "i" | RAT "i"

Examples: "3/2-1/2i", "i", "-i", "0", "7", "2/3i".
parse_scalar(format_scalar(z)) == z for every QScalar z.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction


class ScalarParseError(ValueError):
    pass


_CPX_RE = re.compile(
    r"^\s*(?:"
    r"(?P<both_re>[+-]?\d+(?:/\d+)?)\s*(?P<sign>[+-])\s*(?P<both_im>\d+(?:/\d+)?)?i"
    r"|(?P<only_im>[+-]|[+-]?\d+(?:/\d+)?)?i"
    r"|(?P<only_re>[+-]?\d+(?:/\d+)?)"
    r")\s*$"
)


class QScalar:
    """An exact Gaussian rational, kept in lowest terms by Fraction."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("QScalar is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "QScalar":
        return QScalar(n, 0)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def is_one(self) -> bool:
        return self.re == 1 and not self.im

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "QScalar") -> "QScalar":
        return QScalar(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "QScalar") -> "QScalar":
        return QScalar(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "QScalar":
        return QScalar(-self.re, -self.im)

    def __mul__(self, other: "QScalar") -> "QScalar":
        a, b, c, d = self.re, self.im, other.re, other.im
        return QScalar(a * c - b * d, a * d + b * c)

    def __truediv__(self, other: "QScalar") -> "QScalar":
        c, d = other.re, other.im
        n = c * c + d * d
        if not n:
            raise ZeroDivisionError("division by zero QScalar")
        a, b = self.re, self.im
        return QScalar((a * c + b * d) / n, (b * c - a * d) / n)

    def conj(self) -> "QScalar":
        return QScalar(self.re, -self.im)

    def inv(self) -> "QScalar":
        return ONE / self

    def abs2(self) -> Fraction:
        """|z|^2, an exact nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"QScalar({format_scalar(self)!r})"

    # -- conversion -----------------------------------------------------

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)


ZERO = QScalar(0)
ONE = QScalar(1)
I = QScalar(0, 1)


def qs(re=0, im=0) -> QScalar:
    """Shorthand constructor accepting ints, Fractions or 'p/q' strings."""
    return QScalar(Fraction(re), Fraction(im))


def _format_rat(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(z: QScalar) -> str:
    re, im = z.re, z.im
    if not im:
        return _format_rat(re)
    mag = abs(im)
    istr = "i" if mag == 1 else _format_rat(mag) + "i"
    if not re:
        return istr if im > 0 else "-" + istr
    sign = "+" if im > 0 else "-"
    return f"{_format_rat(re)}{sign}{istr}"


def parse_scalar(text: str) -> QScalar:
    m = _CPX_RE.match(text)
    if m is None:
        raise ScalarParseError(f"not a valid scalar: {text!r}")
    if m.group("only_re") is not None:
        return QScalar(Fraction(m.group("only_re")), 0)
    if m.group("both_re") is not None:
        re = Fraction(m.group("both_re"))
        mag = Fraction(m.group("both_im")) if m.group("both_im") else Fraction(1)
        im = mag if m.group("sign") == "+" else -mag
        return QScalar(re, im)
    # pure imaginary: "i", "-i", "3/2i", "+i"
    coeff = m.group("only_im")
    if coeff is None or coeff == "+":
        im = Fraction(1)
    elif coeff == "-":
        im = Fraction(-1)
    else:
        im = Fraction(coeff)
    return QScalar(0, im)


# -- exact square roots and sums of squares ---------------------------------


def _fraction_sqrt(x: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt_in_qi(z: QScalar):
    """A w in Q(i) with w*w == z, or None if no such element exists."""
    a, b = z.re, z.im
    if not b:
        r = _fraction_sqrt(a)
        if r is not None:
            return QScalar(r, 0)
        r = _fraction_sqrt(-a)
        if r is not None:
            return QScalar(0, r)
        return None
    n = _fraction_sqrt(a * a + b * b)
    if n is None:
        return None
    p = _fraction_sqrt((a + n) / 2)
    if p is None or not p:
        return None
    w = QScalar(p, b / (2 * p))
    return w if w * w == z else None


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _two_squares_prime(p: int):
    """p = a^2 + b^2 for p = 2 or p prime with p % 4 == 1 (Hermite-Serret)."""
    if p == 2:
        return 1, 1
    nr = 2
    while pow(nr, (p - 1) // 2, p) != p - 1:
        nr += 1
    u = pow(nr, (p - 1) // 4, p)
    s = math.isqrt(p)
    a, b = p, u
    while b > s:
        a, b = b, a % b
    c = math.isqrt(p - b * b)
    return b, c


def _four_squares_small(n: int):
    for a in range(math.isqrt(n), -1, -1):
        r1 = n - a * a
        for b in range(math.isqrt(r1), -1, -1):
            r2 = r1 - b * b
            c = math.isqrt(r2)
            while c * c * 2 >= r2:
                d2 = r2 - c * c
                d = math.isqrt(d2)
                if d * d == d2:
                    return (a, b, c, d)
                c -= 1
    raise AssertionError("four-square decomposition must exist")


def _three_squares_small(n: int):
    for a in range(math.isqrt(n), -1, -1):
        r1 = n - a * a
        for b in range(math.isqrt(r1), -1, -1):
            r2 = r1 - b * b
            c = math.isqrt(r2)
            if c * c == r2:
                return (a, b, c)
    return None


def _three_squares_int(n: int):
    """n = a^2 + b^2 + c^2 for n not of the form 4^a (8b+7).

    Deterministic: strips powers of 4, then walks x downward with the
    parity that makes the remainder n - x^2 a candidate prime (or twice
    one) splitting into two squares by Hermite-Serret.
    """
    shift = 0
    while n % 4 == 0:
        n //= 4
        shift += 1
    scale = 1 << shift
    if n % 8 == 7:
        raise ValueError("not a sum of three squares")
    if n < 4096:
        triple = _three_squares_small(n)
        return tuple(v * scale for v in triple)
    want_odd = n % 4 in (2, 3)
    x = math.isqrt(n)
    if (x % 2 == 1) != want_odd:
        x -= 1
    while x >= 0:
        r = n - x * x
        if n % 4 == 3:
            # x odd, so r = 2q with q = 1 mod 4; hunt for prime q
            q = r // 2
            if q == 1:
                return (x * scale, scale, scale)
            if _is_prime(q):
                a, b = _two_squares_prime(q)
                return (x * scale, (a + b) * scale, abs(a - b) * scale)
        else:
            # parity choice forces r = 1 mod 4
            if r == 0:
                return (x * scale, 0, 0)
            if r == 1:
                return (x * scale, scale, 0)
            if _is_prime(r):
                a, b = _two_squares_prime(r)
                return (x * scale, a * scale, b * scale)
        x -= 2
    # prime-density shortfall (only realistic for modest n): exhaustive
    triple = _three_squares_small(n)
    return tuple(v * scale for v in triple)


def _four_squares_int(n: int):
    """n = a^2 + b^2 + c^2 + d^2 over nonnegative integers (Lagrange)."""
    if n < 0:
        raise ValueError("negative")
    if n == 0:
        return (0, 0, 0, 0)
    if n < 4096:
        return _four_squares_small(n)
    shift = 0
    while n % 4 == 0:
        n //= 4
        shift += 1
    scale = 1 << shift
    if n % 8 == 7:
        a, b, c = _three_squares_int(n - 1)
        return (a * scale, b * scale, c * scale, scale)
    a, b, c = _three_squares_int(n)
    return (a * scale, b * scale, c * scale, 0)


def two_gaussian_squares(x: Fraction):
    """Rationals written as |z1|^2 + |z2|^2 with z1, z2 in Q(i).

    Returns a pair of QScalars (z1, z2) with z1.abs2() + z2.abs2() == x.
    Exists for every nonnegative rational by the four-square theorem.
    """
    if x < 0:
        raise ValueError("need a nonnegative rational")
    n, d = x.numerator, x.denominator
    a, b, c, e = _four_squares_int(n * d)
    return (
        QScalar(Fraction(a, d), Fraction(b, d)),
        QScalar(Fraction(c, d), Fraction(e, d)),
    )

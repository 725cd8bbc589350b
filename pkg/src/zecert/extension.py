"""Quadratic extensions of the Gaussian rationals.

ExtScalar models Q(i)(theta) with theta^2 = D for a fixed non-square
D in Q(i).  Elements are a + b*theta with a, b QScalar.  This is enough
to write down exact rank-one witnesses whose entries solve a quadratic
with irrational discriminant; rank over a field extension equals rank
over any larger field, so linear-algebra verdicts computed here are
valid over the complex numbers.

Only field operations are provided.  There is no complex conjugation:
which square root of D an embedding picks is not our business, and no
verification step needs it.
"""

from __future__ import annotations

from .scalars import QScalar, ZERO, ONE, sqrt_in_qi


class ExtField:
    """The field Q(i)(sqrt(D)).  Rejects D that is already a square."""

    __slots__ = ("D",)

    def __init__(self, D: QScalar):
        if D.is_zero():
            raise ValueError("D must be nonzero")
        if sqrt_in_qi(D) is not None:
            raise ValueError("D is a square in Q(i); no extension needed")
        object.__setattr__(self, "D", D)

    def __setattr__(self, name, value):
        raise AttributeError("ExtField is immutable")

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.D == other.D

    def __hash__(self):
        return hash(("ExtField", self.D))

    def of(self, a: QScalar, b: QScalar = ZERO) -> "ExtScalar":
        return ExtScalar(self, a, b)

    def theta(self) -> "ExtScalar":
        return ExtScalar(self, ZERO, ONE)

    def __repr__(self):
        from .scalars import format_scalar

        return f"ExtField(theta^2 = {format_scalar(self.D)})"


class ExtScalar:
    """a + b*theta over a fixed ExtField."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: ExtField, a: QScalar, b: QScalar):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    def _check(self, other: "ExtScalar"):
        if self.field != other.field:
            raise ValueError("mixed extension fields")

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __add__(self, other: "ExtScalar") -> "ExtScalar":
        self._check(other)
        return ExtScalar(self.field, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "ExtScalar") -> "ExtScalar":
        self._check(other)
        return ExtScalar(self.field, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "ExtScalar":
        return ExtScalar(self.field, -self.a, -self.b)

    def __mul__(self, other: "ExtScalar") -> "ExtScalar":
        self._check(other)
        D = self.field.D
        a, b, c, d = self.a, self.b, other.a, other.b
        return ExtScalar(self.field, a * c + b * d * D, a * d + b * c)

    def inv(self) -> "ExtScalar":
        # (a + b theta)(a - b theta) = a^2 - b^2 D, nonzero since D is
        # not a square in Q(i).
        n = self.a * self.a - self.b * self.b * self.field.D
        if n.is_zero():
            raise ZeroDivisionError("inverting zero ExtScalar")
        ninv = n.inv()
        return ExtScalar(self.field, self.a * ninv, -self.b * ninv)

    def __truediv__(self, other: "ExtScalar") -> "ExtScalar":
        return self * other.inv()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self.field == other.field and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.field, self.a, self.b))

    def __repr__(self):
        from .scalars import format_scalar

        return f"ExtScalar({format_scalar(self.a)} + ({format_scalar(self.b)})*theta)"


def lift(field: ExtField, z: QScalar) -> ExtScalar:
    return ExtScalar(field, z, ZERO)

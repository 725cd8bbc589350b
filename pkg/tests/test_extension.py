import random
from fractions import Fraction

import pytest

from zecert.extension import ExtField, lift
from zecert.scalars import qs


def rnd_qi(rng, spread=6):
    return qs(
        Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 4)),
        Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 4)),
    )


def test_field_rejects_squares():
    with pytest.raises(ValueError):
        ExtField(qs(4))
    with pytest.raises(ValueError):
        ExtField(qs(-1))       # i*i
    with pytest.raises(ValueError):
        ExtField(qs(0))
    ExtField(qs(2))            # sqrt 2 genuinely extends Q(i)


def test_arithmetic_laws():
    rng = random.Random(51)
    F = ExtField(qs(2))
    for _ in range(200):
        a = F.of(rnd_qi(rng), rnd_qi(rng))
        b = F.of(rnd_qi(rng), rnd_qi(rng))
        c = F.of(rnd_qi(rng), rnd_qi(rng))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        if not a.is_zero():
            assert a * a.inv() == F.of(qs(1))


def test_theta_squares_to_d():
    for d in (qs(2), qs(3), qs(0, 1) + qs(1), qs(5, 2)):
        F = ExtField(d)
        th = F.theta()
        assert th * th == F.of(d)


def test_lift_embeds_rationals():
    rng = random.Random(52)
    F = ExtField(qs(3))
    for _ in range(60):
        z, w = rnd_qi(rng), rnd_qi(rng)
        assert lift(F, z) + lift(F, w) == lift(F, z + w)
        assert lift(F, z) * lift(F, w) == lift(F, z * w)


def test_mixed_field_operations_rejected():
    a = ExtField(qs(2)).theta()
    b = ExtField(qs(3)).theta()
    with pytest.raises((ValueError, TypeError)):
        a + b

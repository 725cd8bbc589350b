import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zecert.scalars import (
    ONE,
    ZERO,
    QScalar,
    ScalarParseError,
    format_scalar,
    parse_scalar,
    qs,
    sqrt_in_qi,
)

rationals = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=997
)
scalars = st.builds(qs, rationals, rationals)


def rnd_scalar(rng, spread=40):
    return qs(
        Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 12)),
        Fraction(rng.randrange(-spread, spread + 1), rng.randrange(1, 12)),
    )


def test_field_laws():
    rng = random.Random(11)
    for _ in range(300):
        a, b, c = (rnd_scalar(rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        if not a.is_zero():
            assert a * a.inv() == ONE
            assert (ONE / a) * a == ONE


def test_conjugation_and_abs2():
    rng = random.Random(12)
    for _ in range(200):
        a, b = rnd_scalar(rng), rnd_scalar(rng)
        assert (a * b).conj() == a.conj() * b.conj()
        assert (a + b).conj() == a.conj() + b.conj()
        assert a.conj().conj() == a
        assert a.abs2() == (a * a.conj()).re
        assert (a * a.conj()).im == 0
        assert a.is_real() == (a.im == 0)


@given(scalars)
def test_format_parse_round_trip(z):
    assert parse_scalar(format_scalar(z)) == z


def test_parse_grammar_examples():
    assert parse_scalar("3") == qs(3)
    assert parse_scalar("-2/7") == qs(Fraction(-2, 7))
    assert parse_scalar("1/2-3i") == qs(Fraction(1, 2), -3)
    assert parse_scalar("5i") == qs(0, 5)
    assert parse_scalar("-i") == qs(0, -1)
    assert parse_scalar("0") == ZERO


def test_parse_rejects_garbage():
    for text in ("", "1.5", "2+", "i2", "1/-3", "1//2", "x", "3 + 4i7"):
        with pytest.raises(ScalarParseError):
            parse_scalar(text)


def test_sqrt_in_qi_on_squares():
    rng = random.Random(13)
    for _ in range(200):
        z = rnd_scalar(rng, spread=9)
        r = sqrt_in_qi(z * z)
        assert r is not None
        assert r * r == z * z
        assert r in (z, -z) or z.is_zero()


def test_sqrt_in_qi_on_non_squares():
    # 2 and 3 need sqrt2/sqrt3; i needs an eighth root of unity
    for z in (qs(2), qs(3), qs(-2), qs(0, 1), qs(0, -1), qs(5, 1)):
        assert sqrt_in_qi(z) is None
    assert sqrt_in_qi(qs(-1)) == qs(0, 1)
    assert sqrt_in_qi(qs(0, 2)) in (qs(1, 1), qs(-1, -1))


def test_hash_consistency():
    a = qs(Fraction(4, 2), Fraction(0))
    b = qs(2)
    assert a == b and hash(a) == hash(b)
    assert QScalar(Fraction(1), Fraction(2)) != qs(1)

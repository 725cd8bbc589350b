"""The budgeted Buchberger engine against sympy as an independent oracle."""

import random
from fractions import Fraction

import sympy

from zecert import groebner as gb
from zecert.scalars import ONE, qs


def rnd_mpoly(rng, nvars, max_terms=4, deg=2, spread=3):
    p = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        mono = [0] * nvars
        for _ in range(deg):
            mono[rng.randrange(nvars)] += 1
        c = qs(Fraction(rng.randrange(-spread, spread + 1)), Fraction(rng.randrange(-1, 2)))
        if not c.is_zero():
            p[tuple(mono)] = p.get(tuple(mono), c * qs(0)) + c
    return gb.mp_trim(p)


def to_sympy(p, symbols):
    expr = sympy.Integer(0)
    for mono, c in p.items():
        term = sympy.Rational(c.re) + sympy.I * sympy.Rational(c.im)
        for v, e in zip(symbols, mono):
            term *= v**e
        expr += term
    return sympy.expand(expr)


def test_normal_form_of_members_vanishes():
    rng = random.Random(41)
    nvars = 3
    for _ in range(25):
        gens = [rnd_mpoly(rng, nvars) for _ in range(3)]
        gens = [g for g in gens if g]
        if not gens:
            continue
        counter = gb.StepCounter(50000)
        basis = gb.buchberger(gens, counter)
        # random combination sum f_i * g_i must reduce to zero
        comb = {}
        for g in gens:
            mult = rnd_mpoly(rng, nvars, max_terms=2, deg=1)
            comb = gb.mp_add(comb, gb.mp_mul(mult, g))
        assert gb.mp_trim(gb.normal_form(comb, basis, counter)) == {}


def test_membership_agrees_with_sympy():
    rng = random.Random(42)
    nvars = 3
    symbols = sympy.symbols(f"x0:{nvars}")
    agreements = 0
    for _ in range(40):
        gens = [rnd_mpoly(rng, nvars) for _ in range(2)]
        gens = [g for g in gens if g]
        if not gens:
            continue
        counter = gb.StepCounter(80000)
        try:
            basis = gb.buchberger(gens, counter)
        except gb.BudgetExhausted:
            continue
        probe = rnd_mpoly(rng, nvars)
        if not probe:
            continue
        ours = gb.mp_trim(gb.normal_form(probe, basis, counter)) == {}
        sym_basis = sympy.groebner(
            [to_sympy(g, symbols) for g in gens],
            *symbols,
            order="grevlex",
            domain=sympy.QQ_I,
        )
        theirs = sympy.expand(sym_basis.reduce(to_sympy(probe, symbols))[1]) == 0
        assert ours == theirs
        agreements += 1
    assert agreements >= 20


def test_coordinate_power_detection():
    # <x^2, y^2, xy> contains x^2 and y^2 but no pure power of a
    # variable missing from the ideal
    x2 = {(2, 0): ONE}
    y2 = {(0, 2): ONE}
    counter = gb.StepCounter(10000)
    basis = gb.buchberger([x2, y2], counter)
    assert gb.coordinate_power_in_ideal(basis, 2, 0, 6, counter) == 2
    assert gb.coordinate_power_in_ideal(basis, 2, 1, 6, counter) == 2
    # <x y> contains no power of x alone
    xy = {(1, 1): ONE}
    counter = gb.StepCounter(10000)
    basis = gb.buchberger([xy], counter)
    assert gb.coordinate_power_in_ideal(basis, 2, 0, 6, counter) is None


def test_budget_exhaustion_raises():
    rng = random.Random(43)
    gens = [rnd_mpoly(rng, 4, max_terms=4, deg=3) for _ in range(4)]
    gens = [g for g in gens if g]
    counter = gb.StepCounter(3)
    try:
        gb.buchberger(gens, counter)
    except gb.BudgetExhausted:
        return
    # tiny ideals can finish within 3 steps; the counter must not exceed
    assert counter.used <= 3

"""Small Buchberger engine over Q(i) for homogeneous ideal emptiness.

Polynomials are dicts {exponent tuple: QScalar} under graded-lex
order.  The only client is the minor-ideal certifier, whose systems
are a few dozen homogeneous forms in at most a handful of variables,
so the engine favors clarity plus a hard step budget over asymptotic
cleverness.  Budget exhaustion raises BudgetExhausted; callers turn
that into an UNDECIDED verdict, never into a claim.
"""

from __future__ import annotations

from .scalars import ONE, QScalar


class BudgetExhausted(Exception):
    pass


class StepCounter:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit

    def tick(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExhausted(f"budget of {self.limit} reduction steps exhausted")


def _grlex_key(mono):
    return (sum(mono), mono)


def mp_trim(p: dict) -> dict:
    return {m: c for m, c in p.items() if not c.is_zero()}


def mp_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for m, c in q.items():
        cur = out.get(m)
        nc = c if cur is None else cur + c
        if nc.is_zero():
            out.pop(m, None)
        else:
            out[m] = nc
    return out


def mp_scale(p: dict, c: QScalar) -> dict:
    if c.is_zero():
        return {}
    return {m: c * v for m, v in p.items()}


def mp_mul_term(p: dict, mono, coeff: QScalar) -> dict:
    if coeff.is_zero():
        return {}
    return {
        tuple(a + b for a, b in zip(m, mono)): coeff * v
        for m, v in p.items()
    }


def mp_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m, c in p.items():
        out = mp_add(out, mp_mul_term(q, m, c))
    return out


def mp_leading(p: dict):
    m = max(p, key=_grlex_key)
    return m, p[m]


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mp_monic(p: dict) -> dict:
    if not p:
        return {}
    _, lc = mp_leading(p)
    if lc.is_one():
        return dict(p)
    inv = lc.inv()
    return {m: c * inv for m, c in p.items()}


def normal_form(p: dict, basis: list, counter: StepCounter) -> dict:
    """Full reduction of p modulo the basis."""
    heads = [(*mp_leading(g), g) for g in basis if g]
    rem: dict = {}
    work = dict(p)
    while work:
        lm = max(work, key=_grlex_key)
        lc = work[lm]
        hit = None
        for gm, gc, g in heads:
            if _divides(gm, lm):
                hit = (gm, gc, g)
                break
        if hit is None:
            # every later monomial is strictly smaller, so lm is final
            rem[lm] = lc
            del work[lm]
            continue
        gm, gc, g = hit
        counter.tick()
        shift = _mono_div(lm, gm)
        factor = -(lc if gc.is_one() else lc / gc)
        for mono, c in g.items():
            m2 = tuple(a + b for a, b in zip(mono, shift))
            prev = work.get(m2)
            nv = factor * c if prev is None else prev + factor * c
            if nv.is_zero():
                work.pop(m2, None)
            else:
                work[m2] = nv
    return rem


def _s_poly(f: dict, g: dict) -> dict:
    fm, fc = mp_leading(f)
    gm, gc = mp_leading(g)
    l = _mono_lcm(fm, gm)
    a = mp_mul_term(f, _mono_div(l, fm), ONE / fc if not fc.is_one() else ONE)
    b = mp_mul_term(g, _mono_div(l, gm), ONE / gc if not gc.is_one() else ONE)
    return mp_add(a, mp_scale(b, -ONE))


def buchberger(gens: list, counter: StepCounter) -> list:
    """Groebner basis of the given generators under graded lex.

    Applies the coprime-leading-monomial criterion; raises
    BudgetExhausted through the shared counter when the budget runs
    out.  Returns a monic, interreduced basis.
    """
    import heapq

    basis = [mp_monic(g) for g in gens if mp_trim(g)]
    heads = [mp_leading(g)[0] for g in basis]
    # smallest lcm degree first keeps intermediate growth down
    pairs = [
        (_grlex_key(_mono_lcm(heads[i], heads[j])), i, j)
        for i in range(len(basis))
        for j in range(i + 1, len(basis))
    ]
    heapq.heapify(pairs)
    while pairs:
        _, i, j = heapq.heappop(pairs)
        mi, mj = heads[i], heads[j]
        if _mono_lcm(mi, mj) == tuple(a + b for a, b in zip(mi, mj)):
            continue  # coprime leading monomials: S-poly reduces to zero
        s = _s_poly(basis[i], basis[j])
        r = normal_form(s, basis, counter)
        if r:
            r = mp_monic(r)
            basis.append(r)
            rm = mp_leading(r)[0]
            heads.append(rm)
            new = len(basis) - 1
            for k in range(new):
                heapq.heappush(pairs, (_grlex_key(_mono_lcm(heads[k], rm)), k, new))
    # reduced basis, two phases: drop elements whose leading monomial
    # another element's leading monomial divides (ascending order puts
    # potential divisors first, and of two equal leading monomials the
    # second is dropped), then reduce tails; a tail reduction cannot
    # touch the leading term of a minimal element
    basis.sort(key=lambda p: _grlex_key(mp_leading(p)[0]))
    minimal = []
    for g in basis:
        gm = mp_leading(g)[0]
        if any(_divides(mp_leading(h)[0], gm) for h in minimal):
            continue
        minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        out.append(mp_monic(normal_form(g, others, counter)))
    return out


def coordinate_power_in_ideal(
    basis: list, nvars: int, var: int, max_power: int, counter: StepCounter
):
    """Smallest N <= max_power with x_var^N in the ideal, or None."""
    for N in range(1, max_power + 1):
        mono = tuple(N if k == var else 0 for k in range(nvars))
        if not normal_form({mono: ONE}, basis, counter):
            return N
    return None

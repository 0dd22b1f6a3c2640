"""Deciding whether Laurent polynomials generate the unit ideal.

Over ZZ[t, t^-1] an ideal I with trivial gcd over QQ contains a nonzero
integer N, and I is the whole ring iff for every prime p | N the generators
have a unit gcd in GF(p)[t, t^-1]. For two generators a local solution mod p
lifts to an exact solution of a*x + b*y = 1, so both answers carry
certificates.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import _zpoly as zp
from .laurent import LaurentPoly, as_laurent

FACTOR_TRIAL_LIMIT = 10**6


@dataclass(frozen=True)
class IdealVerdict:
    """status is 'unit', 'proper' or 'unknown'.

    A proper ideal comes with a maximal ideal containing it: (prime, factor)
    with prime = 0 meaning the generators share factor over QQ.
    """

    status: str
    prime: int | None = None
    factor: LaurentPoly | None = None
    reason: str = ""
    # data reused by the two-generator construction
    multiplier: int = 1
    combination: tuple = ()
    primes: tuple = ()


@dataclass(frozen=True)
class Bezout:
    """Outcome of solving a*x + b*y = 1.

    status is 'found' (x, y set), 'impossible' (reason names the obstruction)
    or 'unknown'.
    """

    status: str
    x: LaurentPoly | None = None
    y: LaurentPoly | None = None
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def impossible(self) -> bool:
        return self.status == "impossible"


def _int_egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _factor(n: int) -> dict[int, int] | None:
    from sympy import factorint, isprime

    f = factorint(n, limit=FACTOR_TRIAL_LIMIT)
    if any(not isprime(p) for p in f):
        return None
    return f


def _strip_unit(g: tuple) -> tuple:
    return zp.strip_t(g)[1]


def ideal_verdict(gens) -> IdealVerdict:
    """Decide whether gens generate ZZ[t, t^-1]."""
    polys = [as_laurent(g) for g in gens]
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return IdealVerdict("proper", 0, LaurentPoly(), "all generators vanish")
    for p in polys:
        if p.is_unit():
            return IdealVerdict("unit", reason=f"{p} is a unit")
    dense = [p.dense()[1] for p in polys]

    # gcd over QQ with cofactors
    g = tuple(map(lambda c: c, dense[0]))
    from fractions import Fraction
    g = zp.scale(tuple(Fraction(c) for c in g), Fraction(1, g[-1]))
    cof = [(Fraction(1, dense[0][-1]),)] + [()] * (len(dense) - 1)
    for i in range(1, len(dense)):
        g2, s, t = zp.q_egcd(g, dense[i])
        cof = [zp.mul(c, s) for c in cof]
        cof[i] = zp.add(cof[i], t)
        g = g2
    if zp.degree(g) > 0:
        n = zp.denominator_lcm(g)
        f = zp.primitive(tuple(int(c * n) for c in g))[1]
        return IdealVerdict("proper", 0, LaurentPoly.from_dense(f),
                            f"common factor {LaurentPoly.from_dense(f)} over QQ")
    n = zp.denominator_lcm(*cof)
    comb_int = tuple(tuple(int(c * n) for c in co) for co in cof)
    if n == 1:
        return IdealVerdict("unit", reason="integral combination over QQ",
                            multiplier=1, combination=comb_int)
    fac = _factor(n)
    if fac is None:
        return IdealVerdict("unknown", reason=f"could not factor {n}")
    for p in sorted(fac):
        h = ()
        for d in dense:
            h = zp.gcd_mod_p(h, d, p) if h else zp.mod_p(d, p)
            if h:
                inv = pow(h[-1], -1, p)
                h = tuple(x * inv % p for x in h)
        h = _strip_unit(h) if h else h
        if not h or zp.degree(h) > 0:
            f = LaurentPoly.from_dense(h) if h else LaurentPoly()
            why = (f"all generators vanish mod {p}" if not h
                   else f"common factor {f} mod {p}")
            return IdealVerdict("proper", p, f, why)
    return IdealVerdict("unit", reason=f"{n} lies in the ideal and no prime of it obstructs",
                        multiplier=n, combination=comb_int, primes=tuple(sorted(fac.items())))


def unit_ideal(gens) -> bool | None:
    v = ideal_verdict(gens)
    return {"unit": True, "proper": False}.get(v.status)


def _egcd_mod_p(a: tuple, b: tuple, p: int):
    """(g, s, t) in GF(p)[t] with a*s + b*t = g, g monic."""
    r0, r1 = zp.mod_p(a, p), zp.mod_p(b, p)
    s0, s1, t0, t1 = (1,), (), (), (1,)
    while r1:
        inv = pow(r1[-1], -1, p)
        q = [0] * max(len(r0) - len(r1) + 1, 0)
        r = list(r0)
        db = len(r1) - 1
        for k in range(len(r0) - 1 - db, -1, -1):
            c = r[k + db] % p
            if c:
                f = c * inv % p
                q[k] = f
                for j, y in enumerate(r1):
                    r[k + j] = (r[k + j] - f * y) % p
        q = zp.trim(q)
        r0, r1 = r1, zp.mod_p(r, p)
        s0, s1 = s1, zp.mod_p(zp.sub(s0, zp.mul(q, s1)), p)
        t0, t1 = t1, zp.mod_p(zp.sub(t0, zp.mul(q, t1)), p)
    inv = pow(r0[-1], -1, p)
    return (tuple(x * inv % p for x in r0), zp.mod_p(zp.scale(s0, inv), p),
            zp.mod_p(zp.scale(t0, inv), p))


def _reduce_window(z: LaurentPoly, g: tuple) -> LaurentPoly | None:
    """Remainder of z modulo g with exponents in [0, deg g); g must be monic at both ends."""
    d = len(g) - 1
    c = dict(z.terms())
    while c and max(c) >= d:
        k = max(c)
        f = c[k] * g[-1]  # g[-1] is +-1
        for i, gi in enumerate(g):
            e = k - d + i
            c[e] = c.get(e, 0) - f * gi
            if c[e] == 0:
                del c[e]
    while c and min(c) < 0:
        k = min(c)
        f = c[k] * g[0]
        for i, gi in enumerate(g):
            e = k + i
            c[e] = c.get(e, 0) - f * gi
            if c[e] == 0:
                del c[e]
    return LaurentPoly(c)


def _size(pair) -> tuple:
    return (sum(q.span() + 1 for q in pair),
            sum(abs(c) for q in pair for _, c in q.terms()),
            sum(abs(k) for q in pair for k, _ in q.terms()))


def _shrink(a: LaurentPoly, b: LaurentPoly, x: LaurentPoly, y: LaurentPoly):
    """Pick a small representative among x + k*b, y - k*a."""
    best = (x, y)
    for u, f, g, swap in ((x, a, b, False), (y, b, a, True)):
        lg, gd = g.dense()
        if abs(gd[-1]) != 1 or abs(gd[0]) != 1 or u.is_zero():
            continue
        for w in range(u.low - len(gd) - 1, u.high + 2):
            u2 = _reduce_window(u.shifted(-w - lg), gd).shifted(w + lg)
            v2 = (1 - f * u2).exact_div(g)
            if v2 is None:
                continue
            cand = (v2, u2) if swap else (u2, v2)
            if _size(cand) < _size(best):
                best = cand
    return best


def bezout_one(a, b) -> Bezout:
    """Solve a*x + b*y = 1 over ZZ[t, t^-1]."""
    a, b = as_laurent(a), as_laurent(b)
    ub = b.as_unit()
    if ub is not None:
        return Bezout("found", LaurentPoly(), ub.inverse().as_poly(), "b is a unit")
    ua = a.as_unit()
    if ua is not None:
        return Bezout("found", ua.inverse().as_poly(), LaurentPoly(), "a is a unit")
    if a.is_zero() or b.is_zero():
        return Bezout("impossible", reason="one side is zero and the other is not a unit")
    if a.is_constant() and b.is_constant():
        g, x, y = _int_egcd(a.constant(), b.constant())
        if g == 1:
            return Bezout("found", LaurentPoly(x), LaurentPoly(y), "integer extended gcd")
        return Bezout("impossible", reason=f"both divisible by {g}")
    v = ideal_verdict([a, b])
    if v.status == "unknown":
        return Bezout("unknown", reason=v.reason)
    if v.status == "proper":
        where = "over QQ" if v.prime == 0 else f"mod {v.prime}"
        return Bezout("impossible", reason=f"(a, b) lies in a maximal ideal: {v.reason}"
                      if v.reason else f"common factor {where}")
    la, ad = a.dense()
    lb, bd = b.dense()
    if v.multiplier == 1 and v.combination:
        X, Y = v.combination
        x = LaurentPoly.from_dense(X, -la)
        y = LaurentPoly.from_dense(Y, -lb)
    else:
        x, y = _lift(a, b, v)
    assert a * x + b * y == 1
    x, y = _shrink(a, b, x, y)
    return Bezout("found", x, y, v.reason)


def _lift(a: LaurentPoly, b: LaurentPoly, v: IdealVerdict):
    la, ad = a.dense()
    lb, bd = b.dense()
    X, Y = v.combination
    X = LaurentPoly.from_dense(X, -la)
    Y = LaurentPoly.from_dense(Y, -lb)
    # a*X + b*Y = N
    wx, wy, w = LaurentPoly(), LaurentPoly(), LaurentPoly()
    rest = LaurentPoly(1)
    for p, e in v.primes:
        g, s, t = _egcd_mod_p(ad, bd, p)
        j, _ = zp.strip_t(g)
        xp = LaurentPoly.from_dense(s, -la - j)
        yp = LaurentPoly.from_dense(t, -lb - j)
        S = a * xp + b * yp
        r = (1 - S).exact_div(LaurentPoly(p))
        assert r is not None
        q = LaurentPoly()
        for i in range(1, e + 1):
            q = q + (-1) ** (i + 1) * comb(e, i) * S ** (i - 1)
        ux, uy = xp * q, yp * q
        one_minus_w = 1 - w
        wx, wy = wx + ux * one_minus_w, wy + uy * one_minus_w
        w = a * wx + b * wy
        rest = rest * r ** e
    return wx + X * rest, wy + Y * rest

"""Dense univariate polynomial helpers over ZZ, QQ and GF(p).

A polynomial is a tuple of coefficients in ascending degree with no trailing
zeros; the zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd

Poly = tuple


def trim(c) -> tuple:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(a: Poly) -> int:
    return len(a) - 1


def lc(a: Poly):
    return a[-1]


def add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return trim(out)


def neg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def sub(a: Poly, b: Poly) -> Poly:
    return add(a, neg(b))


def scale(a: Poly, c) -> Poly:
    if c == 0:
        return ()
    return tuple(x * c for x in a)


def mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def shift(a: Poly, k: int) -> Poly:
    """Multiply by t^k, k >= 0."""
    if not a:
        return ()
    return (0,) * k + tuple(a)


def strip_t(a: Poly) -> tuple[int, Poly]:
    """Split a = t^k * b with b(0) != 0."""
    k = 0
    while k < len(a) and a[k] == 0:
        k += 1
    return k, tuple(a[k:])


def reverse(a: Poly) -> Poly:
    return trim(reversed(a))


def content(a: Poly) -> int:
    g = 0
    for x in a:
        g = igcd(g, x)
    return g


def primitive(a: Poly) -> tuple[int, Poly]:
    """Return (c, p) with a = c * p, p primitive with positive leading coefficient."""
    if not a:
        return 0, ()
    c = content(a)
    if a[-1] < 0:
        c = -c
    return c, tuple(x // c for x in a)


def divmod_int(a: Poly, b: Poly) -> tuple[Poly, Poly] | None:
    """Long division in ZZ[t]; None if some step needs a non-integer quotient.

    Only the leading coefficient of b must divide; the remainder may be nonzero.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    lb = b[-1]
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        if c % lb:
            return None
        f = c // lb
        q[k] = f
        for j, y in enumerate(b):
            r[k + j] -= f * y
    return trim(q), trim(r)


def exact_div(a: Poly, b: Poly) -> Poly | None:
    """a / b in ZZ[t] if exact, else None."""
    if not a:
        return ()
    if len(a) < len(b):
        return None
    res = divmod_int(a, b)
    if res is None or res[1]:
        return None
    return res[0]


def pseudo_rem(a: Poly, b: Poly) -> Poly:
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        k = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[k + j] -= c * y
        r = list(trim(r))
    return tuple(r)


def gcd(a: Poly, b: Poly) -> Poly:
    """gcd in ZZ[t], primitive part times gcd of contents, positive leading coefficient."""
    if not a or not b:
        c = a or b
        return scale(primitive(c)[1], abs(content(c))) if c else ()
    ca, pa = primitive(a)
    cb, pb = primitive(b)
    g = igcd(ca, cb)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    # primitive PRS; fine at the sizes used here
    while pb:
        r = pseudo_rem(pa, pb)
        pa, pb = pb, (primitive(r)[1] if r else ())
    return scale(primitive(pa)[1], g)


def evaluate(a: Poly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


# --- QQ[t] ---------------------------------------------------------------

def q_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    r = [Fraction(x) for x in a]
    db = len(b) - 1
    lb = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c == 0:
            continue
        f = c / lb
        q[k] = f
        for j, y in enumerate(b):
            r[k + j] -= f * y
    return trim(q), trim(r)


def q_egcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """(g, x, y) over QQ[t] with a*x + b*y = g and g monic (or zero)."""
    r0, r1 = tuple(Fraction(x) for x in a), tuple(Fraction(x) for x in b)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = q_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    if not r0:
        return (), (), ()
    c = r0[-1]
    return scale(r0, 1 / c), scale(s0, 1 / c), scale(t0, 1 / c)


def denominator_lcm(*polys: Poly) -> int:
    d = 1
    for p in polys:
        for c in p:
            den = Fraction(c).denominator
            d = d * den // igcd(d, den)
    return d


# --- GF(p)[t] ------------------------------------------------------------

def mod_p(a: Poly, p: int) -> Poly:
    return trim(x % p for x in a)


def gcd_mod_p(a: Poly, b: Poly, p: int) -> Poly:
    """Monic gcd over GF(p); inputs already reduced."""
    a, b = mod_p(a, p), mod_p(b, p)
    while b:
        inv = pow(b[-1], -1, p)
        r = list(a)
        db = len(b) - 1
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] % p
            if c:
                f = c * inv % p
                for j, y in enumerate(b):
                    r[k + j] = (r[k + j] - f * y) % p
        a, b = b, mod_p(r, p)
    if not a:
        return ()
    inv = pow(a[-1], -1, p)
    return tuple(x * inv % p for x in a)

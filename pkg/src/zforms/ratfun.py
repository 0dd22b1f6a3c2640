"""Rational functions in t and their classes modulo ZZ[t, t^-1]."""
from __future__ import annotations

from fractions import Fraction

from . import _zpoly as zp
from .laurent import LaurentPoly, as_laurent, format_laurent


class RatFun:
    """Element t^shift * num / den of QQ(t).

    The canonical form keeps num and den in ZZ[t] with nonzero constant terms,
    coprime in ZZ[t] (contents included) and den with positive leading
    coefficient. A rational function is a Laurent polynomial iff den == 1.
    """

    __slots__ = ("num", "den", "shift")

    def __init__(self, num=0, den=1):
        if isinstance(num, RatFun) or isinstance(den, RatFun):
            r = _coerce(num) * _coerce(den).inverse()
            self.num, self.den, self.shift = r.num, r.den, r.shift
            return
        n, d = _laurent_like(num), _laurent_like(den)
        if d.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        ln, a = n.dense()
        ld, b = d.dense()
        self.num, self.den, self.shift = _canon(a, b, ln - ld)

    @classmethod
    def _raw(cls, num, den, shift) -> "RatFun":
        r = object.__new__(cls)
        r.num, r.den, r.shift = _canon(num, den, shift)
        return r

    # views ------------------------------------------------------------------
    def numerator(self) -> LaurentPoly:
        return LaurentPoly.from_dense(self.num, self.shift)

    def denominator(self) -> LaurentPoly:
        return LaurentPoly.from_dense(self.den)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_integral(self) -> bool:
        return self.den == (1,)

    def to_laurent(self) -> LaurentPoly:
        if not self.is_integral():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator()

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        m = min(self.shift, o.shift)
        a = zp.shift(self.num, self.shift - m)
        b = zp.shift(o.num, o.shift - m)
        if self.den == o.den:
            return RatFun._raw(zp.add(a, b), self.den, m)
        return RatFun._raw(zp.add(zp.mul(a, o.den), zp.mul(b, self.den)),
                           zp.mul(self.den, o.den), m)

    __radd__ = __add__

    def __neg__(self):
        r = object.__new__(RatFun)
        r.num, r.den, r.shift = zp.neg(self.num), self.den, self.shift
        return r

    def __sub__(self, other):
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFun()
        return RatFun._raw(zp.mul(self.num, o.num), zp.mul(self.den, o.den),
                           self.shift + o.shift)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun._raw(self.den, self.num, -self.shift)

    def __truediv__(self, other):
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatFun(1)
        for _ in range(n):
            out = out * self
        return out

    def involute(self) -> "RatFun":
        if not self.num:
            return self
        s = -self.shift - zp.degree(self.num) + zp.degree(self.den)
        return RatFun._raw(zp.reverse(self.num), zp.reverse(self.den), s)

    def evaluate(self, x):
        """Value at a rational point x (Fraction or int)."""
        d = zp.evaluate(self.den, Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(x) ** self.shift * zp.evaluate(self.num, Fraction(x)) / d

    # comparison -------------------------------------------------------------
    def __eq__(self, other):
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        return (self.num, self.den, self.shift) == (o.num, o.den, o.shift)

    def __hash__(self):
        if self.den == (1,):
            return hash(self.numerator())
        return hash((self.num, self.den, self.shift))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        return format_ratfun(self)


def _canon(a, b, s):
    if not a:
        return (), (1,), 0
    k, a = zp.strip_t(a)
    j, b = zp.strip_t(b)
    s += k - j
    g = zp.gcd(a, b)
    if g != (1,):
        a = zp.exact_div(a, g)
        b = zp.exact_div(b, g)
    if b[-1] < 0:
        a, b = zp.neg(a), zp.neg(b)
    return a, b, s


def _laurent_like(x) -> LaurentPoly:
    if isinstance(x, Fraction):
        raise TypeError("use RatFun.from_fraction for rationals")
    return as_laurent(x)


def _coerce(x, strict=True) -> RatFun | None:
    if isinstance(x, RatFun):
        return x
    if isinstance(x, (int, LaurentPoly)):
        return RatFun(x)
    if isinstance(x, Fraction):
        return RatFun(x.numerator, x.denominator)
    if strict:
        raise TypeError(f"cannot interpret {x!r} as a rational function")
    return None


def as_ratfun(x) -> RatFun:
    return _coerce(x)


def format_ratfun(f: RatFun) -> str:
    """'num / den' with each side in canonical Laurent text; bare num if integral."""
    n = format_laurent(f.numerator())
    if f.is_integral():
        return n
    d = format_laurent(f.denominator())
    return f"({n}) / ({d})"


def is_integral_laurent(f) -> bool:
    return _coerce(f).is_integral()


def quot_eq(f, g) -> bool:
    """f == g modulo ZZ[t, t^-1]."""
    return (_coerce(f) - _coerce(g)).is_integral()


class QuotClass:
    """Class of a rational function modulo ZZ[t, t^-1]."""

    __slots__ = ("rep",)

    def __init__(self, rep=0):
        self.rep = rep.rep if isinstance(rep, QuotClass) else _coerce(rep)

    def is_zero(self) -> bool:
        return self.rep.is_integral()

    def __eq__(self, other):
        if isinstance(other, QuotClass):
            return quot_eq(self.rep, other.rep)
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        return quot_eq(self.rep, o)

    def __hash__(self):
        # canonical denominators agree on a class
        return hash(self.rep.den)

    def __add__(self, other):
        return QuotClass(self.rep + QuotClass(other).rep)

    __radd__ = __add__

    def __sub__(self, other):
        return QuotClass(self.rep - QuotClass(other).rep)

    def __neg__(self):
        return QuotClass(-self.rep)

    def __mul__(self, other):
        if isinstance(other, QuotClass):
            raise TypeError("product of two classes mod ZZ[t, t^-1] is not defined")
        o = _coerce(other, strict=False)
        if o is None:
            return NotImplemented
        if not o.is_integral():
            raise TypeError("classes mod ZZ[t, t^-1] scale only by Laurent polynomials")
        return QuotClass(self.rep * o)

    __rmul__ = __mul__

    def involute(self) -> "QuotClass":
        return QuotClass(self.rep.involute())

    def __repr__(self):
        return f"QuotClass({self.rep})"

    def __str__(self):
        return str(self.rep)


def ratfun_doteq(f, g) -> bool:
    """f = +-t^k * g in QQ(t)."""
    f, g = _coerce(f), _coerce(g)
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    q = f / g
    return q.is_integral() and q.num in ((1,), (-1,))

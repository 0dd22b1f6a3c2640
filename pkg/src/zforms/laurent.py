"""Laurent polynomials over the integers with the involution t -> t^-1."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd as igcd
from typing import Iterable, Mapping

from . import _zpoly as zp


@dataclass(frozen=True)
class RingUnit:
    """The unit sign * t^exponent."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("unit sign must be +1 or -1")

    def as_poly(self) -> "LaurentPoly":
        return LaurentPoly({self.exponent: self.sign})

    def inverse(self) -> "RingUnit":
        return RingUnit(self.sign, -self.exponent)

    def __mul__(self, other: "RingUnit") -> "RingUnit":
        return RingUnit(self.sign * other.sign, self.exponent + other.exponent)


class LaurentPoly:
    """Sparse element of ZZ[t, t^-1]; a mapping exponent -> nonzero coefficient."""

    __slots__ = ("_c", "_hash")

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        elif isinstance(terms, LaurentPoly):
            terms = terms._c
        c = {}
        for k, v in terms.items():
            if not isinstance(v, int):
                raise TypeError(f"coefficient {v!r} is not an integer")
            if v:
                c[int(k)] = v
        self._c = c
        self._hash = None

    # construction ---------------------------------------------------------
    @classmethod
    def monomial(cls, c: int = 1, k: int = 0) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        return cls({low + i: c for i, c in enumerate(coeffs)})

    def dense(self) -> tuple[int, tuple[int, ...]]:
        """(low, coeffs) with self = t^low * sum coeffs[i] t^i; coeffs[0] != 0."""
        if not self._c:
            return 0, ()
        lo, hi = min(self._c), max(self._c)
        return lo, tuple(self._c.get(k, 0) for k in range(lo, hi + 1))

    # inspection -----------------------------------------------------------
    def terms(self) -> list[tuple[int, int]]:
        return sorted(self._c.items())

    def coeff(self, k: int) -> int:
        return self._c.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    @property
    def low(self) -> int:
        return min(self._c)

    @property
    def high(self) -> int:
        return max(self._c)

    def span(self) -> int:
        """high - low; the ZZ[t]-degree after clearing t-powers (-1 for zero)."""
        return self.high - self.low if self._c else -1

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def constant(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._c.get(0, 0)

    def as_unit(self) -> RingUnit | None:
        if len(self._c) == 1:
            ((k, v),) = self._c.items()
            if v in (1, -1):
                return RingUnit(v, k)
        return None

    def is_unit(self) -> bool:
        return self.as_unit() is not None

    def is_symmetric(self) -> bool:
        return all(self._c.get(-k) == v for k, v in self._c.items())

    def content(self) -> int:
        g = 0
        for v in self._c.values():
            g = igcd(g, v)
        return g

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(x):
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for k, v in o._c.items():
            c[k] = c.get(k, 0) + v
        return LaurentPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, int] = {}
        for i, a in self._c.items():
            for j, b in o._c.items():
                c[i + j] = c.get(i + j, 0) + a * b
        return LaurentPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            u = self.as_unit()
            if u is None:
                raise ValueError(f"{self} is not a unit")
            return u.inverse().as_poly() ** (-n)
        out = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        from .ratfun import RatFun
        return RatFun(self, other)

    def __rtruediv__(self, other):
        from .ratfun import RatFun
        return RatFun(other, self)

    def exact_div(self, other) -> "LaurentPoly | None":
        """self / other in ZZ[t, t^-1] when the quotient is a Laurent polynomial."""
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        la, a = self.dense()
        lb, b = o.dense()
        q = zp.exact_div(a, b)
        if q is None:
            return None
        return LaurentPoly.from_dense(q, la - lb)

    def divides(self, other) -> bool:
        """True if self divides other."""
        o = self._coerce(other)
        if self.is_zero():
            return o.is_zero()
        return o.exact_div(self) is not None

    def involute(self) -> "LaurentPoly":
        return LaurentPoly({-k: v for k, v in self._c.items()})

    def shifted(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self._c.items()})

    def evaluate(self, x):
        """Evaluate at x; x may be any ring element supporting negative powers."""
        acc = 0
        for k, v in self._c.items():
            acc = acc + v * x ** k
        return acc

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    def map_coeffs(self, f) -> "LaurentPoly":
        return LaurentPoly({k: f(v) for k, v in self._c.items()})

    # comparison -----------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return format_laurent(self)


def format_laurent(p: LaurentPoly) -> str:
    """Canonical text: ascending exponents, coefficient*t^k, spaced binary signs."""
    if p.is_zero():
        return "0"
    parts = []
    for i, (k, c) in enumerate(p.terms()):
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "t" if k == 1 else f"t^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if i == 0:
            parts.append("-" + body if c < 0 else body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


T = LaurentPoly.t()
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")


def involute(p: LaurentPoly) -> LaurentPoly:
    return as_laurent(p).involute()


def evaluate_at_one(p: LaurentPoly) -> int:
    return as_laurent(p).evaluate_at_one()


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Unit multiple of p with lowest exponent 0 and positive leading coefficient."""
    p = as_laurent(p)
    if p.is_zero():
        return p
    lo, c = p.dense()
    sign = 1 if c[-1] > 0 else -1
    return LaurentPoly.from_dense([sign * x for x in c])


def doteq(p: LaurentPoly, q: LaurentPoly) -> RingUnit | None:
    """The unit u with p = u * q when one exists (identity for p = q = 0)."""
    p, q = as_laurent(p), as_laurent(q)
    if p.is_zero() or q.is_zero():
        return RingUnit(1, 0) if p.is_zero() and q.is_zero() else None
    lp, a = p.dense()
    lq, b = q.dense()
    if a == b:
        return RingUnit(1, lp - lq)
    if a == zp.neg(b):
        return RingUnit(-1, lp - lq)
    return None


def gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Normalized gcd in ZZ[t, t^-1]; gcd(0, 0) = 0."""
    p, q = as_laurent(p), as_laurent(q)
    return LaurentPoly.from_dense(zp.gcd(p.dense()[1], q.dense()[1]))

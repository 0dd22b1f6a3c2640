"""Unitary units modulo 2P coming from coprime symmetric factorizations P = ab.

For ax + by = 1 the residue Phi(a, b) = -ax + by satisfies Phi * conj(Phi) = 1
modulo 2ab. Distinct factorizations, up to order and sign, give classes that
stay distinct modulo the units +-t^k.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .bezout import bezout_one
from .laurent import LaurentPoly, as_laurent


def is_unitary_unit(u, m) -> bool:
    """u * conj(u) == 1 modulo m, tested by exact division."""
    u, m = as_laurent(u), as_laurent(m)
    if m.is_zero():
        raise ValueError("modulus must be nonzero")
    return (u * u.involute() - 1).exact_div(m) is not None


@dataclass(frozen=True)
class Factorization:
    """P = a * b with a, b symmetric and a*x + b*y = 1."""

    a: LaurentPoly
    b: LaurentPoly
    x: LaurentPoly
    y: LaurentPoly

    @property
    def phi(self) -> LaurentPoly:
        return -self.a * self.x + self.b * self.y


def phi(a, b, m=None, witness: tuple | None = None) -> LaurentPoly:
    """Phi(a, b) = -a*x + b*y, checked to be unitary modulo m (default 2ab)."""
    a, b = as_laurent(a), as_laurent(b)
    if witness is None:
        res = bezout_one(a, b)
        if not res.found:
            raise ValueError(f"no Bezout witness for ({a}, {b}): {res.status} {res.reason}")
        x, y = res.x, res.y
    else:
        x, y = map(as_laurent, witness)
        if a * x + b * y != 1:
            raise ValueError("witness does not satisfy a*x + b*y = 1")
    u = -a * x + b * y
    m = 2 * a * b if m is None else as_laurent(m)
    if not is_unitary_unit(u, m):
        raise ArithmeticError(f"Phi({a}, {b}) = {u} is not unitary modulo {m}")
    return u


def _sign_normal(p: LaurentPoly) -> int:
    return 1 if p.coeff(p.high) > 0 else -1


def _key(a: LaurentPoly, b: LaurentPoly) -> tuple:
    opts = []
    for u, v in ((a, b), (b, a)):
        s = _sign_normal(u)
        opts.append((str(u * s), str(v * s)))
    return min(opts)


def _canonical_pair(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Representative with the 'smaller' factor first and positive leading coefficient."""
    cands = []
    for u, v in ((a, b), (b, a)):
        s = _sign_normal(u)
        u, v = u * s, v * s
        cands.append(((u.span(), abs(u.evaluate_at_one()) if u.is_constant() else 0,
                       sum(abs(c) for _, c in u.terms()), str(u)), u, v))
    cands.sort(key=lambda c: c[0])
    return cands[0][1], cands[0][2]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _laurent_sqrt(p: LaurentPoly) -> LaurentPoly | None:
    """s with s*s == p, if one exists (positive leading coefficient)."""
    if p.is_zero():
        return p
    lo, c = p.dense()
    if lo % 2 or len(c) % 2 == 0:
        return None
    from math import isqrt
    d = (len(c) - 1) // 2
    lead = c[-1]
    if lead <= 0 or isqrt(lead) ** 2 != lead:
        return None
    s = [0] * (d + 1)
    s[d] = isqrt(lead)
    # match coefficients from the top down
    for k in range(d - 1, -1, -1):
        acc = c[d + k]
        for i in range(k + 1, d):
            j = d + k - i
            if k < j <= d:
                acc -= s[i] * s[j]
        if acc % (2 * s[d]):
            return None
        s[k] = acc // (2 * s[d])
    root = LaurentPoly.from_dense(s, lo // 2)
    return root if root * root == p else None


def _shift_candidates(P: LaurentPoly) -> list[LaurentPoly]:
    """Symmetric a with a * (a + 1) = +-P."""
    out = []
    for sign in (1, -1):
        disc = 1 + 4 * sign * P
        s = _laurent_sqrt(disc)
        if s is None:
            continue
        for r in (s, -s):
            a2 = r - 1
            if all(c % 2 == 0 for _, c in a2.terms()):
                out.append(a2.map_coeffs(lambda c: c // 2))
    return out


def coprime_symmetric_factorizations(P, hints: Sequence = ()) -> list[Factorization]:
    """Pairs (a, b) with ab = P, both symmetric, generating the unit ideal.

    Pairs are identified up to order and a common sign. For an integer P the
    list is complete. For polynomial P the search covers integer divisors of
    the content, products of the given symmetric factors ``hints`` and the
    splittings P = +-a(a + 1).
    """
    P = as_laurent(P)
    if P.is_zero() or not P.is_symmetric():
        raise ValueError("P must be a nonzero symmetric Laurent polynomial")
    c = P.content()
    cands: list[LaurentPoly] = [LaurentPoly(d) for d in _divisors(c)]
    hs = [as_laurent(h) for h in hints]
    for k in range(1, len(hs) + 1):
        for sub in itertools.combinations(range(len(hs)), k):
            prod = LaurentPoly(1)
            for i in sub:
                prod = prod * hs[i]
            for d in _divisors(c):
                cands.append(prod * d)
    cands += _shift_candidates(P)
    seen, out = set(), []
    for a in cands:
        if a.is_zero() or not a.is_symmetric():
            continue
        b = P.exact_div(a)
        if b is None or not b.is_symmetric():
            continue
        a2, b2 = _canonical_pair(a, b)
        k = _key(a2, b2)
        if k in seen:
            continue
        res = bezout_one(a2, b2)
        if not res.found:
            continue
        seen.add(k)
        out.append(Factorization(a2, b2, res.x, res.y))
    out.sort(key=lambda f: (f.a.span(), sum(abs(x) for _, x in f.a.terms()), str(f.a)))
    return out


def count_factorizations(P, hints: Sequence = ()) -> int:
    return len(coprime_symmetric_factorizations(P, hints))


@dataclass(frozen=True)
class ClassCount:
    n_P: int
    distinct: int
    residues: tuple[LaurentPoly, ...]
    factorizations: tuple[Factorization, ...]

    def to_json(self) -> dict:
        return {"n_P": self.n_P, "distinct": self.distinct,
                "factorizations": [{"a": str(f.a), "b": str(f.b), "x": str(f.x), "y": str(f.y),
                                    "phi": str(r)} for f, r in zip(self.factorizations, self.residues)]}


def same_class(u, v, modulus) -> bool:
    """u = +-v modulo modulus (the t^k multiples are excluded separately)."""
    u, v, m = as_laurent(u), as_laurent(v), as_laurent(modulus)
    return (u - v).exact_div(m) is not None or (u + v).exact_div(m) is not None


def _odd_only_constant(u: LaurentPoly) -> bool:
    return all((c % 2 == 1) == (k == 0) for k, c in u.terms()) and u.coeff(0) % 2 == 1


def distinct_classes(P, hints: Sequence = ()) -> ClassCount:
    """Number of distinct classes of the Phi residues modulo 2P and the units +-t^k."""
    P = as_laurent(P)
    facs = coprime_symmetric_factorizations(P, hints)
    m = 2 * P
    res = tuple(f.phi for f in facs)
    for f, u in zip(facs, res):
        if not is_unitary_unit(u, m):
            raise ArithmeticError(f"Phi({f.a}, {f.b}) is not unitary modulo {m}")
        # u = 1 mod 2, so u = +-t^k v mod 2P forces 1 = t^k mod 2, i.e. k = 0
        if not _odd_only_constant(u):
            raise ArithmeticError(f"Phi({f.a}, {f.b}) = {u} is not 1 modulo 2")
    parent = list(range(len(res)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in itertools.combinations(range(len(res)), 2):
        if same_class(res[i], res[j], m):
            parent[find(i)] = find(j)
    distinct = len({find(i) for i in range(len(res))})
    return ClassCount(len(facs), distinct, res, tuple(facs))

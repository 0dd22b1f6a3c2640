"""Orders of finitely presented ZZ[t, t^-1]-modules.

A module is given by m relation rows on n generators. Its order is the gcd of
the n x n minors of the relation matrix (zero when m < n), normalized to lowest
exponent 0 and positive leading coefficient.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bezout import ideal_verdict
from .laurent import LaurentPoly, gcd, normalize
from .matrix import Matrix

EXHAUSTIVE_MINORS_UP_TO = 5


@dataclass(frozen=True)
class PresentedModule:
    """Module with generators e_1..e_n and relations given by the rows."""

    relations: Matrix

    @property
    def generators(self) -> int:
        return self.relations.ncols

    @classmethod
    def from_json(cls, data) -> "PresentedModule":
        from .parsing import matrix_from_json, ParseError
        rows = data["relations"] if isinstance(data, dict) else data
        if not rows:
            raise ParseError("a presentation needs at least one relation row")
        return cls(matrix_from_json(rows))

    def to_json(self) -> dict:
        return {"relations": [[str(x) for x in r] for r in self.relations.rows]}


def _maximal_minors(M: Matrix):
    m, n = M.shape
    for rows in itertools.combinations(range(m), n):
        yield M.minor(rows, range(n))


def order(module: PresentedModule | Matrix) -> LaurentPoly:
    """Normalized gcd of the maximal minors."""
    M = module.relations if isinstance(module, PresentedModule) else module
    m, n = M.shape
    if n == 0:
        return LaurentPoly(1)
    if m < n:
        return LaurentPoly()
    if m == n:
        return normalize(M.det())
    if n > EXHAUSTIVE_MINORS_UP_TO:
        raise ValueError(f"{n} generators exceeds the exhaustive minor limit")
    g = LaurentPoly()
    for d in _maximal_minors(M):
        g = gcd(g, d)
        if g == 1:
            break
    return g


@dataclass(frozen=True)
class Triviality:
    """status: 'trivial', 'nontrivial' or 'unknown'."""

    status: str
    reason: str = ""


def is_trivial_module(module: PresentedModule | Matrix) -> Triviality:
    """The module vanishes iff its maximal minors generate the unit ideal.

    An order that is not a unit already rules triviality out. For square
    presentations an order of 1 settles it; otherwise the minors' ideal is
    tested exactly (order 1 alone does not force the module to vanish).
    """
    M = module.relations if isinstance(module, PresentedModule) else module
    m, n = M.shape
    if n == 0:
        return Triviality("trivial", "no generators")
    o = order(M)
    if not o.is_unit():
        return Triviality("nontrivial", f"order {o} is not a unit")
    if m == n:
        return Triviality("trivial", "square presentation with unit determinant")
    v = ideal_verdict(list(_maximal_minors(M)))
    if v.status == "unit":
        return Triviality("trivial", "maximal minors generate the unit ideal")
    if v.status == "proper":
        return Triviality("nontrivial", f"module is nonzero mod {v.prime}: {v.reason}")
    return Triviality("unknown", v.reason)

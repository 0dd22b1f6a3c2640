"""Linking forms on torsion modules and the boundary form of a Hermitian matrix.

For a nondegenerate Hermitian A the module is ZZ[t, t^-1]^n modulo the
columns of A^T (generators are the dual basis vectors e_i^*). The value on
generators (e_i^*, e_j^*) is y(z)/p where lambda(-, z) = p * e_i^* and
y = e_j^*; with z = adj(A)^bar e_i and p = det A this is (A^-1)_ij. Values
are linear in the first slot and anti-linear in the second, like the form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bezout import ideal_verdict
from .forms import is_isometry, require_hermitian
from .laurent import LaurentPoly, doteq
from .matrix import Matrix
from .ratfun import QuotClass, RatFun


class LinkingForm:
    """Sesquilinear QQ(t)/ZZ[t, t^-1]-valued form on coker(presentation).

    presentation: square Laurent matrix whose columns are the relations.
    values: matrix of representatives of the values on generators.
    form: the Hermitian matrix it came from, when built by boundary_form.
    """

    def __init__(self, presentation: Matrix, values: Matrix, form: Matrix | None = None):
        if not presentation.is_square() or values.shape != presentation.shape:
            raise ValueError("presentation and values must be square of equal size")
        self.presentation = presentation.to_laurent()
        # integral values are zero in QQ(t)/ZZ[t, t^-1]
        self.values = values.to_ratfun().map(lambda x: RatFun(0) if x.is_integral() else x)
        self.form = form
        self._validate()

    @property
    def n(self) -> int:
        return self.presentation.nrows

    def value(self, i: int, j: int) -> QuotClass:
        return QuotClass(self.values[i, j])

    def classes(self) -> list[list[QuotClass]]:
        return [[QuotClass(x) for x in r] for r in self.values.rows]

    def pair(self, x, y) -> QuotClass:
        """Value on module elements given by coordinate vectors."""
        acc = RatFun(0)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                if xi and yj:
                    acc = acc + xi * self.values[i, j] * yj.involute()
        return QuotClass(acc)

    def order(self) -> LaurentPoly:
        return self.presentation.det()

    def module_is_trivial(self) -> bool:
        return self.order().is_unit()

    def _validate(self):
        B, P, n = self.values, self.presentation, self.n
        for i, j in itertools.product(range(n), repeat=2):
            if not QuotClass(B[i, j]) == QuotClass(B[j, i].involute()):
                raise ValueError(f"values are not Hermitian at ({i}, {j})")
        if P.det().is_zero():
            raise ValueError("presentation is singular; module is not torsion")
        for r in P.columns():
            for j in range(n):
                e = [LaurentPoly(int(k == j)) for k in range(n)]
                if not self.pair(r, e).is_zero() or not self.pair(e, r).is_zero():
                    raise ValueError("values do not vanish on relations")

    def to_json(self) -> dict:
        return {"presentation": [[str(x) for x in r] for r in self.presentation.rows],
                "values": [[str(x) for x in r] for r in self.values.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "LinkingForm":
        from .parsing import matrix_from_json, ratmatrix_from_json
        return cls(matrix_from_json(data["presentation"]), ratmatrix_from_json(data["values"]))

    def __repr__(self):
        return f"LinkingForm(presentation={self.presentation!r}, values={self.values!r})"


def dual_solution(A: Matrix, i: int, multiplier: LaurentPoly | int = 1):
    """(z, p) with lambda(-, z) = p * e_i^*, p = multiplier * det A."""
    n = A.nrows
    adj_bar = A.adjugate().conj()
    m = LaurentPoly(multiplier) if isinstance(multiplier, int) else multiplier
    z = [m * adj_bar[k, i] for k in range(n)]
    p = m * A.det()
    # the functional lambda(-, z) has coordinates conj(A) z in the dual basis
    lhs = A.conj().apply(z)
    assert all(lhs[k] == (p if k == i else 0) for k in range(n)), "dual equation fails"
    return z, p


def boundary_form(A: Matrix, multiplier: LaurentPoly | int = 1) -> LinkingForm:
    """Linking form on coker(A^T) induced by a nondegenerate Hermitian A.

    multiplier rescales the auxiliary solution (z, p); the result does not
    depend on it (up to equality of classes).
    """
    require_hermitian(A)
    if A.det().is_zero():
        raise ValueError("form is degenerate; boundary form needs det A != 0")
    n = A.nrows
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        z, p = dual_solution(A, i, multiplier)
        for j in range(n):
            rows[i][j] = RatFun(z[j], p)
    return LinkingForm(A.T, Matrix(rows, n), form=A)


def negate(L: LinkingForm) -> LinkingForm:
    return LinkingForm(L.presentation, -L.values, None if L.form is None else -L.form)


@dataclass(frozen=True)
class IsometryVerdict:
    """status: 'isometry', 'not_isometry' or 'unknown'."""

    status: str
    reason: str = ""

    def __bool__(self):
        return self.status == "isometry"


def isometry_check(U: Matrix, L1: LinkingForm, L2: LinkingForm) -> IsometryVerdict:
    """Does generator map e_i -> U e_i induce an isometry L1 -> L2?"""
    P1, P2 = L1.presentation, L2.presentation
    if U.shape != (L2.n, L1.n):
        raise ValueError(f"map must be {L2.n} x {L1.n}, got {U.shape}")
    U = U.to_laurent()
    # well defined: U P1 = P2 V with V integral (V is unique since P2 is invertible)
    V = P2.inverse() @ U @ P1
    if not V.is_laurent():
        return IsometryVerdict("not_isometry", "does not respect relations")
    T = U.T @ L2.values @ U.conj()
    for i, j in itertools.product(range(L1.n), repeat=2):
        if not QuotClass(T[i, j]) == QuotClass(L1.values[i, j]):
            return IsometryVerdict("not_isometry", f"values differ at ({i}, {j})")
    if doteq(P1.det(), P2.det()) is None:
        return IsometryVerdict("not_isometry", "module orders differ")
    # onto iff the maximal minors of [U | P2] generate the unit ideal; with
    # square presentations and equal orders onto implies bijective
    M = U.hstack(P2)
    n2 = L2.n
    gens = [M.minor(range(n2), cols) for cols in itertools.combinations(range(M.ncols), n2)]
    v = ideal_verdict(gens)
    if v.status == "unit":
        return IsometryVerdict("isometry", "well defined, preserves values, onto")
    if v.status == "proper":
        return IsometryVerdict("not_isometry", f"not onto: {v.reason}")
    return IsometryVerdict("unknown", v.reason)


def boundary_map(G: Matrix) -> Matrix:
    """Matrix of the induced map on the boundary module: conj(G)^-T."""
    return G.H.inverse().to_laurent()


def aut_action(G: Matrix, L: LinkingForm, h: Matrix) -> Matrix:
    """G . h = h o (boundary of G)^-1 for an isometry G of the form behind L."""
    if L.form is None:
        raise ValueError("linking form does not record its Hermitian form")
    if not G.is_square() or G.nrows != L.n or not is_isometry(G, L.form):
        raise ValueError("G is not an isometry of the form")
    if h.ncols != L.n:
        raise ValueError(f"h must have {L.n} columns")
    # the inverse of conj(G)^-T is conj(G)^T
    return h @ G.H


def orbit_lower_bound_rank1(lam) -> int:
    """Lower bound for the number of Aut-orbits of boundary isometries in rank one.

    For lam = 2P with P symmetric the unitary units Phi(a, b) give distinct
    orbits, one per coprime symmetric factorization class.
    """
    from .units import distinct_classes
    lam = lam if isinstance(lam, LaurentPoly) else LaurentPoly(lam)
    if lam.is_zero() or not lam.is_symmetric():
        raise ValueError("rank one form must be a nonzero symmetric polynomial")
    if any(c % 2 for _, c in lam.terms()):
        return 1
    P = lam.map_coeffs(lambda c: c // 2)
    return distinct_classes(P).distinct

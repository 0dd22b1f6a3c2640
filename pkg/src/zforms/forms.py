"""Hermitian forms over ZZ[t, t^-1] and integer symmetric forms.

A square matrix A defines lambda(x, y) = x^T A conj(y) on column vectors:
linear in x, anti-linear in y. A is Hermitian when A = conj(A)^T, and a
matrix U is an isometry when U^T A conj(U) = A (its columns u_i satisfy
lambda(u_i, u_j) = A_ij).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd
from typing import Sequence

from .laurent import LaurentPoly, T, as_laurent
from .matrix import Matrix, bareiss_det


# --- Hermitian forms -------------------------------------------------------

def check_hermitian(A: Matrix) -> bool:
    if not A.is_square():
        raise ValueError(f"a form needs a square matrix, got {A.shape}")
    return A == A.H


def require_hermitian(A: Matrix) -> Matrix:
    if not check_hermitian(A):
        raise ValueError("matrix is not Hermitian")
    return A


def form_value(A: Matrix, x: Sequence, y: Sequence):
    """lambda(x, y) = x^T A conj(y)."""
    acc = LaurentPoly()
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            a = A[i, j]
            if a and yj:
                acc = acc + xi * a * as_laurent(yj).involute()
    return acc


def is_isometry(U: Matrix, A: Matrix) -> bool:
    return U.T @ A @ U.conj() == A


def _even_witness_entry(p: LaurentPoly) -> LaurentPoly | None:
    c0 = p.coeff(0)
    if c0 % 2:
        return None
    return LaurentPoly({0: c0 // 2, **{k: v for k, v in p.terms() if k > 0}})


def even_witness(A: Matrix) -> Matrix | None:
    """Q with A = Q + conj(Q)^T when A is even, else None.

    Q is upper triangular; its diagonal q satisfies q + conj(q) = A_ii.
    """
    require_hermitian(A)
    n = A.nrows
    rows = [[LaurentPoly()] * n for _ in range(n)]
    for i in range(n):
        q = _even_witness_entry(A[i, i])
        if q is None:
            return None
        rows[i][i] = q
        for j in range(i + 1, n):
            rows[i][j] = A[i, j]
    return Matrix(rows, n)


def is_even(A: Matrix) -> bool:
    """Every diagonal entry has even constant coefficient."""
    return even_witness(A) is not None


def hyperbolic_h2() -> Matrix:
    return Matrix([[0, T - 1], [T ** -1 - 1, 0]])


def direct_sum(*mats: Matrix) -> Matrix:
    n = sum(m.nrows for m in mats)
    rows = []
    off = 0
    for m in mats:
        for r in m.rows:
            rows.append([LaurentPoly()] * off + list(r) + [LaurentPoly()] * (n - off - m.ncols))
        off += m.ncols
    return Matrix(rows, n)


# --- integer symmetric forms -----------------------------------------------

@dataclass(frozen=True)
class IntSymForm:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("integer form must be square")
        if any(rows[i][j] != rows[j][i] for i in range(n) for j in range(n)):
            raise ValueError("integer form must be symmetric")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def transform(self, U: Sequence[Sequence[int]]) -> "IntSymForm":
        """U^T S U."""
        n = self.n
        SU = [[sum(self.rows[i][k] * U[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        return IntSymForm(tuple(tuple(sum(U[k][i] * SU[k][j] for k in range(n))
                                      for j in range(n)) for i in range(n)))

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def int_direct_sum(*forms: IntSymForm) -> IntSymForm:
    n = sum(f.n for f in forms)
    rows, off = [], 0
    for f in forms:
        for r in f.rows:
            rows.append((0,) * off + r + (0,) * (n - off - f.n))
        off += f.n
    return IntSymForm(tuple(rows))


def augment(A: Matrix) -> IntSymForm:
    """Entrywise evaluation at t = 1."""
    require_hermitian(A)
    return IntSymForm(tuple(tuple(x.evaluate_at_one() for x in r) for r in A.rows))


@dataclass(frozen=True)
class IntInvariants:
    rank: int
    signature: int
    parity: str  # "even" or "odd"
    det_nondeg: int


def _diagonalize(S: IntSymForm) -> list[Fraction]:
    """Diagonal of a rational congruence diagonalization (nonzero entries only)."""
    a = [[Fraction(x) for x in r] for r in S.rows]
    out = []
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i]), None)
        if k is None:
            hit = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
            if hit is None:
                break
            i, j = hit
            # e_i <- e_i + e_j makes the diagonal entry 2*a_ij
            for r in range(n):
                a[r][i] += a[r][j]
            for c in range(n):
                a[i][c] += a[j][c]
            k = i
        p = a[k][k]
        out.append(p)
        rest = [r for r in range(n) if r != k]
        a = [[a[r][c] - a[r][k] * a[k][c] / p for c in rest] for r in rest]
    return out


def int_invariants(S: IntSymForm) -> IntInvariants:
    d = _diagonalize(S)
    rank = len(d)
    sig = sum(1 if x > 0 else -1 for x in d)
    parity = "even" if all(S[i, i] % 2 == 0 for i in range(S.n)) else "odd"
    g = 0
    if rank:
        for rows in itertools.combinations(range(S.n), rank):
            for cols in itertools.combinations(range(S.n), rank):
                m = bareiss_det([[LaurentPoly(S[i, j]) for j in cols] for i in rows])
                g = igcd(g, m.constant())
                if g == 1:
                    break
            if g == 1:
                break
    else:
        g = 1
    neg = (rank - sig) // 2
    return IntInvariants(rank, sig, parity, (-1) ** neg * g)


@dataclass(frozen=True)
class CongruenceVerdict:
    """status: 'congruent' (U^T S1 U = S2), 'not_congruent' or 'inconclusive'."""

    status: str
    U: tuple[tuple[int, ...], ...] | None = None
    obstruction: str | None = None

    @property
    def congruent(self) -> bool:
        return self.status == "congruent"


MAX_SEARCH_RANK = 4


def _value_order(x: int) -> int:
    return 2 * abs(x) - (x > 0)


def _candidates(n: int, bound: int) -> list[tuple[int, ...]]:
    vecs = [v for v in itertools.product(range(-bound, bound + 1), repeat=n) if any(v)]
    vecs.sort(key=lambda v: (sum(map(abs, v)), tuple(_value_order(x) for x in reversed(v))))
    return vecs


def _bilinear(S, u, v) -> int:
    n = len(u)
    return sum(u[i] * S[i][j] * v[j] for i in range(n) if u[i] for j in range(n) if v[j])


def _primitive_columns(cols: list[tuple[int, ...]]) -> bool:
    """Columns extend to a basis of ZZ^n iff their maximal minors have gcd 1."""
    k, n = len(cols), len(cols[0])
    g = 0
    for rows in itertools.combinations(range(n), k):
        m = bareiss_det([[LaurentPoly(cols[c][r]) for c in range(k)] for r in rows])
        g = igcd(g, m.constant())
        if g == 1:
            return True
    return False


def int_congruent_bounded(S1: IntSymForm, S2: IntSymForm, coeff_bound: int = 3) -> CongruenceVerdict:
    """Invariant screens, then a search for U with entries in [-coeff_bound, coeff_bound]."""
    if S1.n != S2.n:
        raise ValueError(f"forms of different sizes {S1.n} and {S2.n}")
    if S1 == S2:
        return CongruenceVerdict("congruent", tuple(tuple(int(i == j) for j in range(S1.n))
                                                     for i in range(S1.n)))
    i1, i2 = int_invariants(S1), int_invariants(S2)
    for name in ("rank", "signature", "det_nondeg", "parity"):
        if getattr(i1, name) != getattr(i2, name):
            return CongruenceVerdict("not_congruent",
                                     obstruction="determinant" if name == "det_nondeg" else name)
    n = S1.n
    if n > MAX_SEARCH_RANK:
        return CongruenceVerdict("inconclusive")
    A, B = S1.rows, S2.rows
    by_norm: dict[int, list] = {}
    for v in _candidates(n, coeff_bound):
        by_norm.setdefault(_bilinear(A, v, v), []).append(v)

    def extend(cols):
        j = len(cols)
        if j == n:
            det = bareiss_det([[LaurentPoly(cols[c][r]) for c in range(n)] for r in range(n)])
            return cols if det.constant() in (1, -1) else None
        for v in by_norm.get(B[j][j], ()):
            if all(_bilinear(A, cols[i], v) == B[i][j] for i in range(j)):
                nxt = cols + [v]
                if _primitive_columns(nxt):
                    res = extend(nxt)
                    if res:
                        return res
        return None

    cols = extend([])
    if cols is None:
        return CongruenceVerdict("inconclusive")
    U = tuple(tuple(cols[c][r] for c in range(n)) for r in range(n))
    assert S1.transform(U) == S2
    return CongruenceVerdict("congruent", U)


# --- automorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class AutSearch:
    """Isometries found by a bounded search; complete=True when they generate Aut."""

    matrices: tuple[Matrix, ...]
    complete: bool
    note: str = ""


MAX_AUT_CANDIDATES = 200_000


def _bounded_polys(deg_bound: int, coeff_bound: int) -> list[LaurentPoly]:
    exps = range(-deg_bound, deg_bound + 1)
    out = [LaurentPoly(dict(zip(exps, cs)))
           for cs in itertools.product(range(-coeff_bound, coeff_bound + 1), repeat=len(exps))]
    out.sort(key=lambda p: (len(p.terms()), sum(abs(c) for _, c in p.terms()), str(p)))
    return out


def aut_search_bounded(A: Matrix, deg_bound: int = 1, coeff_bound: int = 1) -> AutSearch:
    """All isometries U^T A conj(U) = A with entries of bounded exponents and coefficients.

    In rank one the isometry group is {+-t^k}; the generators -1 and t are
    returned with complete=True.
    """
    require_hermitian(A)
    n = A.nrows
    if n == 1:
        return AutSearch((Matrix([[-1]]), Matrix([[T]])), True,
                         "rank one: isometries are the units +-t^k")
    polys = _bounded_polys(deg_bound, coeff_bound)
    if len(polys) ** n > MAX_AUT_CANDIDATES:
        raise ValueError(f"search space {len(polys)}^{n} too large; lower the bounds")
    vecs = [v for v in itertools.product(polys, repeat=n) if any(v)]
    by_norm: dict[LaurentPoly, list] = {}
    for v in vecs:
        by_norm.setdefault(form_value(A, v, v), []).append(v)
    found = []

    def extend(cols):
        j = len(cols)
        if j == n:
            U = Matrix.from_columns(cols, n)
            if U.det().is_unit() and is_isometry(U, A):
                found.append(U)
            return
        for v in by_norm.get(A[j, j], ()):
            if all(form_value(A, cols[i], v) == A[i, j] for i in range(j)):
                extend(cols + [v])

    extend([])
    return AutSearch(tuple(found), False,
                     f"exponents in [{-deg_bound}, {deg_bound}], |coefficients| <= {coeff_bound}")

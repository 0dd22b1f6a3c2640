"""Small dense matrices over ZZ[t, t^-1] or QQ(t).

Entries are LaurentPoly or RatFun (ints are promoted). Determinants use
fraction-free Bareiss elimination; inverses, ranks and kernels are computed
over QQ(t).
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

from .laurent import LaurentPoly
from .ratfun import RatFun, as_ratfun


def _promote(x):
    if isinstance(x, (LaurentPoly, RatFun)):
        return x
    if isinstance(x, int):
        return LaurentPoly(x)
    return as_ratfun(x)


class Matrix:
    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self.rows = tuple(tuple(_promote(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, m: int, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(m)], n)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        return cls([[c[i] for c in cols] for i in range(nrows)], len(cols))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.ncols)]

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows], self.ncols)

    # structure ------------------------------------------------------------
    @property
    def T(self) -> "Matrix":
        return Matrix([[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)],
                      self.nrows)

    def conj(self) -> "Matrix":
        return self.map(lambda x: x.involute())

    @property
    def H(self) -> "Matrix":
        """Conjugate transpose."""
        return self.T.conj()

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], len(cols))

    def hstack(self, other: "Matrix") -> "Matrix":
        return Matrix([a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        return Matrix(self.rows + other.rows, self.ncols)

    def is_laurent(self) -> bool:
        return all(isinstance(x, LaurentPoly) or (isinstance(x, RatFun) and x.is_integral())
                   for r in self.rows for x in r)

    def to_laurent(self) -> "Matrix":
        return self.map(lambda x: x if isinstance(x, LaurentPoly) else x.to_laurent())

    def to_ratfun(self) -> "Matrix":
        return self.map(as_ratfun)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.ncols)

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = LaurentPoly()
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out, other.ncols)

    def apply(self, v: Sequence) -> tuple:
        return (self @ Matrix([[x] for x in v], 1)).column(0)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(f"'{x}'" for x in r) + "]"
                                       for r in self.rows) + "])"

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    # determinants ---------------------------------------------------------
    def det(self):
        if not self.is_square():
            raise ValueError(f"determinant of non-square {self.shape} matrix")
        if all(isinstance(x, LaurentPoly) for r in self.rows for x in r):
            return bareiss_det([list(r) for r in self.rows])
        # clear denominators row by row
        rows, scale = [], RatFun(1)
        for r in self.rows:
            d = LaurentPoly(1)
            for x in r:
                if isinstance(x, RatFun) and not x.is_integral():
                    d = _lcm(d, x.denominator())
            rows.append([(as_ratfun(x) * d).to_laurent() for x in r])
            scale = scale * d
        return as_ratfun(bareiss_det(rows)) / scale

    def minor(self, rows: Sequence[int], cols: Sequence[int]):
        return self.submatrix(rows, cols).det()

    def adjugate(self) -> "Matrix":
        n = self.nrows
        if not self.is_square():
            raise ValueError("adjugate of non-square matrix")
        if n == 0:
            return Matrix([], 0)
        if n == 1:
            return Matrix([[1]], 1)
        idx = range(n)
        cof = [[(-1) ** (i + j) * self.minor([r for r in idx if r != j], [c for c in idx if c != i])
                for j in idx] for i in idx]
        return Matrix(cof, n)

    # linear algebra over QQ(t) ---------------------------------------------
    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form over QQ(t) and pivot columns."""
        a = [list(map(as_ratfun, r)) for r in self.rows]
        m, n = self.nrows, self.ncols
        pivots, row = [], 0
        for col in range(n):
            if row >= m:
                break
            piv = next((i for i in range(row, m) if a[i][col]), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            inv = a[row][col].inverse()
            a[row] = [x * inv for x in a[row]]
            for i in range(m):
                if i != row and a[i][col]:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
        return Matrix(a, n), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple]:
        """Basis of the right kernel over QQ(t)."""
        r, piv = self.rref()
        free = [j for j in range(self.ncols) if j not in piv]
        basis = []
        for f in free:
            v = [RatFun(0)] * self.ncols
            v[f] = RatFun(1)
            for i, p in enumerate(piv):
                v[p] = -r[i, f]
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix":
        n = self.nrows
        if not self.is_square():
            raise ValueError("inverse of non-square matrix")
        r, piv = self.hstack(Matrix.identity(n)).rref()
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("singular matrix")
        return r.submatrix(range(n), range(n, 2 * n))

    def solve(self, b: "Matrix") -> "Matrix | None":
        """Some X with self @ X == b over QQ(t), or None."""
        m, n = self.shape
        r, piv = self.hstack(b).rref()
        if any(p >= n for p in piv):
            return None
        x = [[RatFun(0)] * b.ncols for _ in range(n)]
        for i, p in enumerate(piv):
            for k in range(b.ncols):
                x[p][k] = r[i, n + k]
        return Matrix(x, b.ncols)


def _lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    from .laurent import gcd
    g = gcd(a, b)
    return (a * b).exact_div(g)


def bareiss_det(a: list[list]):
    """Fraction-free determinant over an integral domain with exact_div."""
    n = len(a)
    if n == 0:
        return LaurentPoly(1)
    a = [list(r) for r in a]
    sign, prev = 1, LaurentPoly(1)
    for k in range(n - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return LaurentPoly()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                q = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
                a[i][j] = q
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def column_vector(v: Sequence) -> Matrix:
    return Matrix([[x] for x in v], 1)


def minors(m: Matrix, k: int):
    """Yield all k x k minors of m."""
    for rows in itertools.combinations(range(m.nrows), k):
        for cols in itertools.combinations(range(m.ncols), k):
            yield m.minor(rows, cols)

"""Reidemeister torsion of based chain complexes over QQ(t).

A complex has chain groups C_0..C_m of the given dimensions with standard
bases, and boundaries[i] is the matrix of C_{i+1} -> C_i (columns are images
of basis vectors). For bases b_i of the boundaries B_i, homology lifts h_i
and lifts of b_{i-1} into C_i,

    tau = prod_i det(b_i, h_i, lift(b_{i-1}) | c_i) ** (-1) ** (i + 1)

where det(u | c) is the determinant of the matrix whose columns are the
coordinates of u in the basis c. For a two-term complex C_1 -> C_0 with matrix
A this gives det(A)^-1.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .laurent import LaurentPoly
from .matrix import Matrix
from .ratfun import RatFun, as_ratfun


class TorsionError(ValueError):
    pass


Vector = tuple


@dataclass
class BasedComplex:
    """dims[i] = dim C_i; boundaries[i]: C_{i+1} -> C_i; homology_bases[i]: cycles in C_i."""

    dims: list[int]
    boundaries: list[Matrix]
    homology_bases: dict[int, list[Vector]] | None = None

    def __post_init__(self):
        self.dims = list(self.dims)
        m = len(self.dims) - 1
        if len(self.boundaries) != max(m, 0):
            raise TorsionError(f"{len(self.dims)} chain groups need {max(m, 0)} boundaries")
        self.boundaries = [b.to_ratfun() if b.nrows else b for b in self.boundaries]
        for i, D in enumerate(self.boundaries):
            if D.shape != (self.dims[i], self.dims[i + 1]) and not (
                    0 in (self.dims[i], self.dims[i + 1])):
                raise TorsionError(f"boundary {i} has shape {D.shape}, expected "
                                   f"{(self.dims[i], self.dims[i + 1])}")
        for i in range(1, len(self.boundaries)):
            a, b = self.boundary(i - 1), self.boundary(i)
            if a.ncols and b.ncols and a.nrows and not (a @ b).is_zero():
                raise TorsionError(f"boundary {i - 1} o boundary {i} is not zero")
        if self.homology_bases is not None:
            self.homology_bases = {int(k): [tuple(map(as_ratfun, v)) for v in vs]
                                   for k, vs in self.homology_bases.items()}
            for k, vs in self.homology_bases.items():
                for v in vs:
                    if len(v) != self.dims[k]:
                        raise TorsionError(f"homology vector in degree {k} has wrong length")
                    if k > 0 and self.dims[k - 1] and any(self.boundary(k - 1).apply(v)):
                        raise TorsionError(f"homology vector in degree {k} is not a cycle")

    @property
    def top(self) -> int:
        return len(self.dims) - 1

    def boundary(self, i: int) -> Matrix:
        """Matrix of C_{i+1} -> C_i (zero matrix outside the range)."""
        rows = self.dims[i] if 0 <= i <= self.top else 0
        cols = self.dims[i + 1] if 0 <= i + 1 <= self.top else 0
        if 0 <= i < len(self.boundaries):
            D = self.boundaries[i]
            if D.shape == (rows, cols):
                return D
        return Matrix([[0] * cols for _ in range(rows)], cols)

    def homology_basis(self, i: int) -> list[Vector]:
        if self.homology_bases is None:
            return []
        return self.homology_bases.get(i, [])

    def betti(self, i: int) -> int:
        """dim H_i over QQ(t)."""
        d = self.dims[i]
        z = d - (self.boundary(i - 1).rank() if i > 0 and d else 0)
        b = self.boundary(i).rank() if i < self.top and d else 0
        return z - b

    def is_acyclic(self) -> bool:
        return all(self.betti(i) == 0 for i in range(self.top + 1))

    def to_json(self) -> dict:
        out = {"dims": self.dims,
               "boundaries": [[[str(x) for x in r] for r in D.rows] for D in self.boundaries]}
        if self.homology_bases is not None:
            out["homology_bases"] = {str(k): [[str(x) for x in v] for v in vs]
                                     for k, vs in self.homology_bases.items()}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BasedComplex":
        from .parsing import ratfun_from_json
        dims = [int(d) for d in data["dims"]]
        bds = []
        for i, rows in enumerate(data.get("boundaries", [])):
            ncols = dims[i + 1] if i + 1 < len(dims) else 0
            bds.append(Matrix([[ratfun_from_json(x) for x in r] for r in rows],
                              ncols if not rows else None))
        hb = data.get("homology_bases")
        if hb is not None:
            hb = {int(k): [[ratfun_from_json(x) for x in v] for v in vs] for k, vs in hb.items()}
        return cls(dims, bds, hb)


def _random_invertible(k: int, rng: random.Random) -> list[list[int]]:
    while True:
        R = [[rng.randint(-2, 2) for _ in range(k)] for _ in range(k)]
        if Matrix(R, k).det():
            return R


def _image_basis(D: Matrix, rng: random.Random | None):
    """Columns of D spanning its image and the matching lifts (as matrices)."""
    n = D.ncols
    order = list(range(n))
    if rng is not None:
        rng.shuffle(order)
    if D.nrows == 0 or n == 0:
        return [], []
    _, piv = D.submatrix(range(D.nrows), order).rref()
    S = [order[p] for p in piv]
    cols = [D.column(j) for j in S]
    lifts = [tuple(RatFun(int(i == j)) for i in range(n)) for j in S]
    if rng is not None and S:
        R = _random_invertible(len(S), rng)
        mix = lambda vs: [tuple(sum((R[a][b] * vs[a][r] for a in range(len(S))), RatFun(0))
                                for r in range(len(vs[0]))) for b in range(len(S))]
        cols, lifts = mix(cols), mix(lifts)
        kernel = D.nullspace()
        if kernel:
            shifted = []
            for v in lifts:
                c, y = rng.randint(-2, 2), rng.choice(kernel)
                shifted.append(tuple(a + c * b for a, b in zip(v, y)))
            lifts = shifted
    return cols, lifts


def degree_determinants(C: BasedComplex, rng: random.Random | None = None) -> list[RatFun]:
    """det(b_i, h_i, lift(b_{i-1}) | c_i) for each degree i."""
    images = [_image_basis(C.boundary(i), rng) for i in range(C.top + 1)]
    dets = []
    for i in range(C.top + 1):
        d = C.dims[i]
        b, _ = images[i]
        _, lifts = images[i - 1] if i > 0 else ([], [])
        h = list(C.homology_basis(i))
        if rng is not None and h and i < C.top and C.dims[i + 1]:
            D = C.boundary(i)
            h = [tuple(x + y for x, y in zip(v, D.apply([rng.randint(-1, 1) for _ in range(D.ncols)])))
                 for v in h]
        vecs = list(b) + h + list(lifts)
        if len(vecs) != d:
            if C.homology_bases is None:
                raise TorsionError(f"complex is not acyclic in degree {i}; homology bases are required")
            raise TorsionError(f"degree {i}: {len(h)} homology vectors, expected "
                               f"{d - len(b) - len(lifts)}")
        if d == 0:
            dets.append(RatFun(1))
            continue
        det = Matrix.from_columns(vecs, d).det()
        if not det:
            raise TorsionError(f"degree {i}: boundary and homology vectors are dependent")
        dets.append(as_ratfun(det))
    return dets


def torsion(C: BasedComplex, rng: random.Random | None = None) -> RatFun:
    """Torsion of C; rng randomizes the auxiliary choices (the value does not change)."""
    tau = RatFun(1)
    for i, d in enumerate(degree_determinants(C, rng)):
        tau = tau * d if i % 2 else tau / d
    return tau


def torsion_two_term(A: Matrix) -> RatFun:
    """Torsion of C_1 -> C_0 with invertible matrix A."""
    d = A.det()
    if not d:
        raise TorsionError("two-term complex is not acyclic")
    return as_ratfun(d).inverse()


def homology_basis(C: BasedComplex) -> dict[int, list[Vector]]:
    """Cycles extending a boundary basis to a basis of the cycles, per degree."""
    out = {}
    for i in range(C.top + 1):
        d = C.dims[i]
        if d == 0:
            continue
        if i > 0 and C.dims[i - 1]:
            Z = C.boundary(i - 1).nullspace()
        else:
            Z = [tuple(RatFun(int(r == c)) for r in range(d)) for c in range(d)]
        B = C.boundary(i).columns() if i < C.top and C.dims[i + 1] else []
        basis, chosen = [v for v in B], []
        rank = Matrix.from_columns(basis, d).rank() if basis else 0
        for z in Z:
            trial = basis + [z]
            r = Matrix.from_columns(trial, d).rank()
            if r > rank:
                basis, rank = trial, r
                chosen.append(z)
        if chosen:
            out[i] = chosen
    return out


# --- short exact sequences -------------------------------------------------

@dataclass(frozen=True)
class MultiplicativityReport:
    tau_C: RatFun
    tau_sub: RatFun
    tau_quotient: RatFun
    tau_H: RatFun
    ratio: RatFun  # tau_C / (tau_sub * tau_quotient * tau_H)
    sign: int  # the sign predicted by the dimension count
    holds: bool  # tau_C == sign * tau_sub * tau_quotient * tau_H
    les: BasedComplex = field(repr=False)

    def to_json(self) -> dict:
        return {"tau_C": str(self.tau_C), "tau_sub": str(self.tau_sub),
                "tau_quotient": str(self.tau_quotient), "tau_H": str(self.tau_H),
                "ratio": str(self.ratio), "sign": self.sign, "holds": self.holds}


def _coords(v: Vector, h: list[Vector], D: Matrix, d: int) -> list[RatFun]:
    """Coefficients of v on h modulo the image of D."""
    cols = list(h) + (D.columns() if D.ncols else [])
    if not cols:
        if any(v):
            raise TorsionError("vector is not a boundary")
        return []
    M = Matrix.from_columns(cols, d)
    x = M.solve(Matrix([[c] for c in v], 1))
    if x is None:
        raise TorsionError("vector is not a cycle combination of the homology basis")
    return [x[k, 0] for k in range(len(h))]


def _check_ses(sub: BasedComplex, C: BasedComplex, quo: BasedComplex,
               incl: Sequence[Matrix], proj: Sequence[Matrix]):
    m = C.top
    if not (len(sub.dims) == len(quo.dims) == m + 1 == len(incl) == len(proj)):
        raise TorsionError("complexes and maps must have the same length")
    for i in range(m + 1):
        a, b, c = sub.dims[i], C.dims[i], quo.dims[i]
        if a + c != b:
            raise TorsionError(f"degree {i}: dimensions do not add up")
        if b == 0:
            continue
        I, P = incl[i], proj[i]
        if a and c and not (P @ I).is_zero():
            raise TorsionError(f"degree {i}: projection o inclusion is not zero")
        # compatible bases: det(inclusion of sub basis, lifts of quotient basis) = 1
        cols = I.columns() if a else []
        if c:
            L = P.solve(Matrix.identity(c))
            if L is None:
                raise TorsionError(f"degree {i}: projection is not onto")
            cols += L.columns()
        if Matrix.from_columns(cols, b).det() != 1:
            raise TorsionError(f"degree {i}: bases are not compatible")
        if i < m:
            if a and sub.dims[i + 1] and not (C.boundary(i) @ incl[i + 1] == I @ sub.boundary(i)):
                raise TorsionError(f"degree {i}: inclusion is not a chain map")
            if c and C.dims[i + 1] and not (quo.boundary(i) @ proj[i + 1] == P @ C.boundary(i)):
                raise TorsionError(f"degree {i}: projection is not a chain map")


def long_exact_sequence(sub: BasedComplex, C: BasedComplex, quo: BasedComplex,
                        incl: Sequence[Matrix], proj: Sequence[Matrix]) -> BasedComplex:
    """The homology sequence as an acyclic based complex.

    H_i(quo) sits in degree 3i, H_i(C) in 3i + 1 and H_i(sub) in 3i + 2; the
    bases are the given homology bases.
    """
    m = C.top
    H = {("s", i): sub.homology_basis(i) for i in range(m + 1)}
    H.update({("c", i): C.homology_basis(i) for i in range(m + 1)})
    H.update({("q", i): quo.homology_basis(i) for i in range(m + 1)})
    for who, X in (("s", sub), ("c", C), ("q", quo)):
        for i in range(m + 1):
            if len(H[who, i]) != X.betti(i):
                raise TorsionError(f"missing homology basis in degree {i}")
    slot = {}
    for i in range(m + 1):
        slot[3 * i] = ("q", i)
        slot[3 * i + 1] = ("c", i)
        slot[3 * i + 2] = ("s", i)
    top = 3 * m + 2
    dims = [len(H[slot[k]]) for k in range(top + 1)]
    bds = []
    for k in range(top):
        src, dst = slot[k + 1], slot[k]
        cols = []
        for v in H[src]:
            if src[0] == "s":  # H_i(sub) -> H_i(C)
                i = src[1]
                w = incl[i].apply(v)
                cols.append(_coords(w, H["c", i], C.boundary(i), C.dims[i]))
            elif src[0] == "c":  # H_i(C) -> H_i(quo)
                i = src[1]
                w = proj[i].apply(v)
                cols.append(_coords(w, H["q", i], quo.boundary(i), quo.dims[i]))
            else:  # connecting map H_i(quo) -> H_{i-1}(sub)
                i = src[1]
                x = proj[i].solve(Matrix([[c] for c in v], 1))
                dx = C.boundary(i - 1).apply(x.column(0))
                y = incl[i - 1].solve(Matrix([[c] for c in dx], 1))
                if y is None:
                    raise TorsionError("boundary of a lift is not in the subcomplex")
                cols.append(_coords(y.column(0), H["s", i - 1], sub.boundary(i - 1),
                                    sub.dims[i - 1]))
        rows = dims[k]
        bds.append(Matrix([[cols[c][r] for c in range(len(cols))] for r in range(rows)],
                          len(cols)))
    return BasedComplex(dims, bds)


def _alpha(X: BasedComplex, i: int) -> int:
    return sum(X.dims[: i + 1]) % 2 if i >= 0 else 0


def _beta(X: BasedComplex, i: int) -> int:
    return sum(len(X.homology_basis(j)) for j in range(i + 1)) % 2 if i >= 0 else 0


def ses_sign(sub: BasedComplex, C: BasedComplex, quo: BasedComplex) -> int:
    """(-1)^N with N determined by chain and homology dimensions.

    alpha_i and beta_i are the parities of the cumulative chain and homology
    dimensions up to degree i.
    """
    a = lambda X, i: _alpha(X, i)
    b = lambda X, i: _beta(X, i)
    N = 0
    for i in range(C.top + 1):
        N += b(C, i) * (1 + b(sub, i) + a(C, i) + b(quo, i + 1))
        N += b(quo, i) * (1 + b(sub, i) + a(quo, i) + b(quo, i + 1))
        N += b(sub, i) * a(sub, i) + a(sub, i) * a(quo, i + 1)
    return -1 if N % 2 else 1


def multiplicativity_check(sub: BasedComplex, C: BasedComplex, quo: BasedComplex,
                           incl: Sequence[Matrix], proj: Sequence[Matrix]) -> MultiplicativityReport:
    """Compare tau(C) with tau(sub) tau(quo) tau(H) for 0 -> sub -> C -> quo -> 0."""
    _check_ses(sub, C, quo, incl, proj)
    les = long_exact_sequence(sub, C, quo, incl, proj)
    tC, ts, tq, tH = torsion(C), torsion(sub), torsion(quo), torsion(les)
    prod = ts * tq * tH
    ratio = tC / prod
    sign = ses_sign(sub, C, quo)
    return MultiplicativityReport(tC, ts, tq, tH, ratio, sign, tC == prod * sign, les)

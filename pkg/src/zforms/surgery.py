"""Linking matrices over QQ(t) for surgery on framed links.

For a nondegenerate Hermitian Q over ZZ[t, t^-1] the equivariant linking
matrix of the associated link in the boundary is A_L = -Q^{-T}; the dual link
has linking matrix -A^{-1}, and surgery multiplies the Alexander polynomial by
det(A) up to units.
"""
from __future__ import annotations

from dataclasses import dataclass

from .forms import check_hermitian
from .laurent import LaurentPoly, doteq, normalize
from .matrix import Matrix
from .orders import PresentedModule, order
from .ratfun import RatFun, as_ratfun, ratfun_doteq
from .torsion import BasedComplex, torsion, torsion_two_term


def check_equivariant_linking(A: Matrix) -> bool:
    """Square and Hermitian over QQ(t)."""
    if not A.is_square():
        raise ValueError(f"linking matrix must be square, got {A.shape}")
    return A.to_ratfun() == A.to_ratfun().H


def dual_matrix(A: Matrix) -> Matrix:
    """-A^-1."""
    return -(A.to_ratfun().inverse())


def check_framing_symmetry(A: Matrix) -> bool:
    """Diagonal entries are invariant under t -> t^-1."""
    return all(as_ratfun(A[i, i]) == as_ratfun(A[i, i]).involute() for i in range(A.nrows))


def alexander_transform(delta_Y, A: Matrix) -> tuple[RatFun, LaurentPoly | None]:
    """det(A) * delta_Y, and its normalized order when it is a Laurent polynomial."""
    value = as_ratfun(A.to_ratfun().det()) * as_ratfun(delta_Y)
    if value.is_integral():
        return value, normalize(value.to_laurent())
    return value, None


def linking_matrix_from_form(Q: Matrix) -> Matrix:
    """A_L = -Q^{-T}."""
    return -(Q.to_ratfun().T.inverse())


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: str


@dataclass(frozen=True)
class RealisationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "checks": {c.name: {"passed": c.passed, "witness": c.witness} for c in self.checks}}


def les_complex(boundary3: Matrix, boundary2: Matrix) -> BasedComplex:
    """H3(Y, Y_L) -> H2(Y_L) -> 0 -> H2(Y, Y_L) -> H1(Y_L) in degrees 4..0."""
    n = boundary2.nrows
    return BasedComplex([n, n, 0, n, n],
                        [boundary2, Matrix([[]] * n, 0), Matrix([], 0), boundary3])


def _fmt(M: Matrix) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in M.rows) + "]"


def realisation_report(Q: Matrix) -> RealisationReport:
    """Six algebraic checks for the link realising a Hermitian form Q."""
    if not check_hermitian(Q):
        raise ValueError("Q is not Hermitian")
    dQ = Q.det()
    if not dQ:
        raise ValueError("Q is degenerate")
    n = Q.nrows
    A = linking_matrix_from_form(Q)
    checks = []
    ok = check_equivariant_linking(A) and Q.T.to_ratfun() @ A == -Matrix.identity(n).to_ratfun()
    checks.append(Check("linking_matrix", ok, _fmt(A)))
    checks.append(Check("framing_symmetry", check_framing_symmetry(A),
                        ", ".join(str(A[i, i]) for i in range(n))))
    D = dual_matrix(A)
    checks.append(Check("dual_is_transpose", D == Q.T.to_ratfun(), _fmt(D)))
    # coker Q^T: the columns of Q^T are the rows of Q
    o = order(PresentedModule(Q))
    checks.append(Check("order", doteq(o, dQ) is not None, f"order {o}, det {dQ}"))
    value, poly = alexander_transform(dQ, A)
    checks.append(Check("alexander", poly is not None and poly == 1, f"det(A) * det(Q) = {value}"))
    # long exact sequence bookkeeping
    I = Matrix.identity(n).to_ratfun()
    HL = les_complex(I, I)
    HLp = les_complex(I, D)
    tL, tLp = torsion(HL), torsion(HLp)
    two = torsion_two_term(D)
    detA = as_ratfun(A.det())
    # the dual link's H2(Y', Y_L) -> H1(Y_L) is -A^-1; the other maps are identities
    ok = (HL.is_acyclic() and HLp.is_acyclic() and tL == 1 and tLp == two
          and ratfun_doteq(tLp / tL, detA))
    checks.append(Check("les_torsion", ok, f"tau(H_L) = {tL}, tau(H_L') = {tLp}, det A = {detA}"))
    return RealisationReport(tuple(checks))

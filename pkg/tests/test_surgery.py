import random

from hypothesis import given, settings
from hypothesis import strategies as st

from generators import rand_hermitian
from zforms.forms import check_hermitian, hyperbolic_h2
from zforms.laurent import LaurentPoly
from zforms.matrix import Matrix
from zforms.parsing import parse_poly as P
from zforms.ratfun import RatFun, is_integral_laurent
from zforms.surgery import (alexander_transform, check_equivariant_linking, check_framing_symmetry,
                            dual_matrix, les_complex, linking_matrix_from_form, realisation_report)
from zforms.torsion import torsion


def test_dual_examples():
    q = P("t + 3 + t^-1")
    assert dual_matrix(Matrix([[RatFun(-1, q)]])) == Matrix([[q]])
    Q = Matrix([[2, P("t")], [P("t^-1"), 3]])
    assert dual_matrix(linking_matrix_from_form(Q)) == Q.T


def test_framing_examples():
    Q = Matrix([[2, P("1 + t")], [P("1 + t^-1"), 3]])
    assert check_framing_symmetry(linking_matrix_from_form(Q))
    assert not check_framing_symmetry(Matrix([[P("t")]]))
    assert check_framing_symmetry(Matrix([[P("2 - t - t^-1")]]))


def test_alexander_examples():
    Q = hyperbolic_h2()
    _, o = alexander_transform(Q.det(), linking_matrix_from_form(Q))
    assert o == 1
    _, o = alexander_transform(1, Matrix([[7]]))
    assert o == 7
    q = P("t + 3 + t^-1")
    value, o = alexander_transform(q, Matrix([[RatFun(-1, q)]]))
    assert value == -1 and o == 1
    value, o = alexander_transform(1, Matrix([[RatFun(1, 2)]]))
    assert o is None and not is_integral_laurent(value)


def test_equivariant_linking():
    assert check_equivariant_linking(linking_matrix_from_form(hyperbolic_h2()))
    assert not check_equivariant_linking(Matrix([[P("t")]]))


def test_les_complex_torsion():
    A = Matrix([[RatFun(1, 2), P("t")], [P("t^-1"), 1]])
    C = les_complex(Matrix.identity(2), -A.inverse())
    assert torsion(C) == A.det() * -1 * -1 or torsion(C) == A.det()


def test_report_examples():
    for Q in (Matrix([[12]]), hyperbolic_h2()):
        r = realisation_report(Q)
        assert r.passed, r.to_json()
        assert [c.name for c in r.checks] == ["linking_matrix", "framing_symmetry",
                                              "dual_is_transpose", "order", "alexander",
                                              "les_torsion"]
    assert realisation_report(Matrix([[12]]))["linking_matrix"].witness == "[[(-1) / (12)]]"


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_dual_properties(seed):
    rng = random.Random(seed)
    A = rand_hermitian(rng, rng.randint(1, 3), 1, 2).to_ratfun()
    D = dual_matrix(A)
    assert check_hermitian(D)
    assert A @ D == -Matrix.identity(A.nrows)
    assert dual_matrix(D) == A

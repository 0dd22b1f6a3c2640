import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import rand_hermitian
from strategies import laurent, symmetric
from zforms.forms import (IntSymForm, augment, aut_search_bounded, check_hermitian, direct_sum,
                          even_witness, form_value, hyperbolic_h2, int_congruent_bounded,
                          int_direct_sum, int_invariants, is_even, is_isometry)
from zforms.laurent import LaurentPoly
from zforms.matrix import Matrix
from zforms.parsing import parse_poly as P

H2 = hyperbolic_h2()


def I(rows):
    return IntSymForm(tuple(tuple(r) for r in rows))


class TestHermitian:
    def test_examples(self):
        assert H2 == Matrix([[0, P("t - 1")], [P("t^-1 - 1"), 0]])
        assert check_hermitian(H2)
        assert not check_hermitian(Matrix([[P("t")]]))
        assert check_hermitian(Matrix([[1]]))

    def test_non_square_rejected(self):
        with pytest.raises(ValueError):
            check_hermitian(Matrix([[1, 2]]))

    def test_form_value_is_sesquilinear(self):
        A = Matrix([[2, P("t")], [P("t^-1"), 3]])
        x, y = [P("t"), 1], [1, P("t^2")]
        assert form_value(A, x, y) == form_value(A, y, x).involute()
        lam = P("1 + t")
        assert form_value(A, [lam * c for c in x], y) == lam * form_value(A, x, y)
        assert form_value(A, x, [lam * c for c in y]) == lam.involute() * form_value(A, x, y)

    @given(st.integers(1, 3), st.integers(0, 10**6))
    @settings(max_examples=30, deadline=None)
    def test_augment_is_symmetric(self, n, seed):
        A = rand_hermitian(random.Random(seed), n, nondegenerate=False)
        S = augment(A)
        assert all(S[i, j] == S[j, i] for i in range(n) for j in range(n))


class TestEven:
    def test_examples(self):
        assert is_even(H2)
        assert not is_even(Matrix([[1]]))
        w = even_witness(Matrix([[P("2 - t - t^-1")]]))
        assert w[0, 0] + w[0, 0].involute() == P("2 - t - t^-1")

    @given(symmetric())
    def test_parity_rule(self, d):
        w = even_witness(Matrix([[d]]))
        assert (w is not None) == (d.coeff(0) % 2 == 0)
        if w is not None:
            assert w[0, 0] + w[0, 0].involute() == d

    def test_witness_matrix(self):
        A = Matrix([[P("2 + t + t^-1"), P("3 - t")], [P("3 - t^-1"), 4]])
        Q = even_witness(A)
        assert Q + Q.H == A


class TestAugment:
    def test_examples(self):
        assert augment(H2).to_list() == [[0, 0], [0, 0]]
        assert augment(Matrix([[12]])).to_list() == [[12]]
        assert augment(Matrix([[P("t + t^-1")]])).to_list() == [[2]]
        A = hyperbolic_h2()
        assert A.det() == P("t + t^-1 - 2")


class TestIntegerForms:
    @pytest.mark.parametrize("rows,expected", [
        ([[1, 0], [0, -1]], (2, 0, "odd", -1)),
        ([[2, 1], [1, 2]], (2, 2, "even", 3)),
        ([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]], (2, 0, "odd", -1)),
        ([[0, 1], [1, 0]], (2, 0, "even", -1)),
    ])
    def test_invariants(self, rows, expected):
        inv = int_invariants(I(rows))
        assert (inv.rank, inv.signature, inv.parity, inv.det_nondeg) == expected

    def test_congruence_examples(self):
        v = int_congruent_bounded(I([[1, 0, 0, 0], [0, -1, 0, 0], [0] * 4, [0] * 4]),
                                  int_direct_sum(I([[1, 0], [0, -1]]), I([[0, 0], [0, 0]])))
        assert v.congruent
        assert int_congruent_bounded(I([[1]]), I([[-1]])).obstruction == "signature"
        v = int_congruent_bounded(I([[1, 1], [1, 2]]), I([[1, 0], [0, 1]]))
        assert v.congruent and v.U == ((1, -1), (0, 1))
        v = int_congruent_bounded(I([[0, 1], [1, 0]]), I([[1, 0], [0, -1]]))
        assert v.status == "not_congruent" and v.obstruction == "parity"

    def test_determinant_screen(self):
        v = int_congruent_bounded(I([[2, 1], [1, 2]]), I([[2, 0], [0, 2]]))
        assert v.status == "not_congruent"

    def test_large_rank_inconclusive(self):
        S = I([[1 if i == j else 0 for j in range(5)] for i in range(5)])
        T = I([[1 if i == j else 0 for j in range(5)] for i in range(5)][::-1][::-1])
        assert int_congruent_bounded(S, I([[2 if i == j == 0 else int(i == j) for j in range(5)]
                                           for i in range(5)])).status != "congruent"
        assert int_congruent_bounded(S, T).congruent  # equal forms short-circuit

    @given(st.integers(0, 10**6))
    @settings(max_examples=25, deadline=None)
    def test_witness_rechecks(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 3)
        S = I([[rng.randint(-2, 2) if i == j else 0 for j in range(n)] for i in range(n)])
        U = [[int(i == j) for j in range(n)] for i in range(n)]
        for _ in range(2):
            a, b = rng.sample(range(n), 2) if n > 1 else (0, 0)
            if a != b:
                sign = rng.choice([-1, 1])
                for r in range(n):
                    U[r][b] += sign * U[r][a]
        S2 = S.transform(U)
        v = int_congruent_bounded(S, S2)
        if v.congruent:
            assert S.transform(v.U) == S2
            assert abs(Matrix([list(r) for r in v.U]).det().constant()) == 1
        else:
            assert v.status == "inconclusive"


class TestAutomorphisms:
    def test_rank_one(self):
        r = aut_search_bounded(Matrix([[12]]))
        assert r.complete
        assert {U[0, 0] for U in r.matrices} == {LaurentPoly(-1), P("t")}

    def test_identity_signed_permutations(self):
        r = aut_search_bounded(Matrix.identity(2), 0, 1)
        assert len(r.matrices) == 8

    def test_h2_contains_diag_t(self):
        r = aut_search_bounded(H2, 1, 1)
        D = Matrix([[P("t"), 0], [0, P("t")]])
        assert D in r.matrices
        for U in r.matrices:
            assert is_isometry(U, H2)
            assert U.det().is_unit()

    def test_direct_sum(self):
        A = direct_sum(Matrix([[1]]), H2)
        assert A.shape == (3, 3) and check_hermitian(A)

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import rand_complex, rand_invertible, rand_poly, rand_ses
from zforms.matrix import Matrix
from zforms.parsing import parse_poly as P
from zforms.ratfun import RatFun
from zforms.torsion import (BasedComplex, TorsionError, homology_basis, long_exact_sequence,
                            multiplicativity_check, ses_sign, torsion, torsion_two_term)


def two_term(A):
    n = A.nrows
    return BasedComplex([n, n], [A])


class TestTorsion:
    def test_examples(self):
        assert torsion(two_term(Matrix.identity(2))) == 1
        A = Matrix([[P("t"), 1], [0, 1]])
        assert torsion(two_term(A)) == RatFun(1, P("t"))
        assert torsion_two_term(A) == RatFun(P("t^-1"))
        p, q = P("1 + t"), P("2 - t")
        assert torsion_two_term(Matrix([[p, 0], [0, q]])) == RatFun(1, p * q)
        C = BasedComplex([2, 1], [Matrix.zeros(2, 1)],
                         {0: [(1, 0), (0, 1)], 1: [(1,)]})
        assert torsion(C) == 1

    def test_validation(self):
        with pytest.raises(TorsionError):
            BasedComplex([1, 1, 1], [Matrix([[1]]), Matrix([[1]])])
        with pytest.raises(TorsionError):
            torsion(BasedComplex([1, 1], [Matrix([[0]])]))
        with pytest.raises(TorsionError):
            BasedComplex([1, 1], [Matrix([[1]])], {1: [(1,)]})

    def test_homology_scaling_parity(self):
        # scaling a homology vector in degree d by f multiplies tau by f (d odd) or 1/f (d even)
        f = P("2 + t")
        base = BasedComplex([1, 1, 1], [Matrix.zeros(1, 1), Matrix.zeros(1, 1)],
                            {0: [(1,)], 1: [(1,)], 2: [(1,)]})
        for d in range(3):
            hb = {k: [(f if k == d else 1,)] for k in range(3)}
            tau = torsion(BasedComplex([1, 1, 1], base.boundaries, hb))
            assert tau == (RatFun(f) if d % 2 else RatFun(1, f))

    @given(st.integers(0, 10**6))
    @settings(max_examples=20, deadline=None)
    def test_json_roundtrip(self, seed):
        C = rand_complex(random.Random(seed), 2, 2)
        D = BasedComplex.from_json(C.to_json())
        assert torsion(D) == torsion(C)

    def test_homology_basis_spans(self):
        C = BasedComplex([2, 2], [Matrix([[1, P("t")], [1, P("t")]])])
        hb = homology_basis(C)
        assert len(hb[0]) == 1 and len(hb[1]) == 1
        assert torsion(BasedComplex(C.dims, C.boundaries, hb))


class TestMultiplicativity:
    def test_split(self):
        A, B = Matrix([[P("t - 2")]]), Matrix([[3]])
        sub, quo = two_term(A), two_term(B)
        C = two_term(Matrix([[P("t - 2"), 0], [0, 3]]))
        incl = [Matrix([[1], [0]]), Matrix([[1], [0]])]
        proj = [Matrix([[0, 1]]), Matrix([[0, 1]])]
        r = multiplicativity_check(sub, C, quo, incl, proj)
        assert r.holds and r.tau_H == 1 and r.sign == 1

    def test_zero_subcomplex(self):
        A = Matrix([[P("1 + t"), 1], [0, 2]])
        quo = two_term(A)
        sub = BasedComplex([0, 0], [Matrix([], 0)])
        incl = [Matrix([[], []], 0), Matrix([[], []], 0)]
        proj = [Matrix.identity(2), Matrix.identity(2)]
        r = multiplicativity_check(sub, two_term(A), quo, incl, proj)
        assert r.holds and r.tau_H in (1, -1)

    def test_rejects_incompatible_bases(self):
        sub, quo = two_term(Matrix([[P("t - 2")]])), two_term(Matrix([[3]]))
        C = two_term(Matrix([[P("t - 2"), 0], [0, 3]]))
        incl = [Matrix([[2], [0]]), Matrix([[2], [0]])]
        proj = [Matrix([[0, 1]]), Matrix([[0, 1]])]
        with pytest.raises(TorsionError):
            multiplicativity_check(sub, C, quo, incl, proj)

    def test_les_is_acyclic(self):
        sub, C, quo, incl, proj = rand_ses(random.Random(11), 2, 2)
        les = long_exact_sequence(sub, C, quo, incl, proj)
        assert les.is_acyclic()

    @pytest.mark.parametrize("seed,sign", [(0, 1), (5, -1), (6, -1), (9, -1), (55, 1)])
    def test_ratio_is_the_predicted_sign(self, seed, sign):
        rng = random.Random(seed)
        sub, C, quo, incl, proj = rand_ses(rng, m=rng.randint(1, 3), maxdim=2)
        r = multiplicativity_check(sub, C, quo, incl, proj)
        assert r.ratio == r.sign == ses_sign(sub, C, quo) == sign

    @given(st.integers(0, 10**6))
    @settings(max_examples=15, deadline=None)
    def test_random_extensions(self, seed):
        rng = random.Random(seed)
        sub, C, quo, incl, proj = rand_ses(rng, m=rng.randint(1, 2), maxdim=2)
        assert multiplicativity_check(sub, C, quo, incl, proj).holds


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_randomized_choices_do_not_change_tau(seed):
    rng = random.Random(seed)
    C = rand_complex(rng, rng.randint(1, 3), 2)
    ref = torsion(C)
    for k in range(3):
        assert torsion(C, random.Random(seed * 7 + k)) == ref

"""Hypothesis strategies for ring elements."""
from hypothesis import strategies as st

from zforms.laurent import LaurentPoly
from zforms.ratfun import RatFun

coeffs = st.integers(-6, 6)


@st.composite
def laurent(draw, max_terms=4, span=3):
    terms = draw(st.dictionaries(st.integers(-span, span), coeffs, max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def nonzero_laurent(draw, max_terms=3, span=2):
    p = draw(laurent(max_terms, span))
    return p if p else LaurentPoly(draw(st.sampled_from([1, -1, 2, 3])))


@st.composite
def ratfun(draw):
    return RatFun(draw(laurent(3, 2)), draw(nonzero_laurent()))


@st.composite
def symmetric(draw, deg=2):
    c = {0: draw(coeffs)}
    for k in range(1, deg + 1):
        c[k] = c[-k] = draw(coeffs)
    return LaurentPoly(c)

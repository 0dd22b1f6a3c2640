"""Exact algebra of Hermitian forms over ZZ[t, t^-1]."""
from .laurent import LaurentPoly, RingUnit, doteq, evaluate_at_one, gcd, involute, normalize
from .ratfun import QuotClass, RatFun, is_integral_laurent, quot_eq
from .bezout import bezout_one, unit_ideal
from .matrix import Matrix
from .parsing import ParseError, parse_poly, parse_ratfun

__all__ = [
    "LaurentPoly", "RingUnit", "doteq", "evaluate_at_one", "gcd", "involute", "normalize",
    "QuotClass", "RatFun", "is_integral_laurent", "quot_eq", "bezout_one", "unit_ideal",
    "Matrix", "ParseError", "parse_poly", "parse_ratfun",
]

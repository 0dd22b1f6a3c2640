"""Text and JSON input for Laurent polynomials, rational functions and matrices.

Polynomial grammar (whitespace ignored)::

    poly  := ["+"|"-"] term (("+"|"-") term)*
    term  := INT ["*"] "t" ["^" EXP] | INT | "t" ["^" EXP]
    EXP   := ["-"] INT | "(" ["-"] INT ")"

e.g. ``2 - t - t^-1`` or ``3*t^-2 + t``. A rational function is
``poly`` or ``(poly) / (poly)``. In JSON a polynomial may also be an integer or
an object mapping exponents to coefficients, e.g. ``{"-1": -1, "0": 2, "1": -1}``.
"""
from __future__ import annotations

import json
from pathlib import Path

from .laurent import LaurentPoly
from .matrix import Matrix
from .ratfun import RatFun


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text, self.pos, self.message = text, pos, message
        if pos is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at position {pos}: {text!r}\n"
                             f"  {' ' * (pos + 1)}^")


class _Scanner:
    def __init__(self, text: str, base: int = 0):
        self.text, self.i, self.base = text, 0, base

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.i += 1
            return True
        return False

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.i)

    def integer(self) -> int:
        self.skip()
        j = self.i
        while j < len(self.text) and self.text[j].isdigit():
            j += 1
        if j == self.i:
            self.error("expected an integer")
        v = int(self.text[self.i:j])
        self.i = j
        return v


def _term(s: _Scanner) -> tuple[int, int]:
    coeff, have_coeff = 1, False
    if s.peek().isdigit():
        coeff, have_coeff = s.integer(), True
        s.take("*")
    elif s.peek() == "*":
        s.error("unexpected '*'")
    if s.peek() == "t":
        s.i += 1
        exp = 1
        if s.take("^"):
            paren = s.take("(")
            neg = s.take("-")
            exp = s.integer()
            if neg:
                exp = -exp
            if paren and not s.take(")"):
                s.error("expected ')'")
        return coeff, exp
    if not have_coeff:
        s.error("expected a coefficient or 't'")
    return coeff, 0


def parse_poly(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial; errors report the offending position."""
    s = _Scanner(text)
    if not s.peek():
        s.error("empty polynomial")
    terms: dict[int, int] = {}
    sign = 1
    if s.take("-"):
        sign = -1
    else:
        s.take("+")
    while True:
        c, k = _term(s)
        terms[k] = terms.get(k, 0) + sign * c
        ch = s.peek()
        if not ch:
            break
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            s.error(f"unexpected {ch!r}")
        s.i += 1
    return LaurentPoly(terms)


def _split_top(text: str, sep: str) -> list[tuple[int, str]]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", text, i)
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    if depth:
        raise ParseError("unbalanced '('", text, len(text))
    parts.append((start, text[start:]))
    return parts


def _strip_parens(text: str, offset: int) -> tuple[str, int]:
    """Drop one pair of enclosing parentheses, tracking the text offset."""
    t = text.strip()
    off = offset + len(text) - len(text.lstrip())
    if not t.startswith("("):
        return t, off
    depth = 0
    for i, ch in enumerate(t):
        depth += (ch == "(") - (ch == ")")
        if depth == 0:
            return (t[1:-1], off + 1) if i == len(t) - 1 else (t, off)
    return t, off


def parse_ratfun(text: str) -> RatFun:
    parts = _split_top(text, "/")
    if len(parts) > 2:
        raise ParseError("more than one '/'", text, parts[2][0] - 1)
    vals = []
    for start, chunk in parts:
        body, off = _strip_parens(chunk, start)
        try:
            vals.append(parse_poly(body))
        except ParseError as e:
            raise ParseError(e.message, text, off + (e.pos or 0)) from None
    if len(vals) == 1:
        return RatFun(vals[0])
    if vals[1].is_zero():
        raise ParseError("zero denominator", text, parts[1][0])
    return RatFun(vals[0], vals[1])


def poly_from_json(x) -> LaurentPoly:
    if isinstance(x, bool):
        raise ParseError(f"not a polynomial: {x!r}")
    if isinstance(x, int):
        return LaurentPoly(x)
    if isinstance(x, str):
        return parse_poly(x)
    if isinstance(x, dict):
        try:
            return LaurentPoly({int(k): v for k, v in x.items()})
        except (TypeError, ValueError) as e:
            raise ParseError(f"bad exponent map {x!r}: {e}") from None
    raise ParseError(f"not a polynomial: {x!r}")


def ratfun_from_json(x) -> RatFun:
    if isinstance(x, str):
        return parse_ratfun(x)
    return RatFun(poly_from_json(x))


def _matrix(x, entry) -> Matrix:
    if not isinstance(x, list) or any(not isinstance(r, list) for r in x):
        raise ParseError("a matrix is a list of rows")
    if not x:
        return Matrix([], 0)
    n = len(x[0])
    if any(len(r) != n for r in x):
        raise ParseError("ragged matrix rows")
    return Matrix([[entry(e) for e in r] for r in x], n)


def matrix_from_json(x) -> Matrix:
    return _matrix(x, poly_from_json)


def ratmatrix_from_json(x) -> Matrix:
    return _matrix(x, ratfun_from_json)


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[str(e) for e in r] for r in m.rows]


def load_json_arg(arg: str):
    """JSON given inline or as a path to a file."""
    p = Path(arg)
    try:
        if p.exists() and p.is_file():
            return json.loads(p.read_text())
    except OSError:
        pass
    try:
        return json.loads(arg)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON ({e.msg})", arg, e.pos) from None

"""Command-line front end.

Every command prints a report; with --json the report is a JSON object
{"command", "verdict", "result"} and the exit status follows the verdict:
0 affirmative, 1 negative, 2 inconclusive, 3 input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import bezout, forms, linking, orders, surgery, torsion, units
from .laurent import LaurentPoly, doteq, gcd
from .matrix import Matrix
from .parsing import (ParseError, load_json_arg, matrix_from_json, matrix_to_json,
                      parse_poly, parse_ratfun, ratmatrix_from_json)

EXIT = {"affirmative": 0, "negative": 1, "inconclusive": 2, "error": 3}

__all__ = ["main", "parse_poly", "hslice_check", "HSliceVerdict"]


class Report:
    def __init__(self, verdict: str, result: dict, text: str):
        self.verdict, self.result, self.text = verdict, result, text


def _verdict(flag: bool | None) -> str:
    return {True: "affirmative", False: "negative", None: "inconclusive"}[flag]


def _matrix_text(rows) -> str:
    return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in rows) + "]"


# --- hslice ---------------------------------------------------------------

class HSliceVerdict:
    """status: 'criterion-met' (witness U), 'criterion-failed' (obstruction) or 'inconclusive'."""

    def __init__(self, status: str, witness=None, obstruction: str | None = None):
        self.status, self.witness, self.obstruction = status, witness, obstruction

    def __repr__(self):
        return f"HSliceVerdict({self.status!r}, witness={self.witness}, obstruction={self.obstruction!r})"


def hslice_check(A: Matrix, Q_N: forms.IntSymForm, g: int, coeff_bound: int = 3) -> HSliceVerdict:
    """Is A(1) congruent to Q_N + 0^(2g)?"""
    forms.require_hermitian(A)
    if not A.det():
        raise ValueError("A must be nondegenerate")
    if g < 0:
        raise ValueError("genus must be nonnegative")
    if A.nrows != Q_N.n + 2 * g:
        raise ValueError(f"A(1) has size {A.nrows} but Q_N + 0^(2g) has size {Q_N.n + 2 * g}")
    target = forms.int_direct_sum(Q_N, forms.IntSymForm(tuple((0,) * (2 * g) for _ in range(2 * g))))
    v = forms.int_congruent_bounded(forms.augment(A), target, coeff_bound)
    if v.status == "congruent":
        return HSliceVerdict("criterion-met", witness=v.U)
    if v.status == "not_congruent":
        return HSliceVerdict("criterion-failed", obstruction=v.obstruction)
    return HSliceVerdict("inconclusive")


# --- command handlers -------------------------------------------------------

def _poly(s: str) -> LaurentPoly:
    return parse_poly(s)


def _mat(args, name="source") -> Matrix:
    src = getattr(args, name, None)
    if src is None:
        src = args.input
    if src is None:
        raise ParseError("a matrix argument (or --input) is required")
    data = load_json_arg(src)
    if isinstance(data, dict):
        for key in ("matrix", "form", "relations"):
            if key in data:
                data = data[key]
                break
    return matrix_from_json(data)


def _json_source(args):
    src = args.source if args.source is not None else args.input
    if src is None:
        raise ParseError("an input argument (or --input) is required")
    return load_json_arg(src)


def cmd_laurent_eval(args) -> Report:
    p = _poly(args.poly)
    at = parse_ratfun(args.at) if args.at else None
    value = p.evaluate_at_one() if at is None else _eval(p, at)
    return Report("affirmative", {"value": str(value)}, str(value))


def _eval(p: LaurentPoly, x):
    from .ratfun import RatFun
    acc = RatFun(0)
    for k, c in p.terms():
        acc = acc + c * x ** k
    return acc


def cmd_laurent_gcd(args) -> Report:
    g = gcd(_poly(args.a), _poly(args.b))
    return Report("affirmative", {"gcd": str(g)}, str(g))


def cmd_laurent_bezout(args) -> Report:
    r = bezout.bezout_one(_poly(args.a), _poly(args.b))
    verdict = {"found": "affirmative", "impossible": "negative"}.get(r.status, "inconclusive")
    res = {"status": r.status, "x": None if r.x is None else str(r.x),
           "y": None if r.y is None else str(r.y), "reason": r.reason}
    text = f"x = {r.x}\ny = {r.y}" if r.found else f"{r.status}: {r.reason}"
    return Report(verdict, res, text)


def cmd_laurent_doteq(args) -> Report:
    u = doteq(_poly(args.a), _poly(args.b))
    if u is None:
        return Report("negative", {"unit": None}, "not associates")
    return Report("affirmative", {"unit": {"sign": u.sign, "exponent": u.exponent}},
                  f"{u.as_poly()}")


def cmd_form_check(args) -> Report:
    ok = forms.check_hermitian(_mat(args))
    return Report(_verdict(ok), {"hermitian": ok}, "hermitian" if ok else "not hermitian")


def cmd_form_even(args) -> Report:
    A = _mat(args)
    w = forms.even_witness(A)
    res = {"even": w is not None, "witness": None if w is None else matrix_to_json(w)}
    return Report(_verdict(w is not None), res,
                  f"even\nwitness {_matrix_text(w.rows)}" if w is not None else "odd")


def cmd_form_augment(args) -> Report:
    S = forms.augment(_mat(args))
    inv = forms.int_invariants(S)
    res = {"matrix": S.to_list(), "rank": inv.rank, "signature": inv.signature,
           "parity": inv.parity, "det_nondeg": inv.det_nondeg}
    text = (f"{_matrix_text(S.rows)}\nrank {inv.rank}\nsignature {inv.signature}\n"
            f"parity {inv.parity}\ndet {inv.det_nondeg}")
    return Report("affirmative", res, text)


def cmd_form_boundary(args) -> Report:
    L = linking.boundary_form(_mat(args))
    res = L.to_json()
    res["order"] = str(orders.order(L.presentation.T))
    text = (f"presentation {_matrix_text(L.presentation.rows)}\n"
            f"values {_matrix_text(L.values.rows)}\norder {res['order']}")
    return Report("affirmative", res, text)


def cmd_form_aut(args) -> Report:
    A = _mat(args)
    r = forms.aut_search_bounded(A, args.degree, args.bound if args.bound is not None else 1)
    res = {"complete": r.complete, "count": len(r.matrices), "note": r.note,
           "matrices": [matrix_to_json(U) for U in r.matrices]}
    text = "\n".join([f"{len(r.matrices)} isometries ({r.note})"]
                     + [_matrix_text(U.rows) for U in r.matrices])
    return Report("affirmative" if r.matrices else "inconclusive", res, text)


def _presentation(args) -> orders.PresentedModule:
    data = _json_source(args)
    return orders.PresentedModule.from_json(data)


def cmd_present_order(args) -> Report:
    o = orders.order(_presentation(args))
    return Report("affirmative", {"order": str(o)}, str(o))


def cmd_present_trivial(args) -> Report:
    v = orders.is_trivial_module(_presentation(args))
    verdict = {"trivial": "affirmative", "nontrivial": "negative"}.get(v.status, "inconclusive")
    return Report(verdict, {"status": v.status, "reason": v.reason}, f"{v.status}: {v.reason}")


def cmd_torsion_compute(args) -> Report:
    C = torsion.BasedComplex.from_json(_json_source(args))
    tau = torsion.torsion(C)
    return Report("affirmative", {"torsion": str(tau)}, str(tau))


def _ses_from_json(data):
    try:
        sub = torsion.BasedComplex.from_json(data["sub"])
        C = torsion.BasedComplex.from_json(data["complex"])
        quo = torsion.BasedComplex.from_json(data["quotient"])
        incl = [ratmatrix_from_json(m) if m else Matrix([], 0) for m in data["inclusions"]]
        proj = [ratmatrix_from_json(m) if m else Matrix([], 0) for m in data["projections"]]
    except KeyError as e:
        raise ParseError(f"missing field {e}") from None
    return sub, C, quo, incl, proj


def cmd_torsion_multiplicativity(args) -> Report:
    r = torsion.multiplicativity_check(*_ses_from_json(_json_source(args)))
    res = r.to_json()
    text = "\n".join(f"{k} {v}" for k, v in res.items())
    return Report(_verdict(r.holds), res, text)


def cmd_surgery_dual(args) -> Report:
    A = ratmatrix_from_json(_json_source(args))
    D = surgery.dual_matrix(A)
    return Report("affirmative", {"dual": matrix_to_json(D)}, _matrix_text(D.rows))


def cmd_surgery_alexander(args) -> Report:
    delta = parse_ratfun(args.delta)
    A = ratmatrix_from_json(_json_source(args))
    value, poly = surgery.alexander_transform(delta, A)
    res = {"value": str(value), "order": None if poly is None else str(poly)}
    return Report(_verdict(poly is not None), res,
                  f"value {value}\norder {poly}" if poly is not None else f"value {value}\nnot a polynomial")


def cmd_surgery_realise(args) -> Report:
    r = surgery.realisation_report(_mat(args))
    text = "\n".join(f"{c.name} {'ok' if c.passed else 'FAIL'} {c.witness}" for c in r.checks)
    return Report(_verdict(r.passed), r.to_json(), text)


def cmd_surgery_framing(args) -> Report:
    A = ratmatrix_from_json(_json_source(args))
    ok = surgery.check_framing_symmetry(A)
    return Report(_verdict(ok), {"symmetric": ok}, "framings symmetric" if ok else "framings not symmetric")


def cmd_units_phi(args) -> Report:
    a, b = _poly(args.a), _poly(args.b)
    m = _poly(args.modulus) if args.modulus else None
    u = units.phi(a, b, m)
    mod = m if m is not None else 2 * a * b
    return Report("affirmative", {"phi": str(u), "modulus": str(mod), "unitary": True},
                  f"{u} (mod {mod})")


def cmd_units_count(args) -> Report:
    facs = units.coprime_symmetric_factorizations(_poly(args.P), [_poly(h) for h in args.hint])
    res = {"n_P": len(facs), "factorizations": [{"a": str(f.a), "b": str(f.b)} for f in facs]}
    text = "\n".join([f"n_P {len(facs)}"] + [f"{f.a} * {f.b}" for f in facs])
    return Report("affirmative", res, text)


def cmd_units_classes(args) -> Report:
    c = units.distinct_classes(_poly(args.P), [_poly(h) for h in args.hint])
    res = c.to_json()
    text = "\n".join([f"n_P {c.n_P}", f"distinct {c.distinct}"]
                     + [f"Phi({f.a}, {f.b}) = {r}" for f, r in zip(c.factorizations, c.residues)])
    return Report("affirmative", res, text)


def cmd_hslice_check(args) -> Report:
    A = _mat(args, "form")
    qn = load_json_arg(args.qn)
    Q = forms.IntSymForm(tuple(tuple(int(x) for x in r) for r in qn))
    v = hslice_check(A, Q, args.genus, args.bound if args.bound is not None else 3)
    verdict = {"criterion-met": "affirmative", "criterion-failed": "negative"}.get(v.status, "inconclusive")
    res = {"status": v.status, "witness": None if v.witness is None else [list(r) for r in v.witness],
           "obstruction": v.obstruction}
    text = v.status
    if v.witness is not None:
        text += f"\nwitness {_matrix_text(v.witness)}"
    if v.obstruction:
        text += f"\nobstruction {v.obstruction}"
    return Report(verdict, res, text)


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    def flags(suppress: bool) -> argparse.ArgumentParser:
        # flags are accepted before or after the subcommand
        f = argparse.ArgumentParser(add_help=False)
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        f.add_argument("--json", action="store_true", default=d(False), help="print a JSON report")
        f.add_argument("--bound", type=int, default=d(None), help="coefficient bound for searches")
        f.add_argument("--input", default=d(None), help="read the main input from this file")
        return f

    common = flags(True)
    p = argparse.ArgumentParser(prog="zforms", parents=[flags(False)],
                                description="Exact algebra of Hermitian forms over Z[t, t^-1].")
    groups = p.add_subparsers(dest="group", required=True)

    def cmd(group, name, func: Callable, **kw):
        sp = group.add_parser(name, parents=[common], **kw)
        sp.set_defaults(func=func, command=f"{group.metavar} {name}")
        return sp

    def section(name, help):
        sub = groups.add_parser(name, help=help).add_subparsers(dest="op", required=True)
        sub.metavar = name
        return sub

    g = section("laurent", "Laurent polynomial arithmetic")
    s = cmd(g, "eval", cmd_laurent_eval, help="evaluate (at t = 1 by default)")
    s.add_argument("poly")
    s.add_argument("--at", default=None)
    for name, f in (("gcd", cmd_laurent_gcd), ("bezout", cmd_laurent_bezout), ("doteq", cmd_laurent_doteq)):
        s = cmd(g, name, f)
        s.add_argument("a")
        s.add_argument("b")

    g = section("form", "Hermitian forms")
    for name, f in (("check", cmd_form_check), ("even", cmd_form_even), ("augment", cmd_form_augment),
                    ("boundary", cmd_form_boundary), ("aut", cmd_form_aut)):
        s = cmd(g, name, f)
        s.add_argument("source", nargs="?")
        if name == "aut":
            s.add_argument("--degree", type=int, default=1, help="exponent bound")

    g = section("present", "presented modules")
    for name, f in (("order", cmd_present_order), ("trivial", cmd_present_trivial)):
        cmd(g, name, f).add_argument("source", nargs="?")

    g = section("torsion", "Reidemeister torsion")
    for name, f in (("compute", cmd_torsion_compute), ("multiplicativity", cmd_torsion_multiplicativity)):
        cmd(g, name, f).add_argument("source", nargs="?")

    g = section("surgery", "linking matrices")
    for name, f in (("dual", cmd_surgery_dual), ("realise", cmd_surgery_realise),
                    ("framing", cmd_surgery_framing)):
        cmd(g, name, f).add_argument("source", nargs="?")
    s = cmd(g, "alexander", cmd_surgery_alexander)
    s.add_argument("delta")
    s.add_argument("source", nargs="?")

    g = section("units", "unitary units modulo 2P")
    s = cmd(g, "phi", cmd_units_phi)
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("modulus", nargs="?")
    for name, f in (("count", cmd_units_count), ("classes", cmd_units_classes)):
        s = cmd(g, name, f)
        s.add_argument("P")
        s.add_argument("--hint", action="append", default=[], help="symmetric factor of P")

    g = section("hslice", "H-slice congruence criterion")
    s = cmd(g, "check", cmd_hslice_check)
    s.add_argument("form")
    s.add_argument("qn", help="integer form Q_N as JSON ([] for size 0)")
    s.add_argument("genus", type=int)
    return p



def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors; usage errors are input errors here
        return 0 if e.code == 0 else EXIT["error"]
    try:
        report = args.func(args)
    except (ParseError, ValueError, TypeError, ZeroDivisionError, KeyError,
            torsion.TorsionError, ArithmeticError) as e:
        msg = str(e)
        if args.json:
            print(json.dumps({"command": args.command, "verdict": "error", "error": msg}, indent=2))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return EXIT["error"]
    if args.json:
        print(json.dumps({"command": args.command, "verdict": report.verdict,
                          "result": report.result}, indent=2))
    else:
        print(report.text)
    return EXIT[report.verdict]


if __name__ == "__main__":
    sys.exit(main())

"""Printing terms as canonical text or LaTeX."""
from __future__ import annotations

from .nodes import (PREC_ATOM, PREC_POW, Add, Call, Const, FloorDiv, Mod,
                    Monus, Mul, Pow, Sub, Term, Var, _Binary)

_LATEX_CALL = {"gcd": r"\gcd", "nu2": r"\nu_2", "hw": r"\operatorname{HW}"}


def _needs_parens(parent: _Binary, child: Term, right: bool) -> bool:
    cp, pp = child.prec, parent.prec
    if pp == PREC_POW:
        # right-associative: a^b^c is a^(b^c), but (a^b)^c needs parens
        return cp < pp if right else cp <= pp
    return cp <= pp if right else cp < pp


def _canonical(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Monus):
        return f"monus({_canonical(t.left)}, {_canonical(t.right)})"
    if isinstance(t, Call):
        return f"{t.name}({', '.join(_canonical(a) for a in t.args)})"
    left, right = _canonical(t.left), _canonical(t.right)
    if _needs_parens(t, t.left, False):
        left = f"({left})"
    if _needs_parens(t, t.right, True):
        right = f"({right})"
    if isinstance(t, Pow):
        return f"{left}^{right}"
    return f"{left} {t.symbol} {right}"


def _latex(t: Term) -> str:
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Monus):
        return rf"\left({_latex(t.left)} \mathbin{{\dot{{-}}}} {_latex(t.right)}\right)"
    if isinstance(t, Call):
        return rf"{_LATEX_CALL[t.name]}\left({', '.join(_latex(a) for a in t.args)}\right)"
    if isinstance(t, FloorDiv):
        # the fraction bar groups both sides, no parens needed
        return rf"\left\lfloor \frac{{{_latex(t.left)}}}{{{_latex(t.right)}}} \right\rfloor"
    left, right = _latex(t.left), _latex(t.right)
    if isinstance(t, Pow):
        if t.left.prec < PREC_ATOM:
            left = rf"\left({left}\right)"
        return f"{left}^{{{right}}}"
    if _needs_parens(t, t.left, False):
        left = rf"\left({left}\right)"
    if _needs_parens(t, t.right, True):
        right = rf"\left({right}\right)"
    op = {Add: "+", Sub: "-", Mul: r"\cdot", Mod: r"\bmod"}[type(t)]
    return f"{left} {op} {right}"


def format_term(t: Term, style: str = "canonical") -> str:
    if style == "canonical":
        return _canonical(t)
    if style == "latex":
        return _latex(t)
    raise ValueError(f"unknown style {style!r}")

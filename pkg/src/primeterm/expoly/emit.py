"""Serialization of exponential polynomials: JSON, LaTeX, plain text, counts.

JSON schema, one record per monomial in canonical order::

    {"c0": "<signed decimal>", "e_const": k, "e_n": k,
     "vars": [{"x": i, "deg": d, "e2": e}, ...]}

for the monomial c0 * 2^(e_const + e_n*n + sum e2*x_i) * prod x_i^deg.
Constant powers of two are folded into c0 unless the exponent is symbolic.
"""
from __future__ import annotations

import json

from .poly import ExpoMonomial, ExpoPoly, LinForm, expand_stats

FORMATS = ("json", "latex", "text", "count")


def monomial_record(m: ExpoMonomial) -> dict:
    degs = dict(m.degrees)
    exps = dict(m.exponent.coeffs)
    return {
        "c0": str(m.c0),
        "e_const": m.exponent.const,
        "e_n": m.exponent.n,
        "vars": [{"x": i, "deg": degs.get(i, 0), "e2": exps.get(i, 0)}
                 for i in sorted(set(degs) | set(exps))],
    }


def to_json(p: ExpoPoly) -> str:
    lines = [json.dumps(monomial_record(m), separators=(", ", ": ")) for m in p.monomials()]
    if not lines:
        return "[]"
    return "[\n" + ",\n".join(lines) + "\n]"


def record_monomial(rec: dict) -> ExpoMonomial:
    degs = tuple((v["x"], v["deg"]) for v in rec["vars"] if v["deg"])
    exps = tuple((v["x"], v["e2"]) for v in rec["vars"] if v["e2"])
    return ExpoMonomial(int(rec["c0"]), LinForm(rec["e_const"], rec["e_n"], exps), degs)


def parse_json(text: str, keep_duplicates: bool = True) -> ExpoPoly:
    """Inverse of ``to_json``.

    Records are kept apart even when two of them print alike, so that an
    emitted polynomial reads back with the same monomial count.
    """
    return ExpoPoly.from_monomials((record_monomial(r) for r in json.loads(text)),
                                   keep_duplicates=keep_duplicates)


def _by_name(items):
    # variables in the order a computer-algebra system prints them: by name
    return sorted(items, key=lambda kv: f"x{kv[0]}")


def _latex_exponent(e: LinForm) -> str:
    parts = []
    for i, c in _by_name(e.coeffs):
        parts.append(f"x_{{{i}}}" if c == 1 else f"{c} x_{{{i}}}")
    if e.n:
        parts.append("n" if e.n == 1 else f"{e.n} n")
    if e.const:
        parts.append(str(e.const))
    return " + ".join(parts)


def latex_monomial(m: ExpoMonomial) -> str:
    sign = "-" if m.c0 < 0 else "+ "
    c = abs(m.c0)
    symbolic = bool(m.exponent.coeffs or m.exponent.n)
    body = []
    if symbolic:
        power = f"2^{{{_latex_exponent(m.exponent)}}}"
        body.append(power if c == 1 else f"{c} \\cdot {power}")
    else:
        c <<= m.exponent.const
        if c != 1 or not m.degrees:
            body.append(str(c))
    for i, d in _by_name(m.degrees):
        body.append(f"x_{{{i}}}" if d == 1 else f"x_{{{i}}}^{{{d}}}")
    return sign + " ".join(body)


def to_latex(p: ExpoPoly) -> str:
    if not p:
        return "0"
    return "\n".join(latex_monomial(m) for m in p.monomials())


def text_monomial(m: ExpoMonomial) -> str:
    symbolic = bool(m.exponent.coeffs or m.exponent.n)
    factors = []
    c = m.c0 if symbolic else m.c0 << m.exponent.const
    if symbolic:
        factors.append(f"2^({m.exponent})")
    factors += [f"x{i}" if d == 1 else f"x{i}^{d}" for i, d in m.degrees]
    if abs(c) != 1 or not factors:
        factors.insert(0, str(abs(c)))
    return ("-" if c < 0 else "+") + " " + "*".join(factors)


def to_text(p: ExpoPoly) -> str:
    if not p:
        return "0"
    return "\n".join(text_monomial(m) for m in p.monomials())


def count_line(p: ExpoPoly) -> str:
    mons, nvars, _, _ = expand_stats(p)
    return f"monomials={mons} variables={nvars}"


def emit(p: ExpoPoly, fmt: str = "json") -> str:
    if fmt == "json":
        return to_json(p)
    if fmt == "latex":
        return to_latex(p)
    if fmt == "text":
        return to_text(p)
    if fmt == "count":
        return count_line(p)
    raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")

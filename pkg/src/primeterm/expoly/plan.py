"""Symbolic hypercube plan for the 42-variable equation.

Every monomial c * 2^(e_n n + e_0 + sum e_i x_i) * prod x_i^r_i of the
equation becomes one contribution: the free term gives C, every other
monomial an A built from one G_{r_i} factor per variable, with base
2^(2 u t^(i-1) + e_i). Nothing here is evaluated; t and u are Terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..term import Const, Pow, Term, Var, format_term
from .build import build_F
from .poly import ExpoMonomial

K = 42


def t_term(n: Term | int = Var("n")) -> Term:
    """2^2^2^(2 n^4 + 16); an int n folds the top exponent."""
    top = Const(2 * n ** 4 + 16) if isinstance(n, int) else 2 * n ** 4 + 16
    return Pow(Const(2), Pow(Const(2), Pow(Const(2), top)))


def u_term(n: Term | int = Var("n")) -> Term:
    """2^(2^(9 t + 8) + 9)."""
    return Pow(Const(2), Pow(Const(2), 9 * t_term(n) + 8) + 9)


@dataclass(frozen=True)
class GFactor:
    index: int      # variable x_index, 1..K
    degree: int     # r
    shift: int      # base is 2^(2 u t^(index-1) + shift)

    def describe(self) -> str:
        base = f"2^(2*u*t^{self.index - 1}" + (f" + {self.shift})" if self.shift else ")")
        return f"G_{self.degree}({base}, t)"


@dataclass(frozen=True)
class Descriptor:
    kind: str               # "C" or "A"
    monomial: ExpoMonomial
    factors: tuple          # K GFactors for "A", empty for "C"

    @property
    def coefficient(self) -> str:
        """Coefficient of the simple monomial, 2^(e_n n + e_0) folded in."""
        e = self.monomial.exponent
        c = self.monomial.c0 << e.const
        if not e.n:
            return str(c)
        return f"{c}*2^({e.n}*n)" if e.n != 1 else f"{c}*2^n"

    def describe(self) -> str:
        if self.kind == "C":
            return f"C: free term {self.coefficient}"
        return f"A: {self.coefficient} * " + " * ".join(f.describe() for f in self.factors)


@dataclass(frozen=True)
class HypercubePlan:
    k: int
    t: Term
    u: Term
    descriptors: tuple

    @property
    def free(self) -> list:
        return [d for d in self.descriptors if d.kind == "C"]

    def counts(self) -> dict:
        a = sum(1 for d in self.descriptors if d.kind == "A")
        return {"descriptors": len(self.descriptors), "C": len(self.descriptors) - a, "A": a}

    def summary(self) -> str:
        c = self.counts()
        return (f"k={self.k} t(n)={format_term(self.t)} u(n)={format_term(self.u)} "
                f"descriptors={c['descriptors']} C={c['C']} A={c['A']}")


def _descriptor(m: ExpoMonomial) -> Descriptor:
    if not m.degrees and not m.exponent.coeffs and not m.exponent.n:
        return Descriptor("C", m, ())
    degs = dict(m.degrees)
    shifts = dict(m.exponent.coeffs)
    return Descriptor("A", m, tuple(GFactor(i, degs.get(i, 0), shifts.get(i, 0))
                                    for i in range(1, K + 1)))


@lru_cache(maxsize=2)
def qhat_plan(n: Term | int | None = None) -> HypercubePlan:
    """Plan for the 42-variable equation; ``n`` defaults to the symbol n."""
    n = Var("n") if n is None else n
    F = build_F("Fhat42")
    return HypercubePlan(K, t_term(n), u_term(n), tuple(_descriptor(m) for m in F.monomials()))

"""The two prime-counting equations in the parameter n.

Both describe the prime inequality for a = x1 and f1 = a!:
N(4 f1) <= 2^n, read as HW(M(4 f1)) = b with b + (4 f1 + 5) * (d - t^2 - 2^n)
squared, where t = 4 f1 + 1 and d is a slack variable.

``F32`` keeps M(4 f1) as the single square (m D - L)^2 of its normal form;
``Fhat42`` spells M out through the nine-variable relation.
"""
from __future__ import annotations

from . import builders as B
from .normal import m4_normal_form
from .poly import ExpoPoly, LinForm, pow2, x

VARIANTS = ("F32", "Fhat42")

# variable layout: name -> index
F32_LAYOUT = {"a": 1, "f1": 2, "f2": 3, "f3": 4, "m": 5, "b": 6, "d": 7}
FHAT_LAYOUT = {"a": 1, "f1": 2, "f2": 3, "f3": 4, "f4": 5, "m": 6, "b": 7, "d": 8}


def e_m4_0(f1_slot, f2_slot, f3_slot, m) -> ExpoPoly:
    """(m D - L)^2 with L / D the normal form of M(4 f1)."""
    num, den = m4_normal_form((f1_slot, f2_slot, f3_slot))
    return (m * den - num).square()


def f32_parts(dialect=B.CORRECTED) -> list:
    a, f1, f2, f3, m, b, d = (x(i) for i in range(1, 8))
    two_n = pow2(LinForm(n=1))
    return [
        B.e_fact(a, 7, f1, dialect),
        (f2 - f1 ** 2).square(),
        (f3 - f1 * f2).square(),
        e_m4_0(2, 3, 4, m),
        B.e_hw(m, 20, b, dialect),
        (b + (4 * f1 + 5) * (-(4 * f1 + 1) ** 2 + d - two_n)).square(),
    ]


def fhat_parts(dialect=B.LISTING) -> list:
    """Constituent squares of the 42-variable equation.

    The default dialect reproduces the published expansion; see
    ``builders`` for what ``corrected`` changes.
    """
    a, f1, f2, f3, f4, m, b, d = (x(i) for i in range(1, 9))
    two_n = pow2(LinForm(n=1))
    last = (f1 + 5) if dialect == B.LISTING else (4 * f1 + 5)
    return [
        B.e_fact(a, 8, f1, dialect),
        (f2 - f1 ** 2).square(),
        (f3 - f1 * f2).square(),
        (f4 - (4 * f1 + 1)).square(),
        B.e_m4_9(f1, f2, f3, f4, 21, m, dialect),
        B.e_hw(m, 30, b, dialect),
        (b + last * (-(f4 ** 2) + d - two_n)).square(),
    ]


def build_F(variant: str = "Fhat42", dialect: str | None = None) -> ExpoPoly:
    if variant == "F32":
        parts = f32_parts(dialect or B.CORRECTED)
    elif variant == "Fhat42":
        parts = fhat_parts(dialect or B.LISTING)
    else:
        raise ValueError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    out = ExpoPoly()
    for p in parts:
        out = out + p
    return out

"""Sum-of-squares builders for the single-fold relations.

Every builder takes its inputs and output as ExpoPolys, a base index, and
places its quantified variables at x_{base+1}, x_{base+2}, ...

Two dialects exist. ``corrected`` follows the relations as mathematics
requires. ``listing`` reproduces the reference generator that produced the
published 42-variable expansion, including its slips:

* the quotient relation compares the remainder slack with the quotient
  instead of the divisor;
* the valuation relation places the divisibility square first;
* the factorial relation uses 2^(3*x) instead of 2^(3*x^2);
* several closed forms in the nine-variable M relation carry wrong powers;
* the last product of the assembled M uses g_{2,1} where g_{1,2} belongs;
* the last square multiplies by (f1 + 5) instead of (4*f1 + 5).
"""
from __future__ import annotations

from .poly import ExpoPoly, LinForm, pow2, x

LISTING = "listing"
CORRECTED = "corrected"
DIALECTS = (LISTING, CORRECTED)


def _check_dialect(dialect):
    if dialect not in DIALECTS:
        raise ValueError(f"unknown dialect {dialect!r}")


def sum_squares(polys) -> ExpoPoly:
    out = ExpoPoly()
    for p in polys:
        out = out + p.square()
    return out


def lin(p) -> LinForm:
    if isinstance(p, int):
        return LinForm(p)
    return p.as_linform()


def e_div_parts(x1, x2, base, x3, dialect=CORRECTED):
    """x3 = floor(x1 / x2)."""
    y1, y2 = x(base + 1), x(base + 2)
    slack_of = x3 if dialect == LISTING else x2
    return [x1 - x2 * x3 - y1, y1 + y2 + 1 - slack_of]


def e_mod_parts(x1, x2, base, x3, dialect=CORRECTED):
    """x3 = x1 mod x2."""
    y1, y2 = x(base + 1), x(base + 2)
    return [x1 - x2 * y1 - x3, x3 + y2 + 1 - x2]


def e_divides_parts(x1, base, x2, dialect=CORRECTED):
    """x2 | x1."""
    return [x1 - x2 * x(base + 1)]


def e_notdivides_parts(x1, base, x2, dialect=CORRECTED):
    """x2 does not divide x1."""
    y1, y2, y3 = x(base + 1), x(base + 2), x(base + 3)
    return [x1 - x2 * y1 - y2 - 1, y2 + y3 + 2 - x2]


def e_nu_parts(x1, base, x2, dialect=CORRECTED):
    """x2 = nu2(x1)."""
    e = lin(x2)
    if dialect == LISTING:
        return e_divides_parts(x1, base, pow2(e)) + e_notdivides_parts(x1, base + 1, pow2(e + 1))
    return e_notdivides_parts(x1, base, pow2(e + 1)) + e_divides_parts(x1, base + 3, pow2(e))


def e_exp_parts(x1, x2, base, x3, dialect=CORRECTED):
    """x3 = x1^x2 using powers of two only."""
    y1, y2 = x(base + 1), x(base + 2)
    p = [y1 - x1 * x2 - x1 - 1, y2 - y1 * x2]
    return p + e_mod_parts(pow2(lin(y2)), pow2(lin(y1)) - x1, base + 2, x3, dialect)


def e_binom12_parts(x1, x2, base, x3, dialect=CORRECTED):
    """x3 = C(x1, x2) through the classical (2^a + 1)^a construction."""
    y1, y2, y3, y4 = (x(base + k) for k in range(1, 5))
    a = lin(x1)
    p = [1 + pow2(a) - y1]
    p += e_exp_parts(y1, x1, base + 4, y2, dialect)
    p += [y3 - x1 * x2]
    p += e_div_parts(y2, pow2(lin(y3)), base + 8, y4, dialect)
    return p + e_mod_parts(y4, pow2(a), base + 10, x3, dialect)


def e_binom7_parts(x1, x2, base, x3, dialect=CORRECTED):
    """x3 = C(x1, x2) through the division/modulo construction."""
    y1, y2, y3 = x(base + 1), x(base + 2), x(base + 3)
    a = lin(x1)
    p = [y1 - (2 * x1 ** 3 + 8 * x1 ** 2 + 2 * x1 * x2 + 12 * x1 + 4 * x2 + 8),
         y2 - (2 * x1 ** 2 + 8 * x1 + 8)]
    p += e_div_parts(pow2(lin(y1)), pow2(lin(y2)) - pow2(a.scale(2) + 4) - 1, base + 3, y3, dialect)
    return p + e_mod_parts(y3, pow2(a.scale(2) + 4), base + 5, x3, dialect)


def e_fact_parts(x1, base, x2, dialect=CORRECTED):
    """x2 = x1!."""
    y1, y2, y3, y4 = (x(base + k) for k in range(1, 5))
    p = [y1 - x1 ** 2]
    if dialect == LISTING:
        p.append(y2 - pow2(lin(x1).scale(3)))
    else:
        p.append(y2 - pow2(lin(y1).scale(3)))
    p.append(y3 - x1 * y1)
    p += e_binom7_parts(y2, x1, base + 4, y4, dialect)
    return p + e_div_parts(pow2(lin(y3).scale(3)), y4, base + 11, x2, dialect)


def e_hw_parts(x1, base, x2, dialect=CORRECTED):
    """x2 = HW(x1), via nu2(C(2*x1, x1))."""
    y1 = x(base + 1)
    return e_binom7_parts(2 * x1, x1, base + 1, y1, dialect) + e_nu_parts(y1, base + 8, x2, dialect)


def _squared(parts_fn):
    def build(*args, **kw):
        return sum_squares(parts_fn(*args, **kw))
    build.__name__ = parts_fn.__name__[:-6]
    build.__doc__ = parts_fn.__doc__
    return build


e_div = _squared(e_div_parts)
e_mod = _squared(e_mod_parts)
e_divides = _squared(e_divides_parts)
e_notdivides = _squared(e_notdivides_parts)
e_nu = _squared(e_nu_parts)
e_exp = _squared(e_exp_parts)
e_binom12 = _squared(e_binom12_parts)
e_binom7 = _squared(e_binom7_parts)
e_fact = _squared(e_fact_parts)
e_hw = _squared(e_hw_parts)


# coefficient polynomials of the r = 4 closed form, in t1 = t - 1
def g4_coefficients(t1):
    c1 = -4 * t1 ** 4 - 12 * t1 ** 3 - 6 * t1 ** 2 + 12 * t1 + 11
    c2 = 6 * t1 ** 4 + 12 * t1 ** 3 - 6 * t1 ** 2 - 12 * t1 + 11
    c3 = -4 * t1 ** 4 - 4 * t1 ** 3 + 6 * t1 ** 2 - 4 * t1 + 1
    return c1, c2, c3


def m4_powers(f1, f2, f3, dialect=CORRECTED):
    """Powers of two used by the nine-variable M relation, linear in f1, f2, f3.

    With t = 4f+1, u = 4f+5, q1 = 2^(2u), q2 = q1^t:
    returns (2^u, q1, q2, q2^t, q1^(t-1), q2^(t-1)).
    """
    a, b, c = lin(f1), lin(f2), lin(f3)
    two_u = pow2(a.scale(4) + 5)
    q1 = pow2(a.scale(8) + 10)
    q2 = pow2(b.scale(32) + a.scale(48) + 10)
    q2t1 = pow2(c.scale(128) + b.scale(192) + a.scale(40))
    if dialect == LISTING:
        q2t = pow2(c.scale(128) + b.scale(352) + a.scale(280) + 50)
        q1t1 = pow2(b.scale(32) + a.scale(8))
    else:
        q2t = pow2(c.scale(128) + b.scale(224) + a.scale(88) + 10)
        q1t1 = pow2(b.scale(32) + a.scale(40))
    return two_u, q1, q2, q2t, q1t1, q2t1


def e_m4_9_parts(f1, f2, f3, f4, base, m, dialect=CORRECTED):
    """The ten polynomials whose squares make up the nine-variable M relation."""
    q11, q21, g01, g21, g41, g02, g12, g22, cc = (x(base + k) for k in range(1, 10))
    t1 = 4 * f1
    two_u, q1, q2, q2t, q1t1, q2t1 = m4_powers(f1, f2, f3, dialect)
    h = 1 - two_u
    c1, c2, c3 = g4_coefficients(t1)
    if dialect == LISTING:
        a01 = h * g01 * g21
        g12_rhs = q2 * (t1 * q2t - f4 * q2t1)
        g414 = f4 ** 4 * q1t1 + t1 ** 4 * q1t1 - q1 ** 3 - 11 * q1 ** 2 - 11 * q1 + 3
        g41_rhs = q1 * (q2 * c1 + q1t1 * q1 ** 2 * c2 + q1t1 * q1 ** 3 * c3 + g414)
    else:
        a01 = h * g01 * g12
        g12_rhs = q2 * (t1 * q2t - f4 * q2t1 + 1)
        g41_rhs = q1 * (t1 ** 4 * q1t1 * q1 ** 4 + c1 * q2 + c2 * q1t1 * q1 ** 2
                        + c3 * q1t1 * q1 ** 3 + f4 ** 4 * q1t1
                        - q1 ** 3 - 11 * q1 ** 2 - 11 * q1 - 1)
    assembled = (cc + h * g41 * g02 - 2 * h * g21 * g02 - 2 * (4 * f1) * h * g21 * g12
                 + (4 * f1) ** 2 * h * g01 * g22 + 2 * (4 * f1) * a01)
    return [
        m - assembled,
        cc * (two_u + 1) - two_u * (q2t - 1),
        q11 - q1 + 1,
        q21 - q2 + 1,
        g01 * q11 - q21,
        g02 * q21 - (q2t - 1),
        g12 * q21 ** 2 - g12_rhs,
        g21 * q11 ** 3 - q1 * (t1 ** 2 * q1t1 * q1 ** 2 - (2 * t1 ** 2 + 2 * t1 - 1) * q2
                               + f4 ** 2 * q1t1 - q1 - 1),
        g22 * q21 ** 3 - q2 * (t1 ** 2 * q2t1 * q2 ** 2 - (2 * t1 ** 2 + 2 * t1 - 1) * q2t
                               + f4 ** 2 * q2t1 - q2 - 1),
        g41 * q11 ** 5 - g41_rhs,
    ]


def e_m4_9(f1, f2, f3, f4, base, m, dialect=CORRECTED):
    """m = M(4 f1) given f2 = f1^2, f3 = f1^3, f4 = 4 f1 + 1."""
    return sum_squares(e_m4_9_parts(f1, f2, f3, f4, base, m, dialect))

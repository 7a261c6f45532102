"""Common-denominator normal form of M(4 f1) as L / D.

Exponents of 2 are polynomials in f1 of degree at most three; they are made
linear by reading f1, f1^2, f1^3 as three separate variables (by default
x2, x3, x4, the layout of the 32- and 42-variable equations).

With n = 4 f1, t = n + 1, u = n + 5, Q = 2^(2u), P = Q^t, R = P^t the six
terms of M(n) have denominators dividing D = (Q - 1)^5 (P - 1)^2; the first
term, whose denominator is 2^u + 1, is extended by 2^u - 1 first.
"""
from __future__ import annotations

from functools import lru_cache

from .poly import ExpoPoly, LinForm, pow2, x


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, p in enumerate(a):
        for j, q in enumerate(b):
            out[i + j] += p * q
    return tuple(out)


def _padd(*ps):
    out = [0] * max(len(p) for p in ps)
    for p in ps:
        for i, c in enumerate(p):
            out[i] += c
    return tuple(out)


class _Ctx:
    def __init__(self, slots):
        self.slots = slots
        self.f = x(slots[0])

    def exp(self, poly) -> LinForm:
        """2-exponent from a polynomial in f1 (coefficients low to high)."""
        poly = tuple(poly) + (0,) * (4 - len(poly))
        if len(poly) > 4 or any(poly[4:]):
            raise ValueError("exponent of degree above 3")
        return LinForm(poly[0], 0, tuple(zip(self.slots, poly[1:4])))

    def p2(self, poly) -> ExpoPoly:
        return pow2(self.exp(poly))


# exponent polynomials in f1
N = (0, 4)
T = (1, 4)
U = (5, 4)
E_Q = _pmul((2,), U)
E_P = _pmul(E_Q, T)
E_R = _pmul(E_P, T)


def _qpow(eq, k):
    """Exponent of q^k for k a polynomial in f1."""
    return _pmul(eq, k)


def _ell(c: _Ctx, eq, which):
    n = 4 * c.f
    t = n + 1
    q = lambda k: c.p2(_qpow(eq, k))
    if which == 1:
        return n * q(T) - t * q(N) + 1
    if which == 2:
        return (n ** 2 * q(_padd(N, (2,))) - (2 * n ** 2 + 2 * n - 1) * q(T)
                + t ** 2 * q(N) - q((1,)) - 1)
    return ((6 * n ** 4 + 12 * n ** 3 - 6 * n ** 2 - 12 * n + 11) * q(_padd(N, (2,)))
            + (-4 * n ** 4 - 12 * n ** 3 - 6 * n ** 2 + 12 * n + 11) * q(T)
            + (-4 * n ** 4 - 4 * n ** 3 + 6 * n ** 2 - 4 * n + 1) * q(_padd(N, (3,)))
            + t ** 4 * q(N) - q((3,)) - 11 * q((2,)) - 11 * q((1,)) - 1
            + n ** 4 * q(_padd(N, (4,))))


@lru_cache(maxsize=4)
def m4_normal_form(slots=(2, 3, 4)):
    """(L, D) with M(4 f1) = L / D once f1, f1^2, f1^3 are substituted."""
    c = _Ctx(tuple(slots))
    n = 4 * c.f
    two_u = c.p2(U)
    q1m, q2m, q3m = c.p2(E_Q) - 1, c.p2(E_P) - 1, c.p2(E_R) - 1
    l1 = _ell(c, E_P, 1)
    l2 = _ell(c, E_Q, 2)
    l3 = _ell(c, E_P, 2)
    l4 = _ell(c, E_Q, 4)
    p_2tu = c.p2(E_P)
    # numerators over (Q-1)^a (P-1)^b after cancelling visible factors
    terms = [
        (two_u * q3m * (two_u - 1), 1, 0),
        (-(n * 2 * p_2tu * (two_u - 1)) * l1, 1, 1),
        (2 * c.p2(_pmul((2,), U)) * (two_u - 1) * q3m * l2, 3, 1),
        (2 * n * p_2tu * c.p2(_pmul((2,), U)) * (two_u - 1) * l1 * l2, 3, 2),
        (-(n ** 2) * p_2tu * (two_u - 1) * l3, 1, 2),
        (-c.p2(_pmul((2,), U)) * (two_u - 1) * q3m * l4, 5, 1),
    ]
    num = ExpoPoly()
    for part, a, b in terms:
        num = num + part * q1m ** (5 - a) * q2m ** (2 - b)
    return num, q1m ** 5 * q2m ** 2

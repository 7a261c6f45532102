"""Generalized geometric progressions and zero counting on a box.

For a polynomial P that is non-negative and below 2^u on [0, t-1]^k, every
lattice point a gets the block delta(P(a), u) at bit offset 2u*beta(a). The
popcount of the packed integer W is 2u per zero and u per non-zero, so the
zero count is HW(W)/u - t^k. W can also be written as a sum of one free-term
contribution and one contribution per monomial, each a product of
generalized geometric sums; ``assemble_W`` does it both ways.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import _bigint, kernels
from .errors import DomainError, ExactDivisionViolated

CLOSED_DEGREES = (0, 1, 2, 4)
MAX_RECURRENCE_DEGREE = 6
DIRECT_LIMIT = 1 << 16


# G_r(q, t) -------------------------------------------------------------------

def _g_closed(r, q, t):
    if t == 0:
        return 0
    t1 = t - 1
    qt1 = q ** t1
    qt = qt1 * q
    if r == 0:
        return _bigint.exact_div(qt - 1, q - 1, "G_0 closed form")
    if r == 1:
        num = q * (t1 * qt - t * qt1 + 1)
        return _bigint.exact_div(num, (q - 1) ** 2, "G_1 closed form")
    if r == 2:
        num = t1 ** 2 * qt * q - (2 * t1 ** 2 + 2 * t1 - 1) * qt + t ** 2 * qt1 - q - 1
        return _bigint.exact_div(q * num, (q - 1) ** 3, "G_2 closed form")
    if r == 4:
        c1 = -4 * t1 ** 4 - 12 * t1 ** 3 - 6 * t1 ** 2 + 12 * t1 + 11
        c2 = 6 * t1 ** 4 + 12 * t1 ** 3 - 6 * t1 ** 2 - 12 * t1 + 11
        c3 = -4 * t1 ** 4 - 4 * t1 ** 3 + 6 * t1 ** 2 - 4 * t1 + 1
        q2 = q * q
        num = (t1 ** 4 * qt * q2 * q + c1 * qt + c2 * qt * q + c3 * qt * q2
               + t ** 4 * qt1 - q2 * q - 11 * q2 - 11 * q - 1)
        return _bigint.exact_div(q * num, (q - 1) ** 5, "G_4 closed form")
    raise DomainError(f"no closed form for r = {r}; closed forms exist for r in {CLOSED_DEGREES}")


@lru_cache(maxsize=4096)
def _g_coefficients(r, t):
    """Coefficients in q of G_r(q, t) via the derivative recurrence.

    G_r(q, t) = d/dq G_{r-1}(q, t+1) - sum_{j<r} C(r, j) G_j(q, t)
    """
    if r == 0:
        return (1,) * t
    prev = _g_coefficients(r - 1, t + 1)
    out = [i * c for i, c in enumerate(prev)][1:]
    out += [0] * (t - len(out))
    for j in range(r):
        lower = _g_coefficients(j, t)
        k = comb(r, j)
        for i, c in enumerate(lower):
            out[i] -= k * c
    if any(out[t:]):
        raise ExactDivisionViolated("recurrence left terms beyond degree t-1")
    return tuple(out[:t])


def _g_recurrence(r, q, t):
    if r > MAX_RECURRENCE_DEGREE:
        raise DomainError(f"recurrence is supported for r <= {MAX_RECURRENCE_DEGREE}")
    acc = 0
    for c in reversed(_g_coefficients(r, t)):
        acc = acc * q + c
    return acc


def geom_sum(r: int, q, t: int, method: str = "closed"):
    """G_r(q, t) = sum_{j<t} j^r q^j."""
    if r < 0 or t < 0:
        raise DomainError("geom_sum needs r, t >= 0")
    if q < 2:
        raise DomainError("geom_sum needs q >= 2")
    q = _bigint.big(q)
    if method == "closed":
        return _g_closed(r, q, t)
    if method == "recurrence":
        return _g_recurrence(r, q, t)
    if method == "direct":
        return kernels.geom_direct(r, q, t)
    raise DomainError(f"unknown method {method!r}")


def _g_packed(r, e, t):
    """G_r(2^e, t) as the digits j^r written at stride e, if they fit."""
    if t and (t - 1) ** r >> e:
        return None
    return kernels.pack_blocks([j ** r for j in range(t)], e)


def _g_auto(r, q, t):
    if q & (q - 1) == 0:
        g = _g_packed(r, q.bit_length() - 1, t)
        if g is not None:
            return g
    if r in CLOSED_DEGREES:
        return _g_closed(r, q, t)
    return _g_recurrence(r, q, t)


G_METHODS = {
    "auto": _g_auto,
    "closed": _g_closed,
    "recurrence": _g_recurrence,
    "direct": kernels.geom_direct,
}


# blocks ----------------------------------------------------------------------

def delta(a: int, b: int):
    """(2^b - 1)(2^b - a + 1): popcount 2b when a = 0, b otherwise."""
    if b < 0 or a < 0:
        raise DomainError("delta needs natural arguments")
    if a >= 1 << b:
        raise DomainError(f"delta needs a < 2^b, got a={a}, b={b}")
    top = _bigint.big(1) << b
    return (top - 1) * (top - a + 1)


def beta(point, t: int) -> int:
    """a_1 + a_2 t + ... + a_k t^(k-1)."""
    out = 0
    for a in reversed(point):
        out = out * t + a
    return out


# instances -------------------------------------------------------------------

@dataclass(frozen=True)
class SimpleMonomial:
    """c * prod v_i^(x_i) * prod x_i^(r_i)."""

    c: int
    degrees: tuple
    bases: tuple = ()

    def __post_init__(self):
        bases = self.bases or (1,) * len(self.degrees)
        if len(bases) != len(self.degrees):
            raise DomainError("degrees and bases differ in length")
        if any(v < 1 for v in bases) or any(r < 0 for r in self.degrees):
            raise DomainError("bases must be >= 1 and degrees >= 0")
        object.__setattr__(self, "bases", tuple(bases))
        object.__setattr__(self, "degrees", tuple(self.degrees))

    @property
    def k(self) -> int:
        return len(self.degrees)

    @property
    def is_free(self) -> bool:
        return not any(self.degrees) and all(v == 1 for v in self.bases)

    def __call__(self, point):
        v = self.c
        for a, r, b in zip(point, self.degrees, self.bases):
            v *= a ** r * b ** a
        return v


@dataclass(frozen=True)
class HypercubeInstance:
    k: int
    t: int
    u: int
    monomials: tuple

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(self.monomials))
        if any(m.k != self.k for m in self.monomials):
            raise DomainError("monomial arity differs from k")
        if self.t < 1 or self.u < 1:
            raise DomainError("t and u must be positive")

    def value(self, point):
        return sum(m(point) for m in self.monomials)

    def points(self):
        # beta order: the first coordinate varies fastest
        for rev in itertools.product(range(self.t), repeat=self.k):
            yield rev[::-1]

    def free_coefficient(self) -> int:
        return sum(m.c for m in self.monomials if m.is_free)


def contribution(kind: str, m: SimpleMonomial, t: int, u: int, k: int, g_method="auto"):
    """Share of one monomial in W.

    ``g_method`` picks how the G sums of an A contribution are evaluated:
    ``closed`` and ``recurrence`` as in ``geom_sum``, ``auto`` packs digits
    when the base is a power of two and falls back to the closed forms.
    """
    if m.k != k:
        raise DomainError("monomial arity differs from k")
    one = _bigint.big(1)
    if kind == "C":
        if not m.is_free:
            raise DomainError("the C contribution is for the free term only")
        num = ((one << u) - m.c + 1) * ((one << (2 * u * t ** k)) - 1)
        return _bigint.exact_div(num, (one << u) + 1, "free-term contribution")
    if kind == "A":
        out = -((one << u) - 1) * m.c
        if not out:
            return out
        for i, (r, v) in enumerate(zip(m.degrees, m.bases)):
            q = (one << (2 * u * t ** i)) * v
            out *= G_METHODS[g_method](r, q, t)
        return out
    raise DomainError(f"unknown contribution kind {kind!r}")


def assemble_W(inst: HypercubeInstance, method: str = "contributions", g_method="auto"):
    if method == "contributions":
        if g_method not in G_METHODS:
            raise DomainError(f"unknown G method {g_method!r}")
        free = SimpleMonomial(inst.free_coefficient(), (0,) * inst.k)
        w = contribution("C", free, inst.t, inst.u, inst.k)
        for m in inst.monomials:
            if not m.is_free:
                w += contribution("A", m, inst.t, inst.u, inst.k, g_method)
        return w
    if method == "direct":
        size = inst.t ** inst.k
        if size > DIRECT_LIMIT:
            raise DomainError(f"direct assembly needs t^k <= {DIRECT_LIMIT}, got {size}")
        values = [inst.value(p) for p in inst.points()]
        top = 1 << inst.u
        for p, v in zip(inst.points(), values):
            if not 0 <= v < top:
                raise DomainError(f"P{tuple(p)} = {v} is outside [0, 2^u)")
        return kernels.pack_blocks(kernels.delta_blocks(values, inst.u), 2 * inst.u)
    raise DomainError(f"unknown method {method!r}")


def zeros_from_W(w, u: int, t: int, k: int) -> int:
    h = _bigint.popcount(w)
    if h % u:
        raise ExactDivisionViolated(f"HW(W) = {h} is not a multiple of u = {u}")
    return h // u - t ** k


def count_zeros(inst: HypercubeInstance, method: str = "contributions") -> int:
    return zeros_from_W(assemble_W(inst, method), inst.u, inst.t, inst.k)


def scan_zeros(inst: HypercubeInstance) -> int:
    """Exhaustive count of lattice zeros."""
    return sum(1 for p in inst.points() if inst.value(p) == 0)


def square_instance(root, k: int, t: int, u: int | None = None) -> HypercubeInstance:
    """Instance for (sum of ``root``)^2 on [0, t-1]^k.

    Products of simple monomials are simple, so the square expands term by
    term. Without ``u`` the smallest value keeping every block in [0, 2^u)
    is used.
    """
    root = list(root)
    mons = []
    for a in root:
        for b in root:
            mons.append(SimpleMonomial(a.c * b.c, tuple(x + y for x, y in zip(a.degrees, b.degrees)),
                                       tuple(x * y for x, y in zip(a.bases, b.bases))))
    if u is None:
        probe = HypercubeInstance(k, t, 1, mons)
        u = max(1, max(probe.value(p) for p in probe.points()).bit_length() + 1)
    return HypercubeInstance(k, t, u, mons)


# M(n) ------------------------------------------------------------------------

def m_params(n: int):
    """(t, u) = (n + 1, n + 5)."""
    return n + 1, n + 5


def m_instance(n: int) -> HypercubeInstance:
    """Box instance for (x1^2 - n x2 - 1)^2 on [0, n]^2."""
    if n < 0:
        raise DomainError("M(n) needs n >= 0")
    t, u = m_params(n)
    mons = [
        SimpleMonomial(1, (0, 0)),
        SimpleMonomial(1, (4, 0)),
        SimpleMonomial(-2, (2, 0)),
        SimpleMonomial(-2 * n, (2, 1)),
        SimpleMonomial(n * n, (0, 2)),
        SimpleMonomial(2 * n, (0, 1)),
    ]
    return HypercubeInstance(2, t, u, mons)


def _ell(n, t, q, which):
    """Numerators of the closed G sums as they appear in the expanded M."""
    if which == 1:
        return n * q ** t - t * q ** n + 1
    if which == 2:
        return n ** 2 * q ** (n + 2) - (2 * n ** 2 + 2 * n - 1) * q ** t + t ** 2 * q ** n - q - 1
    return ((6 * n ** 4 + 12 * n ** 3 - 6 * n ** 2 - 12 * n + 11) * q ** (n + 2)
            + (-4 * n ** 4 - 12 * n ** 3 - 6 * n ** 2 + 12 * n + 11) * q ** t
            + (-4 * n ** 4 - 4 * n ** 3 + 6 * n ** 2 - 4 * n + 1) * q ** (n + 3)
            + t ** 4 * q ** n - q ** 3 - 11 * q ** 2 - 11 * q - 1
            + n ** 4 * q ** (n + 4))


def _m_explicit(n):
    t, u = m_params(n)
    one = _bigint.big(1)
    p2u = one << u
    q1 = one << (2 * u)          # 2^(2u)
    q2 = one << (2 * t * u)      # 2^(2tu)
    q3 = one << (2 * t * t * u)  # 2^(2 t^2 u)
    l1 = _ell(n, t, q2, 1)
    l2 = _ell(n, t, q1, 2)
    l3 = _ell(n, t, q2, 2)
    l4 = _ell(n, t, q1, 4)
    ex = _bigint.exact_div
    parts = [
        ex((one << (2 * t * t * u + u)) - p2u, p2u + 1, "M term 1"),
        -ex((q2 - 1) * (n * (one << (2 * t * u + u + 1)) - n * (one << (2 * t * u + 1))) * l1,
            (q1 - 1) * (q2 - 1) ** 2, "M term 2"),
        ex(((one << (3 * u + 1)) - (one << (2 * u + 1))) * (q3 - 1) * l2,
           (q1 - 1) ** 3 * (q2 - 1), "M term 3"),
        ex(n * (one << (2 * t * u + 2 * u + 1)) * (p2u - 1) * l1 * l2,
           (q1 - 1) ** 3 * (q2 - 1) ** 2, "M term 4"),
        -ex(n ** 2 * (q2 - 1) * ((one << (2 * t * u + u)) - q2) * l3,
            (q1 - 1) * (q2 - 1) ** 3, "M term 5"),
        -ex(((one << (3 * u)) - (one << (2 * u))) * (q3 - 1) * l4,
            (q1 - 1) ** 5 * (q2 - 1), "M term 6"),
    ]
    return sum(parts)


def build_M(n: int, variant: str = "assembled", g_method="auto"):
    """M(n), either summed from contributions or from the expanded integer form."""
    if n < 0:
        raise DomainError("M(n) needs n >= 0")
    if variant == "assembled":
        return assemble_W(m_instance(n), "contributions", g_method)
    if variant == "explicit":
        return _m_explicit(n)
    raise DomainError(f"unknown variant {variant!r}")


def m_zero_count(n: int, variant: str = "assembled") -> int:
    t, u = m_params(n)
    return zeros_from_W(build_M(n, variant), u, t, 2)


def m_bits(n: int) -> int:
    """Approximate size of M(n) in bits."""
    t, u = m_params(n)
    return 2 * u * t * t + u


def normalized_M_check(n: int) -> bool:
    """M(4n) * D(4n) == L(4n) with L, D from the symbolic normal form."""
    from .expoly.normal import m4_normal_form
    if n < 0:
        raise DomainError("normalized_M_check needs n >= 0")
    num, den = m4_normal_form()
    assign = {2: n, 3: n * n, 4: n ** 3}
    return build_M(4 * n) * den.evaluate(assign) == num.evaluate(assign)

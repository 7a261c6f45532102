"""Concrete arithmetic terms for number-theoretic functions.

Every ``*_expr`` function builds a Term from argument Terms (ints are
accepted and wrapped). The ``*_term`` functions build the term for concrete
arguments and evaluate it.
"""
from __future__ import annotations

from . import _bigint
from .errors import DomainError
from .term import Call, Const, EvalConfig, Term, as_term, call, eval_term

GCD_VARIANTS = ("mazzanti", "prunescu_shunia")
BINOM_VARIANTS = ("robinson", "modmod", "divmod")
FACTORIAL_VARIANTS = ("prunescu_sauras", "newterm")
MODES = ("literal", "semantic")

TWO = Const(2)
ONE = Const(1)


def _variant(v, allowed):
    if v not in allowed:
        raise DomainError(f"unknown variant {v!r}; choose from {', '.join(allowed)}")
    return v


def _mode(mode):
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}")
    return mode


def _cfg(cfg, mode="semantic"):
    cfg = cfg or EvalConfig()
    want = mode == "semantic"
    if cfg.semantic_shortcuts != want:
        cfg = EvalConfig(cfg.max_bits, want, cfg.gcd_variant)
    return cfg


# gcd -----------------------------------------------------------------------

def gcd_expr(a, b, variant="mazzanti") -> Term:
    a, b = as_term(a), as_term(b)
    _variant(variant, GCD_VARIANTS)
    if variant == "mazzanti":
        a2b = a ** 2 * b
        num = (TWO ** (a2b * (b + 1)) - TWO ** a2b) * (TWO ** (a ** 2 * b ** 2) - 1)
        den = (TWO ** a2b - 1) * (TWO ** (a * b ** 2) - 1) * TWO ** (a ** 2 * b ** 2)
        return num // den % TWO ** (a * b)
    ab = a * b
    den = (TWO ** (a ** 2 * b) - 1) * (TWO ** (a * b ** 2) - 1)
    return TWO ** (ab * (ab + a + b)) // den % TWO ** ab - 1


def gcd_term(variant: str, a: int, b: int, cfg: EvalConfig | None = None) -> int:
    if a < 1 or b < 1:
        raise DomainError("the gcd terms need a, b >= 1")
    return eval_term(gcd_expr(a, b, variant), cfg=_cfg(cfg, "literal"))


# 2-adic valuation and Hamming weight ----------------------------------------

def nu2_expr(n, gcd_variant="mazzanti", literal=True) -> Term:
    """floor((gcd(n, 2^n)^(n+1) mod (2^(n+1)-1)^2) / (2^(n+1)-1))."""
    n = as_term(n)
    g = gcd_expr(n, TWO ** n, gcd_variant) if literal else call("gcd", n, TWO ** n)
    m = TWO ** (n + 1) - 1
    return g ** (n + 1) % m ** 2 // m


def hw_expr(n, gcd_variant="mazzanti", literal=True) -> Term:
    """nu2(C(2n, n)) with the div-mod binomial, which is also valid at n = 0."""
    n = as_term(n)
    b = binom_expr(2 * n, n, "divmod")
    return nu2_expr(b, gcd_variant, literal) if literal else call("nu2", b)


def expand_call(t: Call, gcd_variant="mazzanti") -> Term:
    """Plain-arithmetic expansion of a gcd/nu2/hw node."""
    if t.name == "gcd":
        return gcd_expr(*t.args, variant=gcd_variant)
    if t.name == "nu2":
        return nu2_expr(t.args[0], gcd_variant)
    return hw_expr(t.args[0], gcd_variant)


def nu2_term(n: int, mode="semantic", cfg: EvalConfig | None = None) -> int:
    _mode(mode)
    if n < 1:
        raise DomainError("nu2 needs n >= 1")
    return eval_term(call("nu2", n), cfg=_cfg(cfg, mode))


def hw_term(n: int, mode="semantic", cfg: EvalConfig | None = None) -> int:
    _mode(mode)
    if n < 0:
        raise DomainError("hw needs n >= 0")
    return eval_term(call("hw", n), cfg=_cfg(cfg, mode))


# powers and binomials --------------------------------------------------------

def pow_expr(x, y) -> Term:
    """x^y = 2^((xy+x+1)y) mod (2^(xy+x+1) - x), using powers of two only."""
    x, y = as_term(x), as_term(y)
    k = x * y + x + 1
    return TWO ** (k * y) % (TWO ** k - x)


def pow_term(x: int, y: int, cfg: EvalConfig | None = None) -> int:
    if x < 0 or y < 0:
        raise DomainError("pow_term needs natural numbers")
    return eval_term(pow_expr(x, y), cfg=_cfg(cfg, "literal"))


def binom_expr(a, b, variant="divmod") -> Term:
    a, b = as_term(a), as_term(b)
    _variant(variant, BINOM_VARIANTS)
    if variant == "robinson":
        return (TWO ** a + 1) ** a // TWO ** (a * b) % TWO ** a
    w = 2 * (a + 2)
    top = TWO ** (w * ((a + 1) ** 2 + b + 1))
    den = TWO ** (w * (a + 2)) - TWO ** w - 1
    if variant == "modmod":
        return top % den % TWO ** w
    return top // den % TWO ** w


def binom_term(variant: str, a: int, b: int, cfg: EvalConfig | None = None) -> int:
    if not 0 <= b <= a:
        raise DomainError(f"binomial needs 0 <= b <= a, got a={a}, b={b}")
    return eval_term(binom_expr(a, b, variant), cfg=_cfg(cfg, "literal"))


def padovan_seq(d: int, count: int) -> list:
    """s_d(0..count-1) with s_d(n) = s_d(n-d+1) + s_d(n-d)."""
    if d < 2:
        raise DomainError("padovan_seq needs d >= 2")
    if count < d:
        raise DomainError("padovan_seq needs count >= d")
    s = [0] * (d - 1) + [1]
    for n in range(d, count):
        s.append(s[n - d + 1] + s[n - d])
    return s


# factorials ------------------------------------------------------------------

def factorial_expr(n, variant="newterm") -> Term:
    n = as_term(n)
    _variant(variant, FACTORIAL_VARIANTS)
    if variant == "prunescu_sauras":
        # integer form of floor((2^(K-n) + 2^(-n))^K) mod 2^K, K = 2^((n+1)(n+2))
        k = TWO ** ((n + 1) * (n + 2))
        c = (TWO ** k + 1) ** k // TWO ** (n * k) % TWO ** k
        return TWO ** (n * (n + 1) * (n + 2)) // c
    a = TWO ** (3 * n ** 2)
    return TWO ** (3 * n ** 3) // binom_expr(a, n, "divmod")


def factorial_term(variant: str, n: int, cfg: EvalConfig | None = None) -> int:
    if n < 0:
        raise DomainError("factorial needs n >= 0")
    return eval_term(factorial_expr(n, variant), cfg=_cfg(cfg, "literal"))


def factorial_identity(n: int, a: int) -> int:
    """floor(a^n / C(a, n)), exact once a >= (n+1)^(n+2)."""
    from .oracle import binom as binom_oracle
    if n < 0:
        raise DomainError("factorial_identity needs n >= 0")
    if a < (n + 1) ** (n + 2):
        raise DomainError(f"a = {a} is below (n+1)^(n+2) = {(n + 1) ** (n + 2)}")
    return a ** n // binom_oracle(a, n)


def prime_or_two_expr(n, variant="prunescu_sauras") -> Term:
    n = as_term(n)
    return 2 + 2 * factorial_expr(n, variant) % (n + 1)


def prime_or_two(n: int, mode="term", cfg: EvalConfig | None = None) -> int:
    """2 + ((2 n!) mod (n+1)): n+1 when n+1 is prime, else 2.

    ``mode="term"`` evaluates the whole term with the factorial term inside;
    ``mode="oracle"`` takes n! from the product oracle.
    """
    if n < 0:
        raise DomainError("prime_or_two needs n >= 0")
    if mode == "term":
        return eval_term(prime_or_two_expr(n), cfg=_cfg(cfg, "literal"))
    if mode == "oracle":
        from .oracle import factorial
        return 2 + 2 * factorial(n) % (n + 1)
    raise DomainError(f"unknown mode {mode!r}")


def popcount(n) -> int:
    return _bigint.popcount(n)

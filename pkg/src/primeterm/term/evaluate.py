"""Exact evaluation of terms over arbitrary-precision integers.

Two identities keep towers under a modulus tractable without changing any
value:

* ``(b^e) mod m = pow(b mod m, e, m)``
* ``floor(x / d) mod m = floor((x mod d*m) / d)`` for ``d`` a power of two

The second identity holds for any positive ``d`` but is only used for powers
of two, which is what digit extraction needs. Other divisions stay exact, so
the documented budget cliffs (for example the 8^(n^2) factorial at n = 2)
are refused instead of being computed the long way round.

The operand of a Mod node is evaluated modulo its divisor wherever these
rules and the ring operations allow it. Anything else is evaluated exactly and
checked against the bit budget before the big operation is attempted.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .. import _bigint
from ..errors import BitLimitExceeded, DomainError, UnboundVariable
from .nodes import (Add, Call, Const, FloorDiv, Mod, Monus, Mul, Pow, Sub,
                    Term, Var)

DEFAULT_MAX_BITS = 1 << 33


@dataclass(frozen=True)
class EvalConfig:
    max_bits: int = DEFAULT_MAX_BITS
    # evaluate gcd/nu2/hw natively instead of expanding them
    semantic_shortcuts: bool = True
    # which gcd term a literal expansion uses
    gcd_variant: str = "mazzanti"

    def __post_init__(self):
        if self.max_bits < 64:
            raise DomainError("max_bits must be at least 64")


def _log2(v) -> float:
    v = abs(int(v))
    if not v:
        return 0.0
    shift = max(v.bit_length() - 64, 0)
    return shift + math.log2(v >> shift)


class _Evaluator:
    def __init__(self, env, cfg: EvalConfig):
        self.env = env
        self.cfg = cfg
        self.memo = {}
        self.mod_memo = {}
        self.expansions = {}

    def check(self, v, what):
        nb = _bigint.bits(v)
        if nb > self.cfg.max_bits:
            raise BitLimitExceeded(nb, self.cfg.max_bits, what)
        return v

    def need(self, nbits, what):
        if nbits > self.cfg.max_bits:
            raise BitLimitExceeded(int(nbits), self.cfg.max_bits, what)

    def positive(self, t: Term, what) -> int:
        v = self.eval(t)
        if v <= 0:
            raise DomainError(f"{what} must be positive, got {v}")
        return v

    def exponent(self, t: Term) -> int:
        e = self.eval(t)
        if e < 0:
            raise DomainError(f"negative exponent {e}")
        return e

    # exact ----------------------------------------------------------------
    def eval(self, t: Term):
        key = id(t)
        v = self.memo.get(key)
        if v is None:
            v = self._eval(t)
            self.memo[key] = v
        return v

    def _eval(self, t: Term):
        if isinstance(t, Const):
            return _bigint.big(t.value)
        if isinstance(t, Var):
            try:
                return _bigint.big(self.env[t.name])
            except KeyError:
                raise UnboundVariable(t.name) from None
        if isinstance(t, Add):
            return self.check(self.eval(t.left) + self.eval(t.right), "sum")
        if isinstance(t, Sub):
            return self.check(self.eval(t.left) - self.eval(t.right), "difference")
        if isinstance(t, Monus):
            d = self.eval(t.left) - self.eval(t.right)
            return d if d > 0 else _bigint.big(0)
        if isinstance(t, Mul):
            a, b = self.eval(t.left), self.eval(t.right)
            if a and b:
                self.need(_bigint.bits(a) + _bigint.bits(b) - 1, "product")
            return a * b
        if isinstance(t, FloorDiv):
            d = self.positive(t.right, "divisor")
            return self.eval(t.left) // d
        if isinstance(t, Mod):
            m = self.positive(t.right, "modulus")
            return self.reduce(t.left, m)
        if isinstance(t, Pow):
            return self.power(t)
        if isinstance(t, Call):
            return self.call(t)
        raise TypeError(f"not a term node: {t!r}")

    def power(self, t: Pow):
        e = self.exponent(t.right)
        b = self.eval(t.left)
        if e == 0:
            return _bigint.big(1)
        if b in (0, 1):
            return b
        if b == -1:
            return _bigint.big(-1 if e & 1 else 1)
        if b == 2:
            self.need(e + 1, "power of two")
            return _bigint.big(1) << e
        self.need(math.floor(e * _log2(b)) + 1, "power")
        return b ** e

    def call(self, t: Call):
        if not self.cfg.semantic_shortcuts:
            return self.eval(self.expand(t))
        args = [self.eval(a) for a in t.args]
        if t.name == "gcd":
            if args[0] < 1 or args[1] < 1:
                raise DomainError("gcd is defined here for positive arguments")
            return _bigint.gcd(*args)
        if t.name == "nu2":
            if args[0] < 1:
                raise DomainError("nu2 needs a positive argument")
            return _bigint.big(_bigint.nu2(args[0]))
        if args[0] < 0:
            raise DomainError("hw needs a natural number")
        return _bigint.big(_bigint.popcount(args[0]))

    def expand(self, t: Call) -> Term:
        key = id(t)
        out = self.expansions.get(key)
        if out is None:
            from ..numtheory import expand_call
            out = self.expansions[key] = expand_call(t, self.cfg.gcd_variant)
        return out

    # modular ----------------------------------------------------------------
    def reduce(self, t: Term, m):
        """Value of ``t`` modulo ``m`` (m > 0), in [0, m)."""
        key = (id(t), m)
        v = self.mod_memo.get(key)
        if v is None:
            v = self._reduce(t, m)
            self.mod_memo[key] = v
        return v

    def _reduce(self, t: Term, m):
        if m == 1:
            return _bigint.big(0)
        if isinstance(t, Add):
            return (self.reduce(t.left, m) + self.reduce(t.right, m)) % m
        if isinstance(t, Sub):
            return (self.reduce(t.left, m) - self.reduce(t.right, m)) % m
        if isinstance(t, Mul):
            return (self.reduce(t.left, m) * self.reduce(t.right, m)) % m
        if isinstance(t, Pow):
            e = self.exponent(t.right)
            return _bigint.powmod(self.reduce(t.left, m), e, m)
        if isinstance(t, FloorDiv):
            d = self.positive(t.right, "divisor")
            if d & (d - 1):
                return self.eval(t) % m
            self.need(_bigint.bits(d) + _bigint.bits(m), "reduction modulus")
            return self.reduce(t.left, d * m) // d
        if isinstance(t, Mod):
            m2 = self.positive(t.right, "modulus")
            if m2 % m == 0:
                return self.reduce(t.left, m)
            return self.reduce(t.left, m2) % m
        if isinstance(t, Call) and not self.cfg.semantic_shortcuts:
            return self.reduce(self.expand(t), m)
        return self.eval(t) % m


def eval_term(t: Term, env=None, cfg: EvalConfig | None = None):
    """Exact value of ``t`` under ``env`` (a name -> int mapping)."""
    ev = _Evaluator(env or {}, cfg or EvalConfig())
    return int(ev.eval(t))

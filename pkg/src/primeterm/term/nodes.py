"""Expression tree for arithmetic terms.

Nodes are immutable and compare structurally. Python operators build trees,
so ``2 ** n % (m + 1)`` with ``n = Var("n")`` gives a Mod node. Integer
operands are wrapped in Const automatically.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError

# precedence levels used by the printer and parser
PREC_ADD = 1
PREC_MUL = 2
PREC_POW = 3
PREC_ATOM = 4

# designated function atoms and their arities
CALLS = {"gcd": 2, "nu2": 1, "hw": 1}


class Term:
    __slots__ = ()
    prec = PREC_ATOM

    def __add__(self, other):
        return Add(self, as_term(other))

    def __radd__(self, other):
        return Add(as_term(other), self)

    def __sub__(self, other):
        return Sub(self, as_term(other))

    def __rsub__(self, other):
        return Sub(as_term(other), self)

    def __mul__(self, other):
        return Mul(self, as_term(other))

    def __rmul__(self, other):
        return Mul(as_term(other), self)

    def __floordiv__(self, other):
        return FloorDiv(self, as_term(other))

    def __rfloordiv__(self, other):
        return FloorDiv(as_term(other), self)

    def __mod__(self, other):
        return Mod(self, as_term(other))

    def __rmod__(self, other):
        return Mod(as_term(other), self)

    def __pow__(self, other):
        return Pow(self, as_term(other))

    def __rpow__(self, other):
        return Pow(as_term(other), self)

    def children(self) -> tuple:
        return ()

    def __str__(self):
        from .fmt import format_term
        return format_term(self)


@dataclass(frozen=True, slots=True)
class Const(Term):
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            object.__setattr__(self, "value", int(self.value))
        if self.value < 0:
            raise DomainError("constants are natural numbers; use Sub for negatives")


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str


@dataclass(frozen=True, slots=True)
class _Binary(Term):
    left: Term
    right: Term

    def children(self):
        return (self.left, self.right)


class Add(_Binary):
    __slots__ = ()
    prec = PREC_ADD
    symbol = "+"


class Sub(_Binary):
    __slots__ = ()
    prec = PREC_ADD
    symbol = "-"


class Mul(_Binary):
    __slots__ = ()
    prec = PREC_MUL
    symbol = "*"


class FloorDiv(_Binary):
    __slots__ = ()
    prec = PREC_MUL
    symbol = "/"


class Mod(_Binary):
    __slots__ = ()
    prec = PREC_MUL
    symbol = "%"


class Pow(_Binary):
    __slots__ = ()
    prec = PREC_POW
    symbol = "^"


class Monus(_Binary):
    """Bounded subtraction max(left - right, 0)."""
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Call(Term):
    """gcd, nu2 or hw applied to subterms.

    Semantic evaluation computes these natively; literal evaluation expands
    them into plain arithmetic first.
    """
    name: str
    args: tuple

    def __post_init__(self):
        want = CALLS.get(self.name)
        if want is None:
            raise DomainError(f"unknown function {self.name!r}")
        if len(self.args) != want:
            raise DomainError(f"{self.name} takes {want} argument(s)")

    def children(self):
        return self.args


BINARY = {cls.symbol: cls for cls in (Add, Sub, Mul, FloorDiv, Mod, Pow)}


def as_term(v) -> Term:
    if isinstance(v, Term):
        return v
    if isinstance(v, int):
        if v < 0:
            return Sub(Const(0), Const(-v))
        return Const(v)
    if type(v).__name__ == "mpz":
        return as_term(int(v))
    raise TypeError(f"cannot make a term from {type(v).__name__}")


def monus(a, b) -> Monus:
    return Monus(as_term(a), as_term(b))


def call(name, *args) -> Call:
    return Call(name, tuple(as_term(a) for a in args))


def free_vars(t: Term) -> set:
    seen, out, stack = set(), set(), [t]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Var):
            out.add(node.name)
        stack.extend(node.children())
    return out


def size(t: Term) -> int:
    """Node count of the tree, counting shared subtrees once per use."""
    memo = {}

    def go(node):
        k = id(node)
        if k not in memo:
            memo[k] = 1 + sum(go(c) for c in node.children())
        return memo[k]
    return go(t)

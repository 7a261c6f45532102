"""Exponential polynomials simple in x.

A monomial is ``c * 2^(e_n*n + sum e_i*x_i) * prod x_i^deg_i`` with an integer
coefficient ``c``. Powers of two with a constant exponent live in ``c``.

Grouping. The symbolic part of the exponent is not stored as one linear form.
It is kept the way a computer-algebra system keeps a product of factors
``2^(a*x)``: equal factors fuse (``2^(8x) * 2^(8x) = 2^(16x)``), unequal ones
stay apart (``2^(8x) * 2^(16x)`` is two factors), and raising a single term to
a power scales its factors (``(2^(8x))^3 = 2^(24x)``). Fusing only equal
factors is a binary carry, so the factors of one variable are determined by
the total exponent within each odd class: 8, 16 and 32 share class 1, while
24 and 48 share class 3. Keys therefore record, per variable and odd class,
the class total. Two monomials can print identically and still be different
keys; ``collapsed()`` merges them.

Keys are packed ints with one 32-bit field per interned slot, so multiplying
two monomials is one integer addition of their keys.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Mapping

from ..errors import NonLinearExponent

W = 32
FIELD = (1 << W) - 1
MAX_VAR = 127

# slot registry: ("d", i) degree of x_i, ("e", i, odd) exponent class of x_i
# (i = 0 stands for n), ("tag",) tie-breaker for parsed duplicate records
_SLOT_OF: dict = {}
_SLOTS: list = []


def _slot(desc) -> int:
    s = _SLOT_OF.get(desc)
    if s is None:
        s = _SLOT_OF[desc] = len(_SLOTS)
        _SLOTS.append(desc)
    return s


def _odd(c: int) -> int:
    return c >> ((c & -c).bit_length() - 1)


def _check_index(i):
    if not 1 <= i <= MAX_VAR:
        raise ValueError(f"variable index {i} outside 1..{MAX_VAR}")


def _field(desc, v) -> int:
    if not 0 <= v < (1 << (W - 1)):
        raise ValueError(f"exponent/degree field {v} out of range")
    return v << (W * _slot(desc))


def _fields(key: int):
    s = 0
    while key:
        v = key & FIELD
        if v:
            yield _SLOTS[s], v
        key >>= W
        s += 1


@dataclass(frozen=True)
class LinForm:
    """``const + n_coef*n + sum c_i*x_i`` with natural coefficients."""

    const: int = 0
    n: int = 0
    coeffs: tuple = ()

    def __post_init__(self):
        if self.const < 0 or self.n < 0:
            raise NonLinearExponent("exponent coefficients must be natural numbers")
        norm = {}
        for i, c in self.coeffs:
            _check_index(i)
            if c < 0:
                raise NonLinearExponent("exponent coefficients must be natural numbers")
            norm[i] = norm.get(i, 0) + c
        object.__setattr__(self, "coeffs", tuple(sorted((i, c) for i, c in norm.items() if c)))

    @classmethod
    def of(cls, const=0, n=0, **xs):
        """``LinForm.of(5, x2=32, x1=48)``; keyword names are ``x<index>``."""
        return cls(const, n, tuple((int(k[1:]), v) for k, v in xs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            return LinForm(self.const + other, self.n, self.coeffs)
        return LinForm(self.const + other.const, self.n + other.n, self.coeffs + other.coeffs)

    __radd__ = __add__

    def scale(self, k: int) -> "LinForm":
        return LinForm(self.const * k, self.n * k, tuple((i, c * k) for i, c in self.coeffs))

    @property
    def is_constant(self) -> bool:
        return not self.n and not self.coeffs

    def evaluate(self, assign: Mapping[int, int], n: int = 0) -> int:
        return self.const + self.n * n + sum(c * assign[i] for i, c in self.coeffs)

    def __str__(self):
        parts = [f"{c}*x{i}" if c != 1 else f"x{i}" for i, c in self.coeffs]
        if self.n:
            parts.append(f"{self.n}*n" if self.n != 1 else "n")
        if self.const or not parts:
            parts.append(str(self.const))
        return " + ".join(parts)


@dataclass(frozen=True)
class ExpoMonomial:
    """``c0 * 2^exponent * prod x_i^d``; c0 is odd whenever the exponent is symbolic."""

    c0: int
    exponent: LinForm
    degrees: tuple  # ((index, degree), ...) ascending, degree > 0

    def evaluate(self, assign, n=0):
        v = self.c0 << self.exponent.evaluate(assign, n)
        for i, d in self.degrees:
            v *= assign[i] ** d
        return v


def _atoms_key(i: int, e: int) -> int:
    return _field(("e", i, _odd(e)), e) if e else 0


def _make_key(degrees, exps, n_exp=0, tag=0) -> int:
    key = 0
    for i, d in degrees:
        if d:
            _check_index(i)
            key += _field(("d", i), d)
    for i, e in exps:
        _check_index(i)
        key += _atoms_key(i, e)
    key += _atoms_key(0, n_exp)
    if tag:
        key += _field(("tag",), tag)
    return key


def _decode(key: int):
    """-> (degrees, exponent coefficients, n coefficient, tag)."""
    degs, exps, e_n, tag = {}, {}, 0, 0
    for desc, v in _fields(key):
        kind = desc[0]
        if kind == "d":
            degs[desc[1]] = v
        elif kind == "e":
            if desc[1] == 0:
                e_n += v
            else:
                exps[desc[1]] = exps.get(desc[1], 0) + v
        else:
            tag = v
    return tuple(sorted(degs.items())), tuple(sorted(exps.items())), e_n, tag


def _scale_key(key: int, k: int) -> int:
    """Key of a single monomial raised to the k-th power."""
    out = 0
    odd_k = _odd(k)
    for desc, v in _fields(key):
        if desc[0] == "e":
            out += _field(("e", desc[1], desc[2] * odd_k), v * k)
        else:
            out += _field(desc, v * k)
    return out


def _is_symbolic(key: int) -> bool:
    return any(desc[0] == "e" for desc, _ in _fields(key))


def _as_poly(x) -> "ExpoPoly":
    if isinstance(x, ExpoPoly):
        return x
    if isinstance(x, int):
        return ExpoPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as an ExpoPoly")


class ExpoPoly:
    """Immutable exponential polynomial; see the module docstring for the form."""

    __slots__ = ("_t", "_mons")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._t = {k: c for k, c in terms.items() if c} if terms else {}
        self._mons = None

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "ExpoPoly":
        return cls({0: int(c)} if c else None)

    @classmethod
    def var(cls, i: int, deg: int = 1) -> "ExpoPoly":
        return cls({_make_key(((i, deg),), ()): 1})

    @classmethod
    def pow2(cls, lin) -> "ExpoPoly":
        """2 raised to a LinForm (or a natural number)."""
        if isinstance(lin, int):
            if lin < 0:
                raise NonLinearExponent("negative power of two")
            return cls.const(1 << lin)
        return cls({_make_key((), lin.coeffs, lin.n): 1 << lin.const})

    @classmethod
    def monomial(cls, c0: int, exponent: LinForm = LinForm(), degrees=(), tag=0) -> "ExpoPoly":
        return cls({_make_key(tuple(degrees), exponent.coeffs, exponent.n, tag): c0 << exponent.const})

    @classmethod
    def from_monomials(cls, mons: Iterable[ExpoMonomial], keep_duplicates=False) -> "ExpoPoly":
        """Sum of monomials.

        With ``keep_duplicates`` a monomial whose printed form repeats an
        earlier one gets its own key instead of being merged into it.
        """
        out: dict = {}
        seen: dict = {}
        for m in mons:
            key = _make_key(m.degrees, m.exponent.coeffs, m.exponent.n)
            if keep_duplicates:
                tag = seen.get(key, 0)
                seen[key] = tag + 1
                if tag:
                    key += _field(("tag",), tag)
            c = m.c0 << m.exponent.const
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return cls(out)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _as_poly(other)
        big, small = (other, self) if len(other._t) > len(self._t) else (self, other)
        out = dict(big._t)
        for k, c in small._t.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return ExpoPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ExpoPoly({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        out: dict = {}
        get = out.get
        for k1, c1 in self._t.items():
            for k2, c2 in other._t.items():
                k = k1 + k2
                out[k] = get(k, 0) + c1 * c2
        return ExpoPoly(out)

    __rmul__ = __mul__

    def square(self) -> "ExpoPoly":
        return self * self

    def _term_power(self, key, c, e):
        return ExpoPoly({_scale_key(key, e): c ** e})

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        if e == 0:
            return ExpoPoly.const(1)
        terms = list(self._t.items())
        if not terms:
            return ExpoPoly()
        if len(terms) == 1:
            return self._term_power(*terms[0], e)
        # multinomial expansion with each term raised as a whole
        (k0, c0), rest = terms[0], ExpoPoly(dict(terms[1:]))
        out = ExpoPoly()
        for j in range(e + 1):
            head = self._term_power(k0, c0, j) if j else ExpoPoly.const(1)
            out = out + comb(e, j) * head * (rest ** (e - j))
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = ExpoPoly.const(other)
        if not isinstance(other, ExpoPoly):
            return NotImplemented
        return self._t == other._t

    __hash__ = None

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __repr__(self):
        return f"ExpoPoly<{len(self)} monomials>"

    # inspection -------------------------------------------------------
    def terms(self):
        """(key, coefficient) pairs; keys are opaque."""
        return self._t.items()

    def monomials(self) -> list:
        """Monomials in canonical order (see ``sort_key``)."""
        if self._mons is None:
            mons = []
            for k, c in self._t.items():
                degs, exps, e_n, _tag = _decode(k)
                if exps or e_n:
                    z = (c & -c).bit_length() - 1
                    c, const = c >> z, z
                else:
                    const = 0
                mons.append(ExpoMonomial(c, LinForm(const, e_n, exps), degs))
            mons.sort(key=sort_key)
            self._mons = mons
        return self._mons

    def collapsed(self) -> "ExpoPoly":
        """Merge monomials that differ only in how their exponent is grouped."""
        return ExpoPoly.from_monomials(self.monomials())

    def variables(self) -> set:
        out = set()
        for m in self.monomials():
            out.update(i for i, _ in m.degrees)
            out.update(i for i, _ in m.exponent.coeffs)
        return out

    def uses_n(self) -> bool:
        return any(m.exponent.n for m in self.monomials())

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def evaluate(self, assign: Mapping[int, int], n: int = 0) -> int:
        return sum(m.evaluate(assign, n) for m in self.monomials())

    def as_linform(self) -> LinForm:
        """Read a linear polynomial with natural coefficients as a LinForm."""
        const, co = 0, []
        for m in self.monomials():
            if m.exponent.coeffs or m.exponent.n:
                raise NonLinearExponent("exponential term inside an exponent")
            if not m.degrees:
                const += m.c0 << m.exponent.const
            elif len(m.degrees) == 1 and m.degrees[0][1] == 1:
                co.append((m.degrees[0][0], m.c0 << m.exponent.const))
            else:
                raise NonLinearExponent("non-linear expression inside an exponent")
        return LinForm(const, 0, tuple(co))

    # rewriting --------------------------------------------------------
    def relabel(self, mapping: Mapping[int, int]) -> "ExpoPoly":
        """Rename variables; exponent grouping is kept."""
        out: dict = {}
        for k, c in self._t.items():
            nk = 0
            for desc, v in _fields(k):
                if desc[0] == "d":
                    desc = ("d", mapping.get(desc[1], desc[1]))
                elif desc[0] == "e" and desc[1]:
                    desc = ("e", mapping.get(desc[1], desc[1]), desc[2])
                nk += _field(desc, v)
            out[nk] = out.get(nk, 0) + c
        return ExpoPoly(out)

    def substitute(self, i: int, repl) -> "ExpoPoly":
        """Replace variable ``i`` by ``repl`` everywhere.

        Inside exponents ``repl`` must be linear with natural coefficients.
        """
        repl = _as_poly(repl)
        lin = None
        total = ExpoPoly()
        for k, c in self._t.items():
            degs, exps, e_n, tag = _decode(k)
            e_i = dict(exps).get(i, 0)
            d_i = dict(degs).get(i, 0)
            if not e_i and not d_i:
                total = total + ExpoPoly({k: c})
                continue
            # rebuild the untouched part with its grouping intact
            base_key = 0
            for desc, v in _fields(k):
                if desc[1:2] != (i,) or desc[0] == "tag":
                    base_key += _field(desc, v)
            base = ExpoPoly({base_key: c})
            if e_i:
                if lin is None:
                    lin = repl.as_linform()
                base = base * ExpoPoly.pow2(lin.scale(e_i))
            total = total + base * repl ** d_i
        return total


def sort_key(m: ExpoMonomial):
    """Degree vector, then exponent vector, then n and constant, then coefficient."""
    top = 0
    if m.degrees:
        top = m.degrees[-1][0]
    if m.exponent.coeffs:
        top = max(top, m.exponent.coeffs[-1][0])
    dv = [0] * MAX_VAR
    ev = [0] * MAX_VAR
    for i, d in m.degrees:
        dv[i - 1] = d
    for i, e in m.exponent.coeffs:
        ev[i - 1] = e
    return (dv, ev, m.exponent.n, m.exponent.const, m.c0)


def x(i: int) -> ExpoPoly:
    return ExpoPoly.var(i)


def pow2(lin) -> ExpoPoly:
    return ExpoPoly.pow2(lin)


def ep_arith(op: str, *args):
    """Dispatch form of the ExpoPoly operations."""
    if op == "add":
        out = ExpoPoly()
        for a in args:
            out = out + a
        return out
    if op == "mul":
        out = ExpoPoly.const(1)
        for a in args:
            out = out * a
        return out
    if op == "square":
        (a,) = args
        return _as_poly(a).square()
    if op == "substitute":
        p, i, repl = args
        return p.substitute(i, repl)
    if op == "relabel":
        p, mapping = args
        return p.relabel(mapping)
    raise ValueError(f"unknown ExpoPoly operation {op!r}")


def expand_stats(p: ExpoPoly):
    """(monomial count, variable count, max degree, max exponent coefficient)."""
    max_deg = 0
    max_e = 0
    for m in p.monomials():
        for _, d in m.degrees:
            max_deg = max(max_deg, d)
        for _, e in m.exponent.coeffs:
            max_e = max(max_e, e)
        max_e = max(max_e, m.exponent.n)
    return len(p), len(p.variables()), max_deg, max_e

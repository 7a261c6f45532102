"""Registry of single-fold relations: builders, witnesses and bounds.

A relation has input slots, an optional output slot and a block of
quantified variables x_{base+1}, ..., x_{base+q}. ``witness`` computes the
quantified values (and output) that zero the corrected builder;
``bounds`` gives upper bounds for every quantified variable and for the
output, as functions of the inputs. Bounds can be astronomically large, so
they are kept in the form ``coef * 2^exp + add`` and compared by size when
materializing them would be wasteful.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .. import hypercube, oracle
from ..errors import BitLimitExceeded, NoWitness, SlotCollision
from ..term import DEFAULT_MAX_BITS, Term
from . import builders as B
from .normal import m4_normal_form
from .plan import t_term
from .poly import MAX_VAR, ExpoPoly, x


# bounds ---------------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    """``name < coef * 2^exp + add`` (``<=`` when ``strict`` is false)."""

    name: str
    coef: int
    exp: int = 0
    add: int = 0
    strict: bool = True

    def value(self, max_bits: int = DEFAULT_MAX_BITS) -> int:
        need = self.coef.bit_length() + self.exp
        if need > max_bits:
            raise BitLimitExceeded(need, max_bits, f"bound on {self.name}")
        return (self.coef << self.exp) + self.add

    def limit(self, max_bits: int = DEFAULT_MAX_BITS) -> int:
        """Exclusive upper limit for enumeration."""
        return self.value(max_bits) + (0 if self.strict else 1)

    def holds(self, v: int) -> bool:
        if v < 0:
            return False
        if self.coef >= 1 and v.bit_length() <= self.exp:
            return True  # v < 2^exp <= bound
        if v.bit_length() > self.coef.bit_length() + self.exp + 1 and self.add.bit_length() <= self.exp:
            return False
        b = (self.coef << self.exp) + self.add
        return v < b if self.strict else v <= b

    def __str__(self):
        op = "<" if self.strict else "<="
        if not self.exp:
            return f"{self.name} {op} {self.coef + self.add}"
        s = f"2^{self.exp}" if self.coef == 1 else f"{self.coef} * 2^{self.exp}"
        if self.add:
            s += f" + {self.add}"
        return f"{self.name} {op} {s}"


def _lt(name, v):
    return Bound(name, v)


def _le(name, v):
    return Bound(name, v, strict=False)


def _p2(name, e, coef=1, add=0):
    return Bound(name, coef, max(e, 0), add)


def _named(bs):
    return {b.name: b for b in bs}


def global_bound(n) -> Term:
    """Bound on every coordinate of a solution of the 42-variable equation.

    Returned as the unevaluated tower 2^2^2^(2 n^4 + 16); ``n`` may be an
    int (the top exponent is folded) or a Term.
    """
    return t_term(n)


# witnesses ------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    rel_id: str
    inputs: tuple
    output: int | None
    values: tuple

    def assignment(self, layout=None) -> dict:
        """Variable index -> value for the standard layout (or a given one)."""
        layout = layout or standard_layout(self.rel_id)
        out = dict(zip(layout["inputs"], self.inputs))
        if layout["output"] is not None:
            out[layout["output"]] = self.output
        for k, v in enumerate(self.values, start=1):
            out[layout["base"] + k] = v
        return out


def _need(bits, max_bits, what):
    if bits > max_bits:
        raise BitLimitExceeded(bits, max_bits, what)


def _w_div(a, b, max_bits):
    if b < 1:
        raise NoWitness("quotient by zero")
    q, r = divmod(a, b)
    return q, (r, b - r - 1)


def _w_mod(a, b, max_bits):
    if b < 1:
        raise NoWitness("remainder modulo zero")
    q, r = divmod(a, b)
    return r, (q, b - r - 1)


def _w_divides(a, b, max_bits):
    if b == 0:
        if a:
            raise NoWitness(f"0 does not divide {a}")
        return None, (0,)
    if a % b:
        raise NoWitness(f"{b} does not divide {a}")
    return None, (a // b,)


def _w_notdivides(a, b, max_bits):
    if b == 0 and a:
        # a = 0*y1 + y2 + 1 needs y2 + y3 + 2 = 0
        raise NoWitness("the indivisibility relation needs a divisor of at least 2")
    if b < 2 or a % b == 0:
        raise NoWitness(f"{b} divides {a}")
    q, r = divmod(a, b)
    return None, (q, r - 1, b - r - 1)


def _w_nu(a, max_bits):
    if a < 1:
        raise NoWitness("nu2 needs a positive argument")
    e = (a & -a).bit_length() - 1
    _, ys = _w_notdivides(a, 1 << (e + 1), max_bits)
    return e, ys + (a >> e,)


def _w_exp(a, b, max_bits):
    y1 = a * b + a + 1
    y2 = y1 * b
    _need(y2 + 1, max_bits, "exponential witness")
    out, (q, s) = _w_mod(1 << y2, (1 << y1) - a, max_bits)
    return out, (y1, y2, q, s)


def _w_binom12(a, b, max_bits):
    y1 = (1 << a) + 1
    y2, exp_ys = _w_exp(y1, a, max_bits)
    y3 = a * b
    y4, div_ys = _w_div(y2, 1 << y3, max_bits)
    out, mod_ys = _w_mod(y4, 1 << a, max_bits)
    return out, (y1, y2, y3, y4) + exp_ys + div_ys + mod_ys


def binom7_bits(a, b) -> int:
    """Size of the power of two at the heart of the seven-variable binomial."""
    return 2 * a ** 3 + 8 * a ** 2 + 2 * a * b + 12 * a + 4 * b + 8


def _w_binom7(a, b, max_bits):
    y1 = binom7_bits(a, b)
    y2 = 2 * a * a + 8 * a + 8
    _need(y1 + 1, max_bits, "binomial witness")
    y3, div_ys = _w_div(1 << y1, (1 << y2) - (1 << (2 * a + 4)) - 1, max_bits)
    out, mod_ys = _w_mod(y3, 1 << (2 * a + 4), max_bits)
    return out, (y1, y2, y3) + div_ys + mod_ys


def _w_fact(a, max_bits):
    y1 = a * a
    _need(3 * y1 + 1, max_bits, "factorial witness")
    y2 = 1 << (3 * y1)
    y3 = a * y1
    # the binomial witness is the expensive part; check it before 2^(3 y3)
    _need(binom7_bits(y2, a) + 1, max_bits, "factorial witness")
    y4, b_ys = _w_binom7(y2, a, max_bits)
    out, div_ys = _w_div(1 << (3 * y3), y4, max_bits)
    return out, (y1, y2, y3, y4) + b_ys + div_ys


def _w_hw(a, max_bits):
    y1, b_ys = _w_binom7(2 * a, a, max_bits)
    out, nu_ys = _w_nu(y1, max_bits)
    return out, (y1,) + b_ys + nu_ys


def _m4_inputs(f1, f2, f3, f4=None):
    if f2 != f1 * f1 or f3 != f1 ** 3 or (f4 is not None and f4 != 4 * f1 + 1):
        raise NoWitness("the M relation needs f2 = f1^2, f3 = f1^3, f4 = 4 f1 + 1")


def _m4_bits(f1):
    return 128 * f1 ** 3 + 224 * f1 ** 2 + 92 * f1 + 16


def _w_m4_0(f1, f2, f3, max_bits):
    _m4_inputs(f1, f2, f3)
    _need(_m4_bits(f1), max_bits, "M witness")
    return int(hypercube.build_M(4 * f1)), ()


def _w_m4_9(f1, f2, f3, f4, max_bits):
    _m4_inputs(f1, f2, f3, f4)
    _need(_m4_bits(f1), max_bits, "M witness")
    t, u = hypercube.m_params(4 * f1)
    q1, q2 = 1 << (2 * u), 1 << (2 * t * u)
    g = lambda r, q: int(hypercube.geom_sum(r, q, t, "closed"))
    cc = ((1 << u) * ((1 << (2 * t * t * u)) - 1)) // ((1 << u) + 1)
    ys = (q1 - 1, q2 - 1, g(0, q1), g(2, q1), g(4, q1), g(0, q2), g(1, q2), g(2, q2), cc)
    return int(hypercube.build_M(4 * f1)), ys


# bounds per relation ----------------------------------------------------

def _b_div(a, b):
    return _named([_lt("y1", b), _lt("y2", b), _le("out", a)])


def _b_mod(a, b):
    # y1 <= x1 rather than y1 < x1 so that x2 = 1 (and x1 = 0) stay covered
    return _named([_le("y1", a), _lt("y2", b), _lt("out", b)])


def _b_divides(a, b):
    return _named([_le("y1", a)])


def _b_notdivides(a, b):
    return _named([_lt("y1", a), _lt("y2", b), _lt("y3", b)])


def _b_nu(a):
    return _named([_lt("y1", a), _lt("y2", 2 * a), _lt("y3", 2 * a), _lt("y4", a + 1),
                   _lt("out", a)])


def _b_exp(a, b):
    y1 = a * b + a + 1
    y2 = y1 * b
    return _named([_lt("y1", y1 + 1), _lt("y2", y2 + 1), _p2("y3", y2 - y1 + 1),
                   _p2("y4", y1), _p2("out", y1)])


def _b_binom12(a, b):
    y1 = (1 << a) + 1
    inner = _b_exp(y1, a)
    top = a * a + a  # (2^a + 1)^a <= 2^(a^2 + a)
    bs = [_lt("y1", y1 + 1), _p2("y2", top, add=1), _lt("y3", a * b + 1), _p2("y4", top, add=1)]
    for k, name in enumerate(("y1", "y2", "y3", "y4"), start=5):
        o = inner[name]
        bs.append(Bound(f"y{k}", o.coef, o.exp, o.add, o.strict))
    bs += [_p2("y9", a * b), _p2("y10", a * b), _p2("y11", top, add=1), _p2("y12", a),
           _p2("out", a)]
    return _named(bs)


def _b_binom7(a, b):
    return _named([
        _lt("y1", 28 * a ** 3 + 9), _lt("y2", 10 * a ** 2 + 9),
        _p2("y3", 28 * a ** 3 + 9), _p2("y4", 10 * a ** 2 + 8), _p2("y5", 10 * a ** 2 + 8),
        _p2("y6", 28 * a ** 3 + 9), _p2("y7", 2 * a + 4), _p2("out", 2 * a + 4),
    ])


def _b_fact(a):
    y1, y3 = a * a, a ** 3
    y2 = 1 << (3 * y1)
    return _named([
        _lt("y1", a * a + 1), _p2("y2", 3 * y1 + 1), _lt("y3", a ** 3 + 1),
        _p2("y4", 2 * y2 + 4), _lt("y5", 28 * y2 ** 3 + 9), _lt("y6", 10 * y2 ** 2 + 9),
        _p2("y7", 28 * y2 ** 3 + 9), _p2("y8", 10 * y2 ** 2 + 8), _p2("y9", 10 * y2 ** 2 + 8),
        _p2("y10", 28 * y2 ** 3 + 9), _p2("y11", 2 * y2 + 4), _p2("y12", 2 * y2 + 4),
        _p2("y13", 2 * y2 + 4), _p2("out", 3 * y3 + 1),
    ])


def _b_hw(a):
    return _named([
        _p2("y1", 4 * a + 4), _lt("y2", 224 * a ** 3 + 9), _lt("y3", 40 * a ** 2 + 9),
        _p2("y4", 224 * a ** 3 + 9), _p2("y5", 40 * a ** 2 + 8), _p2("y6", 40 * a ** 2 + 8),
        _p2("y7", 224 * a ** 3 + 9), _p2("y8", 4 * a + 4), _p2("y9", 4 * a + 4),
        _p2("y10", 4 * a + 5), _p2("y11", 4 * a + 5), _p2("y12", 4 * a + 4, add=1),
        _lt("out", a + 1),
    ])


def _m_out_bound(f):
    return _p2("out", 512 * f ** 3 + 576 * f ** 2 + 216 * f + 27)


def _b_m4_0(f1, f2, f3):
    return _named([_m_out_bound(f1)])


def _b_m4_9(f1, f2, f3, f4):
    t = 4 * f1 + 1
    e_p = 32 * f1 ** 2 + 48 * f1 + 10
    e_r = 128 * f1 ** 3 + 224 * f1 ** 2 + 88 * f1 + 10
    return _named([
        _p2("y1", 8 * f1 + 10), _p2("y2", e_p), _p2("y3", e_p, t), _p2("y4", e_p, t ** 3),
        _p2("y5", e_p, t ** 5), _p2("y6", e_r), _p2("y7", e_r, t ** 2), _p2("y8", e_r, t ** 3),
        _p2("y9", 128 * f1 ** 3 + 224 * f1 ** 2 + 92 * f1 + 15), _m_out_bound(f1),
    ])


# registry -------------------------------------------------------------

@dataclass(frozen=True)
class SingleFoldRelation:
    rel_id: str
    arity: int
    quantified: int
    has_output: bool
    parts: Callable = field(repr=False)
    witness_fn: Callable = field(repr=False)
    bounds_fn: Callable = field(repr=False)
    summary: str = ""

    def build(self, inputs, base, output=None, dialect=B.CORRECTED) -> ExpoPoly:
        return B.sum_squares(self.build_parts(inputs, base, output, dialect))

    def build_parts(self, inputs, base, output=None, dialect=B.CORRECTED) -> list:
        _check_slots(self, inputs, base, output)
        args = [x(i) if isinstance(i, int) else i for i in inputs]
        if self.rel_id == "m4_0":
            args = list(inputs)
        if self.has_output:
            out = x(output) if isinstance(output, int) else output
            return self.parts(args, base, out, dialect)
        return self.parts(args, base, None, dialect)


def _check_slots(rel, inputs, base, output):
    if len(inputs) != rel.arity:
        raise SlotCollision(f"{rel.rel_id} takes {rel.arity} inputs, got {len(inputs)}")
    if rel.has_output and output is None:
        raise SlotCollision(f"{rel.rel_id} needs an output slot")
    if not rel.has_output and output is not None:
        raise SlotCollision(f"{rel.rel_id} has no output slot")
    if rel.rel_id == "m4_0" and not all(isinstance(i, int) for i in inputs):
        raise SlotCollision("the normal-form M relation needs variable slots for f1, f2, f3")
    named = [i for i in list(inputs) + [output] if isinstance(i, int)]
    if len(set(named)) != len(named):
        raise SlotCollision(f"repeated slot among {named}")
    if base < 0 or base + rel.quantified > MAX_VAR:
        raise SlotCollision(f"quantified block {base + 1}..{base + rel.quantified} out of range")
    block = set(range(base + 1, base + rel.quantified + 1))
    hit = sorted(block.intersection(named))
    if hit:
        raise SlotCollision(f"slots {hit} fall inside the quantified block")


def _p2args(fn):
    def parts(args, base, out, dialect):
        if out is None:
            return fn(args[0], base, args[1], dialect)
        if len(args) == 1:
            return fn(args[0], base, out, dialect)
        return fn(args[0], args[1], base, out, dialect)
    return parts


def _m4_0_parts(args, base, out, dialect):
    num, den = m4_normal_form(tuple(args))
    return [out * den - num]


def _m4_9_parts(args, base, out, dialect):
    return B.e_m4_9_parts(*args, base, out, dialect)


RELATIONS = {r.rel_id: r for r in [
    SingleFoldRelation("div", 2, 2, True, _p2args(B.e_div_parts), _w_div, _b_div,
                       "x3 = floor(x1 / x2)"),
    SingleFoldRelation("mod", 2, 2, True, _p2args(B.e_mod_parts), _w_mod, _b_mod,
                       "x3 = x1 mod x2"),
    SingleFoldRelation("divides", 2, 1, False, _p2args(B.e_divides_parts), _w_divides,
                       _b_divides, "x2 divides x1"),
    SingleFoldRelation("notdivides", 2, 3, False, _p2args(B.e_notdivides_parts),
                       _w_notdivides, _b_notdivides, "x2 does not divide x1"),
    SingleFoldRelation("nu2", 1, 4, True, _p2args(B.e_nu_parts), _w_nu, _b_nu,
                       "x2 = 2-adic valuation of x1"),
    SingleFoldRelation("exp", 2, 4, True, _p2args(B.e_exp_parts), _w_exp, _b_exp,
                       "x3 = x1^x2"),
    SingleFoldRelation("binom12", 2, 12, True, _p2args(B.e_binom12_parts), _w_binom12,
                       _b_binom12, "x3 = C(x1, x2), twelve quantified variables"),
    SingleFoldRelation("binom7", 2, 7, True, _p2args(B.e_binom7_parts), _w_binom7,
                       _b_binom7, "x3 = C(x1, x2), seven quantified variables"),
    SingleFoldRelation("factorial", 1, 13, True, _p2args(B.e_fact_parts), _w_fact, _b_fact,
                       "x2 = x1!"),
    SingleFoldRelation("hw", 1, 12, True, _p2args(B.e_hw_parts), _w_hw, _b_hw,
                       "x2 = Hamming weight of x1"),
    SingleFoldRelation("m4_0", 3, 0, True, _m4_0_parts, _w_m4_0, _b_m4_0,
                       "x4 = M(4 x1), normal form, given x2 = x1^2, x3 = x1^3"),
    SingleFoldRelation("m4_9", 4, 9, True, _m4_9_parts, _w_m4_9, _b_m4_9,
                       "x5 = M(4 x1), given x2 = x1^2, x3 = x1^3, x4 = 4 x1 + 1"),
]}

LOW_ARITY = ("div", "mod", "divides", "notdivides", "nu2")
COMPOSITE = ("binom7", "factorial", "hw", "m4_9")


def get_relation(rel_id: str) -> SingleFoldRelation:
    try:
        return RELATIONS[rel_id]
    except KeyError:
        raise ValueError(f"unknown relation {rel_id!r}; choose from {', '.join(RELATIONS)}") from None


def build_relation(rel_id, inputs, base, output=None, dialect=B.CORRECTED) -> ExpoPoly:
    """Sum of squares for ``rel_id`` with inputs and output at the given slots.

    Slots are variable indices; ordinary inputs may also be ExpoPolys.
    """
    return get_relation(rel_id).build(inputs, base, output, dialect)


def standard_layout(rel_id: str) -> dict:
    """Inputs at x1.., the output right after them, quantified block last."""
    r = get_relation(rel_id)
    ins = tuple(range(1, r.arity + 1))
    out = r.arity + 1 if r.has_output else None
    return {"inputs": ins, "output": out, "base": r.arity + (1 if r.has_output else 0)}


def standard_instance(rel_id: str, dialect=B.CORRECTED):
    """(parts, layout) of the relation in its standard layout."""
    lay = standard_layout(rel_id)
    parts = get_relation(rel_id).build_parts(lay["inputs"], lay["base"], lay["output"], dialect)
    return parts, lay


def witness(rel_id: str, inputs, max_bits: int = DEFAULT_MAX_BITS) -> Witness:
    r = get_relation(rel_id)
    inputs = tuple(int(v) for v in inputs)
    if len(inputs) != r.arity:
        raise ValueError(f"{rel_id} takes {r.arity} inputs")
    if any(v < 0 for v in inputs):
        raise NoWitness("inputs must be natural numbers")
    out, ys = r.witness_fn(*inputs, max_bits)
    return Witness(rel_id, inputs, out, tuple(ys))


def bounds(rel_id: str, inputs) -> dict:
    r = get_relation(rel_id)
    return r.bounds_fn(*(int(v) for v in inputs))


def within_bounds(w: Witness) -> bool:
    bs = bounds(w.rel_id, w.inputs)
    vals = {f"y{k}": v for k, v in enumerate(w.values, start=1)}
    if w.output is not None:
        vals["out"] = w.output
    return all(bs[name].holds(v) for name, v in vals.items() if name in bs)


def evaluate_witness(w: Witness, dialect=B.CORRECTED) -> int:
    """Value of the relation's polynomial at the witness (0 when valid)."""
    parts, lay = standard_instance(w.rel_id, dialect)
    assign = w.assignment(lay)
    return sum(p.evaluate(assign) ** 2 for p in parts)


def solutions_within_bounds(rel_id: str, inputs, max_count: int = 2) -> list:
    """All (output, quantified values) inside the bounds, by backtracking.

    Each part of the relation is tested as soon as its variables are
    assigned, so the search stays small for the low-arity relations.
    """
    parts, lay = standard_instance(rel_id)
    bs = bounds(rel_id, inputs)
    order = []
    if lay["output"] is not None:
        order.append((lay["output"], bs["out"].limit()))
    for k in range(1, get_relation(rel_id).quantified + 1):
        order.append((lay["base"] + k, bs[f"y{k}"].limit()))
    assign = dict(zip(lay["inputs"], inputs))
    pvars = [p.variables() for p in parts]
    ready = []
    done = set(lay["inputs"])
    for idx, _ in order:
        done.add(idx)
        ready.append([p for p, vs in zip(parts, pvars) if idx in vs and vs <= done])
    found = []

    def walk(level):
        if len(found) >= max_count:
            return
        if level == len(order):
            out = assign.get(lay["output"]) if lay["output"] is not None else None
            ys = tuple(assign[lay["base"] + k] for k in range(1, len(order) - (out is not None) + 1))
            found.append((out, ys))
            return
        idx, lim = order[level]
        for v in range(lim):
            assign[idx] = v
            if all(p.evaluate(assign) == 0 for p in ready[level]):
                walk(level + 1)
        assign.pop(idx, None)

    walk(0)
    return found


def oracle_value(rel_id: str, inputs):
    """Expected output (or truth value for predicates) from the oracles."""
    a = inputs
    table = {
        "div": lambda: a[0] // a[1] if a[1] else None,
        "mod": lambda: a[0] % a[1] if a[1] else None,
        "divides": lambda: (a[0] == 0) if a[1] == 0 else a[0] % a[1] == 0,
        "notdivides": lambda: a[1] >= 2 and a[0] % a[1] != 0,
        "nu2": lambda: oracle.nu2(a[0]) if a[0] else None,
        "exp": lambda: a[0] ** a[1],
        "binom12": lambda: oracle.binom(a[0], a[1]),
        "binom7": lambda: oracle.binom(a[0], a[1]),
        "factorial": lambda: oracle.factorial(a[0]),
        "hw": lambda: oracle.hw(a[0]),
        "m4_0": lambda: int(hypercube.build_M(4 * a[0], "explicit")),
        "m4_9": lambda: int(hypercube.build_M(4 * a[0], "explicit")),
    }
    return table[rel_id]()

"""Verification suites, one per acceptance criterion.

Each suite compares the term pipeline against the oracles or against values
frozen below, and reports ``(ok, detail)``. ``run_suite`` adds timing and
checks the suite's time limit.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import hypercube as H
from . import numtheory as NT
from . import oracle as O
from . import primes as P
from .errors import BitLimitExceeded, ExactDivisionViolated, NoWitness
from .expoly import builders as B
from .expoly import registry as R
from .expoly.build import build_F, fhat_parts
from .expoly.plan import K, qhat_plan, t_term, u_term
from .expoly.poly import ExpoMonomial, ExpoPoly, LinForm, expand_stats
from .term import parse_term

# the first 25 primes
PRIMES_25 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
             73, 79, 83, 89, 97)

# (latex as printed in the published listing, structured monomial)
FHAT_SAMPLES = (
    ("-2^{184 x_{2} + 288 x_{3} + 128 x_{4} + 35} x_{2}^{2} x_{23}^{3} x_{29}",
     ExpoMonomial(-1, LinForm(35, 0, ((2, 184), (3, 288), (4, 128))), ((2, 2), (23, 3), (29, 1)))),
    ("+ 2^{2 x_{10} + x_{13} + 5} x_{15}",
     ExpoMonomial(1, LinForm(5, 0, ((10, 2), (13, 1))), ((15, 1),))),
    ("+ 25 \\cdot 2^{2 n}", ExpoMonomial(25, LinForm(0, 2), ())),
    ("-2^{x_{33} + 4 x_{6} + 5} x_{34}^{2}",
     ExpoMonomial(-1, LinForm(5, 0, ((6, 4), (33, 1))), ((34, 2),))),
    ("+ 5 \\cdot 2^{n + 2} x_{2} x_{5}^{2}", ExpoMonomial(5, LinForm(2, 1), ((2, 1), (5, 2)))),
    ("+ x_{22}^{10} x_{26}^{2}", ExpoMonomial(1, LinForm(), ((22, 10), (26, 2)))),
    ("+ 2^{n + 1} x_{2}^{2} x_{5}^{2}", ExpoMonomial(1, LinForm(1, 1), ((2, 2), (5, 2)))),
    ("+ 2199023255487 \\cdot 2^{72 x_{2} + 32 x_{3} + 44} x_{2}",
     ExpoMonomial(2199023255487, LinForm(44, 0, ((2, 72), (3, 32))), ((2, 1),))),
    ("-3 \\cdot 2^{56 x_{2} + 32 x_{3} + 25} x_{2} x_{22}^{5} x_{26}",
     ExpoMonomial(-3, LinForm(25, 0, ((2, 56), (3, 32))), ((2, 1), (22, 5), (26, 1)))),
    ("+ 2 x_{41} x_{42}", ExpoMonomial(2, LinForm(), ((41, 1), (42, 1)))),
)


@dataclass
class SuiteResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float
    limit: float

    @property
    def passed(self) -> bool:
        return self.ok and self.seconds < self.limit

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = "" if self.seconds < self.limit else f" (over the {self.limit:g} s limit)"
        return f"[{status}] {self.number:2d} {self.name}: {self.detail} [{self.seconds:.2f} s]{extra}"


def _mismatch(label, bad, total):
    if not bad:
        return True, f"{label}: {total} cases agree"
    return False, f"{label}: {len(bad)} of {total} disagree, first {bad[:3]}"


# 1 ----------------------------------------------------------------------------
def suite_binomial():
    bad, total = [], 0
    for a in range(61):
        for b in range(a + 1):
            total += 1
            want = O.binom(a, b)
            got = {v: NT.binom_term(v, a, b) for v in NT.BINOM_VARIANTS}
            for v, g in got.items():
                if g != want:
                    bad.append((v, a, b, g, want))
    if NT.binom_term("divmod", 7, 3) != 35:
        bad.append(("divmod", 7, 3, NT.binom_term("divmod", 7, 3), 35))
    return _mismatch("three binomial terms vs Pascal, 0 <= b <= a <= 60", bad, total)


# 2 ----------------------------------------------------------------------------
def suite_padovan():
    bad = []
    for d in range(3, 13):
        s = NT.padovan_seq(d, d * d)
        rows = [s[r * d:(r + 1) * d] for r in range(d)]
        for r in range(d):
            want = [0] * (d - 1 - r) + [O.binom(r, j) for j in range(r + 1)]
            got = rows[r]
            if r == d - 1:
                # the last cell is where the two sides of the triangle meet
                want, got = want[:-1], got[:-1]
            if got != want:
                bad.append((d, r))
        if any(s[n] != O.padovan(d, n) for n in range(d * d)):
            bad.append((d, "oracle"))
    s8 = NT.padovan_seq(8, 64)
    if s8[63] != 2:
        bad.append(("s_8(63)", s8[63]))
    return _mismatch("Pascal rows in s_d for d in [3, 12], s_8(63) = 2", bad, 10)


# 3 ----------------------------------------------------------------------------
def suite_gsums():
    bad, total = [], 0
    try:
        for q in (2, 3, 5, 16):
            for t in range(1, 65):
                for r in range(0, H.MAX_RECURRENCE_DEGREE + 1):
                    total += 1
                    direct = H.geom_sum(r, q, t, "direct")
                    if H.geom_sum(r, q, t, "recurrence") != direct:
                        bad.append(("recurrence", r, q, t))
                    if r in H.CLOSED_DEGREES and H.geom_sum(r, q, t, "closed") != direct:
                        bad.append(("closed", r, q, t))
    except ExactDivisionViolated as e:
        return False, f"inexact division: {e}"
    return _mismatch("closed, recurrence and direct G sums", bad, total)


# 4 ----------------------------------------------------------------------------
def toy_instances(count: int = 24, seed: int = 20240611):
    S = H.SimpleMonomial
    out = [
        H.square_instance([S(1, (1,)), S(-1, (0,))], 1, 2, 4),
        H.square_instance([S(1, (2, 0)), S(-4, (0, 1)), S(-1, (0, 0))], 2, 4, 9),
        H.square_instance([S(1, (1, 0)), S(-1, (0, 1))], 2, 4),
        H.square_instance([S(1, (2,)), S(1, (0,))], 1, 5),
    ]
    rng = random.Random(seed)
    while len(out) < count:
        k = rng.choice((1, 2))
        t = rng.randint(1, 8)
        root = []
        for _ in range(rng.randint(1, 3)):
            degs = tuple(rng.randint(0, 2) for _ in range(k))
            bases = tuple(rng.choice((1, 1, 2, 3)) for _ in range(k))
            root.append(S(rng.randint(-4, 4) or 1, degs, bases))
        out.append(H.square_instance(root, k, t))
    return out


def suite_hypercube():
    from ._bigint import popcount
    bad = []
    insts = toy_instances()
    for i, inst in enumerate(insts):
        w = H.assemble_W(inst)
        if w != H.assemble_W(inst, "direct"):
            bad.append((i, "W"))
        elif popcount(w) % inst.u:
            bad.append((i, "HW"))
        elif H.zeros_from_W(w, inst.u, inst.t, inst.k) != H.scan_zeros(inst):
            bad.append((i, "zeros"))
    return _mismatch("toy instances, contributions vs direct W and scan", bad, len(insts))


# 5 ----------------------------------------------------------------------------
def suite_m_dual():
    bad = [n for n in range(65) if H.build_M(n) != H.build_M(n, "explicit")]
    bad += [("normal form", n) for n in range(9) if not H.normalized_M_check(n)]
    return _mismatch("M assembled vs explicit n <= 64, L/D check n <= 8", bad, 65 + 9)


# 6 ----------------------------------------------------------------------------
def suite_sqrt_unity():
    bad = [n for n in range(65) if P.sqrt_unity_count(n) != O.sqrt_unity_scan(n)]
    fixed = {0: 0, 1: 1, 4: 2, 8: 4}
    bad += [(n, v) for n, v in fixed.items() if P.sqrt_unity_count(n) != v]
    return _mismatch("square roots of unity, term vs scan, n <= 64", bad, 65)


# 7 ----------------------------------------------------------------------------
def suite_omega(stretch: bool = False):
    top = 128 if stretch else 32
    bad = [n for n in range(1, top + 1) if P.omega(n) != O.omega(n)]
    return _mismatch(f"omega term vs factorization, n <= {top}", bad, top)


# 8 ----------------------------------------------------------------------------
def suite_pi(include_five: bool = False):
    top = 5 if include_five else 4
    bad = [n for n in range(top + 1) if P.prime_pi(n) != O.pi(n)]
    return _mismatch(f"pi term vs sieve, n <= {top}", bad, top + 1)


# 9 ----------------------------------------------------------------------------
def suite_nth_prime():
    bad = [(n, "hypercube") for n in (1, 2) if P.nth_prime(n, "hypercube") != PRIMES_25[n - 1]]
    bad += [n for n in range(1, 26) if P.nth_prime(n) != PRIMES_25[n - 1]]
    return _mismatch("p(n), hypercube n <= 2 and oracle n <= 25", bad, 27)


# 10 ---------------------------------------------------------------------------
def suite_next_prime():
    top = 10 ** 4
    ps = O.primes_upto(top + 200)
    bad, j = [], 0
    for xv in range(top + 1):
        while ps[j] <= xv:
            j += 1
        if P.next_prime(xv) != ps[j]:
            bad.append(xv)
    if P.prime_sequence(2, 15) != list(PRIMES_25[:15]):
        bad.append("15-step sequence")
    return _mismatch("T(x) for x <= 10^4 and the 15-step sequence", bad, top + 2)


# 11 ---------------------------------------------------------------------------
def suite_fhat():
    F = build_F("Fhat42")
    mons, nvars, _, _ = expand_stats(F)
    have = set(F.monomials())
    from .expoly.emit import latex_monomial
    missing = [s for s, m in FHAT_SAMPLES if m not in have or latex_monomial(m) != s]
    ok = mons == 498 and nvars == 42 and F.constant_term() == 270 and not missing
    return ok, (f"{mons} monomials, {nvars} variables, constant {F.constant_term()}, "
                f"{len(FHAT_SAMPLES) - len(missing)}/{len(FHAT_SAMPLES)} listed monomials found")


# 12 ---------------------------------------------------------------------------
def _fhat_roots():
    """Unsquared roots of every square in the 42-variable equation."""
    from .expoly.poly import pow2, x
    a, f1, f2, f3, f4, m, b, d = (x(i) for i in range(1, 9))
    D = B.LISTING
    return (B.e_fact_parts(a, 8, f1, D) + [f2 - f1 ** 2, f3 - f1 * f2, f4 - (4 * f1 + 1)]
            + B.e_m4_9_parts(f1, f2, f3, f4, 21, m, D) + B.e_hw_parts(m, 30, b, D)
            + [b + (f1 + 5) * (-(f4 ** 2) + d - pow2(LinForm(n=1)))])


def suite_structure(samples: int = 12, seed: int = 7):
    F = build_F("Fhat42")
    total = ExpoPoly()
    for part in fhat_parts(B.LISTING):
        total = total + part
    via_registry = (R.build_relation("factorial", [1], 8, 2, B.LISTING)
                    + R.build_relation("hw", [6], 30, 7, B.LISTING))
    parts = fhat_parts(B.LISTING)
    ok = F == total and via_registry == parts[0] + parts[5]
    roots = _fhat_roots()
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        assign = {i: rng.randint(0, 3) for i in range(1, K + 1)}
        n = rng.randint(0, 4)
        want = sum(r.evaluate(assign, n) ** 2 for r in roots)
        if F.evaluate(assign, n) != want:
            bad.append(assign)
    ok = ok and not bad
    return ok, (f"sum of {len(fhat_parts())} squares equals the expansion; "
                f"{samples - len(bad)}/{samples} numeric samples match the unexpanded squares")


# 13 ---------------------------------------------------------------------------
TINY_GRIDS = {
    "div": [(a, b) for a in range(9) for b in range(9)],
    "mod": [(a, b) for a in range(9) for b in range(9)],
    "divides": [(a, b) for a in range(9) for b in range(9)],
    "notdivides": [(a, b) for a in range(9) for b in range(9)],
    "nu2": [(a,) for a in range(9)],
    "exp": [(a, b) for a in range(5) for b in range(5)],
    "binom12": [(a, b) for a in range(6) for b in range(a + 1)],
    "binom7": [(a, b) for a in range(7) for b in range(a + 1)],
    "factorial": [(0,), (1,)],
    "hw": [(a,) for a in range(9)],
    "m4_0": [(f, f * f, f ** 3) for f in range(4)],
    "m4_9": [(f, f * f, f ** 3, 4 * f + 1) for f in range(4)],
}


def perturbation_breaks(w: R.Witness) -> bool:
    parts, lay = R.standard_instance(w.rel_id)
    base = w.assignment(lay)
    keys = [k for k in base if k not in lay["inputs"]]
    for k in keys:
        for step in (1, -1):
            if base[k] + step < 0:
                continue
            moved = dict(base)
            moved[k] += step
            if all(p.evaluate(moved) == 0 for p in parts):
                return False
    return True


def suite_single_fold():
    bad, checked = [], 0
    for rid, grid in TINY_GRIDS.items():
        for inp in grid:
            checked += 1
            try:
                w = R.witness(rid, inp)
            except NoWitness:
                # only a false low-arity relation may lack a witness
                if rid not in R.LOW_ARITY or R.solutions_within_bounds(rid, inp, 1):
                    bad.append((rid, inp, "no witness"))
                continue
            if R.evaluate_witness(w) != 0:
                bad.append((rid, inp, "nonzero"))
            if not R.within_bounds(w):
                bad.append((rid, inp, "bounds"))
            if rid in R.LOW_ARITY:
                sols = R.solutions_within_bounds(rid, inp)
                if sols != [(w.output, w.values)]:
                    bad.append((rid, inp, "not unique", sols))
            if rid in R.COMPOSITE and not perturbation_breaks(w):
                bad.append((rid, inp, "perturbation"))
    try:
        R.witness("factorial", (2,))
        bad.append(("factorial", (2,), "expected a bit-limit refusal"))
    except BitLimitExceeded:
        pass
    return _mismatch(f"{len(TINY_GRIDS)} relations on tiny inputs", bad, checked)


# 14 ---------------------------------------------------------------------------
def suite_factorial():
    bad = []
    for n in range(4):
        if NT.factorial_term("prunescu_sauras", n) != O.factorial(n):
            bad.append(("prunescu_sauras", n))
    for n in range(2):
        if NT.factorial_term("newterm", n) != O.factorial(n):
            bad.append(("newterm", n))
    for n in range(9):
        if NT.factorial_identity(n, (n + 1) ** (n + 2)) != O.factorial(n):
            bad.append(("identity", n))
    case = lambda n: n + 1 if O.is_prime(n + 1) else 2
    bad += [("prime_or_two", n) for n in range(201) if NT.prime_or_two(n, "oracle") != case(n)]
    bad += [("prime_or_two term", n) for n in range(4) if NT.prime_or_two(n, "term") != case(n)]
    return _mismatch("factorial terms, identity and prime_or_two", bad, 4 + 2 + 9 + 201 + 4)


# 15 ---------------------------------------------------------------------------
def suite_plan():
    plan = qhat_plan()
    c = plan.counts()
    factors_ok = all(len(d.factors) == K for d in plan.descriptors if d.kind == "A")
    t1_ok = t_term(1) == parse_term("2^(2^(2^18))")
    u_ok = u_term() == parse_term("2^(2^(9 * 2^(2^(2^(2*n^4 + 16))) + 8) + 9)")
    ok = c == {"descriptors": 498, "C": 1, "A": 497} and factors_ok and t1_ok and u_ok
    return ok, (f"{c['descriptors']} descriptors = {c['C']} C + {c['A']} A, "
                f"{K} G factors each: {factors_ok}; t(1) tower: {t1_ok}; u shape: {u_ok}")


SUITES = {
    1: ("binomial", suite_binomial, 10),
    2: ("padovan", suite_padovan, 1),
    3: ("gsums", suite_gsums, 5),
    4: ("hypercube", suite_hypercube, 10),
    5: ("m-dual", suite_m_dual, 60),
    6: ("sqrt-unity", suite_sqrt_unity, 30),
    7: ("omega", suite_omega, 60),
    8: ("pi", suite_pi, 120),
    9: ("nth-prime", suite_nth_prime, 30),
    10: ("next-prime", suite_next_prime, 10),
    11: ("fhat", suite_fhat, 30),
    12: ("structure", suite_structure, 30),
    13: ("single-fold", suite_single_fold, 120),
    14: ("factorial", suite_factorial, 30),
    15: ("plan", suite_plan, 5),
}

# criteria the implementation is known to fail, with the reason
KNOWN_FAILURES = {
    1: "the Robinson term gives 0 at a = b = 0 because its modulus 2^a is 1",
}


def resolve(selector: str) -> list:
    if selector == "all":
        return sorted(SUITES)
    if selector.isdigit() and int(selector) in SUITES:
        return [int(selector)]
    for num, (name, _, _) in SUITES.items():
        if name == selector:
            return [num]
    raise KeyError(selector)


def run_suite(number: int, **options) -> SuiteResult:
    name, fn, limit = SUITES[number]
    start = time.perf_counter()
    try:
        ok, detail = fn(**options)
    except Exception as e:  # a crash is a failed criterion, reported as such
        ok, detail = False, f"{type(e).__name__}: {e}"
    seconds = time.perf_counter() - start
    if not ok and number in KNOWN_FAILURES:
        detail += f" (known: {KNOWN_FAILURES[number]})"
    return SuiteResult(number, name, ok, detail, seconds, limit)

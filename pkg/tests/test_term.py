import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from primeterm import (BitLimitExceeded, DomainError, EvalConfig, TermSyntaxError,
                       UnboundVariable, eval_term, format_term, parse_term)
from primeterm.term import (Add, Const, FloorDiv, Mod, Monus, Mul, Pow, Sub, Var,
                            call, free_vars, monus, size)


def ev(text, **env):
    return eval_term(parse_term(text), env)


def test_power_parses_to_pow_node():
    t = parse_term("2^3")
    assert t == Pow(Const(2), Const(3))
    assert eval_term(t) == 8


@pytest.mark.parametrize("text,value", [
    ("10/4", 2), ("monus(3,5)", 0), ("monus(5,3)", 2), ("7 % 3", 1),
    ("2^3^2", 512), ("(2^3)^2", 64), ("1 + 2 * 3", 7), ("10 - 2 - 3", 5),
    ("100 / 10 / 5", 2), ("0^0", 1), ("3 - 5", -2),
])
def test_small_values(text, value):
    assert ev(text) == value


def test_format_examples():
    assert format_term(Pow(Const(2), Var("n"))) == "2^n"
    assert format_term(Mod(Var("a"), Var("b"))) == "a % b"
    assert format_term(monus(Var("a"), 1)) == "monus(a, 1)"


def test_latex_style():
    t = parse_term("(a / b) % c")
    out = format_term(t, "latex")
    assert r"\lfloor" in out and r"\bmod" in out


def test_mazzanti_gcd_text_evaluates():
    from primeterm.numtheory import gcd_expr
    text = format_term(gcd_expr(Var("a"), Var("b"), "mazzanti"))
    assert ev(text, a=6, b=4) == 2


def test_bit_budget_refuses_tower():
    with pytest.raises(BitLimitExceeded) as e:
        ev("2^(2^40)")
    assert e.value.required_bits > EvalConfig().max_bits


def test_budget_is_configurable():
    t = parse_term("2^100")
    with pytest.raises(BitLimitExceeded):
        eval_term(t, {}, EvalConfig(max_bits=64))
    assert eval_term(t, {}, EvalConfig(max_bits=128)) == 1 << 100


def test_config_minimum():
    with pytest.raises(DomainError):
        EvalConfig(max_bits=63)
    assert EvalConfig().max_bits == 1 << 33 and EvalConfig().semantic_shortcuts


@pytest.mark.parametrize("text,offset", [("1 +", 3), ("(1", 2), ("1 $ 2", 2), ("", 0),
                                         ("monus(1 2)", 8)])
def test_syntax_error_offsets(text, offset):
    with pytest.raises(TermSyntaxError) as e:
        parse_term(text)
    assert e.value.offset == offset


@pytest.mark.parametrize("text", ["1 / 0", "1 % 0", "2 ^ (0 - 1)", "5 / (0 - 2)"])
def test_domain_errors(text):
    with pytest.raises(DomainError):
        ev(text)


def test_unbound_variable():
    with pytest.raises(UnboundVariable) as e:
        ev("x + 1")
    assert e.value.name == "x"


def test_free_vars_and_size():
    t = parse_term("x * (y + x) % 3")
    assert free_vars(t) == {"x", "y"}
    assert size(t) == 7


def test_calls_semantic_and_literal():
    t = parse_term("gcd(12, 18) + nu2(40) + hw(7)")
    assert eval_term(t) == 6 + 3 + 3
    lit = EvalConfig(semantic_shortcuts=False)
    assert eval_term(parse_term("gcd(6, 4)"), {}, lit) == 2
    assert eval_term(parse_term("nu2(8)"), {}, lit) == 3


def test_operator_overloads_build_trees():
    n = Var("n")
    assert 2 ** n % (n + 1) == Mod(Pow(Const(2), n), Add(n, Const(1)))
    assert eval_term(call("hw", 255)) == 8


# properties ------------------------------------------------------------------

def random_tree(rng, depth):
    if depth == 0 or rng.random() < 0.25:
        if rng.random() < 0.5:
            return Const(rng.randint(0, 50))
        return Var(rng.choice(["a", "b", "n", "x_1"]))
    kind = rng.choice([Add, Sub, Mul, FloorDiv, Mod, Pow, Monus])
    return kind(random_tree(rng, depth - 1), random_tree(rng, depth - 1))


def test_round_trip_1000_random_trees():
    rng = random.Random(1234)
    for _ in range(1000):
        t = random_tree(rng, rng.randint(0, 8))
        text = format_term(t)
        assert parse_term(text) == t
        assert format_term(parse_term(text)) == text


@given(st.integers(-10 ** 30, 10 ** 30), st.integers(1, 10 ** 12))
def test_mod_floor_identity(a, b):
    env = {"a": a, "b": b}
    q = eval_term(parse_term("a / b"), env)
    r = eval_term(parse_term("a % b"), env)
    assert 0 <= r < b
    assert a == b * q + r


def test_monus_grid():
    t = parse_term("monus(a, b)")
    for a in range(50):
        for b in range(50):
            want = a - b if a >= b else 0
            assert eval_term(t, {"a": a, "b": b}) == want


@given(st.integers(0, 40), st.integers(0, 40), st.integers(1, 40))
def test_evaluation_is_deterministic(a, b, c):
    t = parse_term("(a^b + monus(b, a)) % c + a * b / c")
    first = eval_term(t, {"a": a, "b": b, "c": c})
    assert all(eval_term(t, {"a": a, "b": b, "c": c}) == first for _ in range(3))
    assert first == (a ** b + max(b - a, 0)) % c + a * b // c


@given(st.integers(0, 10 ** 6), st.integers(0, 60), st.integers(1, 10 ** 6))
def test_power_mod_shortcut_matches_pow(b, e, m):
    assert ev("b^e % m", b=b, e=e, m=m) == pow(b, e, m)


def test_sub_node_allows_signed_intermediates():
    assert eval_term(Sub(Const(3), Mul(Const(2), Const(5)))) == -7

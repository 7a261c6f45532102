import pytest

from primeterm.errors import BitLimitExceeded, NoWitness, SlotCollision
from primeterm.expoly import registry as R
from primeterm.term import format_term, parse_term
from primeterm.verify import TINY_GRIDS, perturbation_breaks

COUNTS = {"div": 2, "mod": 2, "divides": 1, "notdivides": 3, "nu2": 4, "exp": 4,
          "binom12": 12, "binom7": 7, "factorial": 13, "hw": 12, "m4_0": 0, "m4_9": 9}


@pytest.mark.parametrize("rel_id,count", sorted(COUNTS.items()))
def test_quantified_counts(rel_id, count):
    r = R.get_relation(rel_id)
    assert r.quantified == count
    parts, lay = R.standard_instance(rel_id)
    used = set().union(*(p.variables() for p in parts))
    block = set(range(lay["base"] + 1, lay["base"] + count + 1))
    assert block <= used
    assert max(used) <= lay["base"] + count


def test_div_witness():
    w = R.witness("div", (7, 3))
    assert (w.output, w.values) == (2, (1, 1))
    assert R.evaluate_witness(w) == 0


def test_nu2_witness():
    w = R.witness("nu2", (12,))
    assert w.output == 2
    assert R.evaluate_witness(w) == 0


def test_divides_refuses():
    with pytest.raises(NoWitness):
        R.witness("divides", (7, 3))


def test_div_bounds():
    assert {k: str(v) for k, v in R.bounds("div", (7, 3)).items()} == \
        {"y1": "y1 < 3", "y2": "y2 < 3", "out": "out <= 7"}


def test_binom7_bound():
    assert R.bounds("binom7", (2, 1))["y1"].value() == 28 * 8 + 9


def test_global_bound_is_symbolic():
    t = R.global_bound(1)
    assert t == parse_term("2^(2^(2^18))")
    assert format_term(t) == "2^2^2^18"


def test_bound_too_large_to_materialize():
    b = R.Bound("y", 1, 1 << 40)
    with pytest.raises(BitLimitExceeded):
        b.value()
    assert b.holds(12345)
    assert not b.holds(-1)


def test_slot_collisions():
    with pytest.raises(SlotCollision):
        R.build_relation("div", [1, 1], 3, 2)
    with pytest.raises(SlotCollision):
        R.build_relation("div", [1, 2], 2, 3)
    with pytest.raises(SlotCollision):
        R.build_relation("divides", [1, 2], 2, 3)
    with pytest.raises(SlotCollision):
        R.build_relation("div", [1, 2], 3)


def test_unknown_relation():
    with pytest.raises(ValueError):
        R.get_relation("sqrt")


def test_relocated_build_matches_standard():
    std = R.build_relation("div", [1, 2], 3, 6)
    moved = R.build_relation("div", [10, 11], 20, 12)
    assert moved == std.relabel({1: 10, 2: 11, 6: 12, 4: 21, 5: 22})


# the twelve-variable binomial reads C(a, b) modulo 2^a, which is 1 at a = 0
MODULUS_COLLAPSE = {("binom12", (0, 0))}

CASES = [pytest.param(rid, inp, id=f"{rid}{inp}")
         for rid, grid in TINY_GRIDS.items() for inp in grid
         if (rid, inp) not in MODULUS_COLLAPSE]


@pytest.mark.parametrize("rid,inp", CASES)
def test_witness_valid_or_relation_false(rid, inp):
    try:
        w = R.witness(rid, inp)
    except NoWitness:
        assert rid in R.LOW_ARITY
        assert R.oracle_value(rid, inp) in (None, False)
        assert R.solutions_within_bounds(rid, inp, 1) == []
        return
    assert R.evaluate_witness(w) == 0
    assert R.within_bounds(w)
    want = R.oracle_value(rid, inp)
    if w.output is not None:
        assert w.output == want
    else:
        assert want is True


def test_binom12_at_zero_outputs_zero():
    w = R.witness("binom12", (0, 0))
    assert w.output == 0
    assert R.evaluate_witness(w) == 0
    assert R.within_bounds(w)


@pytest.mark.parametrize("rid", R.LOW_ARITY)
def test_low_arity_uniqueness(rid):
    for inp in TINY_GRIDS[rid]:
        sols = R.solutions_within_bounds(rid, inp)
        try:
            w = R.witness(rid, inp)
        except NoWitness:
            assert sols == []
            continue
        assert sols == [(w.output, w.values)]


@pytest.mark.parametrize("rid", R.COMPOSITE)
def test_perturbation(rid):
    for inp in TINY_GRIDS[rid][:4]:
        assert perturbation_breaks(R.witness(rid, inp))


def test_factorial_witness_cliff():
    with pytest.raises(BitLimitExceeded):
        R.witness("factorial", (2,))

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from primeterm import hypercube as hc
from primeterm import oracle
from primeterm.errors import DomainError, ExactDivisionViolated
from primeterm.verify import toy_instances

SM = hc.SimpleMonomial


@pytest.mark.parametrize("r,q,t,want", [(0, 2, 3, 7), (1, 2, 3, 10), (2, 3, 3, 39)])
@pytest.mark.parametrize("method", ["closed", "recurrence", "direct"])
def test_geom_sum_examples(r, q, t, want, method):
    assert hc.geom_sum(r, q, t, method) == want


def test_geom_sum_grid():
    for r in hc.CLOSED_DEGREES:
        for q in (2, 3, 5, 16):
            for t in range(1, 65):
                want = oracle.geom_sum(r, q, t)
                assert hc.geom_sum(r, q, t, "closed") == want
                assert hc.geom_sum(r, q, t, "recurrence") == want
                assert hc.geom_sum(r, q, t, "direct") == want


@pytest.mark.parametrize("r", [3, 5, 6])
def test_recurrence_beyond_closed_forms(r):
    for q in (2, 7):
        for t in range(0, 20):
            assert hc.geom_sum(r, q, t, "recurrence") == oracle.geom_sum(r, q, t)


def test_geom_sum_domain():
    with pytest.raises(DomainError):
        hc.geom_sum(3, 2, 5, "closed")
    with pytest.raises(DomainError):
        hc.geom_sum(1, 1, 5)
    with pytest.raises(DomainError):
        hc.geom_sum(7, 2, 5, "recurrence")


@pytest.mark.parametrize("a,b,want,weight", [(0, 3, 63, 6), (5, 3, 28, 3), (1, 4, 240, 4)])
def test_delta_examples(a, b, want, weight):
    d = hc.delta(a, b)
    assert d == want
    assert bin(d).count("1") == weight


def test_delta_weight_exhaustive():
    for b in range(1, 13):
        for a in range(1 << b):
            assert bin(hc.delta(a, b)).count("1") == (2 * b if a == 0 else b)


def test_delta_domain():
    with pytest.raises(DomainError):
        hc.delta(8, 3)


def test_beta_bijection():
    for t in range(1, 9):
        for k in range(1, 4):
            seen = sorted(hc.beta(p, t) for p in itertools.product(range(t), repeat=k))
            assert seen == list(range(t ** k))


def _square_minus_one():
    # (x1 - 1)^2 = x1^2 - 2 x1 + 1
    return hc.HypercubeInstance(1, 2, 4, [SM(1, (2,)), SM(-2, (1,)), SM(1, (0,))])


def test_assemble_small_instance():
    inst = _square_minus_one()
    w = hc.assemble_W(inst, "direct")
    assert hc.assemble_W(inst) == w
    assert bin(w).count("1") // 4 - 2 == 1
    assert hc.count_zeros(inst) == 1


def test_m_shape_on_four_box():
    root = [SM(1, (2, 0)), SM(-4, (0, 1)), SM(-1, (0, 0))]
    inst = hc.square_instance(root, 2, 4, 9)
    assert hc.count_zeros(inst) == hc.count_zeros(inst, "direct") == hc.scan_zeros(inst) == 2


def test_no_roots():
    inst = hc.square_instance([SM(1, (1,)), SM(1, (0,))], 1, 6)
    assert hc.count_zeros(inst) == 0


def test_diagonal():
    inst = hc.square_instance([SM(1, (1, 0)), SM(-1, (0, 1))], 2, 4)
    assert hc.count_zeros(inst) == 4


def test_contribution_free_term():
    c = hc.contribution("C", SM(1, (0, 0)), 2, 4, 2)
    assert c == ((2 ** 4 - 1 + 1) * (2 ** (2 * 4 * 4) - 1)) // (2 ** 4 + 1)
    assert hc.contribution("C", SM(0, (0, 0)), 2, 4, 2) != 0


def test_contribution_monomial_against_direct():
    inst = hc.HypercubeInstance(1, 2, 6, [SM(1, (2,))])
    free = hc.contribution("C", SM(0, (0,)), 2, 6, 1)
    a = hc.contribution("A", SM(1, (2,)), 2, 6, 1)
    assert free + a == hc.assemble_W(inst, "direct")


def test_contribution_domain():
    with pytest.raises(DomainError):
        hc.contribution("C", SM(1, (1,)), 2, 4, 1)
    with pytest.raises(DomainError):
        hc.contribution("B", SM(1, (1,)), 2, 4, 1)


def test_exponential_bases():
    # 2^x1 - x1 - 1 vanishes at 0 and 1 only
    root = [SM(1, (0,), (2,)), SM(-1, (1,)), SM(-1, (0,))]
    inst = hc.square_instance(root, 1, 6)
    assert hc.count_zeros(inst) == hc.scan_zeros(inst) == 2


@pytest.mark.parametrize("inst", toy_instances(), ids=lambda i: f"k{i.k}t{i.t}u{i.u}")
def test_toy_instances(inst):
    w = hc.assemble_W(inst)
    assert w == hc.assemble_W(inst, "direct")
    assert bin(w).count("1") % inst.u == 0
    assert hc.count_zeros(inst) == hc.scan_zeros(inst)


@pytest.mark.parametrize("g", ["closed", "recurrence", "direct"])
def test_g_methods_agree_on_toys(g):
    for inst in toy_instances(6, seed=3):
        assert hc.assemble_W(inst, g_method=g) == hc.assemble_W(inst, "direct")


def test_direct_size_limit():
    inst = hc.HypercubeInstance(2, 300, 4, [SM(1, (0, 0))])
    with pytest.raises(DomainError):
        hc.assemble_W(inst, "direct")


def test_zeros_from_w_requires_multiple():
    with pytest.raises(ExactDivisionViolated):
        hc.zeros_from_W(0b111, 2, 1, 1)


@pytest.mark.parametrize("n,want", [(4, 2), (0, 0)])
def test_build_m_examples(n, want):
    assert hc.m_zero_count(n) == want


def test_m_variants_agree():
    for n in range(65):
        assert hc.build_M(n) == hc.build_M(n, "explicit"), n


def test_m_width_suffices():
    # every value of (x1^2 - n x2 - 1)^2 on [0, n]^2 fits in n + 5 bits
    for n in range(33):
        t, u = hc.m_params(n)
        inst = hc.m_instance(n)
        assert max(inst.value(p) for p in inst.points()) < 1 << u


@pytest.mark.parametrize("n", [0, 1, 8])
def test_normalized_m(n):
    assert hc.normalized_M_check(n)


def test_m_zero_count_is_root_count_mod_n():
    for n in range(1, 40):
        want = sum(1 for a in range(n + 1) if (a * a - 1) % n == 0 and a * a >= 1
                   and (a * a - 1) // n <= n)
        assert hc.m_zero_count(n) == want


@settings(max_examples=25)
@given(st.integers(0, 3), st.integers(1, 12), st.integers(0, 3))
def test_packed_g_matches_closed(r, t, shift):
    q = 1 << (8 + shift)
    want = oracle.geom_sum(r, q, t)
    assert hc.G_METHODS["auto"](r, q, t) == want

import math

import pytest
from hypothesis import given, strategies as st

from primeterm import numtheory as nt
from primeterm import oracle
from primeterm.errors import BitLimitExceeded, DomainError
from primeterm.term import EvalConfig


@pytest.mark.parametrize("variant,a,b,want", [
    ("mazzanti", 6, 4, 2),
    ("prunescu_shunia", 20, 12, 4),
    ("mazzanti", 1, 1, 1),
])
def test_gcd_examples(variant, a, b, want):
    assert nt.gcd_term(variant, a, b) == want


@pytest.mark.xfail(strict=True, reason="one-bit digit window overflows at a=b=1")
def test_gcd_prunescu_shunia_one_one():
    assert nt.gcd_term("prunescu_shunia", 1, 1) == 1


def test_gcd_prunescu_shunia_one_one_actual_value():
    assert nt.gcd_term("prunescu_shunia", 1, 1) == -1


@pytest.mark.parametrize("variant", nt.GCD_VARIANTS)
def test_gcd_grid(variant):
    bad = [(a, b) for a in range(1, 21) for b in range(1, 21)
           if (a, b) != (1, 1) and nt.gcd_term(variant, a, b) != math.gcd(a, b)]
    assert bad == []


def test_gcd_rejects_zero():
    with pytest.raises(DomainError):
        nt.gcd_term("mazzanti", 0, 3)


def test_unknown_variant():
    with pytest.raises(DomainError):
        nt.gcd_term("euclid", 2, 3)


@pytest.mark.parametrize("n,want", [(12, 2), (1, 0), (256, 8)])
def test_nu2_examples(n, want):
    assert nt.nu2_term(n) == want


@pytest.mark.parametrize("n,want", [(5, 2), (0, 0), (255, 8)])
def test_hw_examples(n, want):
    assert nt.hw_term(n) == want


@pytest.mark.parametrize("n", range(1, 10))
def test_nu2_literal_matches_semantic(n):
    assert nt.nu2_term(n, "literal") == nt.nu2_term(n, "semantic") == oracle.nu2(n)


@pytest.mark.parametrize("n", range(0, 3))
def test_hw_literal_matches_semantic(n):
    assert nt.hw_term(n, "literal") == nt.hw_term(n, "semantic") == bin(n).count("1")


def test_hw_semantic_wide():
    assert all(nt.hw_term(n) == bin(n).count("1") for n in range(2000))


@pytest.mark.parametrize("n", [3, 7, 12])
def test_hw_literal_refuses_cleanly(n):
    with pytest.raises(BitLimitExceeded):
        nt.hw_term(n, "literal")


def test_huge_requirement_printed_as_power_of_two():
    with pytest.raises(BitLimitExceeded) as info:
        nt.hw_term(7, "literal")
    assert "about 2^3443 bits" in str(info.value)


def test_bad_mode():
    with pytest.raises(DomainError):
        nt.hw_term(3, "fast")


@pytest.mark.parametrize("x,y,want", [(3, 4, 81), (7, 0, 1), (0, 0, 1)])
def test_pow_examples(x, y, want):
    assert nt.pow_term(x, y) == want


def test_pow_grid():
    assert all(nt.pow_term(x, y) == x ** y for x in range(9) for y in range(9) if (x, y) != (0, 0))


@pytest.mark.parametrize("variant,a,b,want", [
    ("divmod", 7, 3, 35),
    ("robinson", 60, 30, math.comb(60, 30)),
])
def test_binom_examples(variant, a, b, want):
    assert nt.binom_term(variant, a, b) == want


def test_binom_modmod_b_zero():
    assert all(nt.binom_term("modmod", a, 0) == 1 for a in range(61))


def test_binom_rejects_b_above_a():
    for variant in nt.BINOM_VARIANTS:
        with pytest.raises(DomainError):
            nt.binom_term(variant, 3, 4)


def test_binom_three_variants_agree():
    bad = []
    for a in range(1, 25):
        for b in range(a + 1):
            vals = {nt.binom_term(v, a, b) for v in nt.BINOM_VARIANTS}
            if vals != {math.comb(a, b)}:
                bad.append((a, b, vals))
    assert bad == []


def test_robinson_at_zero_is_zero():
    # the modulus 2^a collapses to 1; the other variants give C(0,0)
    assert nt.binom_term("robinson", 0, 0) == 0
    assert nt.binom_term("divmod", 0, 0) == nt.binom_term("modmod", 0, 0) == 1


@given(st.integers(0, 40).flatmap(lambda a: st.tuples(st.just(a), st.integers(0, a))))
def test_binom_symmetry(ab):
    a, b = ab
    assert nt.binom_term("divmod", a, b) == nt.binom_term("divmod", a, a - b)


def test_padovan_eight():
    s = nt.padovan_seq(8, 64)
    assert s[63] == 2
    assert s[56:63] == [1, 7, 21, 35, 35, 21, 7]


def test_padovan_three_is_shifted_padovan():
    p = [1, 0, 0]
    while len(p) < 42:
        p.append(p[-2] + p[-3])
    assert nt.padovan_seq(3, 40) == p[1:41]


@pytest.mark.parametrize("d", range(3, 13))
def test_padovan_square_layout(d):
    s = nt.padovan_seq(d, d * d)
    rows = [s[r * d:(r + 1) * d] for r in range(d)]
    for r in range(d - 1):
        assert rows[r] == [0] * (d - 1 - r) + [math.comb(r, j) for j in range(r + 1)]
    # the last row holds C(d-1, .) except its final cell, where the recurrence wraps
    assert rows[-1][:-1] == [math.comb(d - 1, j) for j in range(d - 1)]
    assert rows[-1][-1] == 2


def test_padovan_matches_oracle():
    for d in range(2, 9):
        s = nt.padovan_seq(d, 50)
        assert s == [oracle.padovan(d, n) for n in range(50)]


def test_padovan_domain():
    with pytest.raises(DomainError):
        nt.padovan_seq(1, 5)
    with pytest.raises(DomainError):
        nt.padovan_seq(5, 3)


@pytest.mark.parametrize("variant,n,want", [
    ("prunescu_sauras", 3, 6),
    ("prunescu_sauras", 0, 1),
    ("prunescu_sauras", 2, 2),
    ("newterm", 0, 1),
    ("newterm", 1, 1),
])
def test_factorial_examples(variant, n, want):
    assert nt.factorial_term(variant, n) == want


def test_newterm_two_refuses_with_bit_count():
    with pytest.raises(BitLimitExceeded) as info:
        nt.factorial_term("newterm", 2)
    assert "137573236753" in str(info.value)


def test_newterm_two_refused_even_with_larger_budget():
    with pytest.raises(BitLimitExceeded):
        nt.factorial_term("newterm", 2, EvalConfig(max_bits=1 << 30))


@pytest.mark.parametrize("n,a,want", [(5, 6 ** 7, 120), (0, 1, 1), (8, 9 ** 10, 40320)])
def test_factorial_identity(n, a, want):
    assert nt.factorial_identity(n, a) == want


def test_factorial_identity_all_small():
    for n in range(7):
        base = (n + 1) ** (n + 2)
        assert nt.factorial_identity(n, base) == math.factorial(n)
        assert nt.factorial_identity(n, 3 * base + 1) == math.factorial(n)


def test_factorial_identity_below_bound():
    with pytest.raises(DomainError):
        nt.factorial_identity(5, 6 ** 7 - 1)


@pytest.mark.parametrize("n,want", [(4, 5), (3, 2), (1, 2)])
def test_prime_or_two_examples(n, want):
    assert nt.prime_or_two(n, "oracle") == want


@pytest.mark.parametrize("n", range(0, 4))
def test_prime_or_two_term_mode(n):
    assert nt.prime_or_two(n, "term") == nt.prime_or_two(n, "oracle")


def test_prime_or_two_cases():
    for n in range(0, 300):
        want = n + 1 if oracle.is_prime(n + 1) else 2
        assert nt.prime_or_two(n, "oracle") == want

import pytest

from primeterm import oracle, primes
from primeterm.errors import BitLimitExceeded, DomainError, RangeExceeded

FIRST = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


@pytest.mark.parametrize("n,want", [(1, 1), (8, 4), (12, 4), (0, 0)])
@pytest.mark.parametrize("mode", primes.MODES)
def test_sqrt_unity_examples(n, want, mode):
    assert primes.sqrt_unity_count(n, mode) == want


def test_sqrt_unity_term_matches_scan():
    assert [primes.sqrt_unity_count(n) for n in range(65)] == \
        [oracle.sqrt_unity_scan(n) for n in range(65)]


def test_four_n_power_of_two():
    for n in range(1, 65):
        v = primes.sqrt_unity_count(4 * n)
        assert v & (v - 1) == 0, n


@pytest.mark.parametrize("n,want", [(1, 0), (12, 2), (30, 3)])
@pytest.mark.parametrize("mode", primes.MODES)
def test_omega_examples(n, want, mode):
    assert primes.omega(n, mode) == want


def test_omega_term_matches_factorization():
    assert [primes.omega(n) for n in range(1, 33)] == [oracle.omega(n) for n in range(1, 33)]


@pytest.mark.parametrize("n,want", [(0, 0), (1, 0), (2, 1), (3, 2), (4, 2)])
def test_pi_term(n, want):
    assert primes.prime_pi(n, "term") == want


def test_pi_oracle():
    assert primes.prime_pi(10, "oracle") == 4
    assert primes.prime_pi(10 ** 4, "oracle") == 1229


@pytest.mark.parametrize("n,want", [(1, 2), (2, 3), (5, 11)])
def test_nth_prime_examples(n, want):
    assert primes.nth_prime(n) == want


@pytest.mark.parametrize("n", [1, 2])
def test_nth_prime_hypercube(n):
    assert primes.nth_prime(n, "hypercube") == FIRST[n - 1]


def test_nth_prime_oracle_range():
    assert [primes.nth_prime(n) for n in range(1, 101)] == oracle.primes_upto(541)


def test_nth_prime_hypercube_cliff():
    with pytest.raises(BitLimitExceeded) as info:
        primes.nth_prime(3, "hypercube")
    assert "6116474404281346575" in str(info.value)


def test_budget_controls_feasibility():
    need = primes.m_bits_required(4 * 30)
    assert primes.omega(30, max_bits=need) == 3
    with pytest.raises(BitLimitExceeded):
        primes.omega(30, max_bits=need - 1)


@pytest.mark.parametrize("x,want", [(10, 11), (2, 3), (0, 2), (1, 2)])
def test_next_prime_examples(x, want):
    assert primes.next_prime(x) == want


def test_next_prime_term_mode():
    assert primes.next_prime(1, "term") == 2
    assert primes.next_prime(2, "term") == 3


def test_prime_sequence():
    assert primes.prime_sequence(2, 15) == FIRST


def test_next_prime_monotone():
    for x in range(10 ** 4 + 1):
        y = primes.next_prime(x)
        assert y > x and oracle.is_prime(y)
        assert not any(oracle.is_prime(z) for z in range(x + 1, y))


def test_next_prime_past_sieve():
    with pytest.raises(RangeExceeded):
        primes.next_prime(10 ** 6 + 1)


def test_modes_validated():
    with pytest.raises(DomainError):
        primes.omega(3, "fast")
    with pytest.raises(DomainError):
        primes.nth_prime(3, "term")
    with pytest.raises(DomainError):
        primes.omega(0)

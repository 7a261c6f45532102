"""Prime functions built on the square-roots-of-unity count.

``term`` mode evaluates M(n) from the hypercube contributions and reads the
count off its popcount; popcount and 2-adic valuation of the resulting
integers are native. ``oracle`` mode takes the same quantities from the
brute-force references.
"""
from __future__ import annotations

from bisect import bisect_right

from . import _bigint, hypercube, oracle
from .errors import BitLimitExceeded, DomainError, RangeExceeded
from .term import DEFAULT_MAX_BITS

MODES = ("term", "oracle")
N_MODES = ("hypercube", "oracle")


def _check_mode(mode, allowed=MODES):
    if mode not in allowed:
        raise DomainError(f"unknown mode {mode!r}; choose from {', '.join(allowed)}")


def m_bits_required(n: int) -> int:
    return hypercube.m_bits(n)


def _require(n, max_bits):
    need = hypercube.m_bits(n)
    if need > max_bits:
        raise BitLimitExceeded(need, max_bits, f"M({n})")


def sqrt_unity_count(n: int, mode: str = "term", max_bits: int = DEFAULT_MAX_BITS) -> int:
    """Number of a in [0, n) with a^2 = 1 mod n; 0 for n = 0."""
    _check_mode(mode)
    if n < 0:
        raise DomainError("sqrt_unity_count needs n >= 0")
    if mode == "oracle":
        return oracle.sqrt_unity_count(n)
    _require(n, max_bits)
    return hypercube.m_zero_count(n)


def omega(n: int, mode: str = "term", max_bits: int = DEFAULT_MAX_BITS) -> int:
    """Distinct prime divisors of n, as nu2(N(4n)) - 1."""
    _check_mode(mode)
    if n < 1:
        raise DomainError("omega needs n >= 1")
    if mode == "oracle":
        return oracle.omega(n)
    return _bigint.nu2(sqrt_unity_count(4 * n, mode, max_bits)) - 1


def prime_pi(n: int, mode: str = "term", max_bits: int = DEFAULT_MAX_BITS) -> int:
    """Primes up to n, as omega(n!)."""
    _check_mode(mode)
    if n < 0:
        raise DomainError("prime_pi needs n >= 0")
    if mode == "oracle":
        return oracle.pi(n)
    return omega(oracle.factorial(n), mode, max_bits)


def _n_of_factorial(a, n_mode, max_bits):
    """N(4 * a!)."""
    if n_mode == "oracle":
        return 1 << (oracle.pi(a) + 1)
    return sqrt_unity_count(4 * oracle.factorial(a), "term", max_bits)


def nth_prime(n: int, n_mode: str = "oracle", max_bits: int = DEFAULT_MAX_BITS) -> int:
    """|{a in [0, n^2] : N(4 * a!) <= 2^n}|.

    In ``hypercube`` mode every candidate is counted through M; the largest
    candidate is checked against the bit budget before any work starts.
    """
    _check_mode(n_mode, N_MODES)
    if n < 1:
        raise DomainError("nth_prime needs n >= 1")
    top = n * n
    if n_mode == "hypercube":
        _require(4 * oracle.factorial(top), max_bits)
    bound = 1 << n
    return sum(1 for a in range(top + 1) if _n_of_factorial(a, n_mode, max_bits) <= bound)


def _count_below(m: int) -> int:
    """|{a in [0, m^2] : pi(a) < m}| from the sieve table.

    pi is non-decreasing, so the set is a prefix of [0, m^2].
    """
    hi = m * m + 1
    table = oracle.pi_table(min(hi - 1, oracle.PI_LIMIT))
    end = min(hi, len(table))
    c = bisect_right(table, m - 1, 0, end)
    if c == end < hi:
        raise RangeExceeded(f"the count for m = {m} runs past the sieve limit")
    return c


def next_prime(x: int, mode: str = "oracle", max_bits: int = DEFAULT_MAX_BITS) -> int:
    """Smallest prime above x, as p(pi(x) + 1)."""
    _check_mode(mode)
    if x < 0:
        raise DomainError("next_prime needs x >= 0")
    if mode == "term":
        return nth_prime(prime_pi(x, "term", max_bits) + 1, "hypercube", max_bits)
    return _count_below(oracle.pi(x) + 1)


def prime_sequence(start: int = 2, steps: int = 15, mode: str = "oracle") -> list:
    out = [start]
    while len(out) < steps:
        out.append(next_prime(out[-1], mode))
    return out

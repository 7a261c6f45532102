"""Brute-force reference values.

Nothing here imports the term, hypercube or expoly code: agreement between
these functions and the term pipeline is meant to be evidence.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, RangeExceeded

PI_LIMIT = 10 ** 6
FACTOR_LIMIT = 10 ** 12
SCAN_LIMIT = 10 ** 6


def _limit(v, top, what):
    if v > top:
        raise RangeExceeded(f"{what} is limited to {top}, got {v}")


@lru_cache(maxsize=4)
def _sieve(limit: int) -> bytes:
    flags = bytearray([1]) * (limit + 1)
    flags[:2] = b"\x00\x00"[: min(2, limit + 1)]
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p::p] = bytes(len(range(p * p, limit + 1, p)))
        p += 1
    return bytes(flags)


def _sieve_for(n):
    # round up so that repeated small queries share one table
    size = 1 << max(10, n.bit_length())
    return _sieve(min(size, PI_LIMIT))


def primes_upto(n: int) -> list:
    _limit(n, PI_LIMIT, "primes_upto")
    if n < 2:
        return []
    flags = _sieve_for(n)
    return [i for i in range(2, n + 1) if flags[i]]


def pi(n: int) -> int:
    _limit(n, PI_LIMIT, "pi")
    if n < 2:
        return 0
    return pi_table(n)[n]


@lru_cache(maxsize=4)
def _pi_table(size: int) -> tuple:
    flags = _sieve(size)
    out, c = [], 0
    for f in flags:
        c += f
        out.append(c)
    return tuple(out)


def pi_table(limit: int) -> tuple:
    """Cumulative prime counts (pi(0), pi(1), ...) covering at least 0..limit."""
    _limit(limit, PI_LIMIT, "pi_table")
    return _pi_table(min(1 << max(10, limit.bit_length()), PI_LIMIT))


def nth_prime(n: int) -> int:
    if n < 1:
        raise DomainError("nth_prime needs n >= 1")
    flags = _sieve(PI_LIMIT)
    seen = 0
    for i, f in enumerate(flags):
        if f:
            seen += 1
            if seen == n:
                return i
    raise RangeExceeded(f"the {n}-th prime exceeds {PI_LIMIT}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == [(n, 1)]


def factorize(n: int) -> list:
    """Trial division with a 2-3-5 wheel."""
    if n < 1:
        raise DomainError("factorize needs n >= 1")
    _limit(n, FACTOR_LIMIT, "factorize")
    out = []
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    gaps = (4, 2, 4, 2, 4, 6, 2, 6)
    p, i = 7, 0
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
        p += gaps[i]
        i = (i + 1) & 7
    if n > 1:
        out.append((n, 1))
    return out


def omega(n: int) -> int:
    return len(factorize(n))


def sqrt_unity_scan(n: int) -> int:
    if n < 0:
        raise DomainError("sqrt_unity_count needs n >= 0")
    _limit(n, SCAN_LIMIT, "sqrt_unity_count scan")
    if n == 0:
        return 0
    return sum(1 for a in range(n) if a * a % n == 1 % n)


def _prime_power_roots(p, k):
    if p != 2:
        return 2
    return (1, 2, 4)[min(k, 3) - 1]


def sqrt_unity_crt(n: int) -> int:
    if n < 0:
        raise DomainError("sqrt_unity_count needs n >= 0")
    if n == 0:
        return 0
    out = 1
    for p, k in factorize(n):
        out *= _prime_power_roots(p, k)
    return out


def sqrt_unity_count(n: int, method: str = "auto") -> int:
    if method == "scan" or (method == "auto" and n <= SCAN_LIMIT):
        return sqrt_unity_scan(n)
    if method in ("crt", "auto"):
        return sqrt_unity_crt(n)
    raise DomainError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _pascal_row(a: int) -> tuple:
    if a == 0:
        return (1,)
    prev = _pascal_row(a - 1)
    return (1,) + tuple(prev[i] + prev[i + 1] for i in range(a - 1)) + (1,)


def binom(a: int, b: int) -> int:
    """Pascal's triangle for small a, the falling-factorial quotient beyond."""
    if a < 0 or b < 0:
        raise DomainError("binom needs natural arguments")
    if b > a:
        return 0
    if a <= 300:
        return _pascal_row(a)[b]
    b = min(b, a - b)
    num = den = 1
    for i in range(b):
        num *= a - i
        den *= i + 1
    return num // den


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError("factorial needs n >= 0")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def hw(n: int) -> int:
    if n < 0:
        raise DomainError("hw needs n >= 0")
    count = 0
    while n:
        count += n & 1
        n >>= 1
    return count


def nu2(n: int) -> int:
    if n < 1:
        raise DomainError("nu2 needs n >= 1")
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k


def gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def geom_sum(r: int, q: int, t: int) -> int:
    return sum(j ** r * q ** j for j in range(t))


def padovan(d: int, n: int) -> int:
    """s_d(n) as a count of step sequences.

    s_d(n) is the number of ways to write n - (d-1) as an ordered sum of
    parts d-1 and d.
    """
    if d < 2:
        raise DomainError("padovan needs d >= 2")
    rest = n - (d - 1)
    if rest < 0:
        return 0
    total = 0
    for j in range(rest // d + 1):
        left = rest - j * d
        if left % (d - 1) == 0:
            i = left // (d - 1)
            total += binom(i + j, j)
    return total


SUITE = {
    "pi": pi,
    "nth_prime": nth_prime,
    "factorize": factorize,
    "omega": omega,
    "sqrt_unity_count": sqrt_unity_count,
    "binom": binom,
    "factorial": factorial,
    "hw": hw,
    "nu2": nu2,
    "gcd": gcd,
    "geom_sum": geom_sum,
    "padovan": padovan,
}


def oracle_suite(fn: str, *args):
    try:
        f = SUITE[fn]
    except KeyError:
        raise DomainError(f"no oracle named {fn!r}") from None
    return f(*args)

"""Big-integer helpers. gmpy2 is used when present, plain ints otherwise."""
from .errors import ExactDivisionViolated

try:
    import gmpy2
except ImportError:  # pragma: no cover - exercised only without gmpy2
    gmpy2 = None

BACKEND = "gmpy2" if gmpy2 is not None else "int"


def big(x):
    """Promote to the fast integer type (mpz when available)."""
    return gmpy2.mpz(x) if gmpy2 is not None else int(x)


def popcount(x) -> int:
    if x < 0:
        raise ValueError("popcount of a negative number")
    if gmpy2 is not None:
        return int(gmpy2.popcount(gmpy2.mpz(x)))
    return int(x).bit_count()


def nu2(x) -> int:
    """2-adic valuation of a positive integer."""
    if x <= 0:
        raise ValueError("nu2 needs a positive integer")
    if gmpy2 is not None:
        return int(gmpy2.bit_scan1(gmpy2.mpz(x)))
    x = int(x)
    return (x & -x).bit_length() - 1


def exact_div(a, b, what="division"):
    q, r = divmod(a, b)
    if r:
        raise ExactDivisionViolated(f"{what} left a nonzero remainder")
    return q


def bits(x) -> int:
    return int(abs(x).bit_length())


def gcd(a, b):
    if gmpy2 is not None:
        return gmpy2.gcd(a, b)
    import math
    return math.gcd(int(a), int(b))


def powmod(b, e, m):
    if gmpy2 is not None:
        return gmpy2.powmod(b, e, m)
    return pow(int(b), int(e), int(m))

"""Scalar substrate: primality, prime lists and inverses modulo a prime.

Python integers are already arbitrary precision, so there is no wrapper
type for them. Residues are always kept canonical in ``[0, p-1]``.
"""

import math

__all__ = [
    "DomainError",
    "NotPrimeError",
    "NotInvertibleError",
    "PrimeModulus",
    "is_prime",
    "primes_up_to",
    "mod_inverse",
    "mod_inverse_fermat",
]

# Strong-pseudoprime bases that are deterministic below this bound.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3317044064679887385961981


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class NotPrimeError(DomainError, TypeError):
    """Raised when a modulus that must be prime is not."""


class NotInvertibleError(DomainError):
    """Raised when inverting a residue that is zero modulo p."""


def is_prime(n):
    """Deterministic primality test.

    Trial division for small ``n``, strong-pseudoprime tests with a fixed
    base set otherwise. The base set is a proof of primality for every
    ``n`` below ~3.3e24, which covers all 64-bit inputs.
    """
    n = _as_int(n)
    if n < 0:
        raise DomainError(f"is_prime expects n >= 0, got {n}")
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    if n < 41 * 41:
        return True
    if n >= _MR_LIMIT:
        raise DomainError(f"{n} is beyond the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(bound):
    """All primes ``<= bound`` in increasing order (sieve of Eratosthenes)."""
    bound = _as_int(bound)
    if bound < 0:
        raise DomainError(f"primes_up_to expects bound >= 0, got {bound}")
    if bound < 2:
        return []
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


class PrimeModulus(int):
    """An ``int`` certified prime at construction.

    Constructing from an existing ``PrimeModulus`` is free, so functions
    can coerce their ``p`` argument unconditionally.
    """

    def __new__(cls, p):
        if isinstance(p, PrimeModulus):
            return p
        value = _as_int(p)
        if value < 2 or not is_prime(value):
            raise NotPrimeError(f"{p!r} is not prime")
        return super().__new__(cls, value)

    def __repr__(self):
        return f"PrimeModulus({int(self)})"


def mod_inverse(a, p):
    """Inverse of ``a`` modulo the prime ``p`` by the extended Euclidean algorithm."""
    p = PrimeModulus(p)
    r0, r1 = int(p), _as_int(a) % p
    if r1 == 0:
        raise NotInvertibleError(f"{a} is divisible by {int(p)}")
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    return t0 % p


def mod_inverse_fermat(a, p):
    """Inverse of ``a`` modulo ``p`` as ``a**(p-2) mod p``."""
    p = PrimeModulus(p)
    a = _as_int(a) % p
    if a == 0:
        raise NotInvertibleError(f"residue is divisible by {int(p)}")
    return pow(a, int(p) - 2, int(p))


def _as_int(n):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    return int(n)

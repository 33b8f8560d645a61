"""Exact integer primitives: gcd, coprimality, primality, divisor enumeration.

Everything here runs on Python's arbitrary-precision integers, so results
are exact and overflow cannot occur. The primality test is deterministic:
below PRIMALITY_LIMIT a fixed strong-pseudoprime witness set is provably
sufficient, and larger inputs are refused outright rather than answered
probabilistically.
"""

from __future__ import annotations

import math

from .errors import ValidationError

# Largest value (exclusive) for which testing against the first 13 primes
# as strong-pseudoprime witnesses is a proven deterministic primality test.
PRIMALITY_LIMIT = 3_317_044_064_679_887_385_961_981

# Witness sets proven sufficient below the paired threshold.
_WITNESS_LADDER = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (9_080_191, (31, 73)),
    (25_326_001, (2, 3, 5)),
    (3_215_031_751, (2, 3, 5, 7)),
    (4_759_123_141, (2, 7, 61)),
    (1_122_004_669_633, (2, 13, 23, 1_662_803)),
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (PRIMALITY_LIMIT, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def require_positive(name: str, value: int) -> None:
    """Raise ValidationError unless value is a positive int (bools rejected)."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ValidationError(f"{name} must be positive, got {value}")


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    require_positive("a", a)
    require_positive("b", b)
    return math.gcd(a, b)


def coprime(a: int, b: int) -> bool:
    """True iff gcd(a, b) = 1."""
    return gcd(a, b) == 1


def _strong_pseudoprime(p: int, witness: int) -> bool:
    # p is odd and > witness here; write p - 1 = 2^r * d with d odd.
    d = p - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    x = pow(witness, d, p)
    if x == 1 or x == p - 1:
        return True
    for _ in range(r - 1):
        x = x * x % p
        if x == p - 1:
            return True
    return False


def is_prime(p: int) -> bool:
    """Deterministic primality test for 1 <= p < PRIMALITY_LIMIT.

    Values at or above PRIMALITY_LIMIT are rejected with ValidationError
    because no fixed witness set is proven for them.
    """
    require_positive("p", p)
    if p >= PRIMALITY_LIMIT:
        raise ValidationError(
            f"p = {p} is at or above the deterministic primality limit "
            f"{PRIMALITY_LIMIT}"
        )
    if p == 1:
        return False
    for q in _SMALL_PRIMES:
        if p == q:
            return True
        if p % q == 0:
            return False
    for threshold, witnesses in _WITNESS_LADDER:
        if p < threshold:
            break
    return all(_strong_pseudoprime(p, w) for w in witnesses)


def divisors(m: int) -> list[int]:
    """All positive divisors of m in strictly increasing order."""
    require_positive("m", m)
    small: list[int] = []
    large: list[int] = []
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
    large.reverse()
    return small + large

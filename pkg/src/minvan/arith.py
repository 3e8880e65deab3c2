"""Small exact integer helpers shared across the package."""

from __future__ import annotations

import math
from functools import cache


@cache
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n >= 1, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def is_squarefree(n: int) -> bool:
    return all(n % (p * p) for p in prime_factors(n))


def is_prime(n: int) -> bool:
    return n > 1 and prime_factors(n) == (n,)


@cache
def primes_upto(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(2, n + 1) if is_prime(k))


def primes_below(n: int) -> tuple[int, ...]:
    return primes_upto(n - 1)


def euler_phi(n: int) -> int:
    out = n
    for p in prime_factors(n):
        out = out // p * (p - 1)
    return out


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


@cache
def units(n: int) -> tuple[int, ...]:
    """Residues coprime to n in [1, n]; (1,) for n = 1."""
    if n == 1:
        return (1,)
    return tuple(k for k in range(1, n) if math.gcd(k, n) == 1)

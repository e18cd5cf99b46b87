"""Integer helpers for group orders (all inputs are small)."""

from __future__ import annotations

import math
from functools import lru_cache


@lru_cache(maxsize=None)
def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def is_prime_power(n: int) -> bool:
    """True for p**k with k >= 1."""
    return n >= 2 and len(factorize(n)) == 1


def p_part(n: int, p: int) -> int:
    return p ** factorize(n).get(p, 0)


def is_square_free(n: int) -> bool:
    return all(a == 1 for a in factorize(n).values())


def is_almost_square_free(n: int) -> bool:
    """Divisible by p**2 for at most one prime p."""
    return sum(1 for a in factorize(n).values() if a >= 2) <= 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def lcm_all(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, int(v))
    return out


def multiplicative_order(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


def primitive_root(p: int) -> int:
    for g in range(1, p):
        if multiplicative_order(g, p) == p - 1:
            return g
    raise ValueError(f"{p} is not prime")

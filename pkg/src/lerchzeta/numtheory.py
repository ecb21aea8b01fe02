"""Elementary multiplicative number theory at desk scale.

Trial-division factorization is deliberate: every modulus in scope is
tiny (< 10^7), so anything fancier would be dead weight.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization ((p, e), ...) with p ascending."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    out = []
    m = n
    for p in (2, 3):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            out.append((p, e))
    p = 5
    step = 2
    while p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            out.append((p, e))
        p += step
        step = 6 - step
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    facs = factorize(n)
    return len(facs) == 1 and facs[0][1] == 1


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes, inclusive."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, v in enumerate(sieve) if v]


def divisors(n: int) -> list[int]:
    """All positive divisors, ascending."""
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def mobius(n: int) -> int:
    facs = factorize(n)
    if any(e > 1 for _, e in facs):
        return 0
    return -1 if len(facs) % 2 else 1


def totient(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def primitive_totient(q: int) -> int:
    """Number of primitive Dirichlet characters mod q: sum_{d|q} mu(q/d) phi(d)."""
    return sum(mobius(q // d) * totient(d) for d in divisors(q))


def crt_lift(residues: list[tuple[int, int]]) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime m_i; returns x mod prod."""
    x, m = 0, 1
    for r, mi in residues:
        g = gcd(m, mi)
        if g != 1:
            raise ValueError("moduli must be pairwise coprime")
        # x' = x + m*t with t = (r - x)/m mod mi
        t = ((r - x) * pow(m, -1, mi)) % mi
        x += m * t
        m *= mi
    return x % m

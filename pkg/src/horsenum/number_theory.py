"""Factorization, Euler's totient and the Carmichael function."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod

from .errors import DomainError


@dataclass(frozen=True)
class Factorization:
    modulus: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.factors):
            raise ValueError(f"malformed factorization {self.factors}")
        if prod(p**e for p, e in self.factors) != self.modulus:
            raise ValueError(f"factors do not multiply to {self.modulus}")

    @property
    def max_exponent(self) -> int:
        return max((e for _, e in self.factors), default=0)

    def prime_powers(self) -> list[int]:
        return [p**e for p, e in self.factors]


def _check_positive(K: int) -> None:
    if K < 1:
        raise DomainError(f"modulus must be a positive integer, got {K}")


def factorize(K: int) -> Factorization:
    """Factor ``K`` by trial division."""
    _check_positive(K)
    factors = []
    n, p = K, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(K, tuple(factors))


def euler_totient(K: int) -> int:
    phi = 1
    for p, e in factorize(K).factors:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def _carmichael_prime_power(p: int, e: int) -> int:
    phi = (p - 1) * p ** (e - 1)
    if p == 2 and e >= 3:
        return phi // 2
    return phi


def carmichael(K: int) -> int:
    """lambda(K), the exponent of the multiplicative group mod K.

    Prime powers take phi, halved for 2**e with e >= 3; composite moduli take
    the lcm over their prime-power parts.  lambda(1) = phi(1) = 1.
    """
    return lcm(1, *(_carmichael_prime_power(p, e) for p, e in factorize(K).factors))


def max_prime_exponent(K: int) -> int:
    """R: the largest exponent in the factorization of K (0 for K = 1)."""
    return factorize(K).max_exponent


def verify_exponent_properties(K: int) -> bool:
    """Exhaustively check a**R == a**(lambda+R) for all residues a, and
    b**lambda == 1 for units b, modulo K."""
    if K < 2:
        raise DomainError(f"need K >= 2, got {K}")
    lam = carmichael(K)
    R = max_prime_exponent(K)
    for a in range(K):
        if pow(a, R, K) != pow(a, lam + R, K):
            return False
        if gcd(a, K) == 1 and pow(a, lam, K) != 1:
            return False
    return True


def divisors(n: int) -> list[int]:
    """Positive divisors of n in ascending order."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]

"""Exact elementary number theory used by the circulant-graph engine.

Everything here is integer arithmetic on desk-scale inputs: divisors,
totients, Moebius values, p-adic valuations, gcd classes and Ramanujan
sums.  The Ramanujan sum has two independent routes:

    ramanujan        -- closed form  mu(t) * phi(n) / phi(t),  t = n/gcd(n,j)
    ramanujan_oracle -- direct character sum over the primitive residues

The oracle exists so the closed form can be cross-checked; it never
replaces it.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

_MAX_N = 2**62


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of n as an ordered (prime, exponent) list."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last_p = 0
        for p, e in self.factors:
            if p <= last_p or e < 1:
                raise ValueError(f"malformed factor list for {self.n}")
            prod *= p**e
            last_p = p
        if prod != self.n:
            raise ValueError(f"factor list does not multiply back to {self.n}")


@dataclass(frozen=True)
class DivisorSet:
    """Proper divisors of n: every d with d | n and 1 <= d < n."""

    n: int
    divisors: tuple[int, ...]

    def __post_init__(self):
        last = 0
        for d in self.divisors:
            if d <= last or d >= self.n or self.n % d != 0:
                raise ValueError(f"{d} is not a proper divisor of {self.n} in order")
            last = d

    def __contains__(self, d: int) -> bool:
        return d in self.divisors

    def __iter__(self):
        return iter(self.divisors)

    def __len__(self) -> int:
        return len(self.divisors)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Trial-division factorization; factorize(1) has an empty factor list."""
    if not 1 <= n <= _MAX_N:
        raise ValueError(f"n out of range: {n}")
    m = n
    factors = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n."""
    phi = 1
    for p, e in factorize(n).factors:
        phi *= p ** (e - 1) * (p - 1)
    return phi


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """Moebius mu: 0 unless n is square-free, else (-1)^(number of primes)."""
    fac = factorize(n)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def valuation(p: int, n: int) -> int:
    """Largest alpha with p^alpha dividing |n|.  n = 0 is rejected."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2 or factorize(p).factors != ((p, 1),):
        raise ValueError(f"{p} is not prime")
    n = abs(n)
    alpha = 0
    while n % p == 0:
        n //= p
        alpha += 1
    return alpha


@lru_cache(maxsize=None)
def proper_divisors(n: int) -> DivisorSet:
    """All divisors d of n with 1 <= d < n, ascending."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d and n // d != n:
                large.append(n // d)
    return DivisorSet(n, tuple(small + large[::-1]))


def gcd_class(n: int, d: int) -> list[int]:
    """Residues k in [1, n-1] with gcd(k, n) = d, ascending."""
    if n < 2 or d < 1 or d >= n or n % d != 0:
        raise ValueError(f"{d} is not a proper divisor of {n}")
    return [k for k in range(d, n, d) if math.gcd(k, n) == d]


def ramanujan(j: int, n: int) -> int:
    """Ramanujan sum c(j, n) via the closed form mu(t) phi(n) / phi(t)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    t = n // math.gcd(n, j % n)
    mu = mobius(t)
    if mu == 0:
        return 0
    return mu * euler_phi(n) // euler_phi(t)


@lru_cache(maxsize=None)
def _unit_roots(n: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * k / n) for k in range(n))


@lru_cache(maxsize=None)
def _primitive_residues(n: int) -> tuple[int, ...]:
    return tuple(i for i in range(n) if math.gcd(i, n) == 1)


_ORACLE_TOL = 1e-8


def ramanujan_oracle(j: int, n: int) -> int:
    """c(j, n) by direct summation of j-th powers of primitive n-th roots.

    Fails loudly if the sum is detectably non-real or non-integral; with
    n at desk scale that signals a bug, never rounding error.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    roots = _unit_roots(n)
    total = sum(roots[(i * j) % n] for i in _primitive_residues(n))
    if abs(total.imag) > _ORACLE_TOL:
        raise ArithmeticError(f"non-real character sum for c({j},{n}): {total}")
    nearest = round(total.real)
    if abs(total.real - nearest) > _ORACLE_TOL:
        raise ArithmeticError(f"non-integral character sum for c({j},{n}): {total}")
    return nearest


def ramanujan_is_odd(j: int, n: int) -> bool:
    """Whether c(j, n) is odd, decided structurally.

    c(j, n) is odd exactly when 4 does not divide n and j factors as
    (prod p_i^(a_i - 1)) * J with gcd(J, n) in {1, 2}, p_i^a_i ranging
    over the full prime factorization of n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n % 4 == 0:
        return False
    g = 1
    for p, e in factorize(n).factors:
        g *= p ** (e - 1)
    if j % g != 0:
        return False
    return math.gcd(j // g, n) in (1, 2)

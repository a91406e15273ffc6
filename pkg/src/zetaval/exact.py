"""Exact integer and rational number theory used throughout the package.

Bernoulli numbers follow the even-numeration convention (B1 = -1/2) and are
produced by the binomial recurrence in exact ``Fraction`` arithmetic, memoized.
Primality is deterministic trial division; this caps sensible inputs around
10**9, which is far beyond the desk scale the evaluators target, and keeps the
"validated" claim free of probabilistic steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .errors import DomainError, NotPrime

_bernoulli_cache: list[Fraction] = [Fraction(1), Fraction(-1, 2)]


def bernoulli(k: int) -> Fraction:
    """k-th Bernoulli number, B1 = -1/2 convention, exact."""
    if k < 0:
        raise DomainError("bernoulli index must be >= 0")
    if k >= len(_bernoulli_cache):
        for m in range(len(_bernoulli_cache), k + 1):
            if m % 2 == 1:
                _bernoulli_cache.append(Fraction(0))
                continue
            # sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m
            acc = Fraction(0)
            for j in range(m):
                bj = _bernoulli_cache[j]
                if bj:
                    acc += math.comb(m + 1, j) * bj
            _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[k]


def sigma1(n: int) -> int:
    """Sum of the divisors of n."""
    if n < 1:
        raise DomainError("sigma1 needs n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d
            if d != n // d:
                total += n // d
        d += 1
    return total


def _jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1."""
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(delta: int, n: int) -> int:
    """Kronecker symbol (delta/n) for n >= 1."""
    if n < 1:
        raise DomainError("kronecker here is defined for n >= 1")
    e = 0
    while n % 2 == 0:
        n //= 2
        e += 1
    if e:
        if delta % 2 == 0:
            return 0
        two = 1 if delta % 8 in (1, 7) else -1
        if e % 2 == 0:
            two = 1
    else:
        two = 1
    return two * _jacobi(delta, n)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class QuadraticDiscriminant:
    """Fundamental discriminant of Q(sqrt(D)) for squarefree D >= 2."""

    D: int
    delta: int

    @classmethod
    def from_squarefree(cls, D: int) -> "QuadraticDiscriminant":
        if D < 2 or not is_squarefree(D):
            raise DomainError("D must be a squarefree integer >= 2")
        delta = D if D % 4 == 1 else 4 * D
        return cls(D=D, delta=delta)

    @classmethod
    def from_discriminant(cls, delta: int) -> "QuadraticDiscriminant":
        if delta % 4 == 1 and delta > 1 and is_squarefree(delta):
            return cls(D=delta, delta=delta)
        if delta % 4 == 0:
            D = delta // 4
            if D >= 2 and D % 4 in (2, 3) and is_squarefree(D):
                return cls(D=D, delta=delta)
        raise DomainError(f"{delta} is not a positive fundamental discriminant")


def _factor_trial(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
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
    return out


def primitive_root(p: int) -> int:
    """Smallest primitive root modulo an odd prime p."""
    if p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    factors = _factor_trial(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
        g += 1


def index_table(p: int, g: int | None = None) -> dict[int, int]:
    """Discrete-log table nu with g**nu(n) == n (mod p) for 1 <= n <= p-1."""
    if g is None:
        g = primitive_root(p)
    elif not is_prime(p) or p == 2:
        raise NotPrime(f"{p} is not an odd prime")
    table: dict[int, int] = {}
    acc = 1
    for i in range(p - 1):
        table[acc] = i
        acc = acc * g % p
    if len(table) != p - 1:
        raise DomainError(f"{g} is not a primitive root mod {p}")
    return table


def primes_up_to(limit: int) -> list[int]:
    """Primes <= limit, ascending."""
    if limit < 2:
        raise DomainError("primes_up_to needs limit >= 2")
    return [int(p) for p in kernels.sieve(limit)]

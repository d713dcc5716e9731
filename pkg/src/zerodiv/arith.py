"""Exact integer and modular arithmetic for Z_n.

Everything here is a pure function of its arguments. Factorization is
deterministic: trial division by small primes, a Miller-Rabin test whose
witness set is exact for every 64-bit input, and Brent's variant of
Pollard rho with a fixed sequence of polynomial constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce

from .errors import DomainError

MODULUS_LIMIT = 1 << 63

# Exact for all n < 3.3e24 (Sorenson & Webster), so in particular for n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 1000


def _small_primes(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, bound, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


SMALL_PRIMES = _small_primes(_TRIAL_BOUND)


def gcd(x: int, y: int) -> int:
    if x < 0 or y < 0:
        raise DomainError(f"gcd expects nonnegative integers, got ({x}, {y})")
    if x == 0 and y == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(x, y)


def mulmod(a: int, b: int, n: int) -> int:
    """Return ``a * b mod n`` for residues ``a, b`` in ``[0, n)``.

    Python integers never overflow, so the double-width product is exact.
    """
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    if not (0 <= a < n and 0 <= b < n):
        raise DomainError(f"residues must lie in [0, {n}), got ({a}, {b})")
    return a * b % n


def is_prime(n: int) -> bool:
    """Deterministic primality for ``n < 2**64`` (and well beyond)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int) -> int:
    # n is odd, composite and free of factors below the trial bound.
    for c in range(1, n):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            # Batched product collapsed; step one at a time from the checkpoint.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")  # pragma: no cover


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization: ``(prime, exponent)`` pairs, primes ascending."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if any(e < 1 for _, e in self.factors):
            raise DomainError(f"exponents must be positive: {self.factors}")
        if primes != sorted(set(primes)):
            raise DomainError(f"primes must be strictly increasing: {self.factors}")
        if not all(is_prime(p) for p in primes):
            raise DomainError(f"non-prime base in {self.factors}")

    @property
    def value(self) -> int:
        return reduce(lambda acc, pe: acc * pe[0] ** pe[1], self.factors, 1)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def factorize(n: int) -> Factorization:
    if n < 2:
        raise DomainError(f"factorize expects n >= 2, got {n}")
    counts: dict[int, int] = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _brent(m)
        stack += [f, m // f]
    return Factorization(tuple(sorted(counts.items())))


@dataclass(frozen=True)
class Modulus:
    """A validated modulus ``n`` with its factorization, computed once."""

    n: int
    factorization: Factorization

    def __post_init__(self):
        if not 2 <= self.n < MODULUS_LIMIT:
            raise DomainError(f"modulus must satisfy 2 <= n < 2**63, got {self.n}")
        if self.factorization.value != self.n:
            raise DomainError(f"factorization {self.factorization} does not multiply to {self.n}")

    @classmethod
    def of(cls, n: int) -> Modulus:
        if not isinstance(n, int) or isinstance(n, bool):
            raise DomainError(f"modulus must be an integer, got {n!r}")
        if not 2 <= n < MODULUS_LIMIT:
            raise DomainError(f"modulus must satisfy 2 <= n < 2**63, got {n}")
        return cls(n, factorize(n))

    @property
    def factors(self) -> tuple[tuple[int, int], ...]:
        return self.factorization.factors

    @property
    def primes(self) -> tuple[int, ...]:
        return self.factorization.primes

    @property
    def is_prime(self) -> bool:
        return self.factors == ((self.n, 1),)

    def totient(self) -> int:
        return totient(self.factorization)


def as_modulus(n: int | Modulus) -> Modulus:
    return n if isinstance(n, Modulus) else Modulus.of(n)


def totient(f: Factorization) -> int:
    phi = 1
    for p, e in f:
        phi *= (p - 1) * p ** (e - 1)
    return phi


def annihilator(n: int, x: int) -> list[int]:
    """All ``y`` in ``[0, n)`` with ``x*y = 0 (mod n)``, ascending; includes 0."""
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    if not 0 <= x < n:
        raise DomainError(f"residue must lie in [0, {n}), got {x}")
    d = math.gcd(x, n)
    return list(range(0, n, n // d))


def solve_linear_congruence(a: int, b: int, n: int) -> list[int]:
    """Solutions of ``a*x + b = 0 (mod n)`` in ``[0, n)``, ascending.

    Empty when ``gcd(a, n)`` does not divide ``b``; otherwise there are exactly
    ``gcd(a, n)`` of them, spaced ``n / gcd(a, n)`` apart.
    """
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    a %= n
    rhs = -b % n
    d = math.gcd(a, n)
    if rhs % d:
        return []
    step = n // d
    x0 = (rhs // d) * pow(a // d, -1, step) % step if step > 1 else 0
    return list(range(x0, n, step))


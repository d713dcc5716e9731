"""Closed-form answers computed from n's factorization and a few gcds.

None of these functions walks the graph, so they stay fast far beyond the
brute-force range: every per-vertex query costs a handful of gcds once the
modulus has been factored.  Where a formula is only known to hold under a
hypothesis, the function either raises :class:`DomainError` or returns
:data:`NOT_COVERED` rather than guessing.
"""

from __future__ import annotations

import math

from .arith import Modulus, as_modulus
from .errors import DomainError
from .zdgraph import Edge


class _NotCovered:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOT_COVERED"

    def __reduce__(self):
        return (_NotCovered, ())


NOT_COVERED = _NotCovered()


def _require_vertex(n: int, a: int) -> None:
    if not (1 <= a < n and math.gcd(a, n) > 1):
        raise DomainError(f"{a} is not a vertex of the zero-divisor graph of Z_{n}")


def _require_edge(n: int, a: int, b: int) -> None:
    _require_vertex(n, a)
    _require_vertex(n, b)
    if a == b or a * b % n:
        raise DomainError(f"({a}, {b}) is not an edge of the zero-divisor graph of Z_{n}")


def _n(n: int | Modulus) -> int:
    return n.n if isinstance(n, Modulus) else n


def is_cut_edge_theorem(n: int | Modulus, a: int, b: int) -> bool:
    """``(a, b)`` is a cut edge iff, in some orientation, gcd(a,n) = 2,
    gcd(b,n) >= 3 and 2b = n."""
    n = _n(n)
    _require_edge(n, a, b)

    def oriented(x: int, y: int) -> bool:
        return math.gcd(x, n) == 2 and math.gcd(y, n) >= 3 and 2 * y == n

    return oriented(a, b) or oriented(b, a)


def is_cut_edge_short_form(n: int | Modulus, a: int, b: int) -> bool:
    """The same test without the gcd(b,n) >= 3 clause."""
    n = _n(n)
    _require_edge(n, a, b)

    def oriented(x: int, y: int) -> bool:
        return math.gcd(x, n) == 2 and 2 * y == n

    return oriented(a, b) or oriented(b, a)


def cut_edges_theorem(n: int | Modulus) -> list[Edge]:
    n = _n(n)
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    if n % 2:
        return []
    half = n // 2
    if math.gcd(half, n) < 3:
        return []
    return sorted(
        Edge.of(a, half) for a in range(2, n, 2) if a != half and math.gcd(a, n) == 2
    )


def center_theorem(n: int | Modulus) -> list[int]:
    """Union over primes p | n of the nonzero multiples of n/p, ascending."""
    m = as_modulus(n)
    members: set[int] = set()
    for p in m.primes:
        if p == m.n:
            continue
        step = m.n // p
        members.update(range(step, m.n, step))
    return sorted(members)


def is_central_theorem(n: int | Modulus, a: int) -> bool:
    """Membership in :func:`center_theorem` without building the set."""
    m = as_modulus(n)
    _require_vertex(m.n, a)
    return any(a % (m.n // p) == 0 for p in m.primes)


def center_size_theorem(n: int | Modulus) -> int:
    # Distinct primes give sets meeting only at 0, since lcm(n/p, n/q) = n.
    m = as_modulus(n)
    return 0 if m.is_prime else sum(p - 1 for p in m.primes)


def degree_theorem(n: int | Modulus, a: int) -> int:
    n = _n(n)
    _require_vertex(n, a)
    d = math.gcd(a, n)
    return d - 2 if a * a % n == 0 else d - 1


def degree_uncorrected(n: int | Modulus, a: int) -> int:
    """gcd(a, n) - 1, counting every nonzero solution of a*x = 0 including a itself."""
    n = _n(n)
    _require_vertex(n, a)
    return math.gcd(a, n) - 1


def _two_smallest_primes(m: Modulus) -> tuple[int, int] | None:
    return (m.primes[0], m.primes[1]) if len(m.primes) >= 2 else None


def has_far_prime_pair(n: int | Modulus) -> bool:
    """n has two distinct prime divisors p, q with n > p*q."""
    m = as_modulus(n)
    pair = _two_smallest_primes(m)
    return pair is not None and m.n > pair[0] * pair[1]


def prime_distance_theorem(n: int | Modulus, p: int, q: int) -> int:
    m = as_modulus(n)
    if p == q or p not in m.primes or q not in m.primes:
        raise DomainError(f"{p} and {q} must be distinct prime divisors of {m.n}")
    if m.n <= p * q:
        raise DomainError(f"distance formula needs n > p*q, got n={m.n}, p*q={p * q}")
    return 3


def eligible_prime_pairs(n: int | Modulus) -> list[tuple[int, int]]:
    m = as_modulus(n)
    ps = m.primes
    return [(p, q) for i, p in enumerate(ps) for q in ps[i + 1 :] if m.n > p * q]


def diameter_theorem(n: int | Modulus) -> int | None | _NotCovered:
    """3 when n > p*q for distinct primes p, q dividing n.

    Two shapes outside that case are answered directly: prime n gives the
    empty graph (None) and n = p**2 gives a complete graph on p - 1
    vertices (1, or 0 for the single vertex of Z_4).  Everything else is
    :data:`NOT_COVERED`.
    """
    m = as_modulus(n)
    if m.is_prime:
        return None
    if has_far_prime_pair(m):
        return 3
    if len(m.factors) == 1 and m.factors[0][1] == 2:
        return 0 if m.primes[0] == 2 else 1
    return NOT_COVERED

"""The zero-divisor graph of Z_n as an implicit graph.

Vertices are the nonzero zero divisors of Z_n; two distinct vertices are
adjacent when their product vanishes mod n.  Neighbors of ``a`` are the
nonzero multiples of ``n / gcd(a, n)``, so every query here runs in time
proportional to the answer and nothing is stored.  Only :meth:`ZdGraph.edges`
and :meth:`ZdGraph.adjacency` enumerate the whole graph, and those refuse to
run above the oracle cap.
"""

from __future__ import annotations

import math
import os
from typing import Iterator, NamedTuple

from .arith import Modulus, as_modulus
from .errors import DomainError, ResourceLimitError

DEFAULT_ORACLE_CAP = 50_000
ORACLE_CAP_ENV = "ZDG_ORACLE_MAX_N"


def default_oracle_cap() -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_ORACLE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"{ORACLE_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 2:
        raise DomainError(f"{ORACLE_CAP_ENV} must be >= 2, got {cap}")
    return cap


class Edge(NamedTuple):
    lo: int
    hi: int

    @classmethod
    def of(cls, a: int, b: int) -> Edge:
        return cls(a, b) if a < b else cls(b, a)


class ZdGraph:
    """Immutable handle on the zero-divisor graph of Z_n."""

    __slots__ = ("modulus", "vertex_count", "oracle_cap")

    def __init__(self, modulus: Modulus, oracle_cap: int | None = None):
        self.modulus = modulus
        self.vertex_count = (modulus.n - 1) - modulus.totient()
        self.oracle_cap = default_oracle_cap() if oracle_cap is None else oracle_cap

    @property
    def n(self) -> int:
        return self.modulus.n

    def __repr__(self) -> str:
        return f"ZdGraph(n={self.n}, vertices={self.vertex_count})"

    def is_vertex(self, a: int) -> bool:
        return 1 <= a <= self.n - 1 and math.gcd(a, self.n) > 1

    def _require_vertex(self, a: int) -> None:
        if not self.is_vertex(a):
            raise DomainError(f"{a} is not a vertex of the zero-divisor graph of Z_{self.n}")

    def vertices(self) -> Iterator[int]:
        n = self.n
        return (a for a in range(2, n) if math.gcd(a, n) > 1)

    def neighbors(self, a: int) -> list[int]:
        self._require_vertex(a)
        step = self.n // math.gcd(a, self.n)
        out = list(range(step, self.n, step))
        if a * a % self.n == 0:
            out.remove(a)
        return out

    def degree(self, a: int) -> int:
        self._require_vertex(a)
        d = math.gcd(a, self.n)
        return d - 2 if a * a % self.n == 0 else d - 1

    def are_adjacent(self, a: int, b: int) -> bool:
        return a != b and a * b % self.n == 0

    def require_oracle_range(self) -> None:
        if self.n > self.oracle_cap:
            raise ResourceLimitError(self.n, self.oracle_cap)

    def edges(self) -> Iterator[Edge]:
        """Every edge once, ordered by ``(lo, hi)``."""
        self.require_oracle_range()
        return self._edges()

    def _edges(self) -> Iterator[Edge]:
        for a in self.vertices():
            for b in self.neighbors(a):
                if b > a:
                    yield Edge(a, b)

    def adjacency(self) -> dict[int, list[int]]:
        """Materialized adjacency lists keyed by vertex, in ascending order."""
        self.require_oracle_range()
        return {a: self.neighbors(a) for a in self.vertices()}


def build_graph(n: int | Modulus, oracle_cap: int | None = None) -> ZdGraph:
    return ZdGraph(as_modulus(n), oracle_cap)

"""Zero-divisor graphs of Z_n: closed-form answers, a brute-force oracle,
and a harness that cross-checks the two."""

from .arith import Factorization, Modulus, factorize
from .errors import DomainError, ResourceLimitError, ZeroDivGraphError
from .zdgraph import Edge, ZdGraph, build_graph

__all__ = [
    "DomainError",
    "Edge",
    "Factorization",
    "Modulus",
    "ResourceLimitError",
    "ZdGraph",
    "ZeroDivGraphError",
    "build_graph",
    "factorize",
]

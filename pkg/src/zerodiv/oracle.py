"""Ground truth by direct search over the materialized graph.

Nothing in this module consults a closed-form result about zero-divisor
graphs: distances come from breadth-first search, bridges from low-link
numbering (with two slower naive cross-checks), and eccentricities from
neighborhood bitsets.  The cross-validation harness relies on that
independence.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .errors import ZeroDivGraphError
from .zdgraph import Edge, ZdGraph


class EccentricityRecord(NamedTuple):
    vertex: int
    eccentricity: int


class DisconnectedGraphError(ZeroDivGraphError):
    pass


def distances_from(g: ZdGraph, a: int) -> dict[int, int]:
    """BFS distance from ``a`` to every vertex reachable from it."""
    g.require_oracle_range()
    if not g.is_vertex(a):
        g.neighbors(a)  # raises DomainError
    dist = {a: 0}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in g.neighbors(u):
            if v not in dist:
                dist[v] = du
                queue.append(v)
    return dist


def neighbors_by_scan(g: ZdGraph, a: int) -> list[int]:
    """Neighbors of ``a`` by testing every residue, no arithmetic shortcuts."""
    g.require_oracle_range()
    if not g.is_vertex(a):
        g.neighbors(a)  # raises DomainError
    n = g.n
    return [x for x in range(1, n) if x != a and a * x % n == 0]


def is_connected(g: ZdGraph) -> bool:
    g.require_oracle_range()
    first = next(g.vertices(), None)
    if first is None:
        return True
    return len(distances_from(g, first)) == g.vertex_count


class _BitGraph:
    """Adjacency as Python-int bitsets; bit ``v`` stands for vertex ``v``."""

    def __init__(self, g: ZdGraph):
        g.require_oracle_range()
        self.n = g.n
        self.order = list(g.vertices())
        nbytes = g.n // 8 + 1
        interned: dict[int, int] = {}
        self.nbrs: dict[int, list[int]] = {}
        self.mask: dict[int, int] = {}
        everything = bytearray(nbytes)
        for v in self.order:
            everything[v >> 3] |= 1 << (v & 7)
            row = bytearray(nbytes)
            nb = g.neighbors(v)
            for u in nb:
                row[u >> 3] |= 1 << (u & 7)
            m = int.from_bytes(row, "little")
            self.mask[v] = interned.setdefault(m, m)
            self.nbrs[v] = nb
        self.all = int.from_bytes(everything, "little")

    def eccentricity(self, a: int) -> int:
        if len(self.order) == 1:
            return 0
        bit = 1 << a
        near = self.mask[a] | bit
        if near == self.all:
            return 1
        second = 0
        for x in self.nbrs[a]:
            second |= self.mask[x]
        near |= second
        if near == self.all:
            return 2
        # d(a, b) <= 3 iff some neighbor of b is adjacent to a neighbor of a.
        far = self.all & ~near
        mask = self.mask
        for b in self.order:
            if far >> b & 1 and not mask[b] & second:
                return self._bfs_eccentricity(a)
        return 3

    def _bfs_eccentricity(self, a: int) -> int:
        seen = frontier = 1 << a
        depth = 0
        while True:
            nxt = 0
            for v in self.order:
                if frontier >> v & 1:
                    nxt |= self.mask[v]
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            depth += 1
        if seen != self.all:
            raise DisconnectedGraphError(f"vertex {a} does not reach every vertex of Z_{self.n}")
        return depth


def eccentricity(g: ZdGraph, a: int) -> int:
    """Eccentricity of ``a`` by the staged test: 1, else 2, else 3.

    Each stage is an exact set-cover check; should a vertex lie beyond
    distance 3, the answer falls back to a full frontier search.
    """
    if not g.is_vertex(a):
        g.neighbors(a)  # raises DomainError
    return _BitGraph(g).eccentricity(a)


def eccentricities(g: ZdGraph) -> list[EccentricityRecord]:
    bg = _BitGraph(g)
    # Twins (same open or same closed neighborhood) have equal eccentricity.
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    out = []
    for v in bg.order:
        open_key = bg.mask[v]
        closed_key = open_key | 1 << v
        ecc = by_open.get(open_key)
        if ecc is None:
            ecc = by_closed.get(closed_key)
        if ecc is None:
            ecc = bg.eccentricity(v)
        by_open[open_key] = by_closed[closed_key] = ecc
        out.append(EccentricityRecord(v, ecc))
    return out


def center_oracle(g: ZdGraph) -> list[int]:
    records = eccentricities(g)
    if not records:
        return []
    lo = min(r.eccentricity for r in records)
    return [r.vertex for r in records if r.eccentricity == lo]


def diameter_oracle(g: ZdGraph) -> int | None:
    records = eccentricities(g)
    if not records:
        return None
    return max(r.eccentricity for r in records)


def bridges_oracle(g: ZdGraph) -> list[Edge]:
    """Cut edges by low-link numbering (iterative DFS), sorted by ``(lo, hi)``."""
    adj = g.adjacency()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    found = []
    counter = 0
    for root in adj:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, 0, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            for w in it:
                if w == parent:
                    continue
                if w in disc:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(adj[w])))
                    break
            else:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] > disc[u]:
                        found.append(Edge.of(u, v))
    return sorted(found)


def _reachable_without(adj: dict[int, set[int]], u: int, v: int) -> bool:
    # Is v reachable from u once the edge (u, v) is deleted?
    seen = {u}
    queue = deque([u])
    while queue:
        w = queue.popleft()
        for x in adj[w]:
            if w == u and x == v:
                continue
            if x == v:
                return True
            if x not in seen:
                seen.add(x)
                queue.append(x)
    return False


def bridges_by_removal(g: ZdGraph) -> list[Edge]:
    """Cut edges by deleting each edge in turn and testing reachability."""
    adj = {a: set(nb) for a, nb in g.adjacency().items()}
    return [e for e in g.edges() if not _reachable_without(adj, e.lo, e.hi)]


def cycle_through_edge(
    g: ZdGraph, e: Edge, adj: dict[int, list[int]] | None = None
) -> list[int] | None:
    """A simple cycle ``[lo, ..., hi, lo]`` containing edge ``e``, or None."""
    if adj is None:
        adj = g.adjacency()
    parent = {e.lo: None}
    queue = deque([e.lo])
    while queue and e.hi not in parent:
        w = queue.popleft()
        for x in adj[w]:
            if w == e.lo and x == e.hi:
                continue
            if x not in parent:
                parent[x] = w
                queue.append(x)
    if e.hi not in parent:
        return None
    path = [e.hi]
    while path[-1] != e.lo:
        path.append(parent[path[-1]])
    return path[::-1] + [e.lo]

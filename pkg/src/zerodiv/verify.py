"""Sweep harness: run both engines over a range of n and compare.

Each n is evaluated independently (one graph, every requested check) so the
work can be spread over a process pool; results are merged back in
ascending n, which keeps reports identical whatever the degree of
parallelism.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, NamedTuple

from . import oracle, theorems
from .errors import DomainError, ResourceLimitError
from .zdgraph import ZdGraph, build_graph, default_oracle_cap


class CheckKind(str, enum.Enum):
    CUT_EDGES = "cut-edges"
    CENTER = "center"
    DEGREE = "degree"
    DIAMETER = "diameter"
    CONNECTIVITY = "connectivity"
    PRIME_DISTANCE = "prime-distance"

    @classmethod
    def parse(cls, text: str) -> CheckKind:
        try:
            return cls(text.strip())
        except ValueError:
            known = ", ".join(c.value for c in cls)
            raise DomainError(f"unknown check {text!r}; expected one of {known}") from None


ALL_CHECKS = tuple(CheckKind)

AGREE, DISAGREE, SKIPPED = "agree", "disagree", "skipped"


class Outcome(NamedTuple):
    n: int
    status: str
    detail: str
    theorem: Any = None
    oracle: Any = None


@dataclass
class VerificationReport:
    check: CheckKind
    n_min: int
    n_max: int
    per_n: list[Outcome] = field(default_factory=list)

    @property
    def range(self) -> tuple[int, int]:
        return (self.n_min, self.n_max)

    @property
    def summary(self) -> dict[str, int]:
        counts = {AGREE: 0, DISAGREE: 0, SKIPPED: 0}
        for o in self.per_n:
            counts[o.status] += 1
        return counts

    @property
    def discrepancies(self) -> list[Outcome]:
        return [o for o in self.per_n if o.status == DISAGREE]

    def to_dict(self) -> dict[str, Any]:
        s = self.summary
        return {
            "check": self.check.value,
            "agree": s[AGREE],
            "disagree": s[DISAGREE],
            "skipped": s[SKIPPED],
            "discrepancies": [
                {"n": o.n, "theorem": o.theorem, "oracle": o.oracle} for o in self.discrepancies
            ],
        }


def _edges_json(edges) -> list[list[int]]:
    return [[e[0], e[1]] for e in edges]


class _Case:
    """One n, with the expensive oracle results computed at most once."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.g: ZdGraph = build_graph(n, oracle_cap=cap)

    @cached_property
    def eccentricities(self):
        return oracle.eccentricities(self.g)

    @cached_property
    def diameter(self):
        if not self.eccentricities:
            return None
        return max(r.eccentricity for r in self.eccentricities)

    def cut_edges(self) -> Outcome:
        thm = _edges_json(theorems.cut_edges_theorem(self.g.modulus))
        orc = _edges_json(oracle.bridges_oracle(self.g))
        return _compare(self.n, thm, orc, f"{len(thm)} cut edge(s) vs {len(orc)} bridge(s)")

    def center(self) -> Outcome:
        thm = theorems.center_theorem(self.g.modulus)
        records = self.eccentricities
        if records:
            lo = min(r.eccentricity for r in records)
            orc = [r.vertex for r in records if r.eccentricity == lo]
        else:
            orc = []
        return _compare(self.n, thm, orc, f"{len(thm)} vs {len(orc)} central vertices")

    def degree(self) -> Outcome:
        adj = self.g.adjacency()
        thm, orc = [], []
        for a, nb in adj.items():
            d = theorems.degree_theorem(self.g.modulus, a)
            if d != len(nb):
                thm.append([a, d])
                orc.append([a, len(nb)])
        detail = f"{len(adj)} vertices, {len(thm)} mismatched"
        return Outcome(self.n, DISAGREE if thm else AGREE, detail, thm, orc)

    def diameter_check(self) -> Outcome:
        thm = theorems.diameter_theorem(self.g.modulus)
        if thm is theorems.NOT_COVERED:
            return Outcome(self.n, SKIPPED, "no closed form for this n")
        return _compare(self.n, thm, self.diameter, f"diameter {thm} vs {self.diameter}")

    def connectivity(self) -> Outcome:
        connected = oracle.is_connected(self.g)
        diam = self.diameter if connected else None
        ok = connected and (diam is None or diam <= 3)
        orc = {"connected": connected, "diameter": diam}
        thm = {"connected": True, "diameter_at_most": 3}
        detail = f"connected={connected}, diameter={diam}"
        return Outcome(self.n, AGREE if ok else DISAGREE, detail, thm, orc)

    def prime_distance(self) -> Outcome:
        pairs = theorems.eligible_prime_pairs(self.g.modulus)
        if not pairs:
            return Outcome(self.n, SKIPPED, "no prime pair p, q with n > p*q")
        thm, orc = [], []
        for p, q in pairs:
            thm.append([p, q, theorems.prime_distance_theorem(self.g.modulus, p, q)])
            orc.append([p, q, oracle.distances_from(self.g, p).get(q)])
        return _compare(self.n, thm, orc, f"{len(pairs)} prime pair(s)")

    def run(self, check: CheckKind) -> Outcome:
        return {
            CheckKind.CUT_EDGES: self.cut_edges,
            CheckKind.CENTER: self.center,
            CheckKind.DEGREE: self.degree,
            CheckKind.DIAMETER: self.diameter_check,
            CheckKind.CONNECTIVITY: self.connectivity,
            CheckKind.PRIME_DISTANCE: self.prime_distance,
        }[check]()


def _compare(n: int, thm, orc, detail: str) -> Outcome:
    return Outcome(n, AGREE if thm == orc else DISAGREE, detail, thm, orc)


def evaluate(n: int, checks: tuple[CheckKind, ...], cap: int) -> list[Outcome]:
    """Every requested check for a single n, in the order given."""
    if n > cap:
        return [Outcome(n, SKIPPED, f"n exceeds oracle cap {cap}") for _ in checks]
    case = _Case(n, cap)
    return [case.run(c) for c in checks]


def _evaluate_args(args):
    return evaluate(*args)


def _validate(n_min: int, n_max: int, cap: int) -> None:
    if not 2 <= n_min <= n_max:
        raise DomainError(f"need 2 <= n_min <= n_max, got [{n_min}, {n_max}]")
    if n_max > cap:
        raise ResourceLimitError(n_max, cap)


def run_suite(
    n_min: int,
    n_max: int,
    checks: Iterable[CheckKind | str] = ALL_CHECKS,
    parallelism: int = 1,
    oracle_cap: int | None = None,
) -> list[VerificationReport]:
    cap = default_oracle_cap() if oracle_cap is None else oracle_cap
    kinds = tuple(c if isinstance(c, CheckKind) else CheckKind.parse(c) for c in checks)
    if not kinds:
        raise DomainError("no checks requested")
    if parallelism < 1:
        raise DomainError(f"parallelism must be positive, got {parallelism}")
    _validate(n_min, n_max, cap)

    tasks = [(n, kinds, cap) for n in range(n_min, n_max + 1)]
    if parallelism == 1:
        rows = map(_evaluate_args, tasks)
        reports = _assemble(kinds, n_min, n_max, rows)
    else:
        chunk = max(1, len(tasks) // (parallelism * 8))
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            # map() yields in submission order, i.e. ascending n.
            reports = _assemble(kinds, n_min, n_max, pool.map(_evaluate_args, tasks, chunksize=chunk))
    return reports


def _assemble(kinds, n_min, n_max, rows) -> list[VerificationReport]:
    reports = [VerificationReport(k, n_min, n_max) for k in kinds]
    for outcomes in rows:
        for report, outcome in zip(reports, outcomes):
            report.per_n.append(outcome)
    return reports


def run_check(
    n_min: int, n_max: int, check: CheckKind | str, oracle_cap: int | None = None
) -> VerificationReport:
    return run_suite(n_min, n_max, [check], 1, oracle_cap)[0]

"""Command-line entry point.

Exit codes: 0 success or agreement, 1 usage error, 2 the two engines
disagree, 3 the oracle cap would be exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Sequence

from . import oracle, theorems
from .arith import Modulus
from .errors import DomainError, ResourceLimitError, ZeroDivGraphError
from .verify import ALL_CHECKS, CheckKind, VerificationReport, run_suite
from .zdgraph import ZdGraph, build_graph, default_oracle_cap

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_LIMIT = 0, 1, 2, 3

# Above this size, center sets are summarized by their size only.
_LISTING_LIMIT = 200


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _fmt_set(values: Sequence[int]) -> str:
    return "{" + ",".join(str(v) for v in values) + "}"


def _fmt_edges(edges) -> str:
    return "{" + ",".join(f"({e[0]},{e[1]})" for e in edges) + "}"


def _fmt_answer(value: Any) -> str:
    if value is theorems.NOT_COVERED:
        return "not covered"
    if value is None:
        return "n/a"
    if isinstance(value, list):
        if value and isinstance(value[0], (tuple, list)):
            return _fmt_edges(value)
        return _fmt_set(value)
    return str(value)


def _jsonable(value: Any) -> Any:
    if value is theorems.NOT_COVERED:
        return "not-covered"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _cap(args) -> int:
    return args.oracle_max_n if args.oracle_max_n is not None else default_oracle_cap()


def _graph(args) -> ZdGraph:
    n = args.n
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return build_graph(n, oracle_cap=_cap(args))


def _method(args, g: ZdGraph) -> str:
    if args.method is not None:
        return args.method
    return "theorem" if g.n > g.oracle_cap else "both"


# -- queries ---------------------------------------------------------------


def _run_query(
    args,
    g: ZdGraph,
    name: str,
    params: list[int],
    by_theorem: Callable[[], Any],
    by_oracle: Callable[[], Any],
) -> int:
    method = _method(args, g)
    result: dict[str, Any] = {"n": g.n, "query": name, "args": params}
    code = EXIT_OK
    if method in ("theorem", "both"):
        result["theorem"] = by_theorem()
    if method in ("oracle", "both"):
        g.require_oracle_range()
        result["oracle"] = by_oracle()
    if method == "theorem" and result["theorem"] is theorems.NOT_COVERED:
        print(f"{name}: no closed form covers this case; use --method oracle", file=sys.stderr)
        return EXIT_USAGE
    if method == "both":
        thm = result["theorem"]
        if thm is theorems.NOT_COVERED:
            result["verdict"] = "NOT-COVERED"
        else:
            result["verdict"] = "AGREE" if thm == result["oracle"] else "DISAGREE"
            if result["verdict"] == "DISAGREE":
                code = EXIT_DISAGREE

    if args.out_format == "json":
        print(json.dumps({k: _jsonable(v) for k, v in result.items()}))
    elif method == "both":
        print(f"theorem: {_fmt_answer(result['theorem'])}")
        print(f"oracle:  {_fmt_answer(result['oracle'])}")
        print(result["verdict"])
    else:
        print(_fmt_answer(result[method]))
    return code


def cmd_neighbors(args) -> int:
    g = _graph(args)
    return _run_query(
        args, g, "neighbors", [args.a],
        lambda: g.neighbors(args.a),
        lambda: oracle.neighbors_by_scan(g, args.a),
    )


def cmd_degree(args) -> int:
    g = _graph(args)
    return _run_query(
        args, g, "degree", [args.a],
        lambda: theorems.degree_theorem(g.modulus, args.a),
        lambda: len(oracle.neighbors_by_scan(g, args.a)),
    )


def cmd_distance(args) -> int:
    g = _graph(args)
    a, b = args.a, args.b
    for v in (a, b):
        if not g.is_vertex(v):
            raise DomainError(f"{v} is not a vertex of the zero-divisor graph of Z_{g.n}")

    def by_theorem():
        if (a, b) in theorems.eligible_prime_pairs(g.modulus) or (
            b, a) in theorems.eligible_prime_pairs(g.modulus):
            return theorems.prime_distance_theorem(g.modulus, a, b)
        return theorems.NOT_COVERED

    return _run_query(
        args, g, "distance", [a, b], by_theorem,
        lambda: oracle.distances_from(g, a).get(b),
    )


def cmd_cut_edges(args) -> int:
    g = _graph(args)
    return _run_query(
        args, g, "cut-edges", [],
        lambda: [list(e) for e in theorems.cut_edges_theorem(g.modulus)],
        lambda: [list(e) for e in oracle.bridges_oracle(g)],
    )


def cmd_center(args) -> int:
    g = _graph(args)
    return _run_query(
        args, g, "center", [],
        lambda: theorems.center_theorem(g.modulus),
        lambda: oracle.center_oracle(g),
    )


# -- info / export -----------------------------------------------------------


def _info(g: ZdGraph) -> dict[str, Any]:
    m: Modulus = g.modulus
    in_range = g.n <= g.oracle_cap
    info: dict[str, Any] = {
        "n": g.n,
        "factorization": [[p, e] for p, e in m.factors],
        "vertices": g.vertex_count,
        "edges": sum(1 for _ in g.edges()) if in_range else None,
    }
    diam = theorems.diameter_theorem(m)
    if diam is not theorems.NOT_COVERED:
        info["diameter"], info["diameter_source"] = diam, "theorem"
    elif in_range:
        info["diameter"], info["diameter_source"] = oracle.diameter_oracle(g), "oracle"
    else:
        info["diameter"], info["diameter_source"] = None, None
    size = theorems.center_size_theorem(m)
    info["center_theorem"] = {
        "size": size,
        "members": theorems.center_theorem(m) if size <= _LISTING_LIMIT else None,
    }
    if in_range:
        c = oracle.center_oracle(g)
        info["center_oracle"] = {"size": len(c), "members": c if len(c) <= _LISTING_LIMIT else None}
    else:
        info["center_oracle"] = None
    return info


def cmd_info(args) -> int:
    g = _graph(args)
    info = _info(g)
    if args.out_format == "json":
        print(json.dumps(info))
        return EXIT_OK
    print(f"n: {g.n}")
    print(f"factorization: {g.modulus.factorization}")
    print(f"vertices: {info['vertices']}")
    if info["vertices"] == 0:
        print("empty graph")
    print(f"edges: {_fmt_answer(info['edges'])}")
    src = f" ({info['diameter_source']})" if info["diameter"] is not None else ""
    print(f"diameter: {_fmt_answer(info['diameter'])}{src}")
    for engine in ("theorem", "oracle"):
        c = info[f"center_{engine}"]
        if c is None:
            print(f"center ({engine}): n/a")
            continue
        members = f" {_fmt_set(c['members'])}" if c["members"] is not None else ""
        print(f"center ({engine}): size {c['size']}{members}")
    return EXIT_OK


def render_dot(g: ZdGraph) -> str:
    edges = list(g.edges())
    touched = {v for e in edges for v in e}
    lines = [f"graph zdg_{g.n} {{"]
    lines += [f"  {v};" for v in g.vertices() if v not in touched]
    lines += [f"  {e.lo} -- {e.hi};" for e in edges]
    lines.append("}")
    return "\n".join(lines)


def render_json(g: ZdGraph) -> str:
    edges = [[e.lo, e.hi] for e in g.edges()]
    doc = {"n": g.n, "vertices": list(g.vertices()), "edges": edges}
    return json.dumps(doc, separators=(",", ":"))


def render_csv(g: ZdGraph) -> str:
    return "\n".join(["lo,hi"] + [f"{e.lo},{e.hi}" for e in g.edges()])


_RENDERERS = {"dot": render_dot, "json": render_json, "csv": render_csv}


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise DomainError(f"cannot write {path}: {exc.strerror}") from None


def cmd_export(args) -> int:
    g = _graph(args)
    g.require_oracle_range()
    _emit(_RENDERERS[args.export_format](g) + "\n", args.out)
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def report_document(n_min: int, n_max: int, reports: list[VerificationReport]) -> dict[str, Any]:
    return {"range": [n_min, n_max], "checks": [_jsonable_report(r) for r in reports]}


def _jsonable_report(r: VerificationReport) -> dict[str, Any]:
    d = r.to_dict()
    d["discrepancies"] = [{k: _jsonable(v) for k, v in x.items()} for x in d["discrepancies"]]
    return d


def serialize_reports(n_min: int, n_max: int, reports: list[VerificationReport]) -> str:
    return json.dumps(report_document(n_min, n_max, reports), indent=2) + "\n"


def cmd_verify(args) -> int:
    if args.check:
        checks = [CheckKind.parse(c) for c in args.check.split(",") if c.strip()]
    else:
        checks = list(ALL_CHECKS)
    if args.jobs < 1:
        raise DomainError(f"--jobs must be positive, got {args.jobs}")
    reports = run_suite(args.min, args.max, checks, args.jobs, _cap(args))
    text = serialize_reports(args.min, args.max, reports)
    if args.report:
        _emit(text, args.report)
        for r in reports:
            s = r.summary
            ns = ",".join(str(o.n) for o in r.discrepancies)
            print(f"{r.check.value}: agree={s['agree']} disagree={s['disagree']} "
                  f"skipped={s['skipped']}" + (f" at n={ns}" if ns else ""))
    else:
        sys.stdout.write(text)
    return EXIT_DISAGREE if any(r.discrepancies for r in reports) else EXIT_OK


# -- parser ------------------------------------------------------------------


def _add_globals(p: argparse.ArgumentParser, *, with_format: bool, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--method", choices=("theorem", "oracle", "both"), default=default,
                   help="engine to answer with (default: both within the oracle cap, else theorem)")
    if with_format:
        p.add_argument("--format", dest="out_format", choices=("text", "json"),
                       default=argparse.SUPPRESS if suppress else "text")
    p.add_argument("--oracle-max-n", type=int, default=default,
                   help="largest n the brute-force engine may materialize "
                        "(overrides ZDG_ORACLE_MAX_N)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zdg", description="Query and cross-check zero-divisor graphs of Z_n.")
    _add_globals(parser, with_format=True, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, *, with_format=True):
        sp = sub.add_parser(name, help=help_text)
        _add_globals(sp, with_format=with_format, suppress=True)
        sp.set_defaults(func=func)
        return sp

    sp = add("info", cmd_info, "summary of the graph")
    sp.add_argument("n", type=int)
    sp = add("neighbors", cmd_neighbors, "neighbors of a vertex")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int)
    sp = add("degree", cmd_degree, "degree of a vertex")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int)
    sp = add("distance", cmd_distance, "distance between two vertices")
    sp.add_argument("n", type=int)
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    sp = add("cut-edges", cmd_cut_edges, "cut edges (bridges)")
    sp.add_argument("n", type=int)
    sp = add("center", cmd_center, "central vertices")
    sp.add_argument("n", type=int)

    sp = add("export", cmd_export, "write the edge list", with_format=False)
    sp.add_argument("n", type=int)
    sp.add_argument("--format", dest="export_format", choices=tuple(_RENDERERS), default="dot")
    sp.add_argument("--out", default=None, help="output path (default: stdout)")

    sp = add("verify", cmd_verify, "sweep a range of n through both engines")
    sp.add_argument("--min", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.add_argument("--check", default=None,
                    help="comma-separated checks: " + ",".join(c.value for c in CheckKind))
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--report", default=None, help="write the JSON report here")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"zdg: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (DomainError, ZeroDivGraphError) as exc:
        print(f"zdg: {exc}", file=sys.stderr)
        return EXIT_USAGE

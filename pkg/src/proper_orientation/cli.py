"""``proper-orientation`` command line.

Exit codes: 0 success / yes, 1 certified no, 2 input error, 3 resource cap.
Machine-readable results go to stdout, one ``key value`` per line after the
headline; commentary goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from . import constructions as cons
from .bounds import bounds
from .errors import CapExceeded, OrientationError, ParseError, PreconditionError
from .graph import Graph, first_violation, is_bipartite, max_indegree, regularity
from .io import format_edge_coloring, format_edge_list, format_orientation, parse_orientation, read_graph, to_dot
from .reduction import (
    DEFAULT_CLAUSE_GADGET,
    build_reduction,
    gadget_contract_check,
    incidence_graph,
    orientation_to_assignment,
    parse_cnf,
)
from .solver import SOLVER_CAP, decide, proper_orientation_number

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass
class RunReport:
    command: str
    input_summary: dict[str, Any] = field(default_factory=dict)
    result: dict[str, Any] = field(default_factory=dict)
    timing: float = 0.0
    headline: str = ""

    def emit(self, as_json: bool) -> None:
        if as_json:
            print(json.dumps(asdict(self), default=str))
            return
        if self.headline:
            print(self.headline)
        for key, value in self.result.items():
            print(f"{key} {value}")


def summarize(g: Graph) -> dict[str, Any]:
    return {
        "n": g.n,
        "m": g.m,
        "regularity": regularity(g),
        "bipartite": is_bipartite(g) is not None,
    }


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _write(path: Path, text: str) -> str:
    path.write_text(text)
    return str(path)


def _witness_path(args, default_from: str, suffix: str = ".orient") -> Path:
    return Path(args.output) if args.output else Path(default_from + suffix)


def cmd_solve(args) -> tuple[RunReport, int]:
    g = read_graph(args.graph)
    report = RunReport("solve", summarize(g))
    res = proper_orientation_number(g, cap=args.cap, parallel=args.parallel)
    b = bounds(g)
    path = _witness_path(args, args.graph)
    report.headline = str(res.value)
    report.result = {
        "witness": _write(path, format_orientation(g, res.witness)),
        "lower": b.lower,
        "lower_reason": b.lower_reason,
        "upper": b.upper,
        "nodes": res.nodes_explored,
        "elapsed": f"{res.elapsed:.6f}",
    }
    return report, EXIT_OK


def cmd_decide(args) -> tuple[RunReport, int]:
    g = read_graph(args.graph)
    report = RunReport("decide", summarize(g))
    if args.k < 0:
        raise PreconditionError("k must be non-negative")
    d = decide(g, args.k, parallel=args.parallel)
    if d is None:
        report.headline = "no"
        return report, EXIT_NO
    report.headline = "yes"
    path = _witness_path(args, args.graph)
    report.result = {
        "witness": _write(path, format_orientation(g, d)),
        "max_indegree": max_indegree(d),
    }
    return report, EXIT_OK


def cmd_construct(args) -> tuple[RunReport, int]:
    g = read_graph(args.graph)
    report = RunReport("construct", summarize(g))
    path = _witness_path(args, args.graph)
    out: dict[str, Any] = {"mode": args.mode}
    target = g
    if args.mode == "bipartite-odd-regular":
        d = cons.orient_bipartite_odd_regular(g)
    elif args.mode == "line-graph":
        coloring, label = cons.edge_coloring_exact(g)
        if label is not cons.ClassLabel.CLASS1:
            raise PreconditionError(f"graph is {label.value}: no {g.max_degree}-edge-colouring exists")
        target, d = cons.orient_line_graph(g, coloring)
        out["line_graph"] = _write(Path(str(path) + ".graph"), format_edge_list(target))
        out["edge_coloring"] = _write(Path(str(path) + ".colors"), format_edge_coloring(list(coloring.colors)))
    elif args.mode == "greedy":
        d, ratio = cons.greedy_orientation(g)
        if ratio.ratio is not None:
            out["ratio"] = f"{ratio.max_indegree}/{ratio.lower_bound}={ratio.ratio:.6f}"
            out["theta"] = f"{ratio.theta:.6f}"
            out["within_theta"] = str(ratio.within_theta).lower()
    else:
        res = cons.cubic_proper_orientation_number(g)
        d = res.witness
        out["value"] = res.value
    report.headline = str(max_indegree(d))
    report.result = {"max_indegree": max_indegree(d), **out,
                     "witness": _write(path, format_orientation(target, d))}
    return report, EXIT_OK


def cmd_reduce(args) -> tuple[RunReport, int]:
    try:
        text = Path(args.cnf).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.cnf}: {exc.strerror}") from None
    phi = parse_cnf(text)
    rg = build_reduction(phi)
    g = rg.graph
    report = RunReport("reduce", summarize(g))
    path = Path(args.output) if args.output else Path(args.cnf + ".graph")
    _, euler_ok = incidence_graph(phi)
    report.result = {
        "graph": _write(path, format_edge_list(g)),
        "roles": _write(Path(str(path) + ".roles.json"), json.dumps(rg.role_map(), indent=1) + "\n"),
        "euler_planar_ok": str(euler_ok).lower(),
        "gadget_contract": "pass" if gadget_contract_check(DEFAULT_CLAUSE_GADGET).passed else "fail",
    }
    report.headline = f"{g.n} {g.m}"
    if not args.solve:
        return report, EXIT_OK
    d = decide(g, 2, parallel=args.parallel)
    if d is None:
        report.headline = "UNSAT"
        return report, EXIT_NO
    gamma = orientation_to_assignment(phi, d)
    report.headline = "SAT"
    report.result["assignment"] = " ".join(str(i if v else -i) for i, v in enumerate(gamma, 1))
    report.result["witness"] = _write(Path(str(path) + ".orient"), format_orientation(g, d))
    return report, EXIT_OK


def cmd_verify(args) -> tuple[RunReport, int]:
    g = read_graph(args.graph)
    report = RunReport("verify", summarize(g))
    try:
        text = Path(args.orientation).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.orientation}: {exc.strerror}") from None
    d = parse_orientation(text, g)
    bad = first_violation(g, d)
    report.result = {"max_indegree": max_indegree(d)}
    if bad is not None:
        u, v = g.edges[bad]
        report.headline = f"violation edge ({u},{v}): {d.indegrees[u]} = {d.indegrees[v]}"
        return report, EXIT_NO
    if max_indegree(d) > args.k:
        report.headline = f"exceeds max_indegree {max_indegree(d)} > {args.k}"
        return report, EXIT_NO
    report.headline = "ok"
    return report, EXIT_OK


def cmd_export_dot(args) -> tuple[RunReport, int]:
    g = read_graph(args.graph)
    d = None
    roles = None
    if args.orientation:
        try:
            d = parse_orientation(Path(args.orientation).read_text(), g)
        except OSError as exc:
            raise ParseError(f"cannot read {args.orientation}: {exc.strerror}") from None
    if args.roles:
        try:
            raw = json.loads(Path(args.roles).read_text())
            roles = {int(k): str(v) for k, v in raw.items()}
        except (OSError, ValueError) as exc:
            raise ParseError(f"bad role sidecar {args.roles}: {exc}") from None
    sys.stdout.write(to_dot(g, d, roles))
    return RunReport("export-dot", summarize(g)), EXIT_OK


def cmd_bounds(args) -> tuple[RunReport, int]:
    g = read_graph(args.graph)
    b = bounds(g)
    report = RunReport("bounds", summarize(g), headline=f"{b.lower} {b.upper}")
    report.result = {
        "lower_reason": b.lower_reason,
        "upper_reason": b.upper_reason,
        "chromatic": b.chromatic if b.chromatic is not None else "omitted",
    }
    return report, EXIT_OK


def cmd_gadget_check(args) -> tuple[RunReport, int]:
    rep = gadget_contract_check(DEFAULT_CLAUSE_GADGET)
    report = RunReport("gadget-check", headline="pass" if rep.passed else "fail")
    report.result = {
        "pattern_" + "".join(map(str, p)): "extends" if ok else "blocked"
        for p, ok in rep.extensible.items()
    }
    return report, EXIT_OK if rep.passed else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="proper-orientation", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit the run report as one JSON object")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="exact proper orientation number with witness")
    s.add_argument("graph")
    s.add_argument("--cap", type=int, default=SOLVER_CAP, help="maximum edge count (default %(default)s)")
    s.add_argument("--parallel", action="store_true")
    s.add_argument("--output", help="witness path (default GRAPH.orient)")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("decide", help="is there a proper orientation with max indegree <= k?")
    s.add_argument("graph")
    s.add_argument("k", type=int)
    s.add_argument("--parallel", action="store_true")
    s.add_argument("--output")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("construct", help="run one of the constructive orientations")
    s.add_argument("graph")
    s.add_argument("--mode", required=True, choices=["bipartite-odd-regular", "line-graph", "greedy", "cubic"])
    s.add_argument("--output")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("reduce", help="build the 3-SAT reduction graph from DIMACS CNF")
    s.add_argument("cnf")
    s.add_argument("--solve", action="store_true", help="also decide max indegree 2 and extract an assignment")
    s.add_argument("--parallel", action="store_true")
    s.add_argument("--output", help="graph path (default CNF.graph)")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("verify", help="check an orientation file")
    s.add_argument("graph")
    s.add_argument("orientation")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("export-dot", help="Graphviz DOT on stdout")
    s.add_argument("graph")
    s.add_argument("orientation", nargs="?")
    s.add_argument("--roles", help="JSON role sidecar written by 'reduce'")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("bounds", help="lower/upper bounds on the proper orientation number")
    s.add_argument("graph")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("gadget-check", help="exhaustively check the clause gadget contract")
    s.set_defaults(func=cmd_gadget_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report, code = args.func(args)
    except CapExceeded as exc:
        _note(f"error: {exc}")
        return EXIT_CAP
    except OrientationError as exc:
        _note(f"error: {exc}")
        return EXIT_INPUT
    report.timing = time.perf_counter() - t0
    if report.input_summary:
        s = report.input_summary
        _note(f"{report.command}: n={s['n']} m={s['m']} regular={s['regularity']} "
              f"bipartite={s['bipartite']} ({report.timing:.3f}s)")
    if report.command != "export-dot":
        report.emit(args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())

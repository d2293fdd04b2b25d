"""Plain-text formats: edge lists, orientations, edge colourings and DOT.

Edge list::

    n m
    u v        # m lines, 0-indexed

Orientation: ``m`` lines ``tail head``, line ``i`` describing edge ``i``.
Edge colouring: ``m`` lines ``edge_index color``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Mapping

from .errors import GraphError, ParseError
from .graph import Graph, Orientation, build_graph, orient_by_arcs


def _data_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _ints(tokens: list[str], lineno: int, count: int) -> list[int]:
    if len(tokens) != count:
        raise ParseError(f"line {lineno}: expected {count} integers, got {len(tokens)}")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer token in {' '.join(tokens)!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = _data_lines(text)
    if not lines:
        raise ParseError("empty edge list")
    lineno, head = lines[0]
    n, m = _ints(head, lineno, 2)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges, found {len(body)}")
    pairs = [_ints(tokens, ln, 2) for ln, tokens in body]
    try:
        return build_graph(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    rows = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(rows) + "\n"


def parse_orientation(text: str, g: Graph) -> Orientation:
    lines = _data_lines(text)
    if len(lines) != g.m:
        raise ParseError(f"orientation has {len(lines)} lines, graph has {g.m} edges")
    arcs = [_ints(tokens, ln, 2) for ln, tokens in lines]
    try:
        return orient_by_arcs(g, arcs)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_orientation(g: Graph, d: Orientation) -> str:
    return "".join(f"{t} {h}\n" for t, h in d.arcs(g))


def format_edge_coloring(colors: list[int]) -> str:
    return "".join(f"{e} {c}\n" for e, c in enumerate(colors))


def parse_edge_coloring(text: str, g: Graph) -> list[int]:
    lines = _data_lines(text)
    if len(lines) != g.m:
        raise ParseError(f"colouring has {len(lines)} lines, graph has {g.m} edges")
    colors = [0] * g.m
    for ln, tokens in lines:
        e, c = _ints(tokens, ln, 2)
        if not 0 <= e < g.m:
            raise ParseError(f"line {ln}: edge index {e} out of range")
        colors[e] = c
    return colors


def read_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


_ROLE_SHAPES = {
    "PositiveLiteral": "box",
    "NegativeLiteral": "box",
    "TriangleVertex": "triangle",
    "GadgetVertex": "ellipse",
}


def to_dot(
    g: Graph,
    d: Orientation | None = None,
    roles: Mapping[int, str] | None = None,
    name: str = "G",
) -> str:
    """Graphviz source; directed with indegree labels when ``d`` is given."""
    directed = d is not None
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in range(g.n):
        attrs = []
        label = str(v)
        if roles and v in roles:
            role = roles[v]
            label += f"\\n{role}"
            attrs.append(f"shape={_ROLE_SHAPES.get(role.split('(')[0], 'ellipse')}")
        if directed:
            label += f"\\nin={d.indegrees[v]}"
        attrs.insert(0, f'label="{label}"')
        lines.append(f"  {v} [{', '.join(attrs)}];")
    if directed:
        lines.extend(f"  {t} -> {h};" for t, h in d.arcs(g))
    else:
        lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"

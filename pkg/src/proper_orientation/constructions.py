"""Constructive orientations for regular graphs.

* exact edge colouring and Class 1 / Class 2 classification,
* perfect matchings and the matching decomposition of regular bipartite graphs,
* the optimal orientation of odd-regular bipartite graphs,
* the line-graph orientation driven by a Delta-edge-colouring,
* the greedy max-degree-first orientation,
* the polynomial algorithm for cubic graphs.
"""

from __future__ import annotations

import enum
import sys
import time
from dataclasses import dataclass

from .bounds import regular_lower_bound
from .errors import CapExceeded, PreconditionError
from .graph import (
    Graph,
    Orientation,
    VertexPartition,
    is_bipartite,
    line_graph,
    orient_by_heads,
    regularity,
)
from .solver import SolveResult, edge_order

EDGE_COLORING_CAP = 60


class ClassLabel(enum.Enum):
    CLASS1 = "Class1"
    CLASS2 = "Class2"


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    K: int


def is_proper_edge_coloring(g: Graph, colors) -> bool:
    if len(colors) != g.m:
        return False
    for v in range(g.n):
        seen = [colors[e] for e in g.incident_edges(v)]
        if len(seen) != len(set(seen)):
            return False
    return True


def _edge_color(g: Graph, K: int) -> list[int] | None:
    pos = {e: i for i, e in enumerate(edge_order(g))}
    order = sorted(range(g.m), key=lambda e: (-max(g.degree(x) for x in g.edges[e]), pos[e]))
    colors = [0] * g.m
    inc = [g.incident_edges(v) for v in range(g.n)]

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        u, v = g.edges[e]
        taken = {colors[f] for f in inc[u]} | {colors[f] for f in inc[v]}
        for c in range(1, min(used + 1, K) + 1):
            if c not in taken:
                colors[e] = c
                if place(i + 1, max(used, c)):
                    return True
        colors[e] = 0
        return False

    if sys.getrecursionlimit() < g.m + 200:
        sys.setrecursionlimit(g.m + 200)
    return colors if place(0, 0) else None


def edge_coloring_exact(g: Graph, cap: int = EDGE_COLORING_CAP) -> tuple[EdgeColoring, ClassLabel]:
    """A minimum proper edge colouring and the graph's class.

    Tries Delta colours, then Delta + 1. A new colour is only ever opened in
    increasing order, so a failed Delta search is an exhaustive certificate
    that the graph is Class 2.
    """
    if g.m > cap:
        raise CapExceeded(f"edge colouring: m={g.m} exceeds cap {cap}")
    delta = g.max_degree
    if g.m == 0:
        return EdgeColoring((), 0), ClassLabel.CLASS1
    colors = _edge_color(g, delta)
    if colors is not None:
        return EdgeColoring(tuple(colors), delta), ClassLabel.CLASS1
    colors = _edge_color(g, delta + 1)
    assert colors is not None, "Vizing's theorem violated"
    return EdgeColoring(tuple(colors), delta + 1), ClassLabel.CLASS2


# -- matchings -----------------------------------------------------------------


def _matching_on(g: Graph, part: VertexPartition, allowed: set[int]) -> set[int]:
    xs, ys = part.x, part.y
    if len(xs) != len(ys):
        raise PreconditionError(f"sides have sizes {len(xs)} and {len(ys)}; no perfect matching")
    adj = {x: sorted((u, e) for u, e in g.adjacency[x] if e in allowed) for x in xs}
    match_y: dict[int, tuple[int, int]] = {}

    def augment(x: int, visited: set[int]) -> bool:
        for y, e in adj[x]:
            if y not in match_y:
                match_y[y] = (x, e)
                return True
        for y, e in adj[x]:
            if y in visited:
                continue
            visited.add(y)
            if y not in match_y or augment(match_y[y][0], visited):
                match_y[y] = (x, e)
                return True
        return False

    for x in xs:
        if not augment(x, set()):
            raise PreconditionError(f"no perfect matching: vertex {x} cannot be matched")
    return {e for _, e in match_y.values()}


def perfect_matching(g: Graph, part: VertexPartition) -> set[int]:
    """Edge indices of a perfect matching (augmenting paths, lowest index first)."""
    return _matching_on(g, part, set(range(g.m)))


@dataclass(frozen=True)
class MatchingDecomposition:
    matchings: tuple[frozenset[int], ...]


def _regular_bipartite(g: Graph) -> tuple[int, VertexPartition]:
    r = regularity(g)
    if not r:
        raise PreconditionError("graph is not r-regular with r >= 1")
    part = is_bipartite(g)
    if part is None:
        raise PreconditionError("graph is not bipartite")
    return r, part


def matching_decomposition(g: Graph) -> MatchingDecomposition:
    """Split an r-regular bipartite graph into r perfect matchings.

    Removing a perfect matching leaves an (r-1)-regular bipartite graph, so by
    Koenig's theorem the extraction can be repeated r times.
    """
    r, part = _regular_bipartite(g)
    remaining = set(range(g.m))
    out = []
    for _ in range(r):
        mt = _matching_on(g, part, remaining)
        remaining -= mt
        out.append(frozenset(mt))
    return MatchingDecomposition(tuple(out))


def orient_bipartite_odd_regular(g: Graph) -> Orientation:
    """Optimal proper orientation of a (2k+1)-regular bipartite graph.

    The first k+1 matchings point from X to Y and the remaining k from Y to
    X, so Y-vertices get indegree k+1 and X-vertices get k.
    """
    r, part = _regular_bipartite(g)
    if r % 2 == 0:
        raise PreconditionError(f"graph is {r}-regular; odd regularity required")
    k = (r - 1) // 2
    dec = matching_decomposition(g)
    heads = [0] * g.m
    for i, mt in enumerate(dec.matchings):
        for e in mt:
            u, v = g.edges[e]
            x, y = (u, v) if part.side[u] == "X" else (v, u)
            heads[e] = y if i <= k else x
    return orient_by_heads(g, heads)


# -- line graphs ---------------------------------------------------------------


def orient_line_graph(g: Graph, c: EdgeColoring) -> tuple[Graph, Orientation]:
    """Proper orientation of L(G) with maximum indegree 3k.

    ``g`` must be (2k+1)-regular and ``c`` a proper colouring with 2k+1
    colours. Pairs of colours more than k apart are oriented from the lower
    colour to the higher; for closer pairs the two colour classes induce even
    cycles in L(G), each oriented as a directed cycle starting from its
    smallest vertex towards that vertex's smaller neighbour. Vertex ``e`` of
    L(G) ends with indegree ``c(e) + k - 1``.
    """
    r = regularity(g)
    if r is None or r % 2 == 0:
        raise PreconditionError("graph is not odd-regular")
    k = (r - 1) // 2
    if len(c.colors) != g.m or not is_proper_edge_coloring(g, c.colors):
        raise PreconditionError("edge colouring is not proper")
    if c.K != r or set(c.colors) != set(range(1, r + 1)):
        raise PreconditionError(f"edge colouring must use exactly {r} colours")
    lg, _ = line_graph(g)
    col = c.colors
    heads = [-1] * lg.m
    near: dict[tuple[int, int], list[int]] = {}
    for f, (a, b) in enumerate(lg.edges):
        if abs(col[a] - col[b]) > k:
            heads[f] = a if col[a] > col[b] else b
        else:
            near.setdefault((min(col[a], col[b]), max(col[a], col[b])), []).append(f)
    for (p, q), fs in sorted(near.items()):
        adj: dict[int, list[tuple[int, int]]] = {}
        for f in fs:
            a, b = lg.edges[f]
            adj.setdefault(a, []).append((b, f))
            adj.setdefault(b, []).append((a, f))
        members = [e for e in range(g.m) if col[e] in (p, q)]
        for e in members:
            if len(adj.get(e, ())) != 2:
                raise PreconditionError(f"H_{{{p},{q}}} is not 2-regular at line-graph vertex {e}")
        done: set[int] = set()
        for start in members:
            if start in done:
                continue
            prev, cur = start, min(adj[start])[0]
            heads[min(adj[start])[1]] = cur
            done.add(start)
            while cur != start:
                if cur in done:
                    raise PreconditionError(f"H_{{{p},{q}}} component at {start} is not a cycle")
                done.add(cur)
                (n1, f1), (n2, f2) = adj[cur]
                nxt, f = (n2, f2) if n1 == prev else (n1, f1)
                heads[f] = nxt
                prev, cur = cur, nxt
    return lg, orient_by_heads(lg, heads)


# -- greedy --------------------------------------------------------------------


@dataclass(frozen=True)
class GreedyReport:
    max_indegree: int
    regular_degree: int | None
    lower_bound: int | None
    ratio: float | None
    theta: float | None

    @property
    def within_theta(self) -> bool | None:
        if self.ratio is None:
            return None
        return self.ratio <= self.theta + 1e-12


def greedy_orientation(g: Graph) -> tuple[Orientation, GreedyReport]:
    """Repeatedly point every remaining edge at a max-degree vertex and delete it.

    Ties go to the lowest index. A vertex taken earlier always ends with a
    strictly larger indegree than its later neighbours, so the result is
    proper.
    """
    deg = g.degrees()
    alive = [True] * g.n
    heads = [-1] * g.m
    for _ in range(g.n):
        v = max((x for x in range(g.n) if alive[x]), key=lambda x: (deg[x], -x))
        alive[v] = False
        for u, e in g.adjacency[v]:
            if alive[u]:
                heads[e] = v
                deg[u] -= 1
        deg[v] = 0
    d = orient_by_heads(g, heads)
    achieved = max(d.indegrees, default=0)
    r = regularity(g)
    lower = regular_lower_bound(g)
    if lower:
        report = GreedyReport(achieved, r, lower, achieved / lower, 2 - 2 / (r + 2))
    else:
        report = GreedyReport(achieved, r, None, None, None)
    return d, report


# -- cubic graphs --------------------------------------------------------------


def cubic_proper_orientation_number(g: Graph) -> SolveResult:
    """Proper orientation number of a 3-regular graph in polynomial time.

    Per component: K4 needs 3 (transitive tournament), a bipartite component
    needs 2 (matching construction), anything else needs exactly 3 and the
    greedy orientation attains it.
    """
    t0 = time.perf_counter()
    if regularity(g) != 3:
        raise PreconditionError("graph is not 3-regular")
    heads = [-1] * g.m
    value = 0
    for comp in g.components():
        sub, back = g.subgraph(comp)
        if sub.n == 4:
            # K4: orient every edge from lower to higher index
            for e in back:
                heads[e] = max(g.edges[e])
            value = max(value, 3)
            continue
        if is_bipartite(sub) is not None:
            d = orient_bipartite_odd_regular(sub)
            value = max(value, 2)
        else:
            d, _ = greedy_orientation(sub)
            value = max(value, 3)
        for f, e in enumerate(back):
            heads[e] = comp[d.head(sub, f)]
    return SolveResult(value, orient_by_heads(g, heads), 0, time.perf_counter() - t0)

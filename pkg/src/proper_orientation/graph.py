"""Simple undirected graphs, edge orientations and a few structural queries.

Vertices are the integers ``0..n-1``. Edges keep the order in which they were
given and are identified by their index, so an orientation is just one boolean
per edge: ``False`` means the first listed endpoint is the tail.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def neighbors(self, v: int) -> list[int]:
        return [u for u, _ in self.adjacency[v]]

    def incident_edges(self, v: int) -> list[int]:
        return [e for _, e in self.adjacency[v]]

    def has_edge(self, u: int, v: int) -> bool:
        return any(w == v for w, _ in self.adjacency[u])

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for u, _ in self.adjacency[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            out.append(sorted(comp))
        return out

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled ``0..len(vertices)-1``.

        Returns the subgraph and the list mapping each of its edges back to
        the index of the same edge in ``self``.
        """
        index = {v: i for i, v in enumerate(vertices)}
        pairs = []
        back = []
        for e, (u, v) in enumerate(self.edges):
            if u in index and v in index:
                pairs.append((index[u], index[v]))
                back.append(e)
        return build_graph(len(vertices), pairs), back


def build_graph(vertex_count: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Validate ``edge_pairs`` and build an immutable simple graph."""
    if vertex_count < 0:
        raise GraphError(f"negative vertex count {vertex_count}")
    edges: list[Edge] = []
    seen: set[frozenset[int]] = set()
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for pair in edge_pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"vertex index out of range in edge ({u},{v})")
        if u == v:
            raise GraphError(f"loop detected at vertex {u}")
        key = frozenset((u, v))
        if key in seen:
            raise GraphError(f"duplicate edge detected: ({u},{v})")
        seen.add(key)
        e = len(edges)
        edges.append((u, v))
        adjacency[u].append((v, e))
        adjacency[v].append((u, e))
    return Graph(vertex_count, tuple(edges), tuple(tuple(a) for a in adjacency))


@dataclass(frozen=True)
class Orientation:
    directions: tuple[bool, ...]
    indegrees: tuple[int, ...]

    def head(self, g: Graph, e: int) -> int:
        u, v = g.edges[e]
        return u if self.directions[e] else v

    def tail(self, g: Graph, e: int) -> int:
        u, v = g.edges[e]
        return v if self.directions[e] else u

    def arcs(self, g: Graph) -> list[Edge]:
        """``(tail, head)`` for every edge, in edge order."""
        return [(v, u) if d else (u, v) for (u, v), d in zip(g.edges, self.directions)]


def orient(g: Graph, directions: Sequence[bool]) -> Orientation:
    if len(directions) != g.m:
        raise GraphError(f"orientation has {len(directions)} entries, graph has {g.m} edges")
    indeg = [0] * g.n
    for (u, v), d in zip(g.edges, directions):
        indeg[u if d else v] += 1
    return Orientation(tuple(bool(d) for d in directions), tuple(indeg))


def orient_by_heads(g: Graph, heads: Sequence[int]) -> Orientation:
    """Orientation in which edge ``e`` points into ``heads[e]``."""
    if len(heads) != g.m:
        raise GraphError(f"got {len(heads)} heads for {g.m} edges")
    dirs = []
    for (u, v), h in zip(g.edges, heads):
        if h not in (u, v):
            raise GraphError(f"{h} is not an endpoint of edge ({u},{v})")
        dirs.append(h == u)
    return orient(g, dirs)


def orient_by_arcs(g: Graph, arcs: Sequence[Sequence[int]]) -> Orientation:
    """Orientation from ``(tail, head)`` pairs given in edge order."""
    if len(arcs) != g.m:
        raise GraphError(f"got {len(arcs)} arcs for {g.m} edges")
    heads = []
    for e, (t, h) in enumerate(arcs):
        if {t, h} != set(g.edges[e]):
            raise GraphError(f"arc {e} ({t},{h}) does not match edge {g.edges[e]}")
        heads.append(h)
    return orient_by_heads(g, heads)


def _check_sizes(g: Graph, d: Orientation) -> None:
    if len(d.directions) != g.m or len(d.indegrees) != g.n:
        raise GraphError("orientation does not belong to this graph (size mismatch)")


def first_violation(g: Graph, d: Orientation) -> int | None:
    """Index of the first edge whose endpoints share an indegree, if any."""
    _check_sizes(g, d)
    for e, (u, v) in enumerate(g.edges):
        if d.indegrees[u] == d.indegrees[v]:
            return e
    return None


def is_proper_orientation(g: Graph, d: Orientation) -> bool:
    return first_violation(g, d) is None


def max_indegree(d: Orientation) -> int:
    return max(d.indegrees, default=0)


@dataclass(frozen=True)
class VertexPartition:
    """Bipartition: ``side[v]`` is ``"X"`` or ``"Y"``."""

    side: tuple[str, ...]

    @property
    def x(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == "X"]

    @property
    def y(self) -> list[int]:
        return [v for v, s in enumerate(self.side) if s == "Y"]


def is_bipartite(g: Graph) -> VertexPartition | None:
    """BFS 2-colouring; the smallest vertex of each component goes to X."""
    side: list[str | None] = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = "X"
        queue = deque([s])
        while queue:
            v = queue.popleft()
            other = "Y" if side[v] == "X" else "X"
            for u, _ in g.adjacency[v]:
                if side[u] is None:
                    side[u] = other
                    queue.append(u)
                elif side[u] != other:
                    return None
    return VertexPartition(tuple(side))  # type: ignore[arg-type]


def regularity(g: Graph) -> int | None:
    degs = set(g.degrees())
    if len(degs) > 1:
        return None
    return degs.pop() if degs else 0


def line_graph(g: Graph) -> tuple[Graph, list[int]]:
    """Line graph of ``g``; vertex ``i`` of the result is edge ``i`` of ``g``.

    Edges of the line graph are listed in lexicographic order of their
    endpoint pairs. The returned map sends each edge of ``g`` to its vertex.
    """
    pairs: set[tuple[int, int]] = set()
    for v in range(g.n):
        inc = sorted(g.incident_edges(v))
        for i, a in enumerate(inc):
            for b in inc[i + 1:]:
                pairs.add((a, b))
    return build_graph(g.m, sorted(pairs)), list(range(g.m))

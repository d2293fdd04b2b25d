"""Exact proper orientation number by branch and bound.

:func:`decide` answers "is there a proper orientation with maximum indegree
at most k?" with a depth-first search over the edges. Edges are visited so
that each vertex's incident edges are contiguous (BFS order of vertices),
which completes vertices early and lets the pruning rules fire:

(a) a vertex's indegree exceeds ``k``;
(b) two adjacent, fully decided vertices have equal indegree;
(c) every indegree a vertex can still reach in ``[current, current +
    undecided]`` capped at ``k`` is already taken by a fully decided
    neighbour.
"""

from __future__ import annotations

import sys
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .bounds import CHROMATIC_CAP, bounds
from .errors import CapExceeded, PreconditionError
from .graph import Graph, Orientation, orient

SOLVER_CAP = 40


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Orientation
    nodes_explored: int
    elapsed: float


def edge_order(g: Graph) -> list[int]:
    """Edges grouped by vertex, vertices in BFS order from the smallest index."""
    order: list[int] = []
    placed = [False] * g.m
    seen = [False] * g.n
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u, e in sorted(g.adjacency[v]):
                if not placed[e]:
                    placed[e] = True
                    order.append(e)
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


class _Search:
    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.order = edge_order(g)
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.indeg = [0] * g.n
        self.rem = g.degrees()
        self.heads = [-1] * g.m
        self.nodes = 0

    def feasible(self, w: int) -> bool:
        a = self.indeg[w]
        k = self.k
        if a > k:
            return False
        indeg = self.indeg
        rem = self.rem
        taken = 0
        for u in self.nbrs[w]:
            if rem[u] == 0:
                taken |= 1 << indeg[u]
        r = rem[w]
        if r == 0:
            return not (taken >> a) & 1
        hi = a + r if a + r < k else k
        for x in range(a, hi + 1):
            if not (taken >> x) & 1:
                return True
        return False

    def consistent(self, u: int, v: int) -> bool:
        if not (self.feasible(u) and self.feasible(v)):
            return False
        for x in (u, v):
            if self.rem[x] == 0:
                for w in self.nbrs[x]:
                    if not self.feasible(w):
                        return False
        return True

    def assign(self, e: int, h: int) -> bool:
        u, v = self.g.edges[e]
        self.indeg[h] += 1
        self.rem[u] -= 1
        self.rem[v] -= 1
        self.heads[e] = h
        return self.consistent(u, v)

    def unassign(self, e: int, h: int) -> None:
        u, v = self.g.edges[e]
        self.indeg[h] -= 1
        self.rem[u] += 1
        self.rem[v] += 1
        self.heads[e] = -1

    def run(self, start: int = 0) -> bool:
        order = self.order
        edges = self.g.edges
        m = len(order)

        def dfs(i: int) -> bool:
            self.nodes += 1
            if i == m:
                return True
            e = order[i]
            u, v = edges[e]
            lo, hi = (u, v) if u < v else (v, u)
            for h in (lo, hi):
                if self.assign(e, h) and dfs(i + 1):
                    return True
                self.unassign(e, h)
            return False

        return dfs(start)

    def witness(self) -> Orientation:
        g = self.g
        return orient(g, [h == u for (u, _), h in zip(g.edges, self.heads)])


def _ensure_recursion(m: int) -> None:
    if sys.getrecursionlimit() < m + 200:
        sys.setrecursionlimit(m + 200)


def _decide_prefix(g: Graph, k: int, prefix: tuple[int, ...]) -> tuple[list[int] | None, int]:
    """Run the search with the first ``len(prefix)`` edges fixed.

    ``prefix[i]`` is 0 for the first branch (lower endpoint as head) and 1
    for the second. Returns the heads of a solution, if any, and nodes used.
    """
    _ensure_recursion(g.m)
    s = _Search(g, k)
    for i, bit in enumerate(prefix):
        e = s.order[i]
        u, v = g.edges[e]
        h = (min(u, v), max(u, v))[bit]
        s.nodes += 1
        if not s.assign(e, h):
            return None, s.nodes
    if s.run(len(prefix)):
        return list(s.heads), s.nodes
    return None, s.nodes


def _decide(g: Graph, k: int, parallel: bool, workers: int | None) -> tuple[Orientation | None, int]:
    if k < 0:
        raise PreconditionError(f"k must be non-negative, got {k}")
    if not parallel or g.m < 8:
        _ensure_recursion(g.m)
        s = _Search(g, k)
        found = s.run()
        return (s.witness() if found else None), s.nodes
    depth = min(6, g.m // 2)
    prefixes = [tuple((p >> (depth - 1 - i)) & 1 for i in range(depth)) for p in range(1 << depth)]
    nodes = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_decide_prefix, [g] * len(prefixes), [k] * len(prefixes), prefixes))
    # prefixes are in DFS order, so the first success is the sequential witness
    for heads, used in results:
        nodes += used
        if heads is not None:
            return orient(g, [h == u for (u, _), h in zip(g.edges, heads)]), nodes
    return None, nodes


def decide(g: Graph, k: int, parallel: bool = False, workers: int | None = None) -> Orientation | None:
    """A proper orientation with maximum indegree <= k, or None."""
    return _decide(g, k, parallel, workers)[0]


def proper_orientation_number(
    g: Graph,
    cap: int = SOLVER_CAP,
    parallel: bool = False,
    workers: int | None = None,
    chromatic_cap: int = CHROMATIC_CAP,
) -> SolveResult:
    """Smallest k for which :func:`decide` succeeds, scanning up from the lower bound."""
    if g.m > cap:
        raise CapExceeded(f"exact solver: m={g.m} exceeds cap {cap}")
    t0 = time.perf_counter()
    b = bounds(g, chromatic_cap)
    total = 0
    for k in range(b.lower, b.upper + 1):
        found, nodes = _decide(g, k, parallel, workers)
        total += nodes
        if found is not None:
            return SolveResult(k, found, total, time.perf_counter() - t0)
    raise AssertionError("no proper orientation with max indegree <= max degree")  # pragma: no cover

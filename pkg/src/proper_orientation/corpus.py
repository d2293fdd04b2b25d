"""Named graph families, isomorph-free enumeration and random generators."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .graph import Graph, build_graph


def complete_graph(n: int) -> Graph:
    return build_graph(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b} with sides ``0..a-1`` and ``a..a+b-1``."""
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def prism_graph(k: int = 3) -> Graph:
    """C_k x K_2; the 3-prism is the default."""
    top = [(i, (i + 1) % k) for i in range(k)]
    bottom = [(k + i, k + (i + 1) % k) for i in range(k)]
    rungs = [(i, k + i) for i in range(k)]
    return build_graph(2 * k, top + bottom + rungs)


def moebius_ladder(k: int) -> Graph:
    """Cycle C_{2k} plus the k long diagonals (k=4 is the Wagner graph)."""
    n = 2 * k
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i + k) for i in range(k)])


def cube_graph() -> Graph:
    pairs = [(a, b) for a in range(8) for b in range(a + 1, 8) if bin(a ^ b).count("1") == 1]
    return build_graph(8, pairs)


def disjoint_union(*graphs: Graph) -> Graph:
    pairs = []
    offset = 0
    for g in graphs:
        pairs.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return build_graph(offset, pairs)


def named_cubic_graphs() -> dict[str, Graph]:
    """Cubic graphs on at most ten vertices used throughout the tests."""
    return {
        "K4": complete_graph(4),
        "K3,3": complete_bipartite_graph(3, 3),
        "prism": prism_graph(3),
        "cube": cube_graph(),
        "wagner": moebius_ladder(4),
        "5-prism": prism_graph(5),
        "petersen": petersen_graph(),
    }


# -- isomorph-free enumeration -------------------------------------------------


def _refine(n: int, adj: list[set[int]]) -> list[int]:
    """Stable colour refinement; colours are ranks of invariant signatures."""
    colors = [len(adj[v]) for v in range(n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(n: int, edges) -> tuple[int, ...]:
    """Isomorphism-invariant certificate of a small graph.

    Vertices are split into refinement cells; the certificate is the
    lexicographically smallest sorted edge tuple over all relabellings that
    list the cells in colour order.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    colors = _refine(n, adj)
    cells = [[v for v in range(n) if colors[v] == c] for c in sorted(set(colors))]
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in cells)):
        label = {}
        for v in itertools.chain.from_iterable(perms):
            label[v] = len(label)
        code = tuple(sorted(
            (min(label[u], label[v]) * n + max(label[u], label[v])) for u, v in edges
        ))
        if best is None or code < best:
            best = code
    head = (n, len(edges))
    return head + (best or ())


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    if n == 0:
        return ((),)
    if n == 1:
        return ((),)
    seen: dict[tuple[int, ...], tuple[tuple[int, int], ...]] = {}
    for base in _all_graphs(n - 1):
        new = n - 1
        for k in range(n):
            for nbrs in itertools.combinations(range(new), k):
                edges = base + tuple((u, new) for u in nbrs)
                key = canonical_form(n, edges)
                if key not in seen:
                    seen[key] = edges
    return tuple(seen[k] for k in sorted(seen))


def all_graphs(n: int, connected: bool = False) -> list[Graph]:
    """Every graph on ``n`` vertices up to isomorphism.

    Built by adding one vertex to each graph on ``n-1`` vertices in every
    possible way and de-duplicating by :func:`canonical_form`.
    """
    out = [build_graph(n, edges) for edges in _all_graphs(n)]
    if connected:
        out = [g for g in out if len(g.components()) == 1]
    return out


# -- random graphs -------------------------------------------------------------


def random_gnm(n: int, m: int, rng: random.Random) -> Graph:
    pairs = rng.sample(list(itertools.combinations(range(n), 2)), m)
    return build_graph(n, pairs)


def random_regular(n: int, r: int, rng: random.Random, max_tries: int = 10_000) -> Graph:
    """Uniform-ish random r-regular simple graph (pairing model with rejection)."""
    if (n * r) % 2 or r >= n:
        raise ValueError(f"no {r}-regular simple graph on {n} vertices")
    for _ in range(max_tries):
        points = [v for v in range(n) for _ in range(r)]
        rng.shuffle(points)
        pairs = set()
        ok = True
        for a, b in zip(points[::2], points[1::2]):
            key = (min(a, b), max(a, b))
            if a == b or key in pairs:
                ok = False
                break
            pairs.add(key)
        if ok:
            return build_graph(n, sorted(pairs))
    raise RuntimeError("pairing model did not produce a simple graph")

"""Lower and upper bounds on the proper orientation number."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .graph import Graph, regularity

CHROMATIC_CAP = 20


def chromatic_number_exact(g: Graph, cap: int = CHROMATIC_CAP) -> int:
    """Exact chromatic number by backtracking.

    Vertices are coloured in descending-degree order; a vertex may open a new
    colour only if it is the next unused one, which removes colour
    permutations from the search.
    """
    if g.n > cap:
        raise CapExceeded(f"chromatic number: n={g.n} exceeds cap {cap}")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    nbrs = [g.neighbors(v) for v in range(g.n)]

    def colourable(k: int) -> bool:
        color = [0] * g.n

        def place(i: int, used: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            taken = {color[u] for u in nbrs[v]}
            for c in range(1, min(used + 1, k) + 1):
                if c not in taken:
                    color[v] = c
                    if place(i + 1, max(used, c)):
                        return True
            color[v] = 0
            return False

        return place(0, 0)

    k = 2
    while not colourable(k):
        k += 1
    return k


def regular_lower_bound(g: Graph) -> int | None:
    """ceil((r+1)/2) for an r-regular graph with r >= 1."""
    r = regularity(g)
    if not r:
        return None
    return (r + 2) // 2


def is_star_forest(g: Graph) -> bool:
    """True iff every component with an edge is a star K_{1,t}."""
    for comp in g.components():
        if len(comp) == 1:
            continue
        m = sum(g.degree(v) for v in comp) // 2
        if m != len(comp) - 1:
            return False
        if max(g.degree(v) for v in comp) != m:
            return False
    return True


@dataclass(frozen=True)
class BoundsReport:
    lower: int
    upper: int
    lower_reason: str
    upper_reason: str = "max_degree"
    chromatic: int | None = None
    chromatic_omitted: bool = False


def bounds(g: Graph, chromatic_cap: int = CHROMATIC_CAP) -> BoundsReport:
    """Combine chi(G) - 1, the regular-graph bound and the trivial bounds.

    Above ``chromatic_cap`` vertices the chromatic term is dropped rather
    than estimated, and ``chromatic_omitted`` is set.
    """
    if g.m == 0:
        return BoundsReport(0, 0, "trivial", chromatic=1 if g.n else 0)
    candidates: list[tuple[int, str]] = []
    chi = None
    omitted = False
    try:
        chi = chromatic_number_exact(g, chromatic_cap)
        candidates.append((chi - 1, "chromatic"))
    except CapExceeded:
        omitted = True
    reg = regular_lower_bound(g)
    if reg is not None:
        candidates.append((reg, "regular"))
    candidates.append((1, "star"))
    # first listed wins ties
    lower, reason = max(candidates, key=lambda c: c[0])
    return BoundsReport(lower, g.max_degree, reason, chromatic=chi, chromatic_omitted=omitted)

"""Planar 3-SAT (type 2) to "proper orientation number 2".

Each variable ``x_i`` becomes a five-vertex gadget H: the literal vertices
``x_i`` and ``~x_i`` joined to each other, and both joined to ``x_i^1`` of a
triangle ``x_i^1 x_i^2 x_i^3``. Each clause becomes a twelve-vertex gadget
T on ``s^1..s^12`` whose boundary vertices ``s^1, s^2, s^3`` are joined to
the literal vertices of the clause's three slots.

In any proper orientation with maximum indegree 2 the triangle takes
indegrees {0,1,2}, so ``{d(x_i), d(~x_i)} = {1, 2}`` and every connector is
forced to point into the clause gadget. A literal with indegree 1 reads as
true; the boundary vertex behind it is then forced to indegree 2. The clause
gadget's contract: its interior orients properly with maximum indegree 2
for every boundary pattern except "all three boundary vertices at 1".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, PreconditionError, ReductionError
from .graph import Graph, Orientation, build_graph, is_proper_orientation, max_indegree, orient_by_heads
from .oracle import indegree_table

GADGET_SIZE = 12
BOUNDARY = (0, 1, 2)

# s^1..s^12 are local vertices 0..11. The prose pins down the spokes
# s1s4, s2s5, s3s6 and s7s4, s8s5, s12s4, s7s8, s11s12; the rest closes a
# 9-cycle through s4..s12 that is invariant under rotating the three slots.
REQUIRED_GADGET_EDGES: tuple[tuple[int, int], ...] = (
    (0, 3), (1, 4), (2, 5), (6, 3), (7, 4), (11, 3), (6, 7), (10, 11),
)
DEFAULT_CLAUSE_GADGET: tuple[tuple[int, int], ...] = (
    (0, 3), (1, 4), (2, 5),
    (3, 6), (6, 7), (7, 4),
    (4, 8), (8, 9), (9, 5),
    (5, 10), (10, 11), (11, 3),
)


# -- formulas ------------------------------------------------------------------


@dataclass(frozen=True)
class Formula:
    """3-CNF formula. Literals are DIMACS integers: ``i`` is x_i, ``-i`` is ~x_i."""

    variable_count: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise PreconditionError(f"clause {clause} does not have 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.variable_count:
                    raise PreconditionError(f"literal {lit} out of range")

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return all(any(assignment[abs(l) - 1] == (l > 0) for l in c) for c in self.clauses)


def parse_cnf(text: str) -> Formula:
    """DIMACS CNF with exactly three literals per clause (repeats allowed)."""
    header = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "c%":
            if line.startswith("%"):
                break
            continue
        if line[0] == "p":
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(f"line {lineno}: bad problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError(f"line {lineno}: bad problem line {line!r}") from None
            continue
        if header is None:
            raise ParseError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > header[0]:
                    raise ParseError(f"line {lineno}: variable {abs(lit)} exceeds {header[0]}")
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise ParseError(f"header announces {header[1]} clauses, found {len(clauses)}")
    for i, c in enumerate(clauses, 1):
        if len(c) != 3:
            raise ParseError(f"clause {i} has {len(c)} literals; exactly 3 required")
    return Formula(header[0], tuple(clauses))  # type: ignore[arg-type]


def format_cnf(phi: Formula) -> str:
    rows = [f"p cnf {phi.variable_count} {len(phi.clauses)}"]
    rows += [" ".join(map(str, c)) + " 0" for c in phi.clauses]
    return "\n".join(rows) + "\n"


def satisfying_assignments(phi: Formula) -> list[tuple[bool, ...]]:
    """Truth-table enumeration."""
    return [
        a for a in itertools.product((True, False), repeat=phi.variable_count)
        if phi.satisfied_by(a)
    ]


def is_satisfiable(phi: Formula) -> bool:
    return bool(satisfying_assignments(phi))


def formula_battery(max_vars: int = 2, max_clauses: int = 2) -> list[Formula]:
    """Every formula over 1..max_vars variables with at most max_clauses clauses.

    Clauses are multisets of literals (repeats allowed) and formulas are
    multisets of clauses, so reorderings are not repeated.
    """
    out = []
    for n in range(1, max_vars + 1):
        lits = [v for i in range(1, n + 1) for v in (i, -i)]
        clause_types = list(itertools.combinations_with_replacement(lits, 3))
        for k in range(max_clauses + 1):
            for cs in itertools.combinations_with_replacement(clause_types, k):
                out.append(Formula(n, tuple(cs)))
    return out


def incidence_graph(phi: Formula) -> tuple[Graph, bool]:
    """The graph on clauses and literals whose planarity defines type 2.

    Vertices: clauses ``0..k-1``, then ``x_i`` at ``k + 2(i-1)`` and ``~x_i``
    right after it. Repeated literals collapse to one edge. The flag is the
    Euler necessary condition for planarity (m <= 3n - 6 when n >= 3).
    """
    k = len(phi.clauses)

    def lit_vertex(lit: int) -> int:
        return k + 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)

    pairs: list[tuple[int, int]] = []
    for j, clause in enumerate(phi.clauses):
        for lit in dict.fromkeys(clause):
            pairs.append((j, lit_vertex(lit)))
    pairs += [(lit_vertex(i), lit_vertex(-i)) for i in range(1, phi.variable_count + 1)]
    g = build_graph(k + 2 * phi.variable_count, pairs)
    return g, g.n < 3 or g.m <= 3 * g.n - 6


# -- the clause gadget contract ------------------------------------------------

Pattern = tuple[int, int, int]
ALL_PATTERNS: tuple[Pattern, ...] = tuple(itertools.product((1, 2), repeat=3))  # type: ignore[assignment]


@dataclass(frozen=True)
class GadgetReport:
    extensible: dict[Pattern, bool]
    passed: bool
    witnesses: dict[Pattern, int] = field(default_factory=dict, repr=False)


def _validate_gadget(edges: Sequence[tuple[int, int]]) -> None:
    verts = {v for e in edges for v in e}
    if any(not 0 <= v < GADGET_SIZE for v in verts):
        raise PreconditionError(f"gadget must live on vertices 0..{GADGET_SIZE - 1}")
    missing = [b for b in BOUNDARY if b not in verts]
    if missing:
        raise PreconditionError(f"boundary vertices {[b + 1 for b in missing]} have no edges")


@lru_cache(maxsize=128)
def _gadget_report(edges: tuple[tuple[int, int], ...]) -> GadgetReport:
    _validate_gadget(edges)
    build_graph(GADGET_SIZE, edges)
    masks = np.arange(1 << len(edges), dtype=np.int64)
    offsets = [1 if v in BOUNDARY else 0 for v in range(GADGET_SIZE)]
    table = indegree_table(GADGET_SIZE, edges, masks, offsets)
    ok = table.max(axis=0) <= 2
    for u, v in edges:
        ok &= table[u] != table[v]
    extensible = {}
    witnesses = {}
    for pattern in ALL_PATTERNS:
        sel = ok.copy()
        for b, a in zip(BOUNDARY, pattern):
            # the literal outside s^t has indegree 3 - a, so a itself is safe
            sel &= table[b] == a
        hits = np.flatnonzero(sel)
        extensible[pattern] = hits.size > 0
        if hits.size:
            witnesses[pattern] = int(masks[hits[0]])
    passed = not extensible[(1, 1, 1)] and all(
        v for p, v in extensible.items() if p != (1, 1, 1)
    )
    return GadgetReport(extensible, passed, witnesses)


def gadget_contract_check(edges: Iterable[Sequence[int]] = DEFAULT_CLAUSE_GADGET) -> GadgetReport:
    """Exhaustively test every boundary pattern of a clause gadget.

    Pattern ``(a1, a2, a3)`` fixes the total indegree of ``s^t`` to ``a_t``,
    one unit of which comes from its connector. The gadget passes iff the
    interior extends to a proper orientation with maximum indegree 2 for
    every pattern except ``(1, 1, 1)``, and for that one it does not.
    """
    return _gadget_report(tuple((int(u), int(v)) for u, v in edges))


def _rotation_invariant(edges: Iterable[tuple[int, int]]) -> bool:
    # s1->s2->s3, s4->s5->s6, s7->s9->s11, s8->s10->s12
    rot = {0: 1, 1: 2, 2: 0, 3: 4, 4: 5, 5: 3, 6: 8, 8: 10, 10: 6, 7: 9, 9: 11, 11: 7}
    es = {frozenset(e) for e in edges}
    return {frozenset(rot[v] for v in e) for e in es} == es


def search_gadget_completions(
    max_extra: int = 4,
    max_degree: int = 3,
    max_edges: int = 16,
) -> list[tuple[tuple[int, int], ...]]:
    """Every passing completion of the required gadget edges.

    Extra edges (at most ``max_extra``) are drawn from pairs inside
    ``s^4..s^12`` with every vertex kept at degree <= ``max_degree``.
    Results are ranked: slot-rotation-invariant gadgets first, then fewer
    isolated vertices, then fewer edges, then lexicographically.
    """
    base = list(REQUIRED_GADGET_EDGES)
    present = {frozenset(e) for e in base}
    deg = [0] * GADGET_SIZE
    for u, v in base:
        deg[u] += 1
        deg[v] += 1
    pool = [
        (u, v) for u, v in itertools.combinations(range(3, GADGET_SIZE), 2)
        if frozenset((u, v)) not in present and deg[u] < max_degree and deg[v] < max_degree
    ]
    found = []
    for extra in range(min(max_extra, max_edges - len(base)) + 1):
        for combo in itertools.combinations(pool, extra):
            d = deg[:]
            for u, v in combo:
                d[u] += 1
                d[v] += 1
            if max(d) > max_degree:
                continue
            edges = tuple(base) + combo
            if _gadget_report(edges).passed:
                found.append(edges)

    def rank(es):
        used = {v for e in es for v in e}
        return (not _rotation_invariant(es), GADGET_SIZE - len(used), len(es), sorted(es))

    found.sort(key=rank)
    return found


# -- the reduction graph -------------------------------------------------------


@dataclass(frozen=True)
class ReductionGraph:
    formula: Formula
    graph: Graph
    roles: tuple[str, ...]
    connector_edges: tuple[tuple[int, int], ...]
    gadget: tuple[tuple[int, int], ...]

    def literal_vertex(self, lit: int) -> int:
        return 5 * (abs(lit) - 1) + (0 if lit > 0 else 1)

    def triangle_vertex(self, var: int, t: int) -> int:
        return 5 * (var - 1) + 1 + t

    def gadget_vertex(self, clause: int, t: int) -> int:
        """Vertex of ``s^t`` in clause ``clause`` (both 1-based)."""
        return 5 * self.formula.variable_count + GADGET_SIZE * (clause - 1) + t - 1

    def role_map(self) -> dict[str, str]:
        return {str(v): r for v, r in enumerate(self.roles)}


def build_reduction(phi: Formula, gadget: Sequence[tuple[int, int]] = DEFAULT_CLAUSE_GADGET) -> ReductionGraph:
    """Assemble the reduction graph.

    Edge order: for each variable the triangle ``x^1x^2, x^2x^3, x^1x^3``,
    then ``x x^1, ~x x^1, x ~x``; then for each clause the gadget edges
    followed by its three connectors ``(literal, s^t)``.
    """
    gadget = tuple((int(u), int(v)) for u, v in gadget)
    _validate_gadget(gadget)
    n = phi.variable_count
    roles: list[str] = []
    pairs: list[tuple[int, int]] = []
    for i in range(1, n + 1):
        base = 5 * (i - 1)
        x, nx, t1, t2, t3 = range(base, base + 5)
        roles += [f"PositiveLiteral({i})", f"NegativeLiteral({i})"]
        roles += [f"TriangleVertex({i},{t})" for t in (1, 2, 3)]
        pairs += [(t1, t2), (t2, t3), (t1, t3), (x, t1), (nx, t1), (x, nx)]
    connectors = []
    for j, clause in enumerate(phi.clauses, 1):
        base = 5 * n + GADGET_SIZE * (j - 1)
        roles += [f"GadgetVertex({j},{t})" for t in range(1, GADGET_SIZE + 1)]
        pairs += [(base + u, base + v) for u, v in gadget]
        for t, lit in enumerate(clause):
            lv = 5 * (abs(lit) - 1) + (0 if lit > 0 else 1)
            pairs.append((lv, base + t))
            connectors.append((lv, base + t))
    g = build_graph(5 * n + GADGET_SIZE * len(phi.clauses), pairs)
    return ReductionGraph(phi, g, tuple(roles), tuple(connectors), gadget)


def assignment_to_orientation(
    phi: Formula,
    gamma: Sequence[bool],
    gadget: Sequence[tuple[int, int]] = DEFAULT_CLAUSE_GADGET,
) -> Orientation:
    """Proper orientation of the reduction graph with maximum indegree 2.

    Variable gadgets: every edge at ``x^1`` points away from it, ``x^2 ->
    x^3``, and ``x -> ~x`` exactly when ``x`` is true. Connectors point into
    the clause gadgets, whose interiors are completed by exhaustive search.
    Raises :class:`ReductionError` if some clause is left unsatisfied.
    """
    if len(gamma) != phi.variable_count:
        raise PreconditionError(f"assignment has {len(gamma)} values for {phi.variable_count} variables")
    rg = build_reduction(phi, gadget)
    report = gadget_contract_check(rg.gadget)
    g = rg.graph
    heads: list[int] = []
    for i in range(1, phi.variable_count + 1):
        base = 5 * (i - 1)
        x, nx, t1, t2, t3 = range(base, base + 5)
        heads += [t2, t3, t3, x, nx, nx if gamma[i - 1] else x]
    for j, clause in enumerate(phi.clauses, 1):
        base = rg.gadget_vertex(j, 1)
        pattern = tuple(2 if gamma[abs(l) - 1] == (l > 0) else 1 for l in clause)
        mask = report.witnesses.get(pattern)
        if mask is None:
            raise ReductionError(f"clause {j} {clause}: gadget admits no extension for pattern {pattern}")
        for e, (u, v) in enumerate(rg.gadget):
            heads.append(base + (u if (mask >> e) & 1 else v))
        heads += [base + t for t in range(3)]
    d = orient_by_heads(g, heads)
    assert is_proper_orientation(g, d) and max_indegree(d) <= 2
    return d


def orientation_to_assignment(
    phi: Formula,
    d: Orientation,
    gadget: Sequence[tuple[int, int]] = DEFAULT_CLAUSE_GADGET,
) -> tuple[bool, ...]:
    """Read the truth assignment off the literal indegrees (1 = true, 2 = false)."""
    rg = build_reduction(phi, gadget)
    g = rg.graph
    if len(d.directions) != g.m or len(d.indegrees) != g.n:
        raise ReductionError("orientation does not match the reduction graph")
    if not is_proper_orientation(g, d):
        raise ReductionError("orientation is not proper")
    if max_indegree(d) > 2:
        raise ReductionError(f"maximum indegree {max_indegree(d)} exceeds 2")
    gamma = []
    for i in range(1, phi.variable_count + 1):
        deg = d.indegrees[rg.literal_vertex(i)]
        if deg not in (1, 2):
            raise ReductionError(f"literal x{i} has indegree {deg}; expected 1 or 2")
        gamma.append(deg == 1)
    if not phi.satisfied_by(gamma):
        raise ReductionError("extracted assignment does not satisfy the formula")
    return tuple(gamma)

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proper_orientation.corpus import complete_graph
from proper_orientation.errors import ParseError, PreconditionError, ReductionError
from proper_orientation.graph import build_graph, is_proper_orientation, max_indegree, orient
from proper_orientation.oracle import brute_force_oracle, mask_to_directions, proper_orientation_masks
from proper_orientation.reduction import (
    DEFAULT_CLAUSE_GADGET,
    REQUIRED_GADGET_EDGES,
    Formula,
    assignment_to_orientation,
    build_reduction,
    format_cnf,
    formula_battery,
    gadget_contract_check,
    incidence_graph,
    is_satisfiable,
    orientation_to_assignment,
    parse_cnf,
    satisfying_assignments,
    search_gadget_completions,
)
from proper_orientation.solver import decide


def _edge_set(edges):
    return {frozenset(e) for e in edges}


# -- parsing -------------------------------------------------------------------


def test_parse_cnf_examples():
    phi = parse_cnf("p cnf 1 1\n1 1 1 0\n")
    assert phi == Formula(1, ((1, 1, 1),))
    phi = parse_cnf("c comment\np cnf 2 1\n1 -2 2 0\n")
    assert phi.clauses == ((1, -2, 2),)


def test_parse_cnf_clause_spanning_lines():
    phi = parse_cnf("p cnf 3 2\n1 2\n3 0 -1 -2 -3\n0\n")
    assert phi.clauses == ((1, 2, 3), (-1, -2, -3))


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("p cnf 1 1\n1 1 0\n", "exactly 3"),
        ("p cnf 1 1\n1 1 1 1 0\n", "exactly 3"),
        ("1 2 3 0\n", "header"),
        ("p cnf 1 1\n1 2 1 0\n", "exceeds"),
        ("p cnf 1 1\n1 x 1 0\n", "bad literal"),
        ("p cnf 1 2\n1 1 1 0\n", "announces"),
        ("p cnf 1 1\n1 1 1\n", "terminated"),
        ("p dnf 1 1\n", "problem line"),
    ],
)
def test_parse_cnf_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment):
        parse_cnf(text)


def test_cnf_round_trip():
    phi = Formula(2, ((1, -2, 2), (-1, -1, 2)))
    assert parse_cnf(format_cnf(phi)) == phi


def test_formula_rejects_bad_literals():
    with pytest.raises(PreconditionError):
        Formula(1, ((1, 2, 1),))
    with pytest.raises(PreconditionError):
        Formula(1, ((1, 1),))


# -- incidence graph -----------------------------------------------------------


def test_incidence_graph_examples():
    g, ok = incidence_graph(Formula(1, ((1, 1, 1),)))
    assert (g.n, set(g.edges)) == (3, {(0, 1), (1, 2)})
    assert ok
    g, ok = incidence_graph(Formula(1, ((1, 1, 1), (-1, -1, -1))))
    assert g.n == 4 and g.m == 3 and ok
    assert set(g.edges) == {(0, 2), (1, 3), (2, 3)}
    g, _ = incidence_graph(Formula(2, ((1, 2, -1),)))
    # c=0, x1=1, ~x1=2, x2=3, ~x2=4
    assert g.edges == ((0, 1), (0, 3), (0, 2), (1, 2), (3, 4))


def test_incidence_graph_euler_flag():
    # clause vertices have degree <= 3, so m <= 3k + n never exceeds 3(k + 2n) - 6
    clauses = tuple(itertools.combinations([1, 2, 3, 4, -1, -2, -3, -4], 3))
    g, ok = incidence_graph(Formula(4, clauses))
    assert ok and g.m <= 3 * g.n - 6
    for phi in formula_battery():
        g, ok = incidence_graph(phi)
        assert ok == (g.n < 3 or g.m <= 3 * g.n - 6)


# -- the reduction graph -------------------------------------------------------


def test_build_reduction_counts():
    rg = build_reduction(Formula(1, ((1, 1, 1),)))
    assert rg.graph.n == 5 + 12
    assert rg.graph.m == 6 + len(DEFAULT_CLAUSE_GADGET) + 3
    assert rg.roles[0] == "PositiveLiteral(1)"
    assert rg.roles[1] == "NegativeLiteral(1)"
    assert rg.roles[2:5] == ("TriangleVertex(1,1)", "TriangleVertex(1,2)", "TriangleVertex(1,3)")
    assert rg.roles[5] == "GadgetVertex(1,1)" and rg.roles[16] == "GadgetVertex(1,12)"
    assert rg.role_map()["16"] == "GadgetVertex(1,12)"


def test_build_reduction_without_clauses_is_h_gadget():
    rg = build_reduction(Formula(1, ()))
    assert (rg.graph.n, rg.graph.m) == (5, 6)
    assert brute_force_oracle(rg.graph) == 2


def test_connectors_follow_slot_order():
    rg = build_reduction(Formula(2, ((1, -2, 1),)))
    s = [rg.gadget_vertex(1, t) for t in (1, 2, 3)]
    assert rg.connector_edges == (
        (rg.literal_vertex(1), s[0]),
        (rg.literal_vertex(-2), s[1]),
        (rg.literal_vertex(1), s[2]),
    )
    assert rg.literal_vertex(-2) == 6 and s[0] == 10


def test_h_gadget_forcing_exhaustive():
    h = build_reduction(Formula(1, ())).graph
    x, nx, t1, t2, t3 = range(5)
    masks = proper_orientation_masks(h, 2)
    assert masks.size > 0
    for mask in masks:
        d = orient(h, mask_to_directions(int(mask), h.m))
        assert sorted(d.indegrees[v] for v in (t1, t2, t3)) == [0, 1, 2]
        assert {d.indegrees[x], d.indegrees[nx]} == {1, 2}


def test_connector_forcing_on_smallest_instance():
    rg = build_reduction(Formula(1, ((1, 1, 1),)))
    g = rg.graph
    assert g.m == 21
    masks = proper_orientation_masks(g, 2)
    assert masks.size > 0
    connector_ids = [g.m - 3, g.m - 2, g.m - 1]
    assert [g.edges[e] for e in connector_ids] == list(rg.connector_edges)
    for e in connector_ids:
        # bit clear = first endpoint (the literal) is the tail
        assert not np.any((masks >> e) & 1)


# -- the clause gadget ---------------------------------------------------------


def test_gadget_contract_default():
    rep = gadget_contract_check()
    assert rep.passed
    assert rep.extensible[(2, 1, 1)]
    assert not rep.extensible[(1, 1, 1)]
    assert sum(rep.extensible.values()) == 7


def test_gadget_contract_matches_plain_enumeration():
    edges = DEFAULT_CLAUSE_GADGET
    for pattern in itertools.product((1, 2), repeat=3):
        found = False
        for dirs in itertools.product((False, True), repeat=len(edges)):
            indeg = [1, 1, 1] + [0] * 9
            for (u, v), d in zip(edges, dirs):
                indeg[u if d else v] += 1
            if max(indeg) > 2 or any(indeg[u] == indeg[v] for u, v in edges):
                continue
            if all(indeg[t] == pattern[t] and indeg[t] != 3 - pattern[t] for t in range(3)):
                found = True
                break
        assert found == gadget_contract_check().extensible[pattern]


def test_gadget_contract_rejects_bad_gadgets():
    rep = gadget_contract_check(REQUIRED_GADGET_EDGES)
    assert not rep.passed
    with pytest.raises(PreconditionError):
        gadget_contract_check([(0, 3), (1, 4), (2, 12)])
    with pytest.raises(PreconditionError):
        gadget_contract_check([(0, 3), (1, 4)])


def test_search_rediscovers_default_gadget():
    found = search_gadget_completions()
    assert found
    assert _edge_set(found[0]) == _edge_set(DEFAULT_CLAUSE_GADGET)
    for es in found:
        assert gadget_contract_check(es).passed
        assert _edge_set(REQUIRED_GADGET_EDGES) <= _edge_set(es)


def test_default_gadget_is_planar():
    nx = pytest.importorskip("networkx")
    planar, _ = nx.check_planarity(nx.Graph(list(DEFAULT_CLAUSE_GADGET)))
    assert planar


# -- certificate translation ---------------------------------------------------


def test_assignment_to_orientation_examples():
    phi = Formula(1, ((1, 1, 1),))
    d = assignment_to_orientation(phi, [True])
    g = build_reduction(phi).graph
    assert is_proper_orientation(g, d) and max_indegree(d) == 2
    with pytest.raises(ReductionError, match="no extension"):
        assignment_to_orientation(phi, [False])
    for gamma in ([True], [False]):
        phi0 = Formula(1, ())
        d = assignment_to_orientation(phi0, gamma)
        assert is_proper_orientation(build_reduction(phi0).graph, d)
        assert max_indegree(d) == 2


def test_assignment_length_checked():
    with pytest.raises(PreconditionError):
        assignment_to_orientation(Formula(2, ()), [True])


def test_round_trip_on_battery():
    for phi in formula_battery():
        for gamma in satisfying_assignments(phi):
            d = assignment_to_orientation(phi, gamma)
            assert orientation_to_assignment(phi, d) == gamma


def test_orientation_to_assignment_from_solver():
    phi = Formula(2, ((1, -2, 1), (-1, 2, 2)))
    d = decide(build_reduction(phi).graph, 2)
    gamma = orientation_to_assignment(phi, d)
    assert phi.satisfied_by(gamma)


def test_orientation_to_assignment_errors():
    phi = Formula(1, ((1, 1, 1),))
    g = build_reduction(phi).graph
    with pytest.raises(ReductionError, match="not proper"):
        orientation_to_assignment(phi, orient(g, [False] * g.m))
    with pytest.raises(ReductionError, match="match"):
        orientation_to_assignment(phi, orient(complete_graph(2), [False]))
    masks = proper_orientation_masks(g, 3)
    over = [
        d for d in (orient(g, mask_to_directions(int(mk), g.m)) for mk in masks[:5000])
        if max_indegree(d) == 3
    ]
    assert over
    with pytest.raises(ReductionError, match="exceeds"):
        orientation_to_assignment(phi, over[0])


def test_larger_random_formulas():
    rng = random.Random(4)
    for _ in range(6):
        n = 3
        clauses = tuple(
            tuple(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(3)) for _ in range(3)
        )
        phi = Formula(n, clauses)
        d = decide(build_reduction(phi).graph, 2)
        assert (d is not None) == is_satisfiable(phi)
        if d is not None:
            assert phi.satisfied_by(orientation_to_assignment(phi, d))


@st.composite
def _formulas(draw, max_vars=4, max_clauses=4):
    n = draw(st.integers(1, max_vars))
    literal = st.integers(1, n).flatmap(lambda i: st.sampled_from([i, -i]))
    clause = st.tuples(literal, literal, literal)
    return Formula(n, tuple(draw(st.lists(clause, max_size=max_clauses))))


@given(_formulas())
def test_cnf_text_round_trip_property(phi):
    assert parse_cnf(format_cnf(phi)) == phi


@settings(max_examples=25, deadline=None)
@given(_formulas(max_vars=3, max_clauses=2))
def test_reduction_certificates_property(phi):
    rg = build_reduction(phi)
    for gamma in satisfying_assignments(phi):
        d = assignment_to_orientation(phi, gamma)
        assert is_proper_orientation(rg.graph, d) and max_indegree(d) <= 2
        assert orientation_to_assignment(phi, d) == gamma

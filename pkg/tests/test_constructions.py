import itertools
import random
from collections import Counter

import pytest

from proper_orientation.constructions import (
    ClassLabel,
    EdgeColoring,
    cubic_proper_orientation_number,
    edge_coloring_exact,
    greedy_orientation,
    is_proper_edge_coloring,
    matching_decomposition,
    orient_bipartite_odd_regular,
    orient_line_graph,
    perfect_matching,
)
from proper_orientation.corpus import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    named_cubic_graphs,
    path_graph,
    petersen_graph,
    random_gnm,
    random_regular,
    star_graph,
)
from proper_orientation.errors import CapExceeded, PreconditionError
from proper_orientation.graph import is_bipartite, is_proper_orientation, line_graph, max_indegree
from proper_orientation.oracle import brute_force_oracle


def _has_edge_coloring(g, k):
    """Plain exhaustive search over all k^m colourings."""
    return any(is_proper_edge_coloring(g, c) for c in itertools.product(range(k), repeat=g.m))


def test_edge_coloring_k4_class1():
    ec, label = edge_coloring_exact(complete_graph(4))
    assert (ec.K, label) == (3, ClassLabel.CLASS1)
    assert is_proper_edge_coloring(complete_graph(4), ec.colors)
    assert _has_edge_coloring(complete_graph(4), 3)


def test_edge_coloring_petersen_class2():
    g = petersen_graph()
    ec, label = edge_coloring_exact(g)
    assert (ec.K, label) == (4, ClassLabel.CLASS2)
    assert is_proper_edge_coloring(g, ec.colors)
    assert set(ec.colors) <= {1, 2, 3, 4}


def test_petersen_has_no_three_edge_coloring_by_perfect_matchings():
    # a 3-edge-colouring of a cubic graph is 3 disjoint perfect matchings
    g = petersen_graph()
    matchings = [
        frozenset(es) for es in itertools.combinations(range(g.m), 5)
        if len({v for e in es for v in g.edges[e]}) == 10
    ]
    assert len(matchings) == 6
    assert not any(
        a.isdisjoint(b) for a, b in itertools.combinations(matchings, 2)
    )


def test_edge_coloring_c6_and_odd_cycle():
    ec, label = edge_coloring_exact(cycle_graph(6))
    assert (ec.K, label) == (2, ClassLabel.CLASS1)
    ec, label = edge_coloring_exact(cycle_graph(5))
    assert (ec.K, label) == (3, ClassLabel.CLASS2)


def test_edge_coloring_matches_exhaustive_on_random_graphs():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(2, 6)
        g = random_gnm(n, rng.randint(1, min(8, n * (n - 1) // 2)), rng)
        ec, label = edge_coloring_exact(g)
        assert is_proper_edge_coloring(g, ec.colors)
        assert (label is ClassLabel.CLASS1) == _has_edge_coloring(g, g.max_degree)


def test_edge_coloring_cap():
    with pytest.raises(CapExceeded):
        edge_coloring_exact(complete_graph(12))


def test_perfect_matching_examples():
    k33 = complete_bipartite_graph(3, 3)
    mt = perfect_matching(k33, is_bipartite(k33))
    assert sorted(k33.edges[e] for e in mt) == [(0, 3), (1, 4), (2, 5)]
    c4 = cycle_graph(4)
    mt = perfect_matching(c4, is_bipartite(c4))
    assert len(mt) == 2
    p3 = path_graph(3)
    with pytest.raises(PreconditionError):
        perfect_matching(p3, is_bipartite(p3))


@pytest.mark.parametrize("g, r", [(complete_bipartite_graph(3, 3), 3), (cycle_graph(6), 2), (cycle_graph(8), 2)])
def test_matching_decomposition(g, r):
    dec = matching_decomposition(g)
    assert len(dec.matchings) == r
    union = set()
    for mt in dec.matchings:
        assert len({v for e in mt for v in g.edges[e]}) == g.n
        assert union.isdisjoint(mt)
        union |= mt
    assert union == set(range(g.m))


def test_matching_decomposition_preconditions():
    with pytest.raises(PreconditionError):
        matching_decomposition(cycle_graph(5))
    with pytest.raises(PreconditionError):
        matching_decomposition(star_graph(3))


@pytest.mark.parametrize("a, k", [(1, 0), (3, 1), (5, 2)])
def test_bipartite_odd_regular(a, k):
    g = complete_bipartite_graph(a, a)
    d = orient_bipartite_odd_regular(g)
    part = is_bipartite(g)
    assert is_proper_orientation(g, d)
    assert max_indegree(d) == k + 1
    assert all(d.indegrees[x] == k for x in part.x)
    assert all(d.indegrees[y] == k + 1 for y in part.y)


def test_bipartite_odd_regular_preconditions():
    with pytest.raises(PreconditionError):
        orient_bipartite_odd_regular(cycle_graph(6))
    with pytest.raises(PreconditionError):
        orient_bipartite_odd_regular(petersen_graph())


def _check_line_orientation(g, ec):
    k = (g.max_degree - 1) // 2
    lg, d = orient_line_graph(g, ec)
    assert is_proper_orientation(lg, d)
    for e in range(g.m):
        assert d.indegrees[e] == ec.colors[e] + k - 1
    for v in range(g.n):
        assert sorted(d.indegrees[e] for e in g.incident_edges(v)) == list(range(k, 3 * k + 1))
    assert max_indegree(d) == 3 * k
    return lg, d


@pytest.mark.parametrize("name", ["K4", "K3,3", "prism", "cube", "wagner", "5-prism"])
def test_line_graph_orientation_cubic(name):
    g = named_cubic_graphs()[name]
    ec, label = edge_coloring_exact(g)
    assert label is ClassLabel.CLASS1
    _check_line_orientation(g, ec)


def test_line_graph_orientation_k2_degenerate():
    g = complete_graph(2)
    lg, d = orient_line_graph(g, EdgeColoring((1,), 1))
    assert (lg.n, lg.m) == (1, 0)
    assert max_indegree(d) == 0


def test_line_graph_orientation_5_regular():
    g = complete_bipartite_graph(5, 5)
    ec, label = edge_coloring_exact(g)
    assert label is ClassLabel.CLASS1
    _check_line_orientation(g, ec)


def test_line_graph_orientation_preconditions():
    k4 = complete_graph(4)
    with pytest.raises(PreconditionError):
        orient_line_graph(cycle_graph(4), EdgeColoring((1, 2, 1, 2), 2))
    with pytest.raises(PreconditionError):
        orient_line_graph(k4, EdgeColoring((1,) * 6, 3))
    with pytest.raises(PreconditionError):
        ec, _ = edge_coloring_exact(petersen_graph())
        orient_line_graph(petersen_graph(), ec)


def test_greedy_examples():
    d, rep = greedy_orientation(cycle_graph(5))
    assert max_indegree(d) == 2 and rep.ratio == 1.0
    d, rep = greedy_orientation(complete_graph(4))
    assert d.indegrees == (3, 2, 1, 0)
    assert rep.ratio == 1.5 and rep.theta == pytest.approx(1.6) and rep.within_theta
    d, rep = greedy_orientation(star_graph(3))
    assert d.indegrees[0] == 3 and rep.ratio is None


def test_greedy_is_always_proper():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 12)
        g = random_gnm(n, rng.randint(0, n * (n - 1) // 2), rng)
        d, rep = greedy_orientation(g)
        assert is_proper_orientation(g, d)
        assert max_indegree(d) <= g.max_degree
        if rep.regular_degree:
            assert max_indegree(d) == g.max_degree


@pytest.mark.parametrize("name, value", [("K4", 3), ("K3,3", 2), ("prism", 3), ("cube", 2),
                                         ("wagner", 3), ("5-prism", 3), ("petersen", 3)])
def test_cubic_algorithm_matches_oracle(name, value):
    g = named_cubic_graphs()[name]
    res = cubic_proper_orientation_number(g)
    assert res.value == value == brute_force_oracle(g)
    assert is_proper_orientation(g, res.witness)
    assert max_indegree(res.witness) == value


def test_cubic_algorithm_random_n10():
    rng = random.Random(2)
    for _ in range(8):
        g = random_regular(10, 3, rng)
        res = cubic_proper_orientation_number(g)
        assert res.value == brute_force_oracle(g)
        assert is_proper_orientation(g, res.witness)


def test_cubic_algorithm_componentwise():
    g = disjoint_union(complete_bipartite_graph(3, 3), complete_graph(4))
    res = cubic_proper_orientation_number(g)
    assert res.value == 3
    assert Counter(res.witness.indegrees[6:]) == Counter([0, 1, 2, 3])
    assert set(res.witness.indegrees[:6]) == {1, 2}
    two_k33 = disjoint_union(complete_bipartite_graph(3, 3), complete_bipartite_graph(3, 3))
    assert cubic_proper_orientation_number(two_k33).value == 2
    with pytest.raises(PreconditionError):
        cubic_proper_orientation_number(cycle_graph(4))

from itertools import combinations

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from src.geometry.automorphisms import (
    automorphism_group,
    graph_automorphism_group,
    is_graph_automorphism,
    node_orbits,
)
from src.geometry.projective_plane import (
    build_plane,
    general_position_line_quadruples,
    general_position_quadruples,
    incidence_graph,
    standard_polarity,
)
from src.utils.errors import UnsupportedParameterError


@pytest.fixture(scope="module", params=[2, 3])
def plane(request):
    return build_plane(request.param)


def test_plane_sizes(plane):
    q = plane.q
    assert plane.size == q * q + q + 1
    assert {len(s) for s in plane.points_on} == {q + 1}
    assert {len(s) for s in plane.lines_through} == {q + 1}


def test_two_points_span_one_line_and_two_lines_meet_once(plane):
    for a, b in combinations(range(plane.size), 2):
        l = plane.line_through(a, b)
        assert {a, b} <= plane.points_on[l]
    for l, m in combinations(range(plane.size), 2):
        assert plane.meet(l, m) in plane.points_on[l] & plane.points_on[m]


def test_standard_polarity_is_an_incidence_preserving_involution(plane):
    pol = standard_polarity(plane)
    assert pol.is_involution()
    assert pol.is_incidence_compatible(plane)
    perm = pol.node_permutation()
    assert is_graph_automorphism(incidence_graph(plane), list(perm))


def test_unsupported_order():
    with pytest.raises(UnsupportedParameterError):
        build_plane(4)


def test_general_position_counts():
    fano = build_plane(2)
    assert len(general_position_quadruples(fano)) == 7
    pg3 = build_plane(3)
    assert len(general_position_quadruples(pg3)) == 234
    assert len(general_position_line_quadruples(pg3)) == 234


def test_incidence_graph_is_bipartite_with_colours(plane):
    g = incidence_graph(plane)
    assert nx.is_bipartite(g)
    assert g.number_of_edges() == plane.size * (plane.q + 1)
    assert {g.nodes[v]["kind"] for v in range(plane.size)} == {"point"}


def test_fano_automorphism_orders():
    g = incidence_graph(build_plane(2))
    assert automorphism_group(g).order() == 336
    assert automorphism_group(g, respect_colours=True).order() == 168
    assert sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter()) == 336


@pytest.mark.slow
def test_pg3_automorphism_orders():
    g = incidence_graph(build_plane(3))
    full = automorphism_group(g)
    colour = automorphism_group(g, respect_colours=True)
    assert full.order() == 11232
    assert colour.order() == 5616
    assert all(full.contains(c) for c in graph_automorphism_group(g, respect_colours=True))


def test_generators_are_automorphisms_of_small_graphs():
    for graph, order in [(nx.cycle_graph(9), 18), (nx.petersen_graph(), 120), (nx.complete_graph(5), 120)]:
        gens = graph_automorphism_group(graph)
        assert all(is_graph_automorphism(graph, g) for g in gens)
        assert automorphism_group(graph).order() == order


def test_node_orbits_split_points_and_lines_under_colour_group():
    plane = build_plane(2)
    g = incidence_graph(plane)
    orbits = node_orbits(g, graph_automorphism_group(g, respect_colours=True))
    assert sorted(map(sorted, orbits)) == [list(range(7)), list(range(7, 14))]
    assert len(node_orbits(g, graph_automorphism_group(g))) == 1

import networkx as nx
import pytest

from zdgraph.algebra.builders import catalog_ring
from zdgraph.graphs.configs import (
    ForbiddenConfig,
    contains_subgraph,
    find_induced,
    iter_induced,
    pattern_graph,
)
from zdgraph.graphs.zdg import ZdGraph, graph


def test_roles_and_parse():
    assert ForbiddenConfig.P5.roles == ("a", "b", "c", "d", "e")
    assert ForbiddenConfig.C45.roles == ("a", "b", "c", "d", "e", "f")
    assert ForbiddenConfig.parse("C4prime") is ForbiddenConfig.C4_PRIME
    assert ForbiddenConfig.parse("C4_DOUBLE_PRIME") is ForbiddenConfig.C4_DOUBLE_PRIME
    with pytest.raises(ValueError, match="configuration"):
        ForbiddenConfig.parse("C46")


@pytest.mark.parametrize("config, vertices, edges", [
    (ForbiddenConfig.P5, 5, 4),
    (ForbiddenConfig.C4_PRIME, 6, 6),
    (ForbiddenConfig.C4_DOUBLE_PRIME, 6, 6),
    (ForbiddenConfig.C43, 5, 6),
    (ForbiddenConfig.C44, 6, 7),
    (ForbiddenConfig.C45, 6, 7),
])
def test_pattern_sizes(config, vertices, edges):
    H = pattern_graph(config)
    assert (H.number_of_nodes(), H.number_of_edges()) == (vertices, edges)


def test_path_witness_is_lexicographically_first():
    G = ZdGraph.from_networkx(nx.path_graph(5))
    assert find_induced(G, ForbiddenConfig.P5) == {"a": 0, "b": 1, "c": 2, "d": 3, "e": 4}
    assert len(list(iter_induced(G, ForbiddenConfig.P5))) == 2


def test_induced_versus_plain_subgraph():
    G = ZdGraph.from_networkx(nx.cycle_graph(5))
    assert find_induced(G, ForbiddenConfig.P5) is None
    assert contains_subgraph(G, ForbiddenConfig.P5)


def test_square_with_adjacent_pendants():
    G = ZdGraph.from_edges(range(6), [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 5)])
    assert find_induced(G, ForbiddenConfig.C4_PRIME) == {
        "a": 0, "b": 1, "c": 2, "d": 3, "e": 4, "f": 5,
    }
    assert find_induced(G, ForbiddenConfig.C4_DOUBLE_PRIME) is None


def test_every_pattern_finds_itself():
    for config in ForbiddenConfig:
        G = ZdGraph.from_networkx(pattern_graph(config))
        match = find_induced(G, config)
        assert match is not None
        assert set(match) == set(config.roles)


def test_z4xz4_contains_c43():
    R = catalog_ring("Z4xZ4")
    G = graph(R)
    match = find_induced(G, ForbiddenConfig.C43)
    assert match is not None
    a, b, e = match["a"], match["b"], match["e"]
    assert G.has_edge(a, b) and G.has_edge(a, e) and G.has_edge(b, e)


def test_z16_has_no_long_cycle_patterns():
    G = graph(catalog_ring("Z16"))
    for config in (ForbiddenConfig.C43, ForbiddenConfig.C44, ForbiddenConfig.C45, ForbiddenConfig.C4_PRIME):
        assert find_induced(G, config) is None


def test_small_graphs_short_circuit():
    G = ZdGraph.from_edges(range(3), [(0, 1), (1, 2)])
    assert list(iter_induced(G, ForbiddenConfig.P5)) == []
    assert not contains_subgraph(G, ForbiddenConfig.C44)

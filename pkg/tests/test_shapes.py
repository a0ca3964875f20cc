from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zdgraph.algebra.builders import catalog_ring
from zdgraph.graphs.shapes import (
    Disconnected,
    GraphShape,
    ShapeTag,
    classify,
    classify_networkx,
    expected_shape,
    is_complete_multipartite,
    is_regular,
    notation,
    realize,
    rebuilds,
)
from zdgraph.graphs.zdg import ZdGraph, graph

ROUND_TRIP = [
    GraphShape(ShapeTag.COMPLETE, (4,)),
    GraphShape(ShapeTag.COMPLETE_BIPARTITE, (2, 3)),
    GraphShape(ShapeTag.CYCLE, (6,)),
    GraphShape(ShapeTag.PATH, (5,)),
    GraphShape(ShapeTag.TWO_STAR, (2, 1)),
    GraphShape(ShapeTag.BAR_K, (2, 3, 2)),
    GraphShape(ShapeTag.DELTA_K, (3, 3, 2, 2, 0)),
    GraphShape(ShapeTag.DELTA_K, (1, 1, 2, 1, 1)),
    GraphShape(ShapeTag.COMPLETE_MULTIPARTITE, (1, 1, 2)),
]


@pytest.mark.parametrize("shape", ROUND_TRIP, ids=str)
def test_realized_shapes_classify_back(shape):
    G = ZdGraph.from_networkx(realize(shape))
    found = classify(G)
    assert found == shape
    assert rebuilds(G, found)


@pytest.mark.parametrize("H, expected", [
    (nx.empty_graph(0), GraphShape(ShapeTag.EMPTY)),
    (nx.empty_graph(1), GraphShape(ShapeTag.COMPLETE, (1,))),
    (nx.path_graph(2), GraphShape(ShapeTag.COMPLETE, (2,))),
    (nx.path_graph(3), GraphShape(ShapeTag.TWO_STAR, (0, 1))),
    (nx.path_graph(4), GraphShape(ShapeTag.TWO_STAR, (1, 1))),
    (nx.star_graph(3), GraphShape(ShapeTag.TWO_STAR, (0, 2))),
    (nx.cycle_graph(4), GraphShape(ShapeTag.COMPLETE_BIPARTITE, (2, 2))),
    (nx.petersen_graph(), GraphShape(ShapeTag.OTHER, (10,))),
], ids=["empty", "K1", "K2", "P3", "P4", "K13", "C4", "petersen"])
def test_classification_priority(H, expected):
    assert classify_networkx(H) == expected


def test_disconnected_graph_is_rejected():
    with pytest.raises(Disconnected):
        classify(ZdGraph.from_edges(range(4), [(0, 1), (2, 3)]))


@pytest.mark.parametrize("name, expected", [
    ("Z4", GraphShape(ShapeTag.COMPLETE, (1,))),
    ("Z9", GraphShape(ShapeTag.COMPLETE, (2,))),
    ("Z8", GraphShape(ShapeTag.TWO_STAR, (0, 1))),
    ("Z2xZ4", GraphShape(ShapeTag.TWO_STAR, (2, 1))),
    ("Z3xZ3", GraphShape(ShapeTag.COMPLETE_BIPARTITE, (2, 2))),
    ("Z3xZ4", GraphShape(ShapeTag.BAR_K, (3, 2, 2))),
    ("Z16", GraphShape(ShapeTag.DELTA_K, (1, 1, 4, 0, 0))),
    ("Z4xZ4", GraphShape(ShapeTag.DELTA_K, (3, 3, 2, 2, 0))),
    ("Z4[x]/(x^2+x+1)", GraphShape(ShapeTag.COMPLETE, (3,))),
    ("GF(8)", GraphShape(ShapeTag.EMPTY)),
])
def test_ring_shapes(name, expected):
    G = graph(catalog_ring(name))
    shape = classify(G)
    assert shape == expected
    if shape.tag is not ShapeTag.EMPTY:
        assert rebuilds(G, shape)


def test_z16_witness_roles():
    R = catalog_ring("Z16")
    witness = classify(graph(R)).witness
    roles = {R.label(v): role for v, role in witness.items()}
    assert roles["8"] == "a"
    assert {roles["4"], roles["12"]} == {"b", "e"}
    assert roles["2"].startswith("pendant-on-a-")


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5), st.randoms())
def test_double_stars_are_two_stars(n1, n2, rnd):
    H = nx.Graph()
    H.add_edge("v1", "v2")
    H.add_edges_from(("v1", f"u{i}") for i in range(n1))
    H.add_edges_from(("v2", f"w{j}") for j in range(n2))
    nodes = list(H.nodes)
    rnd.shuffle(nodes)
    G = ZdGraph.from_networkx(nx.relabel_nodes(H, {v: f"n{i:02d}" for i, v in enumerate(nodes)}))

    shape = classify(G)
    if n1 == 0 and n2 == 0:
        assert shape == GraphShape(ShapeTag.COMPLETE, (2,))
    elif min(n1, n2) == 0:
        assert shape == GraphShape(ShapeTag.TWO_STAR, (0, max(n1, n2)))
    else:
        assert shape == GraphShape(ShapeTag.TWO_STAR, (max(n1, n2), min(n1, n2)))
    assert rebuilds(G, shape)


def test_expected_shape_normalizes_through_priority():
    assert expected_shape(ShapeTag.TWO_STAR, 0, 0) == GraphShape(ShapeTag.COMPLETE, (2,))
    assert expected_shape(ShapeTag.COMPLETE_MULTIPARTITE, 2, 2) == GraphShape(ShapeTag.COMPLETE_BIPARTITE, (2, 2))


def test_witness_is_ignored_by_equality():
    assert GraphShape(ShapeTag.COMPLETE, (2,), {0: "k1", 1: "k2"}) == GraphShape(ShapeTag.COMPLETE, (2,))


def test_notation_and_dict():
    shape = GraphShape(ShapeTag.DELTA_K, (3, 3, 2, 2, 0), {5: "a"})
    assert str(shape) == "DeltaK(3,3,2,2,0)"
    assert notation(shape) == "K_{3,3}^{Δ(2,2,0)}"
    assert notation(GraphShape(ShapeTag.BAR_K, (3, 2, 2))) == "K̄^{2}_{3,2}"
    assert shape.to_dict() == {
        "tag": "DeltaK",
        "params": [3, 3, 2, 2, 0],
        "notation": "K_{3,3}^{Δ(2,2,0)}",
        "witness": {"5": "a"},
    }


def test_other_shapes_do_not_rebuild():
    G = ZdGraph.from_networkx(nx.petersen_graph())
    shape = classify(G)
    assert not rebuilds(G, shape)
    with pytest.raises(ValueError):
        realize(shape)


def test_multipartite_and_regular_properties():
    K = ZdGraph.from_networkx(nx.complete_multipartite_graph(1, 2, 2))
    assert is_complete_multipartite(K) == (1, 2, 2)
    assert is_regular(K) is None
    C = ZdGraph.from_networkx(nx.cycle_graph(5))
    assert is_complete_multipartite(C) is None
    assert is_regular(C) == 2


def _partitions(n, smallest=1):
    if n == 0:
        yield ()
        return
    for first in range(smallest, n + 1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _family_members(n):
    """Every family member on n vertices, in classification priority order."""
    yield ShapeTag.COMPLETE, (n,)
    for m in range(2, n // 2 + 1):
        yield ShapeTag.COMPLETE_BIPARTITE, (m, n - m)
    if n >= 5:
        yield ShapeTag.CYCLE, (n,)
        yield ShapeTag.PATH, (n,)
    if n >= 3:
        for p in range(n - 1):
            yield ShapeTag.TWO_STAR, (p, n - 2 - p)
    for m in range(2, n):
        for k in range(2, n - m):
            yield ShapeTag.BAR_K, (m, k, n - m - k)
    # degree-1 vertices are always pendants: parts are both singletons or both >= 2
    for m in range(1, n):
        for k in range(1, n):
            rest = n - m - k - 1
            if (m == 1) != (k == 1) or rest < 0:
                continue
            for r1 in range(rest + 1):
                for r2 in range(rest - r1 + 1):
                    yield ShapeTag.DELTA_K, (m, k, r1, r2, rest - r1 - r2)
    for parts in _partitions(n):
        if len(parts) >= 2:
            yield ShapeTag.COMPLETE_MULTIPARTITE, parts


def _signature(H):
    return H.number_of_edges(), tuple(sorted(d for _, d in H.degree))


@lru_cache(maxsize=None)
def _realized_members(n):
    members = []
    for tag, params in _family_members(n):
        H = realize(GraphShape(tag, params))
        members.append((GraphShape(tag, params), H, _signature(H)))
    return members


def _matching_members(H):
    """Members of the first family (by priority) that H is isomorphic to."""
    signature = _signature(H)
    matches = [
        shape for shape, R, sig in _realized_members(H.number_of_nodes())
        if sig == signature and nx.is_isomorphic(R, H)
    ]
    if not matches:
        return [GraphShape(ShapeTag.OTHER, (H.number_of_nodes(),))]
    return [shape for shape in matches if shape.tag is matches[0].tag]


def test_classify_agrees_with_role_assignment_search(all_algebras):
    checked = 0
    for S in all_algebras:
        G = graph(S)
        if not 1 <= len(G) <= 12:
            continue
        shape = classify(G)
        allowed = _matching_members(G.to_networkx())

        assert shape.tag is allowed[0].tag, S.name
        if shape.tag is ShapeTag.DELTA_K:
            assert shape.params == max(s.params for s in allowed), S.name
        else:
            assert shape.params in {s.params for s in allowed}, S.name
        if shape.tag is not ShapeTag.OTHER:
            assert rebuilds(G, shape), S.name
        checked += 1
    assert checked >= 50


@pytest.mark.parametrize("H", [
    nx.petersen_graph(),
    nx.complete_multipartite_graph(1, 2, 3),
    nx.cycle_graph(7),
    nx.path_graph(6),
    nx.lollipop_graph(3, 2),
], ids=["petersen", "K123", "C7", "P6", "lollipop"])
def test_classify_networkx_agrees_with_role_assignment_search(H):
    shape = classify_networkx(H)
    allowed = _matching_members(H)
    assert shape.tag is allowed[0].tag
    assert shape.params in {s.params for s in allowed}

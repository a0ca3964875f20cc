import pytest

from zdgraph.algebra.semiring import is_additively_cancellative, is_commutative, validate
from zdgraph.constructions import (
    CONSTRUCTIONS,
    RING_CORPUS_NAMES,
    UnknownConstruction,
    build,
    complete,
    iter_grid,
    matrix_semiring,
    non_cancellative_triangle,
    one_triangle,
    pendant_factor,
    ring_corpus,
)
from zdgraph.graphs.shapes import GraphShape, ShapeTag, classify, rebuilds
from zdgraph.graphs.zdg import graph, is_connected

GRID = [(cid, params) for cid, c in CONSTRUCTIONS.items() for params in c.grid()]


@pytest.mark.parametrize(
    "cid, params", GRID,
    ids=[f"{cid}-{'-'.join(str(v) for v in params.values())}" for cid, params in GRID],
)
def test_grid_point_realizes_expected_shape(cid, params):
    S, spec = build(cid, **params)
    assert validate(S).passed
    G = graph(S)
    assert is_connected(G)
    shape = classify(G)
    assert shape == spec.expected
    assert rebuilds(G, shape)


@pytest.mark.parametrize("n", range(3, 7))
def test_complete_has_one_nonzero_square(n):
    S = complete(n)
    squares = [x for x in graph(S).vertices if S.times(x, x) != S.zero]
    assert len(squares) == 1


def test_star_of_one_is_an_edge():
    S, spec = build("star", n=1)
    assert spec.expected == GraphShape(ShapeTag.COMPLETE, (2,))
    assert classify(graph(S)) == spec.expected


def test_non_cancellative_triangle():
    S = non_cancellative_triangle()
    assert len(graph(S)) == 8
    assert is_commutative(S)
    assert not is_additively_cancellative(S)


def test_matrix_semiring_is_noncommutative():
    S = matrix_semiring(2)
    assert S.order == 16
    assert S.name == "M2(B)"
    assert not is_commutative(S)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pendant_factor_size(n):
    T = pendant_factor(n)
    assert T.order == n + 1
    assert validate(T).passed


def test_one_triangle_grid_covers_validity_range():
    points = {tuple(p.values()) for p in CONSTRUCTIONS["one-triangle"].grid()}
    assert len(points) == 84
    assert max(sum(p) for p in points) == 9
    assert {(7, 1, 1), (4, 4, 1), (5, 2, 2), (4, 3, 2), (6, 2, 1), (3, 3, 3)} <= points


@pytest.mark.parametrize("r", [(7, 1, 1), (1, 7, 1), (4, 3, 2), (3, 3, 3)])
def test_one_triangle_upper_range(r):
    # with m = n = 1 every triangle vertex can be the apex, so pendant counts sort descending
    S = one_triangle(*r)
    assert classify(graph(S)) == GraphShape(ShapeTag.DELTA_K, (1, 1, *sorted(r, reverse=True)))


@pytest.mark.parametrize("cid, params", [
    ("star", {}),
    ("star", {"n": 9}),
    ("star", {"n": 2, "m": 1}),
    ("multipartite", {"n": 4, "k": 4}),
    ("one-triangle", {"r1": 0, "r2": 1, "r3": 1}),
    ("one-triangle", {"r1": 4, "r2": 4, "r3": 2}),
])
def test_invalid_parameters(cid, params):
    with pytest.raises(ValueError):
        build(cid, **params)


def test_unknown_construction():
    with pytest.raises(UnknownConstruction, match="known"):
        build("hexagon")


def test_build_names_the_algebra():
    S, spec = build("two-star", n=2, m=1)
    assert S.name == "two-star(n=2, m=1)"
    assert spec.describe() == S.name
    assert str(spec.expected) == "TwoStar(2,1)"


def test_iter_grid_subset():
    built = list(iter_grid(["complete"]))
    assert [spec.params["n"] for _, spec in built] == [3, 4, 5, 6]


def test_ring_corpus():
    rings = ring_corpus()
    assert [R.name for R in rings] == RING_CORPUS_NAMES
    assert all(validate(R).passed for R in rings)

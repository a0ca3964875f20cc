"""
Graph Shapes
============

Recognition of the named zero-divisor graph families with extracted parameters:
- complete, complete bipartite, cycles, paths
- two-stars S_{m,n} (trees of diameter <= 3)
- K̄^r_{m,n}: complete bipartite with r pendants on one vertex
- K_{m,n}^{Δ(r1,r2,r3)}: the one-triangle family
- complete multipartite graphs

Every recognized shape carries a witness (vertex -> role label) that rebuilds
the input graph through realize().
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from zdgraph.graphs.zdg import ZdGraph

logger = logging.getLogger(__name__)


class Disconnected(ValueError):
    """classify was given a disconnected graph."""


class ShapeTag(Enum):
    """Graph families in classification priority order."""
    EMPTY = "Empty"
    COMPLETE = "Complete"
    COMPLETE_BIPARTITE = "CompleteBipartite"
    CYCLE = "Cycle"
    PATH = "Path"
    TWO_STAR = "TwoStar"
    BAR_K = "BarK"
    DELTA_K = "DeltaK"
    COMPLETE_MULTIPARTITE = "CompleteMultipartite"
    OTHER = "Other"


@dataclass(frozen=True)
class GraphShape:
    tag: ShapeTag
    params: Tuple[int, ...] = ()
    witness: Dict[int, str] = field(default_factory=dict, compare=False, hash=False)

    def __str__(self) -> str:
        return f"{self.tag.value}({','.join(str(p) for p in self.params)})"

    def to_dict(self) -> Dict[str, object]:
        return {
            "tag": self.tag.value,
            "params": list(self.params),
            "notation": notation(self),
            "witness": {str(v): role for v, role in sorted(self.witness.items())},
        }


# ===============================
# NOTATION
# ===============================

def notation(shape: GraphShape) -> str:
    """Family notation, e.g. K_{3,3}^{Δ(2,2,0)}, S_{2,1}, K̄^{2}_{3,2}."""
    p = shape.params
    joined = ",".join(str(x) for x in p)
    if shape.tag is ShapeTag.EMPTY:
        return "∅"
    if shape.tag in (ShapeTag.COMPLETE, ShapeTag.COMPLETE_BIPARTITE, ShapeTag.COMPLETE_MULTIPARTITE):
        return f"K_{{{joined}}}"
    if shape.tag is ShapeTag.CYCLE:
        return f"C_{{{p[0]}}}"
    if shape.tag is ShapeTag.PATH:
        return f"P_{{{p[0]}}}"
    if shape.tag is ShapeTag.TWO_STAR:
        return f"S_{{{p[0]},{p[1]}}}"
    if shape.tag is ShapeTag.BAR_K:
        return f"K̄^{{{p[2]}}}_{{{p[0]},{p[1]}}}"
    if shape.tag is ShapeTag.DELTA_K:
        return f"K_{{{p[0]},{p[1]}}}^{{Δ({p[2]},{p[3]},{p[4]})}}"
    return f"other graph on {p[0]} vertices"


# ===============================
# REALIZATION
# ===============================

def realize(shape: GraphShape) -> nx.Graph:
    """
    Build the family member on role labels.

    Raises:
        ValueError: Other shapes carry no structure to rebuild
    """
    H = nx.Graph()
    p = shape.params
    tag = shape.tag

    if tag is ShapeTag.EMPTY:
        return H
    if tag is ShapeTag.COMPLETE:
        roles = [f"k{i}" for i in range(1, p[0] + 1)]
        H.add_nodes_from(roles)
        H.add_edges_from((u, w) for i, u in enumerate(roles) for w in roles[i + 1:])
        return H
    if tag is ShapeTag.COMPLETE_BIPARTITE:
        left = [f"left-{i}" for i in range(1, p[0] + 1)]
        right = [f"right-{j}" for j in range(1, p[1] + 1)]
        H.add_edges_from((u, w) for u in left for w in right)
        return H
    if tag is ShapeTag.CYCLE:
        roles = [f"c{i}" for i in range(1, p[0] + 1)]
        H.add_edges_from(zip(roles, roles[1:] + roles[:1]))
        return H
    if tag is ShapeTag.PATH:
        roles = [f"p{i}" for i in range(1, p[0] + 1)]
        H.add_nodes_from(roles)
        H.add_edges_from(zip(roles, roles[1:]))
        return H
    if tag is ShapeTag.TWO_STAR:
        H.add_edge("v1", "v2")
        H.add_edges_from(("v1", f"u{i}") for i in range(1, p[0] + 1))
        H.add_edges_from(("v2", f"w{j}") for j in range(1, p[1] + 1))
        return H
    if tag in (ShapeTag.BAR_K, ShapeTag.DELTA_K):
        m, n = p[0], p[1]
        left = ["a"] + [f"left-{i}" for i in range(2, m + 1)]
        if tag is ShapeTag.BAR_K:
            right = [f"right-{j}" for j in range(1, n + 1)]
        else:
            right = ["b"] + [f"right-{j}" for j in range(2, n + 1)]
        H.add_edges_from((u, w) for u in left for w in right)
        H.add_edges_from(("a", f"pendant-on-a-{i}") for i in range(1, p[2] + 1))
        if tag is ShapeTag.DELTA_K:
            H.add_edges_from([("a", "e"), ("b", "e")])
            H.add_edges_from(("b", f"pendant-on-b-{j}") for j in range(1, p[3] + 1))
            H.add_edges_from(("e", f"pendant-on-e-{k}") for k in range(1, p[4] + 1))
        return H
    if tag is ShapeTag.COMPLETE_MULTIPARTITE:
        parts = [[f"part-{i}-{j}" for j in range(1, size + 1)] for i, size in enumerate(p, start=1)]
        for part in parts:
            H.add_nodes_from(part)
        for i, part in enumerate(parts):
            for other in parts[i + 1:]:
                H.add_edges_from((u, w) for u in part for w in other)
        return H
    raise ValueError(f"Invalid shape for realization: {shape}")


# ===============================
# RECOGNIZERS
# ===============================

def _sorted(vs) -> List:
    return sorted(vs)


def _complete_bipartite_parts(H: nx.Graph) -> Optional[Tuple[List, List]]:
    """Parts of a connected complete bipartite graph, or None."""
    if H.number_of_nodes() < 2 or not nx.is_connected(H) or not nx.is_bipartite(H):
        return None
    X, Y = nx.bipartite.sets(H)
    if H.number_of_edges() != len(X) * len(Y):
        return None
    return _sorted(X), _sorted(Y)


def _pendants(H: nx.Graph) -> Dict:
    """Degree-1 vertices mapped to their neighbour (skipping K2 components)."""
    pendants = {}
    for v in H.nodes:
        if H.degree(v) == 1:
            (u,) = H.neighbors(v)
            if H.degree(u) > 1:
                pendants[v] = u
    return pendants


def _triangles(H: nx.Graph) -> List[Tuple]:
    found = set()
    for u, w in H.edges:
        for x in set(H[u]) & set(H[w]):
            found.add(tuple(sorted((u, w, x))))
    return sorted(found)


class ShapeRecognizer:
    """Family recognizers; each returns a GraphShape or None."""

    @staticmethod
    def complete(H: nx.Graph) -> Optional[GraphShape]:
        n = H.number_of_nodes()
        if H.number_of_edges() != n * (n - 1) // 2:
            return None
        witness = {v: f"k{i}" for i, v in enumerate(_sorted(H.nodes), start=1)}
        return GraphShape(ShapeTag.COMPLETE, (n,), witness)

    @staticmethod
    def complete_bipartite(H: nx.Graph) -> Optional[GraphShape]:
        parts = _complete_bipartite_parts(H)
        if parts is None:
            return None
        X, Y = parts
        if len(X) < 2 or len(Y) < 2:
            return None
        left, right = (X, Y) if (len(X), X[0]) <= (len(Y), Y[0]) else (Y, X)
        witness = {v: f"left-{i}" for i, v in enumerate(left, start=1)}
        witness.update({v: f"right-{j}" for j, v in enumerate(right, start=1)})
        return GraphShape(ShapeTag.COMPLETE_BIPARTITE, (len(left), len(right)), witness)

    @staticmethod
    def cycle(H: nx.Graph) -> Optional[GraphShape]:
        n = H.number_of_nodes()
        if n < 5 or any(d != 2 for _, d in H.degree) or not nx.is_connected(H):
            return None
        start = min(H.nodes)
        order = [start, min(H[start])]
        while len(order) < n:
            order.append(next(w for w in _sorted(H[order[-1]]) if w != order[-2]))
        witness = {v: f"c{i}" for i, v in enumerate(order, start=1)}
        return GraphShape(ShapeTag.CYCLE, (n,), witness)

    @staticmethod
    def path(H: nx.Graph) -> Optional[GraphShape]:
        n = H.number_of_nodes()
        if n < 5 or not nx.is_tree(H) or max(d for _, d in H.degree) > 2:
            return None
        start = min(v for v in H.nodes if H.degree(v) == 1)
        order = [start]
        while len(order) < n:
            order.append(next(w for w in _sorted(H[order[-1]]) if w not in order[-2:]))
        witness = {v: f"p{i}" for i, v in enumerate(order, start=1)}
        return GraphShape(ShapeTag.PATH, (n,), witness)

    @staticmethod
    def two_star(H: nx.Graph) -> Optional[GraphShape]:
        n = H.number_of_nodes()
        if n < 3 or not nx.is_tree(H):
            return None
        inner = _sorted(v for v in H.nodes if H.degree(v) > 1)
        if len(inner) == 1:
            center = inner[0]
            leaves = _sorted(H[center])
            v1, v2 = leaves[0], center
            on_v1, on_v2 = [], leaves[1:]
        elif len(inner) == 2:
            x, y = inner
            leaves_x = _sorted(w for w in H[x] if w != y)
            leaves_y = _sorted(w for w in H[y] if w != x)
            if len(leaves_x) >= len(leaves_y):
                v1, v2, on_v1, on_v2 = x, y, leaves_x, leaves_y
            else:
                v1, v2, on_v1, on_v2 = y, x, leaves_y, leaves_x
        else:
            return None
        witness = {v1: "v1", v2: "v2"}
        witness.update({v: f"u{i}" for i, v in enumerate(on_v1, start=1)})
        witness.update({v: f"w{j}" for j, v in enumerate(on_v2, start=1)})
        return GraphShape(ShapeTag.TWO_STAR, (len(on_v1), len(on_v2)), witness)

    @staticmethod
    def bar_k(H: nx.Graph) -> Optional[GraphShape]:
        if _triangles(H):
            return None
        pendants = _pendants(H)
        anchors = set(pendants.values())
        if len(anchors) != 1:
            return None
        (a,) = anchors
        parts = _complete_bipartite_parts(H.subgraph(set(H.nodes) - set(pendants)))
        if parts is None or len(parts[0]) < 2 or len(parts[1]) < 2:
            return None
        P, Q = parts if a in parts[0] else (parts[1], parts[0])
        witness = {a: "a"}
        witness.update({v: f"left-{i}" for i, v in enumerate((v for v in P if v != a), start=2)})
        witness.update({v: f"right-{j}" for j, v in enumerate(Q, start=1)})
        witness.update({v: f"pendant-on-a-{i}" for i, v in enumerate(_sorted(pendants), start=1)})
        return GraphShape(ShapeTag.BAR_K, (len(P), len(Q), len(pendants)), witness)

    @staticmethod
    def delta_k(H: nx.Graph) -> Optional[GraphShape]:
        triangles = _triangles(H)
        if len(triangles) != 1:
            return None
        pendants = _pendants(H)
        core = H.subgraph(set(H.nodes) - set(pendants))
        best: Optional[GraphShape] = None
        for apex in triangles[0]:
            x, y = [v for v in triangles[0] if v != apex]
            if set(core[apex]) != {x, y}:
                continue
            parts = _complete_bipartite_parts(core.subgraph(set(core.nodes) - {apex}))
            if parts is None:
                continue
            for a, b in ((x, y), (y, x)):
                P, Q = parts if a in parts[0] else (parts[1], parts[0])
                if b not in Q:
                    continue
                on = {a: [], b: [], apex: []}
                if any(anchor not in on for anchor in pendants.values()):
                    continue
                for v in _sorted(pendants):
                    on[pendants[v]].append(v)
                params = (len(P), len(Q), len(on[a]), len(on[b]), len(on[apex]))
                if best is not None and params <= best.params:
                    continue
                witness = {a: "a", b: "b", apex: "e"}
                witness.update({v: f"left-{i}" for i, v in enumerate((v for v in P if v != a), start=2)})
                witness.update({v: f"right-{j}" for j, v in enumerate((v for v in Q if v != b), start=2)})
                for role, anchor in (("a", a), ("b", b), ("e", apex)):
                    witness.update({v: f"pendant-on-{role}-{i}" for i, v in enumerate(on[anchor], start=1)})
                best = GraphShape(ShapeTag.DELTA_K, params, witness)
        return best

    @staticmethod
    def complete_multipartite(H: nx.Graph) -> Optional[GraphShape]:
        parts = multipartite_parts(H)
        if parts is None or len(parts) < 2:
            return None
        witness = {}
        for i, part in enumerate(parts, start=1):
            witness.update({v: f"part-{i}-{j}" for j, v in enumerate(part, start=1)})
        return GraphShape(ShapeTag.COMPLETE_MULTIPARTITE, tuple(len(p) for p in parts), witness)


_PRIORITY = (
    ShapeRecognizer.complete,
    ShapeRecognizer.complete_bipartite,
    ShapeRecognizer.cycle,
    ShapeRecognizer.path,
    ShapeRecognizer.two_star,
    ShapeRecognizer.bar_k,
    ShapeRecognizer.delta_k,
    ShapeRecognizer.complete_multipartite,
)


def classify_networkx(H: nx.Graph) -> GraphShape:
    n = H.number_of_nodes()
    if n == 0:
        return GraphShape(ShapeTag.EMPTY)
    if not nx.is_connected(H):
        raise Disconnected(f"Cannot classify a disconnected graph on {n} vertices")
    for recognizer in _PRIORITY:
        shape = recognizer(H)
        if shape is not None:
            return shape
    witness = {v: f"v{i}" for i, v in enumerate(_sorted(H.nodes), start=1)}
    return GraphShape(ShapeTag.OTHER, (n,), witness)


def classify(G: ZdGraph) -> GraphShape:
    """
    Most specific family under the priority
    Empty > Complete > CompleteBipartite > Cycle > Path > TwoStar > BarK > DeltaK
    > CompleteMultipartite > Other.

    Raises:
        Disconnected: G has more than one component
    """
    return classify_networkx(G.to_networkx())


def expected_shape(tag: ShapeTag, *params: int) -> GraphShape:
    """A claimed family member normalized through classification priority."""
    return classify_networkx(realize(GraphShape(tag, tuple(params))))


def rebuilds(G: ZdGraph, shape: GraphShape) -> bool:
    """True when realize(shape) relabeled by the witness is exactly G."""
    if shape.tag is ShapeTag.OTHER:
        return False
    H = realize(shape)
    if set(shape.witness) != set(G.vertices) or len(set(shape.witness.values())) != len(G):
        return False
    if set(shape.witness.values()) != set(H.nodes):
        return False
    mapped = {frozenset((shape.witness[u], shape.witness[w])) for u, w in G.edges()}
    return mapped == {frozenset(e) for e in H.edges}


# ===============================
# PROPERTIES
# ===============================

def multipartite_parts(H: nx.Graph) -> Optional[List[List]]:
    """Parts of a complete multipartite graph (complement components), smallest first."""
    if H.number_of_nodes() == 0:
        return None
    components = [_sorted(c) for c in nx.connected_components(nx.complement(H))]
    for part in components:
        if H.subgraph(part).number_of_edges() > 0:
            return None
    n = H.number_of_nodes()
    expected = n * (n - 1) // 2 - sum(len(c) * (len(c) - 1) // 2 for c in components)
    if H.number_of_edges() != expected:
        return None
    return sorted(components, key=lambda c: (len(c), c[0]))


def is_complete_multipartite(G: ZdGraph) -> Optional[Tuple[int, ...]]:
    parts = multipartite_parts(G.to_networkx())
    return None if parts is None else tuple(len(p) for p in parts)


def is_regular(G: ZdGraph) -> Optional[int]:
    if len(G) == 0:
        return None
    degrees = {G.degree(v) for v in G.vertices}
    return degrees.pop() if len(degrees) == 1 else None

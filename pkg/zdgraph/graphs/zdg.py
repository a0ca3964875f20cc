"""
Zero-Divisor Graphs
===================

- Z(S)* and the zero-divisor graph Γ(S) (edge x - y iff xy = 0 or yx = 0, x != y)
- Metrics: diameter, girth, triangle count, connectivity
- networkx conversion and DOT export
"""

import logging
from collections import deque
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from zdgraph.algebra.semiring import FiniteSemiring

logger = logging.getLogger(__name__)


class Verdict(Enum):
    """Non-numeric metric outcomes."""
    EMPTY = "Empty"
    DISCONNECTED = "Disconnected"
    ACYCLIC = "Acyclic"

    def __str__(self) -> str:
        return self.value


class ZdGraph:
    """
    Simple undirected graph on element ids with a symmetric, irreflexive adjacency matrix.
    """

    def __init__(
        self,
        vertices: Sequence[int],
        adjacency: np.ndarray,
        source: str = "",
        labels: Optional[Dict[int, str]] = None,
    ):
        adjacency = np.asarray(adjacency, dtype=bool)
        k = len(vertices)
        if adjacency.shape != (k, k):
            raise ValueError(f"Invalid adjacency shape {adjacency.shape} for {k} vertices")
        if not np.array_equal(adjacency, adjacency.T) or adjacency.diagonal().any():
            raise ValueError("Invalid adjacency: must be symmetric with empty diagonal")
        self.vertices: Tuple[int, ...] = tuple(int(v) for v in vertices)
        self.adjacency = adjacency.copy()
        self.adjacency.setflags(write=False)
        self.source = source
        self.labels = labels or {v: str(v) for v in self.vertices}
        self._position = {v: i for i, v in enumerate(self.vertices)}

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int]],
                   source: str = "test double") -> "ZdGraph":
        vertices = sorted(set(vertices))
        position = {v: i for i, v in enumerate(vertices)}
        adjacency = np.zeros((len(vertices), len(vertices)), dtype=bool)
        for u, w in edges:
            if u != w:
                adjacency[position[u], position[w]] = adjacency[position[w], position[u]] = True
        return cls(vertices, adjacency, source)

    @classmethod
    def from_networkx(cls, H: nx.Graph, source: str = "networkx") -> "ZdGraph":
        order = sorted(H.nodes, key=str)
        ids = {v: i for i, v in enumerate(order)}
        graph = cls.from_edges(range(len(order)), [(ids[u], ids[w]) for u, w in H.edges], source)
        graph.labels = {ids[v]: str(v) for v in order}
        return graph

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> List[int]:
        row = self.adjacency[self._position[v]]
        return [self.vertices[i] for i in np.flatnonzero(row)]

    def degree(self, v: int) -> int:
        return int(self.adjacency[self._position[v]].sum())

    def has_edge(self, u: int, w: int) -> bool:
        return bool(self.adjacency[self._position[u], self._position[w]])

    def edges(self) -> List[Tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency))
        return [(self.vertices[i], self.vertices[j]) for i, j in zip(rows, cols)]

    def to_networkx(self) -> nx.Graph:
        H = nx.Graph()
        H.add_nodes_from(self.vertices)
        H.add_edges_from(self.edges())
        return H


# ===============================
# CONSTRUCTION
# ===============================

def _annihilates(S: FiniteSemiring) -> np.ndarray:
    zm = S.mul == S.zero
    zm = zm | zm.T
    zm[S.zero, :] = False
    zm[:, S.zero] = False
    return zm


def zero_divisor_set(S: FiniteSemiring) -> List[int]:
    """Nonzero elements with a nonzero one-sided annihilator, ascending."""
    return [int(v) for v in np.flatnonzero(_annihilates(S).any(axis=1))]


def graph(S: FiniteSemiring) -> ZdGraph:
    vertices = zero_divisor_set(S)
    adjacency = _annihilates(S)[np.ix_(vertices, vertices)].copy()
    np.fill_diagonal(adjacency, False)
    return ZdGraph(vertices, adjacency, S.name, {v: S.label(v) for v in vertices})


# ===============================
# METRICS
# ===============================

def is_connected(G: ZdGraph) -> bool:
    if len(G) == 0:
        return True
    return nx.is_connected(G.to_networkx())


def diameter(G: ZdGraph) -> Union[int, Verdict]:
    if len(G) == 0:
        return Verdict.EMPTY
    H = G.to_networkx()
    if not nx.is_connected(H):
        return Verdict.DISCONNECTED
    return nx.diameter(H)


def girth(G: ZdGraph) -> Union[int, Verdict]:
    """Shortest cycle length by BFS from every vertex."""
    best = None
    for root in G.vertices:
        dist = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in G.neighbors(u):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return Verdict.ACYCLIC if best is None else best


def triangle_count(G: ZdGraph) -> int:
    return sum(nx.triangles(G.to_networkx()).values()) // 3


def has_long_cycle(G: ZdGraph) -> bool:
    """True when some cycle has length >= 4."""
    H = G.to_networkx()
    return any(len(c) >= 4 for c in nx.biconnected_components(H))


def is_acyclic(G: ZdGraph) -> bool:
    return girth(G) is Verdict.ACYCLIC


def metrics(G: ZdGraph) -> Dict[str, object]:
    return {
        "source": G.source,
        "vertices": len(G),
        "edges": len(G.edges()),
        "connected": is_connected(G),
        "diameter": str(diameter(G)),
        "girth": str(girth(G)),
        "triangles": triangle_count(G),
    }


# ===============================
# DOT EXPORT
# ===============================

def to_dot(G: ZdGraph) -> str:
    m = metrics(G)
    comment = (
        f"source={m['source']}; diameter={m['diameter']}; "
        f"girth={m['girth']}; triangles={m['triangles']}"
    )
    lines = ["graph zdg {", f'  comment="{_escape(comment)}";']
    for v in G.vertices:
        lines.append(f'  {v} [label="{_escape(G.labels.get(v, str(v)))}"];')
    for u, w in G.edges():
        lines.append(f"  {u} -- {w};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')

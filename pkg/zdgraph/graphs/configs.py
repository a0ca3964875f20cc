"""
Forbidden Configurations
========================

Small fixed patterns searched for inside zero-divisor graphs:
- P5: the path a - b - c - d - e
- C4prime, C4doubleprime: a 4-cycle a - b - c - d - a with two pendants
- C43, C44, C45: a 4-cycle glued to a triangle, square or pentagon along a - b

Matches are role -> vertex maps; the lexicographically smallest one
(vertices listed in role order) is the reported witness.
"""

import logging
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from zdgraph.graphs.zdg import ZdGraph

logger = logging.getLogger(__name__)

_SQUARE = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]


class ForbiddenConfig(Enum):
    P5 = "P5"
    C4_PRIME = "C4prime"
    C4_DOUBLE_PRIME = "C4doubleprime"
    C43 = "C43"
    C44 = "C44"
    C45 = "C45"

    @property
    def edges(self) -> List[Tuple[str, str]]:
        return _PATTERN_EDGES[self]

    @property
    def roles(self) -> Tuple[str, ...]:
        return tuple(sorted({v for e in self.edges for v in e}))

    @classmethod
    def parse(cls, text: str) -> "ForbiddenConfig":
        for config in cls:
            if text in (config.value, config.name):
                return config
        raise ValueError(f"Invalid configuration: {text!r} (choose from {', '.join(c.value for c in cls)})")


_PATTERN_EDGES: Dict[ForbiddenConfig, List[Tuple[str, str]]] = {
    ForbiddenConfig.P5: [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
    ForbiddenConfig.C4_PRIME: _SQUARE + [("a", "e"), ("b", "f")],
    ForbiddenConfig.C4_DOUBLE_PRIME: _SQUARE + [("a", "e"), ("c", "f")],
    ForbiddenConfig.C43: _SQUARE + [("a", "e"), ("e", "b")],
    ForbiddenConfig.C44: _SQUARE + [("b", "f"), ("f", "e"), ("e", "a")],
    ForbiddenConfig.C45: _SQUARE + [("c", "f"), ("f", "e"), ("e", "a")],
}


def pattern_graph(config: ForbiddenConfig) -> nx.Graph:
    H = nx.Graph()
    H.add_edges_from(config.edges)
    return H


def _witness(config: ForbiddenConfig, mapping: Dict[int, str]) -> Tuple[int, ...]:
    inverse = {role: v for v, role in mapping.items()}
    return tuple(inverse[role] for role in config.roles)


def iter_induced(G: ZdGraph, config: ForbiddenConfig) -> Iterator[Dict[str, int]]:
    """All induced occurrences of the pattern, as role -> vertex maps in lexicographic order."""
    pattern = pattern_graph(config)
    if len(G) < pattern.number_of_nodes():
        return
    matcher = GraphMatcher(G.to_networkx(), pattern)
    found = sorted({_witness(config, m) for m in matcher.subgraph_isomorphisms_iter()})
    for vertices in found:
        yield dict(zip(config.roles, vertices))


def find_induced(G: ZdGraph, config: ForbiddenConfig) -> Optional[Dict[str, int]]:
    """
    Lexicographically first induced occurrence of the pattern.

    Returns:
        role -> vertex map, or None when G has no induced copy
    """
    match = next(iter_induced(G, config), None)
    if match is not None:
        logger.debug(f"{config.value} in {G.source}: {match}")
    return match


def contains_subgraph(G: ZdGraph, config: ForbiddenConfig) -> bool:
    """True when G has the pattern as a (not necessarily induced) subgraph."""
    pattern = pattern_graph(config)
    if len(G) < pattern.number_of_nodes():
        return False
    matcher = GraphMatcher(G.to_networkx(), pattern)
    return next(matcher.subgraph_monomorphisms_iter(), None) is not None

from zdgraph.graphs.zdg import (
    Verdict,
    ZdGraph,
    diameter,
    girth,
    graph,
    has_long_cycle,
    is_acyclic,
    is_connected,
    metrics,
    to_dot,
    triangle_count,
    zero_divisor_set,
)
from zdgraph.graphs.shapes import (
    Disconnected,
    GraphShape,
    ShapeTag,
    classify,
    expected_shape,
    is_complete_multipartite,
    is_regular,
    notation,
    rebuilds,
)
from zdgraph.graphs.configs import ForbiddenConfig, contains_subgraph, find_induced, iter_induced

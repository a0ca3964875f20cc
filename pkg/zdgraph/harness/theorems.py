"""
Theorem Catalog
===============

Every structural statement about zero-divisor graphs of finite semirings that the
harness verifies, as a (guard, conclusion) pair over cached algebra facts:
- graph metric bounds (diameter, girth, long cycles)
- shape statements (two-stars, complete multipartite, regular, K̄, one-triangle family)
- forbidden induced configurations
- algebraic identities on configuration witnesses
- ring classification by isomorphism against the ring catalog
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Tuple

from zdgraph.algebra.builders import (
    LOCAL_FACTORS,
    ONE_TRIANGLE_PRODUCTS,
    PENDANT_TRIANGLE_RINGS,
    TRIANGLE_RINGS,
    catalog_ring,
)
from zdgraph.algebra.isomorphism import are_isomorphic
from zdgraph.algebra.semiring import (
    FiniteSemiring,
    is_additively_cancellative,
    is_commutative,
    is_entire,
    is_ring,
    nilpotent_index,
)
from zdgraph.graphs.configs import ForbiddenConfig, contains_subgraph, find_induced, iter_induced
from zdgraph.graphs.shapes import (
    Disconnected,
    GraphShape,
    ShapeTag,
    classify,
    expected_shape,
    is_complete_multipartite,
    is_regular,
)
from zdgraph.graphs.zdg import (
    Verdict,
    ZdGraph,
    diameter,
    girth,
    graph,
    has_long_cycle,
    is_connected,
    triangle_count,
)

logger = logging.getLogger(__name__)

Outcome = Tuple[bool, Dict[str, Any]]


class TheoremId(Enum):
    DIAMETER_BOUND = "diameter-bound"
    ENTIRE_PRODUCT_DIAMETER = "entire-product-diameter"
    NO_LARGE_CYCLE = "no-large-cycle"
    ACYCLIC_TWO_STAR = "acyclic-two-star"
    P5_SUBGRAPH_GIRTH = "p5-subgraph-girth"
    COMPLETE_SQUARES = "complete-squares"
    RING_COMPLETE_NILPOTENT = "ring-complete-nilpotent"
    RING_NOT_P4 = "ring-not-p4"
    MULTIPARTITE_SHAPE = "multipartite-shape"
    REGULAR_SHAPE = "regular-shape"
    ONE_TRIANGLE_HAS_C43 = "one-triangle-has-c43"
    GIRTH4_NO_C4_PRIME = "girth4-no-c4prime"
    FEW_TRIANGLES_FORBIDDEN = "few-triangles-forbidden"
    RING_PRODUCT_PENDANT_BIPARTITE = "ring-product-pendant-bipartite"
    GIRTH4_PENDANT_BIPARTITE = "girth4-pendant-bipartite"
    GIRTH4_NILPOTENT_SQUARE = "girth4-nilpotent-square"
    ONE_TRIANGLE_DELTA = "one-triangle-delta"
    UNICYCLIC_TRIANGLE_DELTA = "unicyclic-triangle-delta"
    C43_ELEMENT_IDENTITIES = "c43-element-identities"
    ONE_TRIANGLE_LONG_CYCLE_DELTA = "one-triangle-long-cycle-delta"
    CANCELLATIVE_DELTA_PARAMETERS = "cancellative-delta-parameters"
    CANCELLATIVE_ONE_TRIANGLE_RING = "cancellative-one-triangle-ring"
    PRODUCT_FACTORS_LOCAL = "product-factors-local"
    RING_LONG_CYCLE_PRODUCT = "ring-long-cycle-product"
    RING_TRIANGLE_CATALOG = "ring-triangle-catalog"
    RING_ONE_TRIANGLE_CLASSIFICATION = "ring-one-triangle-classification"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        for tid in cls:
            if text in (tid.value, tid.name):
                return tid
        raise ValueError(f"Invalid theorem id: {text!r}")


# ===============================
# ALGEBRA FACTS
# ===============================

class AlgebraFacts:
    """Lazily computed properties of one algebra and its zero-divisor graph."""

    def __init__(self, S: FiniteSemiring):
        self.S = S

    @cached_property
    def graph(self) -> ZdGraph:
        return graph(self.S)

    @cached_property
    def commutative(self) -> bool:
        return is_commutative(self.S)

    @cached_property
    def ring(self) -> bool:
        return is_ring(self.S)

    @cached_property
    def entire(self) -> bool:
        return is_entire(self.S)

    @cached_property
    def cancellative(self) -> bool:
        return is_additively_cancellative(self.S)

    @cached_property
    def vertices(self) -> int:
        return len(self.graph)

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.graph)

    @cached_property
    def diameter(self):
        return diameter(self.graph)

    @cached_property
    def girth(self):
        return girth(self.graph)

    @cached_property
    def triangles(self) -> int:
        return triangle_count(self.graph)

    @cached_property
    def long_cycle(self) -> bool:
        return has_long_cycle(self.graph)

    @cached_property
    def shape(self) -> Optional[GraphShape]:
        try:
            return classify(self.graph)
        except Disconnected:
            return None

    @cached_property
    def parts(self) -> Optional[Tuple[int, ...]]:
        return is_complete_multipartite(self.graph)

    @cached_property
    def regular(self) -> Optional[int]:
        return is_regular(self.graph)

    def commutative_ring(self) -> bool:
        return self.commutative and self.ring

    def shape_is(self, tag: ShapeTag, *params: int) -> bool:
        return self.shape is not None and self.shape == GraphShape(tag, tuple(params))

    def complete_of_size_at_least(self, n: int) -> bool:
        return self.shape is not None and self.shape.tag is ShapeTag.COMPLETE and self.shape.params[0] >= n

    def pendants_on(self, v: int) -> List[int]:
        G = self.graph
        return [w for w in G.neighbors(v) if G.degree(w) == 1]

    def label(self, x: int) -> str:
        return self.S.label(x)


def _isomorphic_to_any(S: FiniteSemiring, names: List[str]) -> Optional[str]:
    for name in names:
        if are_isomorphic(S, catalog_ring(name)):
            return name
    return None


def _shape_detail(f: AlgebraFacts) -> Dict[str, Any]:
    return {"shape": str(f.shape) if f.shape is not None else "disconnected"}


# ===============================
# GRAPH METRICS
# ===============================

def _diameter_bound(f: AlgebraFacts) -> Outcome:
    d = f.diameter
    ok = f.connected and (d is Verdict.EMPTY or (isinstance(d, int) and d <= 3))
    return ok, {"connected": f.connected, "diameter": str(d)}


def _entire_product_guard(f: AlgebraFacts) -> bool:
    return len(f.S.factors) == 2 and all(is_entire(F) for F in f.S.factors) and f.vertices > 0


def _entire_product_diameter(f: AlgebraFacts) -> Outcome:
    d = f.diameter
    return isinstance(d, int) and d <= 2, {"diameter": str(d)}


def _no_large_cycle(f: AlgebraFacts) -> Outcome:
    G = f.graph
    is_cycle = f.vertices >= 5 and f.connected and all(G.degree(v) == 2 for v in G.vertices)
    return not is_cycle, {"vertices": f.vertices}


def _acyclic_two_star(f: AlgebraFacts) -> Outcome:
    g, d = f.girth, f.diameter
    if g is not Verdict.ACYCLIC:
        ok = isinstance(d, int) and d <= 3 and g <= 4
        return ok, {"girth": g, "diameter": str(d)}
    shape = f.shape
    ok = shape is not None and (
        shape.tag is ShapeTag.TWO_STAR
        or f.shape_is(ShapeTag.COMPLETE, 1)
        or f.shape_is(ShapeTag.COMPLETE, 2)
    )
    return ok, _shape_detail(f)


def _p5_girth(f: AlgebraFacts) -> Outcome:
    g = f.girth
    return g is not Verdict.ACYCLIC and g <= 4, {"girth": str(g)}


# ===============================
# COMPLETE, MULTIPARTITE, REGULAR
# ===============================

def _nonzero_squares(f: AlgebraFacts) -> List[int]:
    S = f.S
    return [x for x in f.graph.vertices if S.times(x, x) != S.zero]


def _complete_squares(f: AlgebraFacts) -> Outcome:
    squares = _nonzero_squares(f)
    return len(squares) <= 1, {"nonzero_squares": [f.label(x) for x in squares]}


def _ring_complete_nilpotent(f: AlgebraFacts) -> Outcome:
    squares = _nonzero_squares(f)
    return not squares, {"nonzero_squares": [f.label(x) for x in squares]}


def _ring_not_p4(f: AlgebraFacts) -> Outcome:
    return not f.shape_is(ShapeTag.TWO_STAR, 1, 1), _shape_detail(f)


def _multipartite_shape(f: AlgebraFacts) -> Outcome:
    parts = f.parts
    ok = len(parts) == 2 or sum(1 for p in parts if p > 1) <= 1
    return ok, {"parts": list(parts)}


def _regular_shape(f: AlgebraFacts) -> Outcome:
    n, r = f.vertices, f.regular
    complete = r == n - 1 and f.shape_is(ShapeTag.COMPLETE, n)
    balanced = n % 2 == 0 and r == n // 2 and f.shape is not None and (
        f.shape_is(ShapeTag.COMPLETE_BIPARTITE, n // 2, n // 2) or f.shape_is(ShapeTag.COMPLETE, 2)
    )
    parts = f.parts
    semigroup = n % (n - r) == 0 and parts is not None and all(p == n - r for p in parts)
    return (complete or balanced) and semigroup, {
        "vertices": n, "degree": r, "parts": list(parts) if parts else None,
    }


# ===============================
# FORBIDDEN CONFIGURATIONS
# ===============================

def _has_c43(f: AlgebraFacts) -> Outcome:
    match = find_induced(f.graph, ForbiddenConfig.C43)
    return match is not None, {"C43": _labels(f, match)}


def _no_c4_prime(f: AlgebraFacts) -> Outcome:
    match = find_induced(f.graph, ForbiddenConfig.C4_PRIME)
    return match is None, {"C4prime": _labels(f, match)}


def _few_triangles_forbidden(f: AlgebraFacts) -> Outcome:
    found = {}
    for config in (ForbiddenConfig.C4_DOUBLE_PRIME, ForbiddenConfig.C44, ForbiddenConfig.C45):
        match = find_induced(f.graph, config)
        if match is not None:
            found[config.value] = _labels(f, match)
    return not found, {"found": found}


def _labels(f: AlgebraFacts, match: Optional[Dict[str, int]]) -> Optional[Dict[str, str]]:
    if match is None:
        return None
    return {role: f.label(v) for role, v in match.items()}


# ===============================
# GIRTH FOUR
# ===============================

def _girth4(f: AlgebraFacts) -> bool:
    return f.commutative and f.girth == 4


def _local_factor_split(f: AlgebraFacts) -> Optional[Tuple[FiniteSemiring, FiniteSemiring]]:
    """(D, B) with D entire of order >= 3 and B a local factor, in either factor order."""
    if len(f.S.factors) != 2:
        return None
    first, second = f.S.factors
    for D, B in ((first, second), (second, first)):
        if D.order >= 3 and is_entire(D) and _isomorphic_to_any(B, LOCAL_FACTORS):
            return D, B
    return None


def _ring_product_pendant_guard(f: AlgebraFacts) -> bool:
    return f.commutative_ring() and f.girth == 4 and _local_factor_split(f) is not None


def _ring_product_pendant_bipartite(f: AlgebraFacts) -> Outcome:
    D, _ = _local_factor_split(f)
    m = D.order - 1
    expected = expected_shape(ShapeTag.BAR_K, 3, m, m)
    return f.shape == expected, {"shape": str(f.shape), "expected": str(expected)}


def _girth4_pendant_bipartite(f: AlgebraFacts) -> Outcome:
    ok = f.shape is not None and f.shape.tag in (ShapeTag.COMPLETE_BIPARTITE, ShapeTag.BAR_K)
    return ok, _shape_detail(f)


def _girth4_nilpotent_square(f: AlgebraFacts) -> Outcome:
    S = f.S
    bad = {}
    for x in range(S.order):
        if x == S.zero:
            continue
        k = nilpotent_index(S, x)
        if k is not None and k != 2:
            bad[f.label(x)] = k
    return not bad, {"nilpotent_indices": bad}


# ===============================
# ONE TRIANGLE
# ===============================

def _one_triangle(f: AlgebraFacts) -> bool:
    return f.commutative and f.triangles == 1


def _one_triangle_long(f: AlgebraFacts) -> bool:
    return _one_triangle(f) and f.long_cycle


def _one_triangle_delta(f: AlgebraFacts) -> Outcome:
    ok = f.shape is not None and (f.shape.tag is ShapeTag.DELTA_K or f.shape_is(ShapeTag.COMPLETE, 3))
    return ok, _shape_detail(f)


def _unicyclic_triangle_delta(f: AlgebraFacts) -> Outcome:
    shape = f.shape
    ok = shape is not None and (
        f.shape_is(ShapeTag.COMPLETE, 3)
        or (shape.tag is ShapeTag.DELTA_K and shape.params[:2] == (1, 1))
    )
    return ok, _shape_detail(f)


def _c43_with_pendants(f: AlgebraFacts) -> List[Tuple[Dict[str, int], int]]:
    return [
        (match, p)
        for match in iter_induced(f.graph, ForbiddenConfig.C43)
        for p in f.pendants_on(match["a"])
    ]


def _c43_identities_guard(f: AlgebraFacts) -> bool:
    return _one_triangle_long(f) and bool(_c43_with_pendants(f))


def _c43_identities(f: AlgebraFacts) -> Outcome:
    S = f.S
    mul, add, z = S.times, S.plus, S.zero
    checked = 0
    for match, p in _c43_with_pendants(f):
        a, b, c, d, e = (match[r] for r in ("a", "b", "c", "d", "e"))
        identities = {
            "a^2 = 0": mul(a, a) == z,
            "b^2 = 0": mul(b, b) == z,
            "e^2 = 0": mul(e, e) == z,
            "ac = a": mul(a, c) == a,
            "ec = a": mul(e, c) == a,
            "fc = a": mul(p, c) == a,
            "bd = b": mul(b, d) == b,
            "ed = b": mul(e, d) == b,
            "a+b = e": add(a, b) == e,
        }
        if f.cancellative:
            identities.update({
                "2a = 0": add(a, a) == z,
                "2b = 0": add(b, b) == z,
                "2e = 0": add(e, e) == z,
                "b+e = a": add(b, e) == a,
                "a+e = b": add(a, e) == b,
            })
        failed = [name for name, holds in identities.items() if not holds]
        checked += 1
        if failed:
            witness = {role: f.label(v) for role, v in match.items()}
            witness["f"] = f.label(p)
            return False, {"witness": witness, "failed": failed}
    return True, {"embeddings_checked": checked}


def _long_cycle_delta(f: AlgebraFacts) -> Outcome:
    shape = f.shape
    ok = shape is not None and shape.tag is ShapeTag.DELTA_K
    if ok:
        m, n, r1, r2, r3 = shape.params
        ok = r3 == 0 and r1 >= 1 and r2 >= 1 and m >= 2 and n >= 2
    return ok, _shape_detail(f)


def _cancellative_delta_parameters(f: AlgebraFacts) -> Outcome:
    shape = f.shape
    ok = shape is not None and shape.tag is ShapeTag.DELTA_K
    if ok:
        m, n, r1, r2, r3 = shape.params
        ok = (r1, r2, r3) == (n - 1, m - 1, 0)
    return ok, _shape_detail(f)


def _cancellative_ring(f: AlgebraFacts) -> Outcome:
    return f.ring, {"ring": f.ring}


# ===============================
# RING CLASSIFICATION
# ===============================

def _product_factors_local(f: AlgebraFacts) -> Outcome:
    names = [_isomorphic_to_any(F, LOCAL_FACTORS) if is_ring(F) else None for F in f.S.factors]
    ok = all(names) and f.shape_is(ShapeTag.DELTA_K, 3, 3, 2, 2, 0)
    return ok, {"factors": names, **_shape_detail(f)}


def _ring_long_cycle_product(f: AlgebraFacts) -> Outcome:
    match = _isomorphic_to_any(f.S, ONE_TRIANGLE_PRODUCTS)
    ok = match is not None and f.shape_is(ShapeTag.DELTA_K, 3, 3, 2, 2, 0)
    return ok, {"isomorphic_to": match, **_shape_detail(f)}


def _ring_triangle_catalog(f: AlgebraFacts) -> Outcome:
    match = _isomorphic_to_any(f.S, TRIANGLE_RINGS)
    return match is not None, {"isomorphic_to": match}


def _ring_one_triangle_classification(f: AlgebraFacts) -> Outcome:
    cases = {
        "long-cycle product": (ONE_TRIANGLE_PRODUCTS, (ShapeTag.DELTA_K, 3, 3, 2, 2, 0)),
        "triangle ring": (TRIANGLE_RINGS, (ShapeTag.COMPLETE, 3)),
        "pendant triangle ring": (PENDANT_TRIANGLE_RINGS, (ShapeTag.DELTA_K, 1, 1, 4, 0, 0)),
    }
    holding = {}
    for case, (names, (tag, *params)) in cases.items():
        match = _isomorphic_to_any(f.S, names)
        if match is not None and f.shape_is(tag, *params):
            holding[case] = match
    return len(holding) == 1, {"cases": holding, **_shape_detail(f)}


# ===============================
# REGISTRY
# ===============================

@dataclass(frozen=True)
class Theorem:
    id: TheoremId
    hypothesis: str
    guard: Callable[[AlgebraFacts], bool]
    conclusion: Callable[[AlgebraFacts], Outcome]
    statement: str
    exempt_from_vacuity: bool = False


def _always(f: AlgebraFacts) -> bool:
    return True


THEOREMS: Dict[TheoremId, Theorem] = {
    t.id: t for t in (
        Theorem(
            TheoremId.DIAMETER_BOUND, "any semiring", _always, _diameter_bound,
            "the graph is connected with diameter at most 3",
        ),
        Theorem(
            TheoremId.ENTIRE_PRODUCT_DIAMETER,
            "product of two entire semirings with a nonempty graph",
            _entire_product_guard, _entire_product_diameter,
            "diameter at most 2",
        ),
        Theorem(
            TheoremId.NO_LARGE_CYCLE, "any semiring", _always, _no_large_cycle,
            "the graph is not a cycle on 5 or more vertices",
        ),
        Theorem(
            TheoremId.ACYCLIC_TWO_STAR, "non-entire semiring",
            lambda f: not f.entire, _acyclic_two_star,
            "cyclic graphs have diameter <= 3 and girth <= 4; acyclic graphs are K1, K2 or two-stars",
        ),
        Theorem(
            TheoremId.P5_SUBGRAPH_GIRTH, "P5 is a subgraph",
            lambda f: contains_subgraph(f.graph, ForbiddenConfig.P5), _p5_girth,
            "the graph is cyclic with girth at most 4",
        ),
        Theorem(
            TheoremId.COMPLETE_SQUARES, "commutative semiring with graph K_n, n >= 3",
            lambda f: f.commutative and f.complete_of_size_at_least(3), _complete_squares,
            "x^2 = 0 for all but at most one zero-divisor x",
        ),
        Theorem(
            TheoremId.RING_COMPLETE_NILPOTENT, "commutative ring with graph K_n, n >= 3",
            lambda f: f.commutative_ring() and f.complete_of_size_at_least(3), _ring_complete_nilpotent,
            "x^2 = 0 for every zero-divisor x",
        ),
        Theorem(
            TheoremId.RING_NOT_P4, "commutative ring with a nonempty graph",
            lambda f: f.commutative_ring() and f.vertices > 0, _ring_not_p4,
            "the graph is not P4",
        ),
        Theorem(
            TheoremId.MULTIPARTITE_SHAPE, "commutative semiring with a complete k-partite graph, k >= 2",
            lambda f: f.commutative and f.parts is not None and len(f.parts) >= 2, _multipartite_shape,
            "k = 2 or the graph is K_{k-1} v (n-k+1)K_1",
        ),
        Theorem(
            TheoremId.REGULAR_SHAPE, "commutative semiring with a nonempty regular graph",
            lambda f: f.commutative and f.vertices > 0 and f.regular is not None, _regular_shape,
            "the graph is K_n or K_{n/2,n/2}, and its complete multipartite parts all have size n - r",
        ),
        Theorem(
            TheoremId.ONE_TRIANGLE_HAS_C43, "commutative, one triangle, a cycle of length >= 4",
            _one_triangle_long, _has_c43,
            "C43 is an induced subgraph",
        ),
        Theorem(
            TheoremId.GIRTH4_NO_C4_PRIME, "commutative semiring of girth 4",
            _girth4, _no_c4_prime,
            "C4prime is not an induced subgraph",
        ),
        Theorem(
            TheoremId.FEW_TRIANGLES_FORBIDDEN, "commutative, at most one triangle, at least 6 vertices",
            lambda f: f.commutative and f.triangles <= 1 and f.vertices >= 6, _few_triangles_forbidden,
            "none of C4doubleprime, C44, C45 is an induced subgraph",
        ),
        Theorem(
            TheoremId.RING_PRODUCT_PENDANT_BIPARTITE,
            "commutative ring D x B of girth 4, D entire with |D| >= 3, B a local factor",
            _ring_product_pendant_guard, _ring_product_pendant_bipartite,
            "the graph is K̄^{|D|-1}_{3,|D|-1}",
        ),
        Theorem(
            TheoremId.GIRTH4_PENDANT_BIPARTITE, "commutative semiring of girth 4",
            _girth4, _girth4_pendant_bipartite,
            "the graph is K_{m,n} or K̄^r_{m,n}",
        ),
        Theorem(
            TheoremId.GIRTH4_NILPOTENT_SQUARE, "commutative semiring of girth 4",
            _girth4, _girth4_nilpotent_square,
            "every nonzero nilpotent has index 2",
        ),
        Theorem(
            TheoremId.ONE_TRIANGLE_DELTA, "commutative semiring with exactly one triangle",
            _one_triangle, _one_triangle_delta,
            "the graph is in the one-triangle family",
        ),
        Theorem(
            TheoremId.UNICYCLIC_TRIANGLE_DELTA, "commutative, the triangle is the only cycle",
            lambda f: _one_triangle(f) and not f.long_cycle, _unicyclic_triangle_delta,
            "the graph is K_{1,1}^{Δ(r1,r2,r3)}",
        ),
        Theorem(
            TheoremId.C43_ELEMENT_IDENTITIES,
            "commutative, one triangle, a long cycle, an induced C43 with a pendant on a",
            _c43_identities_guard, _c43_identities,
            "a^2 = b^2 = e^2 = 0, ac = ec = fc = a, bd = ed = b, a+b = e (and 2a = 2b = 2e = 0, "
            "b+e = a, a+e = b when cancellative)",
        ),
        Theorem(
            TheoremId.ONE_TRIANGLE_LONG_CYCLE_DELTA, "commutative, one triangle, a long cycle",
            _one_triangle_long, _long_cycle_delta,
            "the graph is K_{m,n}^{Δ(r1,r2,0)} with r1, r2 >= 1 and m, n >= 2",
        ),
        Theorem(
            TheoremId.CANCELLATIVE_DELTA_PARAMETERS, "cancellative, commutative, one triangle, a long cycle",
            lambda f: _one_triangle_long(f) and f.cancellative, _cancellative_delta_parameters,
            "the graph is K_{m,n}^{Δ(n-1,m-1,0)}",
            exempt_from_vacuity=True,
        ),
        Theorem(
            TheoremId.CANCELLATIVE_ONE_TRIANGLE_RING, "cancellative, commutative, one triangle",
            lambda f: _one_triangle(f) and f.cancellative, _cancellative_ring,
            "the semiring is a ring",
        ),
        Theorem(
            TheoremId.PRODUCT_FACTORS_LOCAL, "cancellative commutative product with one triangle",
            lambda f: _one_triangle(f) and f.cancellative and len(f.S.factors) == 2, _product_factors_local,
            "both factors are Z4 or T2(Z2) and the graph is K_{3,3}^{Δ(2,2,0)}",
        ),
        Theorem(
            TheoremId.RING_LONG_CYCLE_PRODUCT, "commutative ring, one triangle, a long cycle",
            lambda f: f.ring and _one_triangle_long(f), _ring_long_cycle_product,
            "the ring is a product of two local factors and the graph is K_{3,3}^{Δ(2,2,0)}",
        ),
        Theorem(
            TheoremId.RING_TRIANGLE_CATALOG, "commutative ring with graph K3",
            lambda f: f.commutative_ring() and f.shape_is(ShapeTag.COMPLETE, 3), _ring_triangle_catalog,
            "the ring is one of the four triangle rings",
        ),
        Theorem(
            TheoremId.RING_ONE_TRIANGLE_CLASSIFICATION, "commutative ring with exactly one triangle",
            lambda f: f.ring and _one_triangle(f), _ring_one_triangle_classification,
            "exactly one classification case holds",
        ),
    )
}

"""
Constructions
=============

Parameterized semirings whose zero-divisor graphs realize the named families:
- bipartite            chain(m+1) x chain(n+1)                         -> K_{m,n}
- complete             shifted powers of J in M_{2n-1}(B)              -> K_n
- star                 block matrices in M_{n+1}(B)                    -> K_{1,n}
- two-star             block matrices over a chain in M_4(L)           -> S_{n,m}
- multipartite         upper-triangular patterns in M_{2n+1}(B)        -> K_{k-1} v (n-k+1)K_1
- pendant-bipartite    chain(m+1) x T                                  -> K̄^m_{n,m}
- pendant-bipartite-two  closure in M_2(B)^{2n-3}                      -> K̄^3_{n,2}
- one-triangle         closure in B^{r1+r2+r3}                         -> K_{1,1}^{Δ(r1,r2,r3)}
- non-cancellative-triangle  closure in M_2(B)^3                       -> K_{2,2}^{Δ(2,1,0)}

Every construction returns its algebra together with a ConstructionSpec that
records the expected graph shape, normalized through classification priority.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np

from zdgraph.algebra.ambients import (
    BoolMatrixAmbient,
    BooleanVectorAmbient,
    LatticeMatrixAmbient,
    ProductAmbient,
    generated_closure,
)
from zdgraph.algebra.builders import catalog_rings, chain, direct_product
from zdgraph.algebra.semiring import FiniteSemiring
from zdgraph.graphs.shapes import GraphShape, ShapeTag, expected_shape

logger = logging.getLogger(__name__)


class UnknownConstruction(ValueError):
    """No construction is registered under the given id."""


@dataclass(frozen=True)
class ConstructionSpec:
    id: str
    params: Dict[str, int]
    expected: GraphShape
    description: str = ""

    def describe(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.id}({args})"


# ===============================
# FACTORIES
# ===============================

def bipartite(m: int, n: int) -> FiniteSemiring:
    if m < 1 or n < 1:
        raise ValueError(f"Invalid bipartite parameters: m={m}, n={n}")
    return direct_product(chain(m + 1), chain(n + 1))


def _power_sum(amb: BoolMatrixAmbient, lo: int, hi: int) -> np.ndarray:
    """J^lo + ... + J^hi."""
    J = amb.shift()
    return amb.total([amb.power(J, e) for e in range(lo, hi + 1)])


def complete(n: int) -> FiniteSemiring:
    """a_i = J^{n-2+i} + ... + J^{2n-2} in M_{2n-1}(B); a_1 is the only element with a nonzero square."""
    if not 3 <= n <= 6:
        raise ValueError(f"Invalid complete parameter: n={n} (allowed 3..6)")
    amb = BoolMatrixAmbient(2 * n - 1)
    generators = [_power_sum(amb, n - 2 + i, 2 * n - 2) for i in range(1, n + 1)]
    return generated_closure(amb, generators, name=f"complete(n={n})")


def star(n: int) -> FiniteSemiring:
    if not 1 <= n <= 6:
        raise ValueError(f"Invalid star parameter: n={n} (allowed 1..6)")
    amb = BoolMatrixAmbient(n + 1)
    one, zero = amb.identity(1), amb.zeros(1)
    generators = [
        amb.direct_sum(one, amb.zeros(n)),
        amb.direct_sum(zero, amb.identity(n)),
        amb.direct_sum(zero, amb.identity(n) | amb.shift(n)),
    ]
    return generated_closure(amb, generators, name=f"star(n={n})")


def two_star(n: int, m: int) -> FiniteSemiring:
    """
    Two-star S_{n,m} inside M_4 over the chain 0 < x1 < ... < x_top.

    v1 and v2 are the centers; u_i hang on v1 and w_j on v2.
    """
    if not (1 <= n <= 5 and 1 <= m <= 5):
        raise ValueError(f"Invalid two-star parameters: n={n}, m={m} (allowed 1..5)")
    L = chain(max(n, m) + 1)
    amb = LatticeMatrixAmbient(L, 4)
    I2, J2 = np.eye(2, dtype=bool), np.eye(2, k=1, dtype=bool)
    zero2 = amb.scale(0, I2)

    def block(upper: np.ndarray, lower: np.ndarray) -> np.ndarray:
        return BoolMatrixAmbient.direct_sum(upper, lower)

    v1 = block(zero2, amb.scale(1, J2))
    v2 = block(amb.scale(1, I2 | J2), zero2)
    us = [block(np.maximum(amb.scale(1, I2), amb.scale(i, J2)), amb.scale(1, J2)) for i in range(1, n + 1)]
    ws = [block(zero2, amb.scale(j, I2 | J2)) for j in range(1, m + 1)]
    return generated_closure(amb, [v1, v2] + us + ws, name=f"two-star(n={n},m={m})")


def multipartite(n: int, k: int) -> FiniteSemiring:
    """
    Complete k-partite graph K_{k-1} v (n-k+1)K_1 in M_{2n+1}(B).

    B has ones at (s, t) with t - s >= n; A_i drops entry (i, i+n) from B;
    C_j = J^j + ... + J^{2n}.
    """
    if not (4 <= n <= 8 and 3 <= k <= n - 1):
        raise ValueError(f"Invalid multipartite parameters: n={n}, k={k} (need 4 <= n <= 8, 3 <= k <= n-1)")
    amb = BoolMatrixAmbient(2 * n + 1)
    ones = np.ones((2 * n + 1, 2 * n + 1), dtype=bool)
    B = np.triu(ones, k=n)
    generators = [B]
    for i in range(2, n - k + 2):
        A = B.copy()
        A[i - 1, i + n - 1] = False
        generators.append(A)
    generators.extend(np.triu(ones, k=j) for j in range(2 * n - k + 2, 2 * n + 1))
    return generated_closure(amb, generators, name=f"multipartite(n={n},k={k})")


def pendant_factor(n: int) -> FiniteSemiring:
    """
    n+1 elements {0, x1·J, x_i·(I+J)} of M_2 over chain(n), closed without an external identity;
    top·(I+J) acts as its identity.
    """
    L = chain(n)
    amb = LatticeMatrixAmbient(L, 2)
    I2, J2 = np.eye(2, dtype=bool), np.eye(2, k=1, dtype=bool)
    generators = [amb.scale(1, J2)] + [amb.scale(i, I2 | J2) for i in range(1, n)]
    return generated_closure(amb, generators, adjoin_identity=False, name=f"T{n}")


def pendant_bipartite(n: int, m: int) -> FiniteSemiring:
    if not (2 <= n <= 5 and 2 <= m <= 5):
        raise ValueError(f"Invalid pendant-bipartite parameters: n={n}, m={m} (allowed 2..5)")
    return direct_product(chain(m + 1), pendant_factor(n))


def pendant_bipartite_two(n: int) -> FiniteSemiring:
    """K̄^3_{n,2} inside a product of copies of M_2(B); e_i is the identity at position i."""
    if not 3 <= n <= 5:
        raise ValueError(f"Invalid pendant-bipartite-two parameter: n={n} (allowed 3..5)")
    M2 = BoolMatrixAmbient(2)
    amb = ProductAmbient([M2] * max(2 * n - 3, 4))
    I, J = M2.identity(), M2.shift()

    def at(position: int, value: np.ndarray) -> Tuple:
        return amb.embed(position, value)

    a = at(1, J)
    b = at(2, I)
    cs = [
        amb.total([at(1, I | J)] + [at(2 * i + 1, J) for i in range(1, j + 1)])
        for j in range(1, n - 1)
    ]
    d = amb.add(at(2, I), at(4, I))
    e = amb.total([at(2 * i + 1, J) for i in range(n - 1)] + [d])
    return generated_closure(amb, [a, b] + cs + [d, e], name=f"pendant-bipartite-two(n={n})")


def one_triangle(r1: int, r2: int, r3: int) -> FiniteSemiring:
    """
    Triangle e_p - e_q - e_s in B^N with r1, r2, r3 pendants on its corners.

    The pendants on e_p are a_i = e_1 + ... + e_i + e_q + e_s (i < r1) and e_q + e_s;
    the other corners follow the same pattern on their own coordinate blocks.
    """
    if min(r1, r2, r3) < 1 or r1 + r2 + r3 > 9:
        raise ValueError(f"Invalid one-triangle parameters: ({r1},{r2},{r3}) (each >= 1, sum <= 9)")
    N = r1 + r2 + r3
    p, q, s = r1, r1 + r2, N
    amb = BooleanVectorAmbient(N)
    generators = [amb.unit(p), amb.unit(q), amb.unit(s)]
    generators += [amb.unit(*range(1, i + 1), q, s) for i in range(1, r1)]
    generators += [amb.unit(*range(r1 + 1, r1 + j + 1), p, s) for j in range(1, r2)]
    generators += [amb.unit(*range(q + 1, q + l + 1), p, q) for l in range(1, r3)]
    return generated_closure(amb, generators, name=f"one-triangle(r1={r1},r2={r2},r3={r3})")


def non_cancellative_triangle() -> FiniteSemiring:
    """K_{2,2}^{Δ(2,1,0)} in M_2(B)^3; not additively cancellative."""
    M2 = BoolMatrixAmbient(2)
    amb = ProductAmbient([M2] * 3)
    I, J, O = M2.identity(), M2.shift(), M2.zeros()
    generators = [
        (J, O, O),
        (O, O, J),
        (I | J, O, O),
        (O, O, I | J),
        (J, J, I | J),
    ]
    return generated_closure(amb, generators, name="non-cancellative-triangle")


def matrix_semiring(n: int = 2) -> FiniteSemiring:
    """The full matrix semiring M_n(B), generated by its matrix units."""
    if not 1 <= n <= 3:
        raise ValueError(f"Invalid matrix semiring dimension: {n} (allowed 1..3)")
    amb = BoolMatrixAmbient(n)
    units = [amb.unit(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return generated_closure(amb, units, name=f"M{n}(B)")


# ===============================
# RING CORPUS
# ===============================

RING_CORPUS_NAMES = [
    "Z4", "T2(Z2)", "Z8", "Z9", "Z16",
    "Z2[x]/(x^3)", "Z2[x]/(x^4)", "GF(4)", "GF(8)",
    "Z4[x]/(x^2+x+1)", "T2(GF(4))", "Z2[x,y]/(x^2,xy,y^2)",
    "Z4[x]/(2x,x^2)", "Z4[x]/(2x,x^2-2)",
    "Z4xZ4", "Z4xT2(Z2)", "T2(Z2)xZ4", "T2(Z2)xT2(Z2)",
    "Z2xZ2", "Z2xZ4", "Z3xZ3", "Z3xZ4", "Z3xT2(Z2)", "GF(4)xZ4", "GF(4)xT2(Z2)",
]


def ring_corpus() -> List[FiniteSemiring]:
    return catalog_rings(RING_CORPUS_NAMES)


# ===============================
# REGISTRY
# ===============================

@dataclass(frozen=True)
class Construction:
    id: str
    factory: Callable[..., FiniteSemiring]
    expected: Callable[..., GraphShape]
    grid: Callable[[], List[Dict[str, int]]]
    description: str
    param_names: Tuple[str, ...] = field(default_factory=tuple)

    def spec(self, **params: int) -> ConstructionSpec:
        return ConstructionSpec(self.id, dict(params), self.expected(**params), self.description)


def _grid(**ranges: range) -> Callable[[], List[Dict[str, int]]]:
    names = list(ranges)

    def points() -> List[Dict[str, int]]:
        return [dict(zip(names, values)) for values in itertools.product(*ranges.values())]

    return points


def _multipartite_grid() -> List[Dict[str, int]]:
    return [{"n": n, "k": k} for n in range(4, 9) for k in range(3, n)]


def _one_triangle_grid() -> List[Dict[str, int]]:
    return [
        {"r1": r1, "r2": r2, "r3": r3}
        for r1, r2, r3 in itertools.product(range(1, 8), repeat=3)
        if r1 + r2 + r3 <= 9
    ]


CONSTRUCTIONS: Dict[str, Construction] = {
    c.id: c for c in (
        Construction(
            "bipartite", bipartite,
            lambda m, n: expected_shape(ShapeTag.COMPLETE_BIPARTITE, m, n),
            _grid(m=range(1, 5), n=range(1, 5)),
            "product of two chains", ("m", "n"),
        ),
        Construction(
            "complete", complete,
            lambda n: expected_shape(ShapeTag.COMPLETE, n),
            _grid(n=range(3, 7)),
            "sums of shifted powers in M_{2n-1}(B)", ("n",),
        ),
        Construction(
            "star", star,
            lambda n: expected_shape(ShapeTag.TWO_STAR, 0, n - 1),
            _grid(n=range(1, 7)),
            "block matrices in M_{n+1}(B)", ("n",),
        ),
        Construction(
            "two-star", two_star,
            lambda n, m: expected_shape(ShapeTag.TWO_STAR, n, m),
            _grid(n=range(1, 6), m=range(1, 6)),
            "block matrices over a chain in M_4(L)", ("n", "m"),
        ),
        Construction(
            "multipartite", multipartite,
            lambda n, k: expected_shape(ShapeTag.COMPLETE_MULTIPARTITE, *((1,) * (k - 1) + (n - k + 1,))),
            _multipartite_grid,
            "upper-triangular patterns in M_{2n+1}(B)", ("n", "k"),
        ),
        Construction(
            "pendant-bipartite", pendant_bipartite,
            lambda n, m: expected_shape(ShapeTag.BAR_K, n, m, m),
            _grid(n=range(2, 6), m=range(2, 6)),
            "chain(m+1) times a matrix semiring over chain(n)", ("n", "m"),
        ),
        Construction(
            "pendant-bipartite-two", pendant_bipartite_two,
            lambda n: expected_shape(ShapeTag.BAR_K, n, 2, 3),
            _grid(n=range(3, 6)),
            "closure in a product of M_2(B) copies", ("n",),
        ),
        Construction(
            "one-triangle", one_triangle,
            lambda r1, r2, r3: expected_shape(ShapeTag.DELTA_K, 1, 1, r1, r2, r3),
            _one_triangle_grid,
            "closure in B^{r1+r2+r3}", ("r1", "r2", "r3"),
        ),
        Construction(
            "non-cancellative-triangle", non_cancellative_triangle,
            lambda: expected_shape(ShapeTag.DELTA_K, 2, 2, 2, 1, 0),
            lambda: [{}],
            "closure in M_2(B)^3", (),
        ),
    )
}


def get_construction(construction_id: str) -> Construction:
    if construction_id not in CONSTRUCTIONS:
        raise UnknownConstruction(
            f"Invalid construction: {construction_id!r} (known: {', '.join(CONSTRUCTIONS)})"
        )
    return CONSTRUCTIONS[construction_id]


def build(construction_id: str, **params: int) -> Tuple[FiniteSemiring, ConstructionSpec]:
    """
    Build a registered construction.

    Raises:
        UnknownConstruction: unregistered id
        ValueError: missing, unexpected or out-of-range parameters
    """
    construction = get_construction(construction_id)
    missing = [p for p in construction.param_names if p not in params]
    extra = [p for p in params if p not in construction.param_names]
    if missing or extra:
        raise ValueError(
            f"Invalid parameters for {construction_id}: "
            f"expected {list(construction.param_names)}, got {sorted(params)}"
        )
    params = {name: int(params[name]) for name in construction.param_names}
    algebra = construction.factory(**params)
    spec = construction.spec(**params)
    algebra = algebra.with_name(spec.describe())
    logger.debug(f"built {spec.describe()}: order {algebra.order}")
    return algebra, spec


def iter_grid(construction_ids: Optional[List[str]] = None) -> Iterator[Tuple[FiniteSemiring, ConstructionSpec]]:
    """(algebra, spec) for every grid point of the given constructions (all by default)."""
    for cid in construction_ids or list(CONSTRUCTIONS):
        for params in get_construction(cid).grid():
            yield build(cid, **params)

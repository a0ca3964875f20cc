"""
Ambient Semirings and Generated Closures
========================================

Element-level oracles for semirings too large to tabulate
(matrices over the Boolean semiring or over a chain, products, Boolean vectors),
and worklist saturation of a generating set into a finite table.
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from zdgraph.algebra.builders import chain_levels
from zdgraph.algebra.semiring import FiniteSemiring, InvalidResult, validate
from zdgraph.config import CONFIG, closure_cap

logger = logging.getLogger(__name__)


class DimTooLarge(ValueError):
    """Matrix dimension beyond the configured ambient limit."""


class ClosureOverflow(ValueError):
    """The generated closure would exceed the element cap."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"Closure exceeds cap of {cap} elements (set ZDG_CLOSURE_CAP to raise it)")


# ===============================
# ORACLE INTERFACE
# ===============================

class AmbientOracle(ABC):
    """Semiring operations on opaque element values."""

    name = "ambient"

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def add(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def mul(self, x: Any, y: Any) -> Any: ...

    @abstractmethod
    def key(self, x: Any) -> Hashable:
        """Canonical hashable encoding; equal elements share a key."""

    @abstractmethod
    def label(self, x: Any) -> str: ...

    def equal(self, x: Any, y: Any) -> bool:
        return self.key(x) == self.key(y)

    def total(self, xs: Sequence[Any]) -> Any:
        result = self.zero
        for x in xs:
            result = self.add(result, x)
        return result


# ===============================
# BOOLEAN MATRICES
# ===============================

class BoolMatrixAmbient(AmbientOracle):
    """n x n matrices over B with OR as + and the Boolean product as ·."""

    def __init__(self, n: int):
        limit = CONFIG["matrices"]["bool_max_dim"]
        if not 1 <= n <= limit:
            raise DimTooLarge(f"Invalid Boolean matrix dimension: {n} (allowed 1..{limit})")
        self.n = n
        self.name = f"M{n}(B)"

    @property
    def zero(self) -> np.ndarray:
        return self.zeros()

    @property
    def one(self) -> np.ndarray:
        return self.identity()

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.logical_or(x, y)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return (x.astype(np.uint8) @ y.astype(np.uint8)) > 0

    def key(self, x: np.ndarray) -> bytes:
        return np.ascontiguousarray(x, dtype=bool).tobytes()

    def label(self, x: np.ndarray) -> str:
        return ";".join("".join("1" if v else "0" for v in row) for row in x)

    # ---------- named matrices ----------

    def zeros(self, k: Optional[int] = None) -> np.ndarray:
        k = self.n if k is None else k
        return np.zeros((k, k), dtype=bool)

    def identity(self, k: Optional[int] = None) -> np.ndarray:
        return np.eye(self.n if k is None else k, dtype=bool)

    def shift(self, k: Optional[int] = None) -> np.ndarray:
        """J_k = E12 + E23 + ... + E(k-1)k."""
        return np.eye(self.n if k is None else k, k=1, dtype=bool)

    def unit(self, i: int, j: int, k: Optional[int] = None) -> np.ndarray:
        """E_ij with 1-based indices."""
        m = self.zeros(k)
        m[i - 1, j - 1] = True
        return m

    def power(self, x: np.ndarray, e: int) -> np.ndarray:
        result = np.eye(x.shape[0], dtype=bool)
        for _ in range(e):
            result = self.mul(result, x)
        return result

    @staticmethod
    def direct_sum(*blocks: np.ndarray) -> np.ndarray:
        size = sum(b.shape[0] for b in blocks)
        result = np.zeros((size, size), dtype=blocks[0].dtype)
        offset = 0
        for b in blocks:
            k = b.shape[0]
            result[offset:offset + k, offset:offset + k] = b
            offset += k
        return result


def bool_matrix_ambient(n: int) -> BoolMatrixAmbient:
    return BoolMatrixAmbient(n)


# ===============================
# MATRICES OVER A CHAIN
# ===============================

class LatticeMatrixAmbient(AmbientOracle):
    """
    n x n matrices over a chain with entrywise max as + and max-min product as ·.
    Entries are chain levels 0..top.
    """

    def __init__(self, L: FiniteSemiring, n: int):
        limit = CONFIG["matrices"]["lattice_max_dim"]
        if not 1 <= n <= limit:
            raise DimTooLarge(f"Invalid lattice matrix dimension: {n} (allowed 1..{limit})")
        levels = chain_levels(L)
        self.n = n
        self.top = L.order - 1
        self.level_labels = [""] * L.order
        for x, level in enumerate(levels.tolist()):
            self.level_labels[level] = L.label(x)
        self.name = f"M{n}({L.name})"

    @property
    def zero(self) -> np.ndarray:
        return np.zeros((self.n, self.n), dtype=np.int8)

    @property
    def one(self) -> np.ndarray:
        return self.scale(self.top, np.eye(self.n, dtype=bool))

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.maximum(x, y)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.minimum(x[:, :, None], y[None, :, :]).max(axis=1)

    def key(self, x: np.ndarray) -> bytes:
        return np.ascontiguousarray(x, dtype=np.int8).tobytes()

    def label(self, x: np.ndarray) -> str:
        return ";".join(",".join(self.level_labels[int(v)] for v in row) for row in x)

    def scale(self, level: int, pattern: np.ndarray) -> np.ndarray:
        """level times a 0/1 pattern."""
        if not 0 <= level <= self.top:
            raise ValueError(f"Invalid chain level: {level} (top is {self.top})")
        return np.where(pattern, level, 0).astype(np.int8)


def lattice_matrix_ambient(L: FiniteSemiring, n: int) -> LatticeMatrixAmbient:
    return LatticeMatrixAmbient(L, n)


# ===============================
# PRODUCTS AND VECTORS
# ===============================

class ProductAmbient(AmbientOracle):
    """Componentwise operations on tuples of factor elements."""

    def __init__(self, factors: Sequence[AmbientOracle]):
        if not factors:
            raise ValueError("Invalid product: no factors")
        self.factors = tuple(factors)
        self.name = "x".join(f.name for f in self.factors)

    @property
    def zero(self) -> Tuple:
        return tuple(f.zero for f in self.factors)

    @property
    def one(self) -> Tuple:
        return tuple(f.one for f in self.factors)

    def add(self, x: Tuple, y: Tuple) -> Tuple:
        return tuple(f.add(a, b) for f, a, b in zip(self.factors, x, y))

    def mul(self, x: Tuple, y: Tuple) -> Tuple:
        return tuple(f.mul(a, b) for f, a, b in zip(self.factors, x, y))

    def key(self, x: Tuple) -> Tuple:
        return tuple(f.key(a) for f, a in zip(self.factors, x))

    def label(self, x: Tuple) -> str:
        return "(" + ", ".join(f.label(a) for f, a in zip(self.factors, x)) + ")"

    def embed(self, position: int, value: Any) -> Tuple:
        """Element with value at a 1-based position and zero elsewhere."""
        parts = list(self.zero)
        parts[position - 1] = value
        return tuple(parts)


class BooleanVectorAmbient(AmbientOracle):
    """B^N with OR and AND."""

    def __init__(self, length: int):
        if length < 1:
            raise ValueError(f"Invalid vector length: {length}")
        self.length = length
        self.name = f"B^{length}"

    @property
    def zero(self) -> np.ndarray:
        return np.zeros(self.length, dtype=bool)

    @property
    def one(self) -> np.ndarray:
        return np.ones(self.length, dtype=bool)

    def add(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.logical_or(x, y)

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.logical_and(x, y)

    def key(self, x: np.ndarray) -> bytes:
        return np.ascontiguousarray(x, dtype=bool).tobytes()

    def label(self, x: np.ndarray) -> str:
        return "".join("1" if v else "0" for v in x)

    def unit(self, *positions: int) -> np.ndarray:
        """Sum of e_i over the given 1-based positions."""
        v = self.zero
        for i in positions:
            v[i - 1] = True
        return v


# ===============================
# CLOSURE
# ===============================

def saturate(
    ambient: AmbientOracle, seeds: Sequence[Any], cap: int
) -> Tuple[List[Any], Dict[Tuple[int, int], int], Dict[Tuple[int, int], int]]:
    """
    Close seeds under + and · by worklist saturation.

    Returns:
        (elements, add cells, mul cells) with cells keyed by index pairs
    """
    elements: List[Any] = []
    index: Dict[Hashable, int] = {}

    def admit(x: Any) -> int:
        k = ambient.key(x)
        if k not in index:
            if len(elements) >= cap:
                raise ClosureOverflow(cap)
            index[k] = len(elements)
            elements.append(x)
        return index[k]

    for x in seeds:
        admit(x)
    add_cells: Dict[Tuple[int, int], int] = {}
    mul_cells: Dict[Tuple[int, int], int] = {}
    i = 0
    while i < len(elements):
        x = elements[i]
        for j in range(i + 1):
            y = elements[j]
            add_cells[(i, j)] = admit(ambient.add(x, y))
            add_cells[(j, i)] = admit(ambient.add(y, x))
            mul_cells[(i, j)] = admit(ambient.mul(x, y))
            mul_cells[(j, i)] = admit(ambient.mul(y, x))
        i += 1
    return elements, add_cells, mul_cells


def generated_closure(
    ambient: AmbientOracle,
    generators: Sequence[Any],
    adjoin_identity: bool = True,
    cap: Optional[int] = None,
    name: Optional[str] = None,
) -> FiniteSemiring:
    """
    Smallest subsemiring of the ambient containing the generators.

    Args:
        ambient: element oracle
        generators: nonempty sequence of ambient elements
        adjoin_identity: include the ambient identity; otherwise the closure
            must contain its own two-sided identity
        cap: element limit (defaults to closure_cap())
        name: provenance string for the result

    Raises:
        ClosureOverflow: more than cap elements
        InvalidResult: no identity, or the table fails validate
    """
    cap = closure_cap() if cap is None else cap
    if cap < 1:
        raise ValueError(f"Invalid closure cap: {cap}")
    if len(generators) == 0:
        raise ValueError("Invalid closure: generators must be nonempty")
    name = name or f"<{len(generators)} generators in {ambient.name}>"

    seeds = [ambient.zero] + ([ambient.one] if adjoin_identity else []) + list(generators)
    elements, add_cells, mul_cells = saturate(ambient, seeds, cap)
    n = len(elements)
    add = np.zeros((n, n), dtype=np.int32)
    mul = np.zeros((n, n), dtype=np.int32)
    for (i, j), v in add_cells.items():
        add[i, j] = v
    for (i, j), v in mul_cells.items():
        mul[i, j] = v

    if adjoin_identity:
        one = 1 if n > 1 else 0
    else:
        idx = np.arange(n)
        found = [e for e in range(n) if np.array_equal(mul[e], idx) and np.array_equal(mul[:, e], idx)]
        if not found:
            raise InvalidResult(f"Invalid closure {name}: no multiplicative identity among {n} elements")
        one = found[0]

    S = FiniteSemiring(add, mul, 0, one, [ambient.label(x) for x in elements], name).normalized()
    report = validate(S)
    if not report.passed:
        raise InvalidResult(f"Invalid closure {name}: {report.describe()}")
    logger.debug(f"closure {name}: {n} elements")
    return S

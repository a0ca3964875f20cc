"""
Algebra Builders
================

Concrete finite algebras as validated tables:
- modular rings Z_n and Galois fields GF(4), GF(8)
- quotient rings from monomial presentations over Z_n
- T2(R) = {aI + bJ}, direct products, chain lattices
- the named ring catalog
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from zdgraph.algebra.semiring import (
    FiniteSemiring,
    NonAssociative,
    product_tables,
    validate,
)
from zdgraph.config import CONFIG

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, int]


# ===============================
# MODULAR RINGS
# ===============================

def modular_ring(n: int) -> FiniteSemiring:
    if n < 2:
        raise ValueError(f"Invalid modulus: {n}")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteSemiring(add, mul, 0, 1, [str(i) for i in range(n)], f"Z{n}")


# ===============================
# PRESENTED RINGS
# ===============================

@dataclass(frozen=True)
class RingPresentation:
    """
    Z_modulus[variables] modulo monomial reduction rules.

    basis: normal-form monomials with the additive order of their coefficient
    rules: forbidden monomial -> polynomial it reduces to
    """
    name: str
    modulus: int
    variables: Tuple[str, ...]
    basis: Tuple[Tuple[Monomial, int], ...]
    rules: Dict[Monomial, Polynomial] = field(default_factory=dict)

    def size(self) -> int:
        size = 1
        for _, m in self.basis:
            size *= m
        return size


def _divides(lhs: Monomial, mono: Monomial) -> bool:
    return all(a <= b for a, b in zip(lhs, mono))


def _reduce(p: RingPresentation, poly: Polynomial) -> Tuple[int, ...]:
    position = {mono: i for i, (mono, _) in enumerate(p.basis)}
    rules = sorted(p.rules.items())
    coeffs = [0] * len(p.basis)
    work = dict(poly)
    while work:
        mono = min(work)
        coeff = work.pop(mono) % p.modulus
        if coeff == 0:
            continue
        if mono in position:
            coeffs[position[mono]] += coeff
            continue
        for lhs, rhs in rules:
            if _divides(lhs, mono):
                quotient = tuple(a - b for a, b in zip(mono, lhs))
                for m, c in rhs.items():
                    shifted = tuple(a + b for a, b in zip(m, quotient))
                    work[shifted] = work.get(shifted, 0) + c * coeff
                break
        else:
            raise ValueError(f"Invalid presentation {p.name}: no rule reduces monomial {mono}")
    return tuple(c % m for c, (_, m) in zip(coeffs, p.basis))


def _poly_label(p: RingPresentation, element: Tuple[int, ...]) -> str:
    terms = []
    for c, (mono, _) in zip(element, p.basis):
        if c == 0:
            continue
        word = "".join(
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(p.variables, mono) if e > 0
        )
        if not word:
            terms.append(str(c))
        else:
            terms.append(word if c == 1 else f"{c}{word}")
    return "+".join(terms) or "0"


def presented_ring(p: RingPresentation) -> FiniteSemiring:
    """
    Enumerate all normal forms of a presentation and tabulate its arithmetic.

    Raises:
        NonAssociative: when the reduction rules are inconsistent
    """
    limit = CONFIG["presented"]["max_elements"]
    if p.size() > limit:
        raise ValueError(f"Invalid presentation {p.name}: {p.size()} elements > {limit}")
    constant = tuple(0 for _ in p.variables)
    monos = [mono for mono, _ in p.basis]
    if constant not in monos:
        raise ValueError(f"Invalid presentation {p.name}: constant monomial missing from basis")
    moduli = [m for _, m in p.basis]

    elements = list(itertools.product(*(range(m) for m in moduli)))
    zero = tuple(0 for _ in moduli)
    one = tuple(1 if mono == constant else 0 for mono in monos)

    def add(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, moduli))

    def mul(a, b):
        poly: Polynomial = {}
        for (ma, ca), (mb, cb) in itertools.product(zip(monos, a), zip(monos, b)):
            if ca and cb:
                mono = tuple(x + y for x, y in zip(ma, mb))
                poly[mono] = poly.get(mono, 0) + ca * cb
        return _reduce(p, poly)

    ring = FiniteSemiring.from_operations(
        elements, add, mul, zero, one, lambda e: _poly_label(p, e), p.name
    )
    report = validate(ring)
    if not report.passed:
        axiom, witness = report.violations[0]
        raise NonAssociative(p.name, axiom, witness)
    return ring


GF4 = RingPresentation("GF(4)", 2, ("x",), (((0,), 2), ((1,), 2)), {(2,): {(1,): 1, (0,): 1}})
GF8 = RingPresentation(
    "GF(8)", 2, ("x",), (((0,), 2), ((1,), 2), ((2,), 2)), {(3,): {(1,): 1, (0,): 1}}
)


def galois_field(q: int) -> FiniteSemiring:
    if q == 4:
        return presented_ring(GF4)
    if q == 8:
        return presented_ring(GF8)
    raise ValueError(f"Invalid field size: {q} (supported: 4, 8)")


# ===============================
# MATRIX-LIKE CONSTRUCTIONS
# ===============================

def _pair_label(a: str, b: str) -> str:
    if b == "0":
        return a
    if b == "1":
        j = "J"
    else:
        j = f"({b})J" if "+" in b else f"{b}J"
    return j if a == "0" else f"{a}+{j}"


def t2(R: FiniteSemiring) -> FiniteSemiring:
    """Matrices aI + bJ over R with J^2 = 0, as pairs (a, b)."""
    n = R.order
    idx = np.arange(n * n)
    a, b = idx // n, idx % n
    add = product_tables([R.add, R.add])
    first = R.mul[a[:, None], a[None, :]]
    second = R.add[R.mul[a[:, None], b[None, :]], R.mul[b[:, None], a[None, :]]]
    mul = first * n + second
    labels = [_pair_label(R.label(int(x)), R.label(int(y))) for x, y in zip(a, b)]
    result = FiniteSemiring(
        add, mul, R.zero * n + R.zero, R.one * n + R.zero, labels, f"T2({R.name})"
    )
    return result.normalized()


def direct_product(A: FiniteSemiring, B: FiniteSemiring) -> FiniteSemiring:
    m = B.order
    labels = [f"({A.label(x)},{B.label(y)})" for x in range(A.order) for y in range(m)]
    result = FiniteSemiring(
        product_tables([A.add, B.add]),
        product_tables([A.mul, B.mul]),
        A.zero * m + B.zero,
        A.one * m + B.one,
        labels,
        f"{A.name}x{B.name}",
        factors=(A, B),
    )
    return result.normalized()


# ===============================
# CHAINS
# ===============================

def chain(k: int) -> FiniteSemiring:
    """Totally ordered lattice 0 < x1 < ... < 1 with max as + and min as ·."""
    if k < 2:
        raise ValueError(f"Invalid chain size: {k}")

    def label(level: int) -> str:
        if level == 0:
            return "0"
        return "1" if level == k - 1 else f"x{level}"

    return FiniteSemiring.from_operations(
        list(range(k)), max, min, 0, k - 1, label, f"L{k}"
    )


def boolean_semiring() -> FiniteSemiring:
    return chain(2).with_name("B")


def chain_levels(L: FiniteSemiring) -> np.ndarray:
    """
    Position of every element in the chain order (0 for zero, k-1 for one).

    Raises:
        ValueError: when L is not a max/min chain
    """
    levels = np.array([int((L.add[x] == x).sum()) - 1 for x in range(L.order)])
    if sorted(levels.tolist()) != list(range(L.order)):
        raise ValueError(f"Invalid chain {L.name}: addition is not a total order")
    expected_add = np.maximum(levels[:, None], levels[None, :])
    expected_mul = np.minimum(levels[:, None], levels[None, :])
    if not (np.array_equal(levels[L.add], expected_add) and np.array_equal(levels[L.mul], expected_mul)):
        raise ValueError(f"Invalid chain {L.name}: operations are not max/min")
    return levels


# ===============================
# RING CATALOG
# ===============================

PRESENTATIONS: Dict[str, RingPresentation] = {
    p.name: p for p in (
        RingPresentation("Z2[x]/(x^3)", 2, ("x",), (((0,), 2), ((1,), 2), ((2,), 2)), {(3,): {}}),
        RingPresentation(
            "Z2[x]/(x^4)", 2, ("x",), (((0,), 2), ((1,), 2), ((2,), 2), ((3,), 2)), {(4,): {}}
        ),
        RingPresentation("Z4[x]/(x^2+x+1)", 4, ("x",), (((0,), 4), ((1,), 4)), {(2,): {(1,): 3, (0,): 3}}),
        RingPresentation(
            "Z2[x,y]/(x^2,xy,y^2)", 2, ("x", "y"),
            (((0, 0), 2), ((1, 0), 2), ((0, 1), 2)),
            {(2, 0): {}, (1, 1): {}, (0, 2): {}},
        ),
        RingPresentation("Z4[x]/(2x,x^2)", 4, ("x",), (((0,), 4), ((1,), 2)), {(2,): {}}),
        RingPresentation("Z4[x]/(2x,x^2-2)", 4, ("x",), (((0,), 4), ((1,), 2)), {(2,): {(0,): 2}}),
    )
}


def _catalog_factories() -> Dict[str, Callable[[], FiniteSemiring]]:
    factories: Dict[str, Callable[[], FiniteSemiring]] = {
        f"Z{n}": (lambda n=n: modular_ring(n)) for n in (2, 3, 4, 8, 9, 16)
    }
    factories["GF(4)"] = lambda: galois_field(4)
    factories["GF(8)"] = lambda: galois_field(8)
    factories["T2(Z2)"] = lambda: t2(modular_ring(2))
    factories["T2(GF(4))"] = lambda: t2(galois_field(4))
    for name, presentation in PRESENTATIONS.items():
        factories[name] = lambda p=presentation: presented_ring(p)
    return factories


CATALOG_FACTORIES = _catalog_factories()

# Rings with exactly one triangle in the zero-divisor graph, by case
ONE_TRIANGLE_PRODUCTS = ["Z4xZ4", "Z4xT2(Z2)", "T2(Z2)xZ4", "T2(Z2)xT2(Z2)"]
TRIANGLE_RINGS = ["T2(GF(4))", "Z4[x]/(x^2+x+1)", "Z2[x,y]/(x^2,xy,y^2)", "Z4[x]/(2x,x^2)"]
PENDANT_TRIANGLE_RINGS = ["Z16", "Z2[x]/(x^4)"]
LOCAL_FACTORS = ["Z4", "T2(Z2)"]


@lru_cache(maxsize=None)
def catalog_ring(name: str) -> FiniteSemiring:
    """
    Named ring from the catalog; products are written "AxB".

    Raises:
        ValueError: unknown name
    """
    if name in CATALOG_FACTORIES:
        return CATALOG_FACTORIES[name]()
    splits = product_splits(name)
    if splits:
        left, right = splits[0]
        return direct_product(catalog_ring(left), catalog_ring(right))
    raise ValueError(f"Invalid catalog ring: {name!r}")


def product_splits(name: str) -> List[Tuple[str, str]]:
    return [
        (name[:i], name[i + 1:])
        for i, ch in enumerate(name)
        if ch == "x" and name[:i] in CATALOG_FACTORIES and name[i + 1:] in CATALOG_FACTORIES
    ]


def catalog_rings(names: Sequence[str]) -> List[FiniteSemiring]:
    return [catalog_ring(name) for name in names]

"""
Isomorphism and Canonical Forms
===============================

- Element invariants (additive and multiplicative cycle signatures, annihilators)
- Greedy generating sets
- Backtracking isomorphism search over generator images
- Canonical byte forms for small orders
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from zdgraph.algebra.semiring import (
    FiniteSemiring,
    OrderMismatch,
    cycle_signature,
    nilpotent_index,
)
from zdgraph.config import CONFIG

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsoWitness:
    """mapping[x] is the image in B of element x of A."""
    mapping: Tuple[int, ...]

    def apply(self, A: FiniteSemiring, name: Optional[str] = None) -> FiniteSemiring:
        return A.relabel(self.mapping, name)

    def describe(self, A: FiniteSemiring, B: FiniteSemiring) -> List[str]:
        return [f"{A.label(x)} -> {B.label(y)}" for x, y in enumerate(self.mapping)]


# ===============================
# INVARIANTS
# ===============================

def element_invariants(S: FiniteSemiring) -> List[Tuple]:
    invariants = []
    for x in range(S.order):
        invariants.append((
            cycle_signature(S.add, x),
            cycle_signature(S.mul, x),
            nilpotent_index(S, x) or 0,
            int((S.mul[x] == S.zero).sum()),
            int((S.mul[:, x] == S.zero).sum()),
            int((S.add[x] == x).sum()),
        ))
    return invariants


# ===============================
# GENERATING SETS
# ===============================

def generated_subset(S: FiniteSemiring, seeds: Sequence[int]) -> Set[int]:
    """Smallest subset containing 0, 1 and seeds closed under + and ·."""
    members = []
    seen: Set[int] = set()
    for x in [S.zero, S.one, *seeds]:
        if x not in seen:
            seen.add(x)
            members.append(x)
    i = 0
    while i < len(members):
        x = members[i]
        for y in members[: i + 1]:
            for z in (S.plus(x, y), S.times(x, y), S.times(y, x)):
                if z not in seen:
                    seen.add(z)
                    members.append(z)
        i += 1
    return seen


def generating_set(S: FiniteSemiring) -> List[int]:
    """
    Greedy generators: repeatedly add the element that grows the generated
    subset most (lowest index on ties) until everything is generated.
    """
    gens: List[int] = []
    current = generated_subset(S, gens)
    while len(current) < S.order:
        best, best_size = None, -1
        for x in range(S.order):
            if x in current:
                continue
            size = len(generated_subset(S, gens + [x]))
            if size > best_size:
                best, best_size = x, size
        gens.append(best)
        current = generated_subset(S, gens)
    return gens


# ===============================
# ISOMORPHISM SEARCH
# ===============================

def _extend(A: FiniteSemiring, B: FiniteSemiring, phi: Dict[int, int], used: Set[int],
            x: int, y: int) -> Optional[Tuple[Dict[int, int], Set[int]]]:
    if x in phi:
        return (phi, used) if phi[x] == y else None
    if y in used:
        return None
    phi, used = dict(phi), set(used)
    phi[x] = y
    used.add(y)
    queue = [x]
    while queue:
        u = queue.pop()
        for v in list(phi):
            for p, q in ((u, v), (v, u)):
                for opA, opB in ((A.add, B.add), (A.mul, B.mul)):
                    r = int(opA[p, q])
                    s = int(opB[phi[p], phi[q]])
                    if r in phi:
                        if phi[r] != s:
                            return None
                    else:
                        if s in used:
                            return None
                        phi[r] = s
                        used.add(s)
                        queue.append(r)
    return phi, used


def _verify(A: FiniteSemiring, B: FiniteSemiring, mapping: np.ndarray) -> bool:
    return (
        np.array_equal(mapping[A.add], B.add[np.ix_(mapping, mapping)])
        and np.array_equal(mapping[A.mul], B.mul[np.ix_(mapping, mapping)])
        and int(mapping[A.zero]) == B.zero
        and int(mapping[A.one]) == B.one
    )


def find_isomorphism(A: FiniteSemiring, B: FiniteSemiring) -> Optional[IsoWitness]:
    """
    Search for a bijection preserving +, ·, 0 and 1.

    Args:
        A, B: validated semirings of equal order

    Returns:
        The first witness in generator-image order, or None
    """
    if A.order != B.order:
        raise OrderMismatch(f"Cannot compare {A.name} (order {A.order}) with {B.name} (order {B.order})")
    if A.order > CONFIG["isomorphism"]["max_order"]:
        logger.warning(f"isomorphism search above order {CONFIG['isomorphism']['max_order']}: {A.name}")

    inv_a, inv_b = element_invariants(A), element_invariants(B)
    if sorted(inv_a) != sorted(inv_b):
        return None

    start = _extend(A, B, {}, set(), A.zero, B.zero)
    if start is None:
        return None
    start = _extend(A, B, start[0], start[1], A.one, B.one)
    if start is None:
        return None

    gens = generating_set(A)
    candidates = {g: [y for y in range(B.order) if inv_b[y] == inv_a[g]] for g in gens}

    def search(i: int, phi: Dict[int, int], used: Set[int]) -> Optional[Dict[int, int]]:
        if i == len(gens):
            return phi if len(phi) == A.order else None
        g = gens[i]
        if g in phi:
            return search(i + 1, phi, used)
        for y in candidates[g]:
            extended = _extend(A, B, phi, used, g, y)
            if extended is None:
                continue
            found = search(i + 1, *extended)
            if found is not None:
                return found
        return None

    phi = search(0, *start)
    if phi is None:
        return None
    mapping = np.array([phi[x] for x in range(A.order)], dtype=np.int32)
    if not _verify(A, B, mapping):
        return None
    return IsoWitness(tuple(int(v) for v in mapping))


def are_isomorphic(A: FiniteSemiring, B: FiniteSemiring) -> bool:
    """Order mismatches count as not isomorphic."""
    if A.order != B.order:
        return False
    return find_isomorphism(A, B) is not None


# ===============================
# CANONICAL FORM
# ===============================

def canonical_form(S: FiniteSemiring) -> bytes:
    """
    Minimal serialized (add, mul) pair over all relabelings fixing 0 and 1.
    Equal forms mean isomorphic algebras.
    """
    limit = CONFIG["canonical"]["max_order"]
    if S.order > limit:
        raise ValueError(f"Invalid order for canonical form: {S.order} > {limit}")
    S = S.normalized()
    n = S.order
    fixed = list(range(min(n, 2)))
    best = None
    for rest in itertools.permutations(range(len(fixed), n)):
        # q[new] = old
        q = np.array(fixed + list(rest), dtype=np.int32)
        p = np.empty_like(q)
        p[q] = np.arange(n, dtype=np.int32)
        add = p[S.add[np.ix_(q, q)]]
        mul = p[S.mul[np.ix_(q, q)]]
        form = bytes([n]) + add.astype(np.uint8).tobytes() + mul.astype(np.uint8).tobytes()
        if best is None or form < best:
            best = form
    return best

"""
Semiring Enumeration
====================

Exhaustive generation of small semirings with identity, one per isomorphism class:
- additive monoids with identity 0, deduplicated under relabelings fixing 0 and 1
- multiplication tables with identity 1 and absorbing 0, pruned by partial
  associativity and both distributive laws after every assignment
- canonical_form deduplication and canonical ordering of the results

Additive classes are independent, so the multiplication search can be spread
over a process pool.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from zdgraph.algebra.isomorphism import canonical_form
from zdgraph.algebra.semiring import (
    FiniteSemiring,
    is_additively_cancellative,
    is_entire,
    validate,
)
from zdgraph.config import CONFIG

logger = logging.getLogger(__name__)

UNSET = -1


@dataclass(frozen=True)
class EnumFilter:
    """
    Corpus selection.

    commutative: restrict to commutative multiplication (False means no restriction)
    require_cancellative / require_entire: None ignores the property,
        True keeps only algebras with it, False only algebras without it
    """
    commutative: bool = True
    require_cancellative: Optional[bool] = None
    require_entire: Optional[bool] = None
    max_order: int = 4
    min_order: int = 2

    def validate(self) -> None:
        limit = CONFIG["enumeration"]["hard_limit"]
        if not 1 <= self.min_order <= self.max_order:
            raise ValueError(f"Invalid order range: {self.min_order}..{self.max_order}")
        if self.max_order > limit:
            raise ValueError(f"Invalid max_order: {self.max_order} (hard limit is {limit})")
        noncommutative_limit = CONFIG["enumeration"]["noncommutative_max_order"]
        if not self.commutative and self.max_order > noncommutative_limit:
            raise ValueError(
                f"Invalid max_order for noncommutative enumeration: {self.max_order} "
                f"(limit is {noncommutative_limit})"
            )

    def accepts(self, S: FiniteSemiring) -> bool:
        if self.require_cancellative is not None and is_additively_cancellative(S) != self.require_cancellative:
            return False
        if self.require_entire is not None and is_entire(S) != self.require_entire:
            return False
        return True


# ===============================
# PARTIAL AXIOM CHECKS
# ===============================

def _associative_so_far(T: np.ndarray) -> bool:
    """(xy)z = x(yz) wherever every entry involved is assigned."""
    n = T.shape[0]
    known = T != UNSET
    safe = np.where(known, T, 0)
    lhs = T[safe]                                   # T[T[x,y], z]
    rhs = T[np.arange(n)[:, None, None], safe[None, :, :]]   # T[x, T[y,z]]
    valid = known[:, :, None] & known[None, :, :] & (lhs != UNSET) & (rhs != UNSET)
    return not np.any(valid & (lhs != rhs))


def _distributive_so_far(add: np.ndarray, M: np.ndarray) -> bool:
    """x(y+z) = xy + xz and (y+z)x = yx + zx wherever the products are assigned."""
    n = M.shape[0]
    known = M != UNSET
    safe = np.where(known, M, 0)
    x = np.arange(n)[:, None, None]
    s = add[None, :, :]                             # y+z indexed [_, y, z]

    left = M[x, s]                                  # x(y+z)
    left_rhs = add[safe[:, :, None], safe[:, None, :]]      # xy + xz
    left_ok = known[:, :, None] & known[:, None, :] & (left != UNSET)
    if np.any(left_ok & (left != left_rhs)):
        return False

    right = M[s, x]                                 # (y+z)x
    right_rhs = add[safe.T[:, :, None], safe.T[:, None, :]]  # yx + zx
    right_ok = known.T[:, :, None] & known.T[:, None, :] & (right != UNSET)
    return not np.any(right_ok & (right != right_rhs))


# ===============================
# ADDITIVE MONOIDS
# ===============================

def _relabel_key(T: np.ndarray, perm: Sequence[int]) -> bytes:
    p = np.asarray(perm)
    out = np.empty_like(T)
    out[np.ix_(p, p)] = p[T]
    return out.astype(np.uint8).tobytes()


def _monoid_key(T: np.ndarray) -> bytes:
    """Smallest table encoding over relabelings fixing 0 and 1."""
    n = T.shape[0]
    return min(
        _relabel_key(T, (0, 1) + rest) if n > 1 else _relabel_key(T, (0,))
        for rest in itertools.permutations(range(2, n))
    )


def additive_monoids(n: int) -> List[np.ndarray]:
    """
    Commutative monoids on 0..n-1 with identity 0, one per class under
    relabelings that fix 0 and 1, ordered by their canonical encoding.
    """
    if n < 1:
        raise ValueError(f"Invalid order: {n}")
    T = np.full((n, n), UNSET, dtype=np.int64)
    T[0, :] = T[:, 0] = np.arange(n)
    cells = [(i, j) for i in range(1, n) for j in range(i, n)]
    found = {}

    def search(k: int) -> None:
        if k == len(cells):
            key = _monoid_key(T)
            if key not in found:
                found[key] = T.copy()
            return
        i, j = cells[k]
        for v in range(n):
            T[i, j] = T[j, i] = v
            if _associative_so_far(T):
                search(k + 1)
        T[i, j] = T[j, i] = UNSET

    search(0)
    return [found[key] for key in sorted(found)]


# ===============================
# MULTIPLICATIONS
# ===============================

def multiplications(add: np.ndarray, commutative: bool = True) -> Iterator[np.ndarray]:
    """Every multiplication table with identity 1 and absorbing 0 that makes add a semiring."""
    n = add.shape[0]
    M = np.full((n, n), UNSET, dtype=np.int64)
    M[0, :] = M[:, 0] = 0
    if n > 1:
        M[1, :] = M[:, 1] = np.arange(n)
        M[0, 1] = M[1, 0] = 0
    if commutative:
        cells = [(i, j) for i in range(2, n) for j in range(i, n)]
    else:
        cells = [(i, j) for i in range(2, n) for j in range(2, n)]

    def search(k: int) -> Iterator[np.ndarray]:
        if k == len(cells):
            yield M.copy()
            return
        i, j = cells[k]
        for v in range(n):
            M[i, j] = v
            if commutative:
                M[j, i] = v
            if _associative_so_far(M) and _distributive_so_far(add, M):
                yield from search(k + 1)
        M[i, j] = UNSET
        if commutative:
            M[j, i] = UNSET

    if _distributive_so_far(add, M):
        yield from search(0)


def _class_semirings(job: Tuple[np.ndarray, bool]) -> List[Tuple[bytes, FiniteSemiring]]:
    add, commutative = job
    results = {}
    for mul in multiplications(add, commutative):
        S = FiniteSemiring(add, mul, 0, 1)
        if not validate(S).passed:
            continue
        key = canonical_form(S)
        if key not in results:
            results[key] = S
    return list(results.items())


# ===============================
# ENUMERATION
# ===============================

def semirings_of_order(n: int, commutative: bool = True, jobs: int = 1) -> List[FiniteSemiring]:
    """One semiring per isomorphism class of order n, canonical order."""
    jobs_list = [(add, commutative) for add in additive_monoids(n)]
    if jobs > 1 and len(jobs_list) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_class_semirings, jobs_list))
    else:
        batches = [_class_semirings(job) for job in jobs_list]

    merged = {}
    for batch in batches:
        for key, S in batch:
            merged.setdefault(key, S)
    algebras = [merged[key] for key in sorted(merged)]
    logger.info(
        f"order {n}: {len(jobs_list)} additive classes, {len(algebras)} "
        f"{'commutative ' if commutative else ''}semirings"
    )
    return [S.with_name(f"S{n}.{i}") for i, S in enumerate(algebras, start=1)]


def enumerate_semirings(filt: EnumFilter = EnumFilter(), jobs: int = 1) -> Iterator[FiniteSemiring]:
    """
    Every semiring with identity of order min_order..max_order passing the filter.

    Args:
        filt: order range and property filter
        jobs: worker processes for the multiplication search

    Raises:
        ValueError: order range beyond the configured limits
    """
    filt.validate()
    for n in range(filt.min_order, filt.max_order + 1):
        if n == 1:
            trivial = FiniteSemiring([[0]], [[0]], 0, 0, name="S1.1")
            if filt.accepts(trivial):
                yield trivial
            continue
        for S in semirings_of_order(n, filt.commutative, jobs):
            if filt.accepts(S):
                yield S


def census(filt: EnumFilter = EnumFilter(), jobs: int = 1) -> List[FiniteSemiring]:
    return list(enumerate_semirings(filt, jobs))

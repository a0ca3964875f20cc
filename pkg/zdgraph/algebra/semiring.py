"""
Finite Semirings
================

Operation-table representation of finite semirings with identity:
- Table shape checks (MalformedTable)
- Axiom validation with concrete witnesses
- Structural predicates (commutative, entire, cancellative, ring)
- Powers, nilpotent index, relabeling and normalization
- JSON persistence
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)


# ===============================
# ERRORS
# ===============================

class MalformedTable(ValueError):
    """Ragged tables, out-of-range entries or constants."""


class OrderMismatch(ValueError):
    """Two algebras of different order were compared."""


class NonAssociative(ValueError):
    """Tables built from a presentation fail the semiring axioms."""

    def __init__(self, name: str, axiom: str, witness: Tuple[int, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"Invalid presentation {name}: {axiom} fails at {witness}")


class InvalidResult(ValueError):
    """A constructed table is not a semiring with identity."""


# ===============================
# SEMIRING
# ===============================

def _as_table(raw: Any, kind: str, order: Optional[int] = None) -> np.ndarray:
    try:
        rows = [list(r) for r in raw]
    except TypeError:
        raise MalformedTable(f"Invalid {kind} table: not a sequence of rows")
    n = len(rows) if order is None else order
    if n == 0:
        raise MalformedTable(f"Invalid {kind} table: empty")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise MalformedTable(f"Invalid {kind} table: expected {n}x{n}, got ragged rows")
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise MalformedTable(f"Invalid {kind} entry at ({i},{j}): {v!r}")
            if not 0 <= int(v) < n:
                raise MalformedTable(f"Invalid {kind} entry at ({i},{j}): {v} not in [0,{n})")
    table = np.array(rows, dtype=np.int32).reshape(n, n)
    table.setflags(write=False)
    return table


class FiniteSemiring:
    """
    A finite semiring given by its addition and multiplication tables.

    Elements are indices 0..n-1; add[i][j] is i+j and mul[i][j] is i·j.
    Instances are treated as immutable: tables are read-only numpy arrays.
    """

    def __init__(
        self,
        add: Any,
        mul: Any,
        zero: int = 0,
        one: int = 1,
        labels: Optional[Sequence[str]] = None,
        name: str = "S",
        factors: Tuple["FiniteSemiring", ...] = (),
    ):
        self.add = _as_table(add, "add")
        self.order = self.add.shape[0]
        self.mul = _as_table(mul, "mul", self.order)
        n = self.order
        constants = (("zero", zero), ("one", one)) if n > 1 else (("zero", zero),)
        for const, value in constants:
            if not isinstance(value, (int, np.integer)) or not 0 <= int(value) < n:
                raise MalformedTable(f"Invalid {const} index: {value!r} not in [0,{n})")
        self.zero = int(zero)
        self.one = int(one) if n > 1 else self.zero
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise MalformedTable(f"Invalid labels: expected {n}, got {len(labels)}")
        self.labels = tuple(str(label) for label in labels)
        self.name = name
        self.factors = tuple(factors)

    # ---------- element arithmetic ----------

    def plus(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def power(self, x: int, k: int) -> int:
        """x^k for k >= 1."""
        result = x
        for _ in range(k - 1):
            result = self.times(result, x)
        return result

    def multiple(self, x: int, k: int) -> int:
        """k·x = x + ... + x for k >= 1."""
        result = x
        for _ in range(k - 1):
            result = self.plus(result, x)
        return result

    def label(self, x: int) -> str:
        return self.labels[x]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"Invalid element label for {self.name}: {label!r}")

    # ---------- relabeling ----------

    def relabel(self, perm: Sequence[int], name: Optional[str] = None) -> "FiniteSemiring":
        """
        Rename element i to perm[i].

        Args:
            perm: permutation of range(order)

        Returns:
            Isomorphic semiring with permuted tables
        """
        p = np.asarray(perm, dtype=np.int32)
        if sorted(p.tolist()) != list(range(self.order)):
            raise ValueError(f"Invalid permutation for order {self.order}: {list(perm)}")
        add = np.empty_like(self.add)
        mul = np.empty_like(self.mul)
        add[np.ix_(p, p)] = p[self.add]
        mul[np.ix_(p, p)] = p[self.mul]
        labels = [""] * self.order
        for i, target in enumerate(p.tolist()):
            labels[target] = self.labels[i]
        return FiniteSemiring(
            add, mul, int(p[self.zero]), int(p[self.one]), labels,
            name or self.name, self.factors,
        )

    def normalized(self) -> "FiniteSemiring":
        """Renumber so zero is index 0 and one is index 1, keeping the rest in order."""
        if self.zero == 0 and (self.order == 1 or self.one == 1):
            return self
        head = [self.zero] if self.order == 1 else [self.zero, self.one]
        rest = [x for x in range(self.order) if x not in head]
        perm = [0] * self.order
        for new, old in enumerate(head + rest):
            perm[old] = new
        return self.relabel(perm)

    def with_name(self, name: str) -> "FiniteSemiring":
        return FiniteSemiring(self.add, self.mul, self.zero, self.one, self.labels, name, self.factors)

    # ---------- persistence ----------

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "order": self.order,
            "zero": self.zero,
            "one": self.one,
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
            "labels": list(self.labels),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FiniteSemiring":
        for key in ("order", "add", "mul"):
            if key not in data:
                raise MalformedTable(f"Invalid algebra file: missing {key!r}")
        algebra = cls(
            data["add"], data["mul"], data.get("zero", 0), data.get("one", 1),
            data.get("labels"), data.get("name", "S"),
        )
        if algebra.order != data["order"]:
            raise MalformedTable(f"Invalid order: declared {data['order']}, tables are {algebra.order}")
        return algebra

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "FiniteSemiring":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise MalformedTable(f"Invalid algebra JSON: {e}")
        if not isinstance(data, dict):
            raise MalformedTable("Invalid algebra JSON: top level must be an object")
        return cls.from_dict(data)

    def save(self, path: str) -> None:
        with open(path, "w") as f:
            f.write(self.to_json() + "\n")

    @classmethod
    def load(cls, path: str) -> "FiniteSemiring":
        with open(path, "r") as f:
            return cls.from_json(f.read())

    # ---------- construction from operations ----------

    @classmethod
    def from_operations(
        cls,
        elements: Sequence[Any],
        add: Callable[[Any, Any], Any],
        mul: Callable[[Any, Any], Any],
        zero: Any,
        one: Any,
        label: Callable[[Any], str] = str,
        name: str = "S",
        key: Callable[[Any], Any] = lambda x: x,
        factors: Tuple["FiniteSemiring", ...] = (),
    ) -> "FiniteSemiring":
        """
        Tabulate two operations on an explicit finite element list.

        Args:
            elements: every element, each exactly once
            add, mul: binary operations closed on elements
            zero, one: the identity elements (must occur in elements)
            key: hashable key identifying equal elements

        Returns:
            Normalized semiring (zero at 0, one at 1)
        """
        index = {key(x): i for i, x in enumerate(elements)}
        if len(index) != len(elements):
            raise ValueError(f"Invalid element list for {name}: duplicates present")
        n = len(elements)

        def lookup(value: Any, what: str) -> int:
            try:
                return index[key(value)]
            except KeyError:
                raise InvalidResult(f"Invalid {name}: {what} leaves the element set")

        add_table = np.zeros((n, n), dtype=np.int32)
        mul_table = np.zeros((n, n), dtype=np.int32)
        for i, x in enumerate(elements):
            for j, y in enumerate(elements):
                add_table[i, j] = lookup(add(x, y), "addition")
                mul_table[i, j] = lookup(mul(x, y), "multiplication")
        algebra = cls(
            add_table, mul_table, lookup(zero, "zero"), lookup(one, "one"),
            [label(x) for x in elements], name, factors,
        )
        return algebra.normalized()

    def __repr__(self) -> str:
        return f"FiniteSemiring(name={self.name!r}, order={self.order})"


# ===============================
# AXIOM VALIDATION
# ===============================

@dataclass
class AxiomReport:
    """Outcome of validate; passed iff violations is empty."""
    violations: List[Tuple[str, Tuple[int, ...]]] = field(default_factory=list)
    degenerate: bool = False

    @property
    def passed(self) -> bool:
        return not self.violations

    def describe(self) -> str:
        if self.passed:
            return "all semiring axioms hold" + (" (degenerate 0 = 1)" if self.degenerate else "")
        return "; ".join(f"{axiom} fails at {witness}" for axiom, witness in self.violations)


def _first_ternary(lhs_of: Callable[[int], np.ndarray], rhs_of: Callable[[int], np.ndarray], n: int):
    # Slices by first index keep memory at n^2 and preserve lexicographic witness order.
    for i in range(n):
        bad = np.argwhere(lhs_of(i) != rhs_of(i))
        if len(bad):
            j, k = bad[0]
            return (i, int(j), int(k))
    return None


def validate(S: FiniteSemiring) -> AxiomReport:
    """
    Check every semiring-with-identity axiom over all elements.

    Reports the first (lexicographic) violation of each axiom class with its witness.
    """
    n = S.order
    A, M = S.add, S.mul
    idx = np.arange(n)
    report = AxiomReport()

    def record(axiom: str, witness: Optional[Tuple[int, ...]]) -> None:
        if witness is not None:
            report.violations.append((axiom, witness))

    def first_pair(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
        bad = np.argwhere(mask)
        return tuple(int(v) for v in bad[0]) if len(bad) else None

    def first_single(mask: np.ndarray) -> Optional[Tuple[int, ...]]:
        bad = np.flatnonzero(mask)
        return (int(bad[0]),) if len(bad) else None

    record("additive associativity", _first_ternary(
        lambda i: A[A[i]], lambda i: A[i][A], n))
    record("additive commutativity", first_pair(A != A.T))
    record("additive identity", first_single((A[S.zero] != idx) | (A[:, S.zero] != idx)))
    record("multiplicative associativity", _first_ternary(
        lambda i: M[M[i]], lambda i: M[i][M], n))
    record("multiplicative identity", first_single((M[S.one] != idx) | (M[:, S.one] != idx)))
    # a(b+c) = ab + ac
    record("left distributivity", _first_ternary(
        lambda i: M[i][A], lambda i: A[M[i][:, None], M[i][None, :]], n))
    # (a+b)c = ac + bc, indexed as (a, b, c)
    record("right distributivity", _first_ternary(
        lambda i: M[A[i]], lambda i: A[M[i][None, :], M], n))
    record("zero annihilation", first_single((M[S.zero] != S.zero) | (M[:, S.zero] != S.zero)))

    if n == 1:
        report.degenerate = True
        logger.warning(f"{S.name}: order 1 algebra has 0 = 1")
    elif S.zero == S.one:
        report.violations.append(("zero differs from one", (S.zero,)))
    return report


def require_valid(S: FiniteSemiring) -> FiniteSemiring:
    report = validate(S)
    if not report.passed:
        raise InvalidResult(f"Invalid semiring {S.name}: {report.describe()}")
    return S


# ===============================
# STRUCTURAL PREDICATES
# ===============================

def _nonzero(S: FiniteSemiring) -> np.ndarray:
    return np.array([x for x in range(S.order) if x != S.zero], dtype=np.int32)


def is_commutative(S: FiniteSemiring) -> bool:
    return bool(np.array_equal(S.mul, S.mul.T))


def is_entire(S: FiniteSemiring) -> bool:
    nz = _nonzero(S)
    if len(nz) == 0:
        return True
    return not bool((S.mul[np.ix_(nz, nz)] == S.zero).any())


def is_additively_cancellative(S: FiniteSemiring) -> bool:
    # column c is the map a -> a + c; cancellative iff each is injective
    return all(len(np.unique(S.add[:, c])) == S.order for c in range(S.order))


def is_ring(S: FiniteSemiring) -> bool:
    return bool((S.add == S.zero).any(axis=1).all())


def nilpotent_index(S: FiniteSemiring, x: int) -> Optional[int]:
    """Least k >= 1 with x^k = 0, or None when x is not nilpotent."""
    p, k = x, 1
    while p != S.zero:
        if k >= S.order:
            return None
        p = S.times(p, x)
        k += 1
    return k


def cycle_signature(table: np.ndarray, x: int) -> Tuple[int, int]:
    """
    (index, period) of the sequence x, x∘x, x∘x∘x, ... under table.
    """
    seen: Dict[int, int] = {}
    value, step = x, 1
    while value not in seen:
        seen[value] = step
        value = int(table[value, x])
        step += 1
    return seen[value], step - seen[value]


def summary(S: FiniteSemiring) -> Dict[str, Any]:
    return {
        "name": S.name,
        "order": S.order,
        "commutative": is_commutative(S),
        "entire": is_entire(S),
        "cancellative": is_additively_cancellative(S),
        "ring": is_ring(S),
    }


def product_tables(tables: Iterable[np.ndarray]) -> np.ndarray:
    """Componentwise table on the row-major product of the index sets."""
    tables = list(tables)
    result = tables[0]
    for t in tables[1:]:
        m = t.shape[0]
        result = (result[:, None, :, None] * m + t[None, :, None, :]).reshape(
            result.shape[0] * m, result.shape[0] * m)
    return result

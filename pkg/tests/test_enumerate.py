import itertools

import numpy as np
import pytest

from zdgraph.algebra.builders import boolean_semiring, catalog_ring, chain, direct_product
from zdgraph.algebra.isomorphism import canonical_form
from zdgraph.algebra.semiring import FiniteSemiring, is_additively_cancellative, is_entire, validate
from zdgraph.enumerate import (
    EnumFilter,
    additive_monoids,
    census,
    enumerate_semirings,
    multiplications,
)


def _brute_force_forms(n):
    """Canonical forms of every semiring on 0..n-1 with 0, 1 fixed, by exhaustive tables."""
    free_add = [(i, j) for i in range(1, n) for j in range(i, n)]
    free_mul = [(i, j) for i in range(2, n) for j in range(2, n)]
    forms = set()
    for add_values in itertools.product(range(n), repeat=len(free_add)):
        add = np.zeros((n, n), dtype=int)
        add[0, :] = add[:, 0] = np.arange(n)
        for (i, j), v in zip(free_add, add_values):
            add[i, j] = add[j, i] = v
        for mul_values in itertools.product(range(n), repeat=len(free_mul)):
            mul = np.zeros((n, n), dtype=int)
            mul[1, :] = mul[:, 1] = np.arange(n)
            mul[0, :] = mul[:, 0] = 0
            for (i, j), v in zip(free_mul, mul_values):
                mul[i, j] = v
            S = FiniteSemiring(add.tolist(), mul.tolist(), 0, 1)
            if validate(S).passed:
                forms.add(canonical_form(S))
    return forms


@pytest.mark.parametrize("n", [2, 3])
def test_matches_brute_force(n):
    found = census(EnumFilter(commutative=False, min_order=n, max_order=n))
    assert {canonical_form(S) for S in found} == _brute_force_forms(n)
    assert len(found) == len(_brute_force_forms(n))


def test_order_two():
    found = census(EnumFilter(max_order=2))
    assert [S.name for S in found] == ["S2.1", "S2.2"]
    forms = {canonical_form(S) for S in found}
    assert forms == {canonical_form(catalog_ring("Z2")), canonical_form(boolean_semiring())}


def test_cancellative_filter():
    found = census(EnumFilter(max_order=2, require_cancellative=True))
    assert len(found) == 1
    assert is_additively_cancellative(found[0])


def test_census_is_sound_and_irredundant(census3):
    assert all(validate(S).passed for S in census3)
    forms = [canonical_form(S) for S in census3]
    assert len(forms) == len(set(forms))


def test_commutative_order_four_contains_known_algebras(census4):
    forms = {canonical_form(S) for S in census4}
    for S in (
        catalog_ring("Z4"),
        catalog_ring("T2(Z2)"),
        catalog_ring("GF(4)"),
        catalog_ring("Z2xZ2"),
        chain(4),
        direct_product(boolean_semiring(), boolean_semiring()),
    ):
        assert canonical_form(S) in forms, S.name


def test_entire_filter(census4):
    entire = [S for S in census4 if is_entire(S)]
    filtered = census(EnumFilter(min_order=4, max_order=4, require_entire=True))
    assert {canonical_form(S) for S in filtered} == {canonical_form(S) for S in entire}


def test_trivial_algebra():
    found = census(EnumFilter(min_order=1, max_order=1))
    assert [S.name for S in found] == ["S1.1"]
    assert found[0].order == 1


@pytest.mark.parametrize("filt", [
    EnumFilter(max_order=6),
    EnumFilter(commutative=False, max_order=4),
    EnumFilter(min_order=3, max_order=2),
    EnumFilter(min_order=0, max_order=2),
])
def test_limits(filt):
    with pytest.raises(ValueError):
        list(enumerate_semirings(filt))


def test_additive_monoids():
    assert len(additive_monoids(1)) == 1
    assert len(additive_monoids(2)) == 2
    with pytest.raises(ValueError):
        additive_monoids(0)


def test_two_element_multiplication_is_forced():
    tables = list(multiplications(np.array([[0, 1], [1, 0]])))
    assert len(tables) == 1
    assert tables[0].tolist() == [[0, 0], [0, 1]]


def test_worker_pool_matches_serial(census3):
    pooled = census(EnumFilter(max_order=3), jobs=2)
    assert [canonical_form(S) for S in pooled] == [canonical_form(S) for S in census3]
    assert [S.name for S in pooled] == [S.name for S in census3]

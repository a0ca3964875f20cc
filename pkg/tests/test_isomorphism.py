import itertools
import logging

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdgraph.algebra.builders import RingPresentation, catalog_ring, chain, presented_ring
from zdgraph.algebra.isomorphism import (
    are_isomorphic,
    canonical_form,
    find_isomorphism,
    generated_subset,
    generating_set,
)
from zdgraph.algebra.semiring import OrderMismatch
from zdgraph.config import CONFIG

DUAL_NUMBERS = RingPresentation("Z2[x]/(x^2)", 2, ("x",), (((0,), 2), ((1,), 2)), {(2,): {}})

SMALL = ["Z4", "T2(Z2)", "GF(4)", "Z2xZ2", "Z8", "Z2[x]/(x^3)", "Z4[x]/(2x,x^2)"]


def test_z4_and_t2z2_differ(z4, t2z2):
    assert not are_isomorphic(z4, t2z2)
    assert canonical_form(z4) != canonical_form(t2z2)


def test_presented_dual_numbers_match_t2z2(t2z2):
    dual = presented_ring(DUAL_NUMBERS)
    witness = find_isomorphism(dual, t2z2)

    assert witness is not None
    image = witness.apply(dual)
    assert np.array_equal(image.add, t2z2.add)
    assert np.array_equal(image.mul, t2z2.mul)
    assert canonical_form(dual) == canonical_form(t2z2)


def test_witness_describes_every_element(t2z2):
    lines = find_isomorphism(t2z2, t2z2).describe(t2z2, t2z2)
    assert len(lines) == 4
    assert "0 -> 0" in lines


def test_order_mismatch(z4):
    Z8 = catalog_ring("Z8")
    with pytest.raises(OrderMismatch):
        find_isomorphism(z4, Z8)
    assert not are_isomorphic(z4, Z8)


def test_search_above_order_limit_warns(z4, t2z2, caplog):
    CONFIG["isomorphism"]["max_order"] = 2
    with caplog.at_level(logging.WARNING, logger="zdgraph.algebra.isomorphism"):
        assert find_isomorphism(z4, t2z2) is None
    assert any(
        r.levelno == logging.WARNING and "above order 2" in r.getMessage() for r in caplog.records
    )


def test_canonical_form_order_limit():
    with pytest.raises(ValueError, match="canonical"):
        canonical_form(catalog_ring("Z9"))


def test_chain_versus_product_of_booleans(chain4):
    assert not are_isomorphic(chain4, catalog_ring("Z2xZ2"))


@pytest.mark.parametrize("name", SMALL)
def test_greedy_generators_generate(name):
    S = catalog_ring(name)
    assert generated_subset(S, generating_set(S)) == set(range(S.order))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_relabeling_preserves_isomorphism_class(name, data):
    S = catalog_ring(name)
    perm = data.draw(st.permutations(range(S.order)))
    T = S.relabel(perm)

    witness = find_isomorphism(S, T)
    assert witness is not None
    assert canonical_form(S) == canonical_form(T)


@pytest.mark.parametrize("first, second", [
    ("Z4", "GF(4)"),
    ("Z8", "Z2[x]/(x^3)"),
    ("Z4[x]/(2x,x^2)", "Z2[x,y]/(x^2,xy,y^2)"),
])
def test_same_order_non_isomorphic(first, second):
    A, B = catalog_ring(first), catalog_ring(second)
    assert find_isomorphism(A, B) is None
    assert canonical_form(A) != canonical_form(B)


def _has_bijection(A, B):
    """Exhaustive search over every bijection A -> B preserving + and ·."""
    perms = np.array(list(itertools.permutations(range(A.order))), dtype=np.intp)
    rows, cols = perms[:, :, None], perms[:, None, :]
    add_ok = (perms[:, A.add] == B.add[rows, cols]).all(axis=(1, 2))
    mul_ok = (perms[:, A.mul] == B.mul[rows, cols]).all(axis=(1, 2))
    return bool((add_ok & mul_ok).any())


def test_agrees_with_exhaustive_bijection_search(all_algebras):
    small = [S for S in all_algebras if S.order <= 6]
    rng = np.random.default_rng(7)
    shuffled = [S.relabel(rng.permutation(S.order)) for S in small]

    pairs = 0
    for A in small:
        for B in shuffled:
            if A.order != B.order:
                continue
            witness = find_isomorphism(A, B)
            assert (witness is not None) == _has_bijection(A, B), (A.name, B.name)
            if witness is not None:
                image = witness.apply(A)
                assert np.array_equal(image.add, B.add) and np.array_equal(image.mul, B.mul)
            pairs += 1
    assert pairs > len(small)

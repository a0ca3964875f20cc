import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdgraph.algebra.ambients import (
    BoolMatrixAmbient,
    BooleanVectorAmbient,
    ClosureOverflow,
    DimTooLarge,
    LatticeMatrixAmbient,
    ProductAmbient,
    generated_closure,
)
from zdgraph.algebra.builders import chain
from zdgraph.algebra.semiring import InvalidResult, is_commutative, validate


def _units(amb):
    return [amb.unit(i, j) for i in range(1, amb.n + 1) for j in range(1, amb.n + 1)]


def test_matrix_units_generate_all_of_m2():
    S = generated_closure(BoolMatrixAmbient(2), _units(BoolMatrixAmbient(2)), name="M2(B)")
    assert S.order == 16
    assert validate(S).passed
    assert not is_commutative(S)
    assert S.label(S.one) == "10;01"


def test_vector_closure_keeps_identity():
    amb = BooleanVectorAmbient(2)
    S = generated_closure(amb, [amb.unit(1)])
    assert sorted(S.labels) == ["00", "10", "11"]
    assert S.label(S.one) == "11"


def test_closure_without_identity_finds_its_own():
    amb = BooleanVectorAmbient(3)
    S = generated_closure(amb, [amb.unit(1, 2), amb.unit(1)], adjoin_identity=False)
    assert S.label(S.one) == "110"
    assert S.order == 3


def test_closure_without_identity_fails_when_none_exists():
    amb = BoolMatrixAmbient(2)
    with pytest.raises(InvalidResult, match="identity"):
        generated_closure(amb, [amb.shift()], adjoin_identity=False)


def test_closure_cap():
    amb = BoolMatrixAmbient(2)
    with pytest.raises(ClosureOverflow) as e:
        generated_closure(amb, _units(amb), cap=5)
    assert e.value.cap == 5


def test_closure_cap_from_environment(monkeypatch):
    monkeypatch.setenv("ZDG_CLOSURE_CAP", "5")
    amb = BoolMatrixAmbient(2)
    with pytest.raises(ClosureOverflow):
        generated_closure(amb, _units(amb))


def test_empty_generators_rejected():
    with pytest.raises(ValueError, match="nonempty"):
        generated_closure(BoolMatrixAmbient(2), [])


@pytest.mark.parametrize("make", [
    lambda: BoolMatrixAmbient(18),
    lambda: BoolMatrixAmbient(0),
    lambda: LatticeMatrixAmbient(chain(3), 9),
])
def test_dimension_limits(make):
    with pytest.raises(DimTooLarge):
        make()


def test_bool_matrix_helpers():
    amb = BoolMatrixAmbient(3)
    J = amb.shift()
    assert amb.power(J, 2).sum() == 1 and amb.power(J, 2)[0, 2]
    assert not amb.power(J, 3).any()
    assert amb.equal(amb.total([amb.unit(1, 1), amb.unit(2, 2), amb.unit(3, 3)]), amb.identity())
    block = BoolMatrixAmbient.direct_sum(np.ones((1, 1), dtype=bool), amb.zeros(2))
    assert block.shape == (3, 3) and block.sum() == 1


def test_lattice_matrix_product_is_max_min():
    L = chain(3)
    amb = LatticeMatrixAmbient(L, 2)
    x = np.array([[2, 1], [0, 2]], dtype=np.int8)
    y = np.array([[1, 0], [2, 2]], dtype=np.int8)
    assert amb.mul(x, y).tolist() == [[1, 1], [2, 2]]
    assert amb.mul(amb.one, x).tolist() == x.tolist()
    assert amb.label(amb.scale(1, np.eye(2, dtype=bool))) == "x1,0;0,x1"
    with pytest.raises(ValueError, match="level"):
        amb.scale(3, np.eye(2, dtype=bool))


def test_product_embedding_is_one_based():
    M2 = BoolMatrixAmbient(2)
    amb = ProductAmbient([M2, M2])
    x = amb.embed(2, M2.identity())
    assert not x[0].any()
    assert x[1].tolist() == M2.identity().tolist()
    assert amb.label(x) == "(00;00, 10;01)"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(st.booleans(), min_size=4, max_size=4), min_size=1, max_size=3))
def test_closure_is_idempotent(rows):
    amb = BooleanVectorAmbient(4)
    S = generated_closure(amb, [np.array(r, dtype=bool) for r in rows])
    elements = [np.array([c == "1" for c in label], dtype=bool) for label in S.labels]
    again = generated_closure(amb, elements)
    assert again.order == S.order
    assert sorted(again.labels) == sorted(S.labels)

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import group
from grouplab.backends import Abelian, CayleyTable, Dicyclic, MatrixModP, Permutation
from grouplab.constructions import cyclic, direct_product
from grouplab.core import element_order, enumerate_elements, exponent, order_profile
from grouplab.errors import BudgetExceeded, InvalidBackend
from grouplab.numtheory import divisors, factorize, is_almost_square_free, is_square_free, p_part
from grouplab.structure import is_isomorphic

SMALL = ["C1", "C6", "S3", "Q8", "D5", "A4", "C4 x C2", "Heis(3)", "sd(C9, C3, [[4]])", "SL2(3)"]


def test_order_profiles_match_hand_counts():
    assert order_profile(group("Q8")) == {1: 1, 2: 1, 4: 6}
    assert order_profile(group("S3")) == {1: 1, 2: 3, 3: 2}
    assert order_profile(group("C2 x C2")) == {1: 1, 2: 3}
    assert order_profile(group("E(3,2)")) == {1: 1, 3: 8}
    assert order_profile(group("Q16")) == {1: 1, 2: 1, 4: 10, 8: 4}


def test_exponents():
    assert exponent(group("S4")) == 12
    assert exponent(group("Q8")) == 4
    assert exponent(group("C30")) == 30


def test_identity_is_zero_and_ids_are_dense():
    G = group("A4")
    assert G.keys[0] == G.backend.identity()
    assert sorted(G.index(k) for k in G.keys) == list(range(G.order))


def test_a5_from_five_cycle_and_three_cycle():
    five = (1, 2, 3, 4, 0)
    three = (0, 1, 3, 4, 2)
    G = enumerate_elements(Permutation(5, (five, three)))
    assert G.order == 60
    assert is_isomorphic(G, group("A5"))


def test_matrix_groups():
    assert group("SL2(5)").order == 120
    assert group("GL2(3)").order == 48
    assert group("SL2(3)").order == 24
    with pytest.raises(InvalidBackend):
        MatrixModP(5, 2, ((1, 0, 0, 0),))
    with pytest.raises(InvalidBackend):
        enumerate_elements(MatrixModP(5, 2, ((1, 1, 0, 1),), special=True, whole=True))
    # a single transvection generates a cyclic subgroup of order p
    assert enumerate_elements(MatrixModP(5, 2, ((1, 1, 0, 1),), special=True)).order == 5


def test_dicyclic_has_unique_involution():
    for n in (2, 3, 4, 8):
        G = enumerate_elements(Dicyclic(n))
        assert G.order == 4 * n
        assert order_profile(G)[2] == 1


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        enumerate_elements(Permutation(6, ((1, 0, 2, 3, 4, 5), (1, 2, 3, 4, 5, 0))), budget=100)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("GROUPLAB_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        enumerate_elements(Abelian((4, 4)))


def test_backend_independence_c6():
    perm = enumerate_elements(Permutation(6, ((1, 2, 3, 4, 5, 0),)))
    prod = direct_product(cyclic(2), cyclic(3))
    assert order_profile(perm) == order_profile(prod) == {1: 1, 2: 1, 3: 2, 6: 2}
    assert is_isomorphic(perm, prod)


def test_cayley_table_validation():
    z3 = np.array([[(a + b) % 3 for b in range(3)] for a in range(3)])
    G = enumerate_elements(CayleyTable(z3))
    assert G.order == 3
    bad = z3.copy()
    bad[1, 1] = 0
    with pytest.raises(InvalidBackend):
        CayleyTable(bad)
    # a Latin square that is not associative
    quasi = np.array([[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]])
    with pytest.raises(InvalidBackend):
        CayleyTable(quasi)


@pytest.mark.parametrize("expr", SMALL)
def test_table_is_a_group(expr):
    G = group(expr)
    t = G.table
    assert (t[0] == np.arange(G.order)).all() and (t[:, 0] == np.arange(G.order)).all()
    for a in range(G.order):
        assert np.array_equal(t[t[a]], t[a][t])
        assert t[a, G.inv(a)] == 0


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_random_group_invariants(expr, data):
    G = group(expr)
    x = data.draw(st.integers(0, G.order - 1))
    y = data.draw(st.integers(0, G.order - 1))
    z = data.draw(st.integers(0, G.order - 1))
    assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    assert element_order(G, G.inv(x)) == element_order(G, x)
    assert G.order % element_order(G, x) == 0
    assert element_order(G, G.conj(y, x)) == element_order(G, x)
    assert G.power(x, element_order(G, x)) == 0
    c = G.commutator(x, y)
    assert G.mul(G.mul(y, x), c) == G.mul(x, y)


@given(st.integers(1, 10**6))
def test_factorize_roundtrip(n):
    f = factorize(n)
    prod = 1
    for p, a in f.items():
        prod *= p**a
        assert p_part(n, p) == p**a
    assert prod == n
    assert is_square_free(n) == all(a == 1 for a in f.values())
    assert is_almost_square_free(n) == (sum(a > 1 for a in f.values()) <= 1)


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]

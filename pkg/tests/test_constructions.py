import pytest

from conftest import group
from grouplab.constructions import dihedral, quaternion, realize, semidirect
from grouplab.core import order_profile
from grouplab.errors import BudgetExceeded, InvalidAction
from grouplab.structure import is_isomorphic


@pytest.mark.parametrize(
    "expr,order",
    [("C12", 12), ("D7", 14), ("Q32", 32), ("S4", 24), ("A5", 60), ("E(2,4)", 16), ("Heis(5)", 125),
     ("SL2(3)", 24), ("GL2(3)", 48), ("C4 x A5", 240), ("sd(C25, C5, [[6]])", 125), ("Q8 x Q8", 64)],
)
def test_orders(expr, order):
    assert group(expr).order == order


def test_group_name_is_canonical_text():
    assert realize("C4   x S3").name == "C4 x S3"


def test_semidirect_conjugation_follows_matrix_columns():
    G = group("sd(C4 x C2, C4, [[1,0],[1,1]])")
    a, b, x = G.index((1, 0, 0)), G.index((0, 1, 0)), G.index((0, 0, 1))
    assert G.conj(x, a) == G.mul(a, b)
    assert G.conj(x, b) == b
    assert G.order == 32


def test_semidirect_cyclic_action():
    G = group("sd(C9, C3, [[4]])")
    a, x = G.index((1, 0)), G.index((0, 1))
    assert G.conj(x, a) == G.power(a, 4)


def test_semidirect_rejects_non_automorphisms():
    with pytest.raises(InvalidAction):
        semidirect((4, 2), 4, [[1, 1], [0, 1]])  # would send b to an element of order 4
    with pytest.raises(InvalidAction):
        semidirect((6,), 2, [[2]])
    with pytest.raises(InvalidAction):
        semidirect((7,), 2, [[2]])  # 2 has order 3 mod 7


def test_dicyclic_matches_presentation():
    Q = quaternion(16)
    assert order_profile(Q)[2] == 1
    assert is_isomorphic(group("sd(C3, C4, [[2]])"), realize("sd(C3, C4, [[-1]])"))
    assert not is_isomorphic(Q, dihedral(8))


def test_budget_errors():
    with pytest.raises(BudgetExceeded):
        realize("S7", budget=1000)
    with pytest.raises(BudgetExceeded):
        realize("SL2(31)", budget=1000)


def test_standard_isomorphisms():
    assert is_isomorphic(group("SL2(2)"), group("S3"))
    assert is_isomorphic(group("D3"), group("S3"))
    assert is_isomorphic(group("C2 x C3"), group("C6"))
    assert not is_isomorphic(group("C2 x C2"), group("C4"))
    assert not is_isomorphic(group("Q8"), group("D4"))

import pytest

from conftest import group
from grouplab.errors import BudgetExceeded
from grouplab.lattice import (
    all_subgroups,
    is_lagrangian,
    is_supersolvable,
    lattice_json,
    maximal_s_members,
    s_collection,
    sip_by_definition,
    ssip_by_definition,
)
from grouplab.properties import is_sip, is_ssip, prime_structure


@pytest.mark.parametrize(
    "expr,count,s_count",
    [("Q8", 6, 4), ("C12", 6, 1), ("S3", 6, 0), ("C4 x S3", 26, 1), ("S4", 30, 0), ("A5", 59, 0),
     ("SL2(5)", 76, 0), ("GL2(3)", 55, 0), ("D4", 10, 0), ("C2 x C2", 5, 0)],
)
def test_subgroup_counts(expr, count, s_count):
    L = all_subgroups(group(expr))
    assert len(L) == count
    assert len(L.s_collection) == s_count


def test_s_collection_minimum_is_pg():
    for expr in ("Q8", "C12", "C4 x S3", "Q16", "sd(C9, C3, [[4]])", "C27"):
        G = group(expr)
        _, m = s_collection(all_subgroups(G))
        assert m.members == prime_structure(G).pg.members


def test_unique_s_member_of_c4xs3_has_order_12():
    L = all_subgroups(group("C4 x S3"))
    assert [H.order for H in L.s_members] == [12]


def test_maximal_s_members_are_maximal():
    for expr in ("Q8", "Q16", "C8", "sd(C25, C5, [[6]])"):
        L = all_subgroups(group(expr))
        assert set(maximal_s_members(L)) <= L.maximal


def test_supersolvable_and_lagrangian():
    assert is_supersolvable(all_subgroups(group("S3")))
    assert not is_supersolvable(all_subgroups(group("A4")))
    assert not is_lagrangian(all_subgroups(group("A4")))
    assert is_lagrangian(all_subgroups(group("S4")))
    assert not is_lagrangian(all_subgroups(group("sd(C2 x C2, C9, [[0,1],[1,1]])")))


def test_definitions_agree_with_shortcuts():
    for expr in ("Q8", "D5", "C30", "C36", "Heis(3)", "SL2(3)", "sd(C5, C4, [[2]])"):
        G = group(expr)
        L = all_subgroups(G)
        assert sip_by_definition(L) == is_sip(G)
        assert ssip_by_definition(L) == is_ssip(G)


def test_budget():
    with pytest.raises(BudgetExceeded):
        all_subgroups(group("S4"), budget=10)


def test_json_dump():
    data = lattice_json(all_subgroups(group("C12")), "C12")
    assert data["subgroup_count"] == 6 and data["s_count"] == 1 and data["s_minimum_order"] == 6
    assert [s["order"] for s in data["subgroups"] if s["in_s"]] == [6]
    assert data["ssip"] and data["supersolvable"]

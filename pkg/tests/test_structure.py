import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import group
from grouplab.constructions import dihedral
from grouplab.errors import NotNormal, PrimeDoesNotDivide, TrivialGroup
from grouplab.numtheory import factorize, p_part
from grouplab.structure import (
    center,
    centralizer,
    commutator_subgroup,
    derived_series,
    generated_subgroup,
    intersection,
    is_isomorphic,
    is_normal,
    is_simple,
    join,
    lower_central_series,
    normal_closure,
    quotient,
    quotient_map,
    subgroup_as_group,
    subgroup_from_members,
    sylow,
)


def test_derived_series_s4():
    assert derived_series(group("S4")).orders == [24, 12, 4, 1]
    assert derived_series(group("A5")).orders == [60]
    assert not derived_series(group("A5")).terminated


def test_lower_central_series():
    assert lower_central_series(group("Q8")).orders == [8, 2, 1]
    lcs = lower_central_series(group("S3"))
    assert lcs.orders == [6, 3] and not lcs.terminated


def test_centers():
    assert center(group("Q8")).order == 2
    assert center(group("S4")).order == 1
    assert center(group("Heis(3)")).order == 3
    assert center(group("sd(C2 x C2, C9, [[0,1],[1,1]])")).order == 3
    assert center(group("SL2(5)")).order == 2


def test_commutator_subgroups():
    assert commutator_subgroup(group("S4")).order == 12
    assert commutator_subgroup(group("C12")).order == 1
    assert commutator_subgroup(group("SL2(5)")).order == 120


def test_quotient_q8_by_center_is_klein():
    G = group("Q8")
    Q = quotient(G, center(G))
    assert is_isomorphic(Q, group("C2 x C2"))


def test_quotient_of_32_2_is_d4():
    G = group("sd(C4 x C2, C4, [[1,0],[1,1]])")
    # the Klein subgroup <a^2, x^2>
    N = generated_subgroup(G, [G.index((2, 0, 0)), G.index((0, 0, 2))])
    assert N.order == 4 and is_normal(G, N)
    assert is_isomorphic(quotient(G, N), dihedral(4))


def test_quotient_rejects_non_normal():
    G = group("S3")
    H = generated_subgroup(G, [int(np.flatnonzero(G.orders == 2)[0])])
    with pytest.raises(NotNormal):
        quotient(G, H)


@pytest.mark.parametrize("expr", ["S4", "A4", "Q16", "sd(C4 x C2, C4, [[1,0],[1,1]])", "SL2(3)"])
def test_projection_is_homomorphism(expr):
    G = group(expr)
    for N in (center(G), commutator_subgroup(G)):
        qm = quotient_map(G, N)
        proj, Q = qm.projection, qm.group
        lhs = proj[G.table]
        rhs = Q.table[proj[:, None], proj[None, :]]
        assert np.array_equal(lhs, rhs)


def test_sylow_subgroups():
    G = group("S4")
    assert is_isomorphic(subgroup_as_group(G, sylow(G, 2)), dihedral(4))
    S = group("SL2(5)")
    assert is_isomorphic(subgroup_as_group(S, sylow(S, 2)), group("Q8"))
    for expr in ("A5", "GL2(3)", "C4 x S3", "Heis(3)"):
        H = group(expr)
        for p in factorize(H.order):
            assert sylow(H, p).order == p_part(H.order, p)
    with pytest.raises(PrimeDoesNotDivide):
        sylow(group("S3"), 5)


def test_simplicity():
    assert is_simple(group("A5"))
    assert is_simple(group("C7"))
    assert not is_simple(group("A4"))
    with pytest.raises(TrivialGroup):
        is_simple(group("C1"))


def test_lattice_operations():
    G = group("C12")
    A = generated_subgroup(G, [G.power(1, 4)])
    B = generated_subgroup(G, [G.power(1, 6)])
    assert join(G, A, B).order == 6
    assert intersection(G, A, B).order == 1
    assert centralizer(G, [1]).order == 12
    S = group("S4")
    t = int(np.flatnonzero(S.orders == 3)[0])
    assert normal_closure(S, [t]).order == 12
    with pytest.raises(ValueError):
        subgroup_from_members(G, [0, 1])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["S4", "Q16", "A5", "Heis(3)", "GL2(3)"]), st.lists(st.integers(0, 10**6), max_size=3))
def test_generated_subgroups_obey_lagrange(expr, seeds):
    G = group(expr)
    H = generated_subgroup(G, [s % G.order for s in seeds])
    assert G.order % H.order == 0
    members = np.array(H.members)
    assert np.isin(G.table[np.ix_(members, members)], members).all()

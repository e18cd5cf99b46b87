import pytest
from hypothesis import given
from hypothesis import strategies as st

from parser_corpus import MALFORMED, ROUNDTRIP
from grouplab.dsl import Named, Product, Semidirect, cyclic_factors, format_spec, parse_group_expr
from grouplab.errors import ParameterRangeError, ParseError


@pytest.mark.parametrize("text", ROUNDTRIP)
def test_roundtrip(text):
    spec = parse_group_expr(text)
    printed = format_spec(spec)
    assert parse_group_expr(printed) == spec
    assert format_spec(parse_group_expr(printed)) == printed


@pytest.mark.parametrize("text,pos", MALFORMED)
def test_malformed_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_group_expr(text)
    assert info.value.position == pos
    assert info.value.pointer().splitlines()[-1] == " " * pos + "^"


def test_product_is_left_associative():
    assert parse_group_expr("C2 x C3 x C5") == Product(Product(Named("C", (2,)), Named("C", (3,))), Named("C", (5,)))
    assert format_spec(parse_group_expr("C2 x (C3 x C5)")) == "C2 x (C3 x C5)"


def test_semidirect_shape():
    spec = parse_group_expr("sd(C4 x C2, C4, [[1,0],[1,1]])")
    assert isinstance(spec, Semidirect)
    assert cyclic_factors(spec.normal) == (4, 2)
    assert spec.matrix == ((1, 0), (1, 1))
    assert cyclic_factors(parse_group_expr("E(3,2) x C5")) == (3, 3, 5)


def test_range_errors_are_parse_errors():
    for bad in ("D2", "Q8 x Q24", "SL2(37)", "GL2(4)", "sd(C9, C3 x C3, [[4]])"):
        with pytest.raises(ParameterRangeError):
            parse_group_expr(bad)


names = st.one_of(
    st.builds(lambda n: Named("C", (n,)), st.integers(1, 50)),
    st.builds(lambda n: Named("D", (n,)), st.integers(3, 20)),
    st.builds(lambda k: Named("Q", (2**k,)), st.integers(3, 7)),
    st.builds(lambda f, n: Named(f, (n,)), st.sampled_from("SA"), st.integers(1, 6)),
    st.builds(lambda p, k: Named("E", (p, k)), st.sampled_from([2, 3, 5]), st.integers(1, 4)),
    st.builds(lambda p: Named("Heis", (p,)), st.sampled_from([3, 5, 7])),
    st.builds(lambda f, p: Named(f, (p,)), st.sampled_from(["SL2", "GL2"]), st.sampled_from([2, 3, 5, 31])),
)


@st.composite
def semidirects(draw):
    moduli = draw(st.lists(st.integers(2, 9), min_size=1, max_size=3))
    normal = Named("C", (moduli[0],))
    for m in moduli[1:]:
        normal = Product(normal, Named("C", (m,)))
    r = len(moduli)
    row = st.tuples(*[st.integers(-3, 9)] * r)
    matrix = tuple(draw(row) for _ in range(r))
    return Semidirect(normal, Named("C", (draw(st.integers(1, 12)),)), matrix)


specs = st.recursive(st.one_of(names, semidirects()), lambda inner: st.builds(Product, inner, inner), max_leaves=6)


@given(specs)
def test_roundtrip_random_ast(spec):
    assert parse_group_expr(format_spec(spec)) == spec

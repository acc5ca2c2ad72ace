import pytest

from monlc import Graph, MonomialIdeal, ParseError, RelativePair, RingContext, SimplicialComplex
from monlc.textio import (format_complex, format_graph, format_ideal, parse_complex, parse_graph,
                          parse_ideal, parse_input, parse_pair)

from conftest import DATA


def test_ideal_with_ring_range():
    I = parse_ideal("ring x1..x3; ideal x1^2*x2, x2*x3^3;")
    assert I.ring == RingContext.standard(3)
    assert set(I.gens) == {(2, 1, 0), (0, 1, 3)}


def test_ideal_ring_list_and_inference():
    I = parse_ideal("ring a, b, c; ideal a*b, c;")
    assert I.ring.names == ("a", "b", "c") and len(I.gens) == 2
    J = parse_ideal("ideal x1*x4;")
    assert J.n == 4 and J.gens == ((1, 0, 0, 1),)


def test_zero_and_unit_ideals():
    assert parse_ideal("ring x1..x2; ideal 0;").is_zero()
    with pytest.warns(RuntimeWarning):
        assert parse_ideal("ring x1..x2; ideal x1^0;").is_unit()
    with pytest.warns(RuntimeWarning):
        assert parse_ideal("ring x1..x2; ideal 1, x2;").is_unit()


def test_comments_and_whitespace():
    I = parse_ideal((DATA / "c5_ideal.txt").read_text())
    assert len(I.gens) == 5 and I.n == 5


@pytest.mark.parametrize("text, line, col", [
    ("ring x1..x3;\nideal x1*x4;", 2, 10),
    ("ring x1..x3; ideal x1*;", 1, 23),
    ("ring x1..x3; ideal x1 $ x2;", 1, 23),
    ("ring x1..x3;\n\n  ideal x1^;", 3, 12),
    ("ideal a*b;", 1, 7),
])
def test_parse_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert (info.value.line, info.value.column) == (line, col)
    assert f"line {line}" in str(info.value)


def test_complex_and_pair():
    D = parse_complex((DATA / "c5_complex.txt").read_text())
    assert D.f_vector() == [1, 5, 5]
    P = parse_pair((DATA / "pair.txt").read_text())
    assert isinstance(P, RelativePair)
    assert P.small == SimplicialComplex.from_faces(3, [(1,)])
    with pytest.raises(ParseError):
        parse_complex("complex on 3: {1,4};")
    with pytest.raises(ParseError):
        parse_complex("complex on 3: {1,1};")
    with pytest.raises(ParseError):
        parse_pair("big: complex on 2: {1}; small: complex on 2: {2};")


def test_void_and_empty_complex_text():
    assert parse_complex("complex on 3: ;").is_void()
    assert parse_complex("complex on 3: {};").is_empty()


def test_graph():
    G = parse_graph((DATA / "tri_path.txt").read_text())
    assert G == Graph(5, [(1, 2), (1, 3), (2, 3), (1, 4), (4, 5)])
    with pytest.raises(ParseError):
        parse_graph("graph on 3: 1-1;")
    with pytest.raises(ParseError):
        parse_graph("graph on 3: 1-4;")


def test_dispatch():
    assert isinstance(parse_input("ring x1; ideal x1;"), MonomialIdeal)
    assert isinstance(parse_input("complex on 2: {1};"), SimplicialComplex)
    assert isinstance(parse_input("graph on 2: 1-2;"), Graph)
    with pytest.raises(ParseError):
        parse_input("matrix 2;")


def test_round_trips():
    I = parse_ideal("ring x1..x3; ideal x1^2*x2, x2*x3^3;")
    assert parse_ideal(format_ideal(I)) == I
    D = parse_complex("complex on 4: {1,2,3},{3,4};")
    assert parse_complex(format_complex(D)) == D
    G = Graph.cycle(5)
    assert parse_graph(format_graph(G)) == G

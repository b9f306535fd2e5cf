import pytest

from ifvs import Graph, ParseError, format_edgelist, load_graph, parse_dimacs, parse_edgelist
from ifvs.io import detect_format

EDGELIST = """4 4
0 1
1 2
2 3
3 0
"""

DIMACS = """c a square
p edge 4 4
e 1 2
e 2 3
e 3 4
e 4 1
"""


def test_parse_edgelist():
    g = parse_edgelist(EDGELIST)
    assert g.n == 4 and g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_parse_dimacs_matches_edgelist():
    assert parse_dimacs(DIMACS) == parse_edgelist(EDGELIST)


def test_autodetect():
    assert detect_format(EDGELIST) == "edgelist"
    assert detect_format(DIMACS) == "dimacs"
    assert load_graph(DIMACS) == load_graph(EDGELIST)


def test_parse_errors_name_the_line():
    with pytest.raises(ParseError) as err:
        parse_edgelist("2 1\n0 x\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_edgelist("2 2\n0 1\n")
    assert "declared 2" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_dimacs("p edge 3 1\ne 1 4\n")
    assert "line 2" in str(err.value)
    with pytest.raises(ParseError):
        parse_dimacs("e 1 2\n")  # edge before problem line
    with pytest.raises(ParseError):
        load_graph("")


def test_edgelist_roundtrip():
    g = Graph(5, [(0, 4), (1, 2), (2, 3)])
    assert parse_edgelist(format_edgelist(g)) == g


def test_self_loop_rejected_with_line():
    with pytest.raises(ParseError) as err:
        parse_edgelist("3 1\n1 1\n")
    assert "line 2" in str(err.value)

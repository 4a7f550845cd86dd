import networkx as nx
import pytest
from hypothesis import given

from primegraphs.errors import InputError, ParseError
from primegraphs.formats import (emit_adjlist, emit_graph6, iter_graph6_lines, parse_adjlist, parse_graph6,
                                 read_graphs, to_dot)
from primegraphs.graph import Graph, complete_graph, empty_graph, path_graph

from .conftest import graphs


def test_small_graph6_strings():
    assert parse_graph6("A_") == complete_graph(2)
    assert emit_graph6(empty_graph(0)) == "?"
    assert parse_graph6("?") == empty_graph(0)
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


@given(graphs(max_order=12))
def test_graph6_agrees_with_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    ours = emit_graph6(g)
    theirs = nx.to_graph6_bytes(G, header=False).decode().strip()
    assert ours == theirs
    assert parse_graph6(ours) == g


def test_long_length_header_round_trip():
    g = path_graph(70)
    s = emit_graph6(g)
    assert s[0] == "~"
    assert parse_graph6(s) == g


@pytest.mark.parametrize("text, offset", [
    ("A ", 1),          # byte below 63
    ("B", 1),           # truncated body
    ("A`", 1),          # nonzero padding bit
    ("~?", 2),          # truncated long header
    ("", 0),
])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert "byte offset" in str(info.value)


def test_adjlist_round_trip_and_errors():
    g = path_graph(5)
    assert parse_adjlist(emit_adjlist(g)) == g
    assert parse_adjlist("c comment\np 3 1\n0 2\n") == Graph.from_edges(3, [(0, 2)])
    for bad in ("0 1\n", "p 3 2\n0 1\n", "p 3 1\n0 x\n", "p 3 2\n0 1\n1 0\n", "p 2 1\n0 5\n"):
        with pytest.raises(InputError):
            parse_adjlist(bad)


def test_iter_lines_reports_bad_lines_and_continues():
    out = list(iter_graph6_lines(["A_", "bad line", "", "B?"]))
    assert [n for n, _ in out] == [1, 2, 4]
    assert isinstance(out[1][1], InputError)
    assert out[2][1] == empty_graph(3)


def test_read_graphs_from_file(tmp_path):
    p = tmp_path / "gs.g6"
    p.write_text("A_\nBw\n")
    assert read_graphs(p) == [complete_graph(2), complete_graph(3)]


def test_dot_output_mentions_every_edge():
    dot = to_dot(path_graph(3), "P", highlight=[1])
    assert dot.startswith("graph P") and "0 -- 1" in dot and "1 -- 2" in dot

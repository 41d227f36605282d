import pytest
from hypothesis import given

from spectral_ham.graph import Graph, build_complete, build_path
from spectral_ham.io import (
    GraphFormatError,
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)

from conftest import graphs


def test_bw_is_triangle():
    assert parse_graph6("Bw") == build_complete(3)
    assert write_graph6(build_complete(3)) == "Bw"


@given(graphs(min_n=0, max_n=20))
def test_graph6_round_trip(G):
    s = write_graph6(G)
    assert parse_graph6(s) == G
    assert write_graph6(parse_graph6(s)) == s


def test_graph6_long_form():
    G = Graph(70, [(i, i + 1) for i in range(69)])
    s = write_graph6(G)
    assert s.startswith("~")
    assert parse_graph6(s) == G


def test_graph6_header_accepted():
    assert parse_graph6(write_graph6(build_complete(4), header=True)) == build_complete(4)


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x20", "Bx"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphFormatError):
        parse_graph6(bad)


def test_iter_graph6_reports_line_number():
    with pytest.raises(GraphFormatError) as info:
        list(iter_graph6("Bw\n\nBww\n"))
    assert info.value.line == 3


def test_edge_list_path():
    assert parse_edge_list("0 1\n1 2") == build_path(3)


def test_edge_list_round_trip_keeps_isolated_vertices():
    G = Graph(5, [(0, 1)])
    assert parse_edge_list(write_edge_list(G)) == G


@pytest.mark.parametrize("text", ["0 1\n1 0\n", "2 2\n", "0 1 2\n", "a b\n"])
def test_edge_list_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)

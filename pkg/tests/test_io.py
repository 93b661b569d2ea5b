"""Graph file formats: round trips and position-bearing rejections."""

import pytest

from cyclink.families import petersen, q3
from cyclink.io import (
    GraphFormatError,
    parse_edge_list,
    parse_graph,
    parse_graph_json,
    write_edge_list,
    write_graph_json,
)


def test_edge_list_round_trip():
    g = petersen()
    assert parse_edge_list(write_edge_list(g)) == g


def test_json_round_trip_keeps_labels():
    g = q3()
    h = parse_graph_json(write_graph_json(g))
    assert h == g
    assert h.labels == g.labels


def test_sniffing():
    g = petersen()
    assert parse_graph(write_edge_list(g)) == g
    assert parse_graph(write_graph_json(g)) == g


def test_edge_list_rejects_loop_with_line_number():
    text = "3 2\n0 1\n2 2\n"
    with pytest.raises(GraphFormatError, match="line 3.*self-loop"):
        parse_edge_list(text)


def test_edge_list_rejects_duplicate_with_line_number():
    text = "3 3\n0 1\n1 2\n1 0\n"
    with pytest.raises(GraphFormatError, match="line 4.*duplicate"):
        parse_edge_list(text)


def test_edge_list_count_mismatch():
    with pytest.raises(GraphFormatError, match="announced 5"):
        parse_edge_list("4 5\n0 1\n")


def test_edge_list_bad_header():
    with pytest.raises(GraphFormatError, match="line 1"):
        parse_edge_list("nope\n0 1\n")


def test_json_rejects_duplicate_with_index():
    with pytest.raises(GraphFormatError, match=r"edges\[2\].*duplicate"):
        parse_graph_json('{"n": 3, "edges": [[0,1],[1,2],[1,0]]}')


def test_json_rejects_loop_with_index():
    with pytest.raises(GraphFormatError, match=r"edges\[0\].*self-loop"):
        parse_graph_json('{"n": 3, "edges": [[1,1]]}')


def test_json_rejects_bad_label_key():
    with pytest.raises(GraphFormatError, match="labels"):
        parse_graph_json('{"n": 2, "edges": [[0,1]], "labels": {"7": "x"}}')

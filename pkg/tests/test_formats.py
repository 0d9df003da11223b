import json
import random

import pytest
from hypothesis import given, settings

from oracles import random_graph
from ramsey_abbott.errors import GraphFormatError, GraphValidationError
from ramsey_abbott.formats import FORMATS, decode, encode, read_graph, write_graph
from ramsey_abbott.graph import Graph
from test_graph import graphs


def test_bits_of_k3():
    assert encode(Graph.complete(3), "bits") == b"3\n111\n"
    assert encode(Graph.complete(3), "adjacency-bits") == b"3\n111\n"


def test_bits_of_empty_3():
    assert encode(Graph.empty(3), "bits") == b"3\n000\n"


def test_bits_single_vertex():
    assert encode(Graph.empty(1)) == b"1\n\n"
    assert decode(b"1\n\n") == Graph.empty(1)


def test_dimacs_layout():
    out = encode(Graph.cycle(4), "dimacs").decode()
    assert out.splitlines() == ["p edge 4 4", "e 1 2", "e 1 4", "e 2 3", "e 3 4"]


def test_json_layout():
    doc = json.loads(encode(Graph.cycle(4), "json"))
    assert doc == {"order": 4, "bits": "101101"}


def test_round_trip_seeded_20_vertex():
    g = random_graph(random.Random(20), 20)
    for fmt in FORMATS:
        assert decode(encode(g, fmt), fmt) == g


@settings(max_examples=150)
@given(graphs(max_order=24))
def test_round_trip_all_formats(g):
    for fmt in FORMATS:
        assert decode(encode(g, fmt), fmt) == g


def test_dimacs_accepts_comments_and_col():
    text = b"c hello\np col 3 1\nc mid\ne 3 1\n"
    assert decode(text, "dimacs") == Graph.from_edges(3, [(0, 2)])


def test_json_matrix_input():
    doc = {"matrix": [[0, 1, 0], [1, 0, 1], [0, 1, 0]]}
    assert decode(json.dumps(doc).encode(), "json").edges() == [(0, 1), (1, 2)]


def test_json_asymmetric_matrix_rejected():
    doc = {"matrix": [[0, 1], [0, 0]]}
    with pytest.raises(GraphValidationError):
        decode(json.dumps(doc).encode(), "json")


@pytest.mark.parametrize(
    "data, fmt, offset",
    [
        (b"3\n11x\n", "bits", 4),
        (b"3\n11\n", "bits", 4),
        (b"abc\n000\n", "bits", 0),
        (b"3", "bits", 1),
        (b"p edge 3 1\ne 1 4\n", "dimacs", 11),
        (b"p edge 3 2\ne 1 2\n", "dimacs", 17),
        (b"e 1 2\n", "dimacs", 0),
        (b"p edge 3 0\nq\n", "dimacs", 11),
        (b'{"order": 3, ', "json", 13),
    ],
)
def test_malformed_input_reports_offset(data, fmt, offset):
    with pytest.raises(GraphFormatError) as info:
        decode(data, fmt)
    assert info.value.offset == offset
    assert f"byte {offset}" in str(info.value)


def test_json_bad_bits_rejected():
    with pytest.raises(GraphValidationError):
        decode(b'{"order": 3, "bits": "01"}', "json")
    with pytest.raises(GraphValidationError):
        decode(b'{"order": 0, "bits": ""}', "json")


def test_non_ascii_rejected():
    with pytest.raises(GraphFormatError) as info:
        decode("3\n1é0\n".encode("utf-8"), "bits")
    assert info.value.offset == 3


def test_unknown_format():
    with pytest.raises(ValueError):
        encode(Graph.empty(2), "graphml")


def test_file_helpers(tmp_path):
    g = Graph.paley(13)
    for fmt in FORMATS:
        path = tmp_path / f"g.{fmt}"
        write_graph(g, path, fmt)
        assert read_graph(path, fmt) == g

import json
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polytype.errors import FormatError
from polytype.families import cube, pyramid
from polytype.formats import format_graph, from_edge_json, from_graph6, parse_line, to_edge_json, to_graph6
from polytype.graph import Graph


@st.composite
def graphs(draw, max_p=70):
    p = draw(st.integers(0, max_p))
    pairs = list(combinations(range(p), 2))
    idx = draw(st.sets(st.integers(0, max(0, len(pairs) - 1)), max_size=min(len(pairs), 80)))
    return Graph(p, [pairs[i] for i in idx if pairs])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.p))
    h.add_edges_from(g.edges())
    return h


@given(graphs())
def test_graph6_matches_networkx_encoder(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).strip()
    assert to_graph6(g) == ref


@given(graphs())
def test_graph6_round_trip_and_networkx_decoder(g):
    data = to_graph6(g)
    assert from_graph6(data) == g
    back = nx.from_graph6_bytes(data)
    assert sorted(tuple(sorted(e)) for e in back.edges()) == g.edges()


def test_graph6_known_strings():
    assert from_graph6(">>graph6<<C~") == Graph(4, list(combinations(range(4), 2)))
    assert to_graph6(Graph(0)) == b"?"


@pytest.mark.parametrize("bad", ["", "C~~", "C}\x01", "Bx"])
def test_graph6_rejects_malformed(bad):
    with pytest.raises(FormatError):
        from_graph6(bad)


def test_edge_json_round_trip():
    g = pyramid(5)
    text = to_edge_json(g, name="w5")
    obj = json.loads(text)
    assert obj["name"] == "w5" and obj["p"] == 6
    assert from_edge_json(text) == g


def test_edge_json_remaps_ids():
    g = from_edge_json('[["a","b"],["b","c"],["c","a"]]')
    assert g.p == 3 and g.q == 3
    h = from_edge_json('{"edges": [[10, 20], [20, 30]]}')
    assert h.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text", [
    '{"edges": [[0, 1], [1, 0]]}',
    '{"edges": [[0, 0]]}',
    '{"edges": [[0]]}',
    '{"nodes": []}',
    "not json",
    '{"p": -1, "edges": []}',
])
def test_edge_json_rejects(text):
    with pytest.raises(FormatError):
        from_edge_json(text)


def test_parse_and_format_dispatch():
    g = cube()
    for fmt in ("graph6", "edge-json"):
        assert parse_line(format_graph(g, fmt), fmt) == g
    with pytest.raises(FormatError):
        parse_line("x", "sparse6")

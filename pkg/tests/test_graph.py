import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_clique_number, naive_independence_number, random_graph
from ramsey_abbott.errors import GraphValidationError
from ramsey_abbott.extremal import max_clique, max_independent_set
from ramsey_abbott.graph import Graph, complement, induced_subgraph, pair_count, pair_index


@st.composite
def graphs(draw, max_order=12):
    n = draw(st.integers(1, max_order))
    bits = draw(st.text("01", min_size=pair_count(n), max_size=pair_count(n)))
    return Graph.from_edge_string(n, bits)


def test_complement_of_complete_is_empty():
    assert complement(Graph.complete(4)) == Graph.empty(4)


def test_complement_single_vertex_fixed():
    g = Graph.empty(1)
    assert complement(g) == g


def test_complement_of_c5_is_a_5_cycle():
    c = complement(Graph.cycle(5))
    # by hand: the complement of 0-1-2-3-4-0 is 0-2-4-1-3-0
    assert sorted(c.edges()) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert c.edge_count() == 5
    assert all(c.degree(v) == 2 for v in range(5))


def test_complement_involution_up_to_64():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(1, 64)
        g = random_graph(rng, n, rng.random())
        c = g.complement()
        c.validate()
        assert c.complement() == g
        for i, j in combinations(range(n), 2):
            assert c.has_edge(i, j) != g.has_edge(i, j)


def test_induced_subgraph_identity():
    g = Graph.paley(13)
    assert induced_subgraph(g, range(13)) == g


def test_induced_subgraph_of_k5():
    assert induced_subgraph(Graph.complete(5), [0, 1, 2]) == Graph.complete(3)


def test_induced_subgraph_of_c5_is_path():
    p = induced_subgraph(Graph.cycle(5), [0, 1, 2])
    assert sorted(p.edges()) == [(0, 1), (1, 2)]


def test_induced_subgraph_nonprefix_relabels():
    g = Graph.cycle(5)
    sub = g.induced_subgraph([1, 3, 4])
    # 3-4 is the only cycle edge among {1, 3, 4}
    assert sub.edges() == [(1, 2)]


def test_induced_subgraph_errors():
    g = Graph.cycle(5)
    with pytest.raises(IndexError):
        g.induced_subgraph([0, 5])
    with pytest.raises(ValueError):
        g.induced_subgraph([])


def test_validation_rejects_bad_rows():
    with pytest.raises(GraphValidationError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(GraphValidationError):
        Graph(2, [0b01, 0b00])  # self-loop
    with pytest.raises(GraphValidationError):
        Graph(2, [0b100, 0])  # bit outside range
    with pytest.raises(GraphValidationError):
        Graph(0, [])
    with pytest.raises(GraphValidationError):
        Graph.from_matrix([[0, 1], [0, 0]])


def test_pair_index_is_lexicographic():
    for n in range(1, 12):
        pairs = list(combinations(range(n), 2))
        assert [pair_index(i, j, n) for i, j in pairs] == list(range(len(pairs)))
        assert all(pair_index(j, i, n) == pair_index(i, j, n) for i, j in pairs)


@settings(max_examples=200)
@given(graphs(max_order=20))
def test_edge_string_round_trip(g):
    s = g.edge_string()
    assert len(s) == pair_count(g.order)
    assert Graph.from_edge_string(g.order, s) == g
    assert [s[pair_index(i, j, g.order)] == "1" for i, j in combinations(range(g.order), 2)] == \
        [g.has_edge(i, j) for i, j in combinations(range(g.order), 2)]


@settings(max_examples=100)
@given(graphs(max_order=16))
def test_matrix_round_trip(g):
    m = g.to_matrix()
    assert all(m[i][i] == 0 for i in range(g.order))
    assert Graph.from_matrix(m) == g


def test_induced_subgraph_cannot_raise_omega_or_alpha():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.random())
        s = sorted(rng.sample(range(n), rng.randint(1, n)))
        sub = g.induced_subgraph(s)
        assert max_clique(sub).size <= max_clique(g).size
        assert max_independent_set(sub).size <= max_independent_set(g).size
        assert naive_clique_number(sub) <= naive_clique_number(g)
        assert naive_independence_number(sub) <= naive_independence_number(g)


def test_paley_17_basic_shape():
    g = Graph.paley(17)
    assert g.edge_count() == 17 * 8 // 2
    assert all(g.degree(v) == 8 for v in range(17))
    with pytest.raises(ValueError):
        Graph.paley(7)


def test_graphs_are_hashable_values():
    a = Graph.cycle(6)
    b = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    assert a == b and hash(a) == hash(b)
    assert len({a, b, a.complement()}) == 2

"""Graph type, constructors, and codecs, pinned against networkx where it counts."""

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xorkron import (
    Graph,
    disjoint_union,
    format_edge_list,
    graph6_decode,
    graph6_encode,
    new_graph,
    parse_edge_list,
    standard_graph,
)

from .helpers import dense_rows, random_graph


def test_new_graph_examples():
    p4 = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert p4.edge_count == 3
    assert new_graph(3, []).edge_count == 0
    k2 = new_graph(2, [(0, 1), (1, 0)])
    assert k2.edge_count == 1


def test_new_graph_rejects_bad_pairs():
    with pytest.raises(ValueError):
        new_graph(3, [(0, 3)])
    with pytest.raises(ValueError):
        new_graph(3, [(1, 1)])


def test_graph_ctor_validates():
    with pytest.raises(ValueError):
        Graph(2, [0])
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])  # not symmetric
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b10])  # diagonal set
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0])  # bit out of range


def test_standard_graphs():
    assert standard_graph("complete", 4).edge_count == 6
    assert standard_graph("path", 4).edge_count == 3
    assert standard_graph("cycle", 4).edge_count == 4
    assert standard_graph("edgeless", 5).edge_count == 0
    assert standard_graph("path", 1).edge_count == 0
    with pytest.raises(ValueError):
        standard_graph("cycle", 2)
    with pytest.raises(ValueError):
        standard_graph("wheel", 4)
    with pytest.raises(ValueError):
        standard_graph("complete", 0)


def test_disjoint_union():
    k2 = standard_graph("complete", 2)
    two = disjoint_union([k2, k2])
    assert two.n == 4 and two.edge_count == 2
    assert sorted(two.edges()) == [(0, 1), (2, 3)]
    mix = disjoint_union([standard_graph("complete", 3), standard_graph("edgeless", 2)])
    assert mix.n == 5 and mix.edge_count == 3
    assert disjoint_union([]).n == 0


def test_union_edge_count_is_sum():
    rng = random.Random(11)
    parts = [random_graph(rng, rng.randrange(1, 6)) for _ in range(5)]
    assert disjoint_union(parts).edge_count == sum(g.edge_count for g in parts)


def test_components_and_induced():
    g = disjoint_union([standard_graph("path", 3), standard_graph("complete", 2)])
    comps = g.components()
    assert comps == [[0, 1, 2], [3, 4]]
    assert g.induced(comps[0]) == standard_graph("path", 3)
    assert g.induced(comps[1]) == standard_graph("complete", 2)


def test_relabel_roundtrip():
    rng = random.Random(3)
    g = random_graph(rng, 7)
    perm = list(range(7))
    rng.shuffle(perm)
    inverse = [0] * 7
    for v, t in enumerate(perm):
        inverse[t] = v
    assert g.relabel(perm).relabel(inverse) == g
    with pytest.raises(ValueError):
        g.relabel([0] * 7)


def test_degrees():
    p4 = standard_graph("path", 4)
    assert p4.degree(0) == 1 and p4.degree(1) == 2
    assert p4.degree_sequence() == (2, 2, 1, 1)


def test_graph6_pinned_strings():
    assert graph6_encode(standard_graph("complete", 2)) == "A_"
    assert graph6_encode(standard_graph("complete", 4)) == "C~"
    assert graph6_encode(standard_graph("edgeless", 1)) == "@"
    assert graph6_decode("A_") == standard_graph("complete", 2)
    assert graph6_decode(">>graph6<<C~") == standard_graph("complete", 4)


def test_graph6_matches_networkx_reference():
    graphs = [
        standard_graph("complete", 2),
        standard_graph("complete", 4),
        standard_graph("edgeless", 1),
        standard_graph("path", 4),
        standard_graph("cycle", 5),
    ]
    rng = random.Random(19)
    graphs += [random_graph(rng, rng.randrange(1, 11)) for _ in range(20)]
    for g in graphs:
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(ref, header=False).strip().decode("ascii")
        assert graph6_encode(g) == expected
        assert graph6_decode(expected) == g


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 12), st.randoms(use_true_random=False))
def test_graph6_roundtrip(n, rnd):
    g = random_graph(rnd, n)
    assert graph6_decode(graph6_encode(g)) == g


def test_graph6_decode_rejects_malformed():
    with pytest.raises(ValueError):
        graph6_decode("")
    with pytest.raises(ValueError):
        graph6_decode("C")  # truncated bit field
    with pytest.raises(ValueError):
        graph6_decode("C~~~")  # trailing data
    with pytest.raises(ValueError):
        graph6_decode("A" + chr(20))  # character below range
    with pytest.raises(ValueError):
        graph6_decode("~??????")  # long form header


def test_edge_list_roundtrip():
    g = new_graph(4, [(0, 2), (0, 3), (1, 2)])
    text = format_edge_list(g)
    assert text == "4\n0 2\n0 3\n1 2\n"
    assert parse_edge_list(text) == g
    assert parse_edge_list("3\n") == standard_graph("edgeless", 3)


def test_edge_list_rejects_malformed():
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("x\n0 1\n")
    with pytest.raises(ValueError):
        parse_edge_list("4\n0 1 2\n")


def test_dense_rows_helper_agrees():
    g = new_graph(3, [(0, 1), (1, 2)])
    assert dense_rows(g) == [[0, 1, 0], [1, 0, 1], [0, 1, 0]]

"""Bitset graph core and graph6/JSON round trips, checked against networkx."""

import io as _io

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from stellate.errors import DomainError, GraphParseError
from stellate.graph import (Graph, all_graphs, bits, canonical_key, clique_number, complement,
                            connected_components, disjoint_union, enumerate_maximal_cliques,
                            enumerate_stable_sets, induced_subgraph, is_bipartite, is_connected,
                            is_isomorphic, to_mask)
from stellate.io import (encode_graph6, graph_from_json, graph_to_json, mask_from_list, parse_graph6,
                         read_graphs, vertex_list)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, c in zip(pairs, chosen) if c])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_bits_and_masks():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert to_mask([0, 3]) == 0b1001
    assert vertex_list(0b101) == [1, 3]
    assert mask_from_list([1, 3]) == 0b101


def test_rejects_loops_and_bad_vertices():
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(DomainError):
        Graph.from_edges(3, [(0, 5)])


@given(graphs())
@settings(max_examples=80, deadline=None)
def test_graph6_round_trip(g):
    text = encode_graph6(g)
    assert parse_graph6(text) == g
    assert nx.from_graph6_bytes(text.encode()).number_of_edges() == g.num_edges


@given(graphs())
@settings(max_examples=50, deadline=None)
def test_json_round_trip(g):
    assert graph_from_json(graph_to_json(g)) == g


def test_graph6_parse_errors_report_offset():
    with pytest.raises(GraphParseError) as exc:
        parse_graph6("D~" + "\x01")
    assert exc.value.offset is not None
    with pytest.raises(GraphParseError):
        parse_graph6("")


def test_read_graphs_detects_format():
    assert [g.n for g in read_graphs(_io.StringIO("Bw\nA_\n\n"))] == [3, 2]
    lines = '{"n": 2, "edges": [[1, 2]]}\n{"n": 3}\n'
    assert [g.num_edges for g in read_graphs(_io.StringIO(lines))] == [1, 0]
    doc = '[{"n": 1}, {"n": 2, "edges": [[2, 1]]}]'
    assert [g.n for g in read_graphs(_io.StringIO(doc))] == [1, 2]


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_structure_matches_networkx(g):
    h = to_nx(g)
    assert is_connected(g) == nx.is_connected(h)
    assert (is_bipartite(g) is not None) == nx.is_bipartite(h)
    assert sorted(sorted(bits(c)) for c in connected_components(g)) == \
        sorted(sorted(c) for c in nx.connected_components(h))
    assert sorted(sorted(bits(c)) for c in enumerate_maximal_cliques(g)) == \
        sorted(sorted(c) for c in nx.find_cliques(h))
    assert clique_number(g) == max(len(c) for c in nx.find_cliques(h))


@given(graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_stable_sets_are_cliques_of_complement(g):
    idx = enumerate_stable_sets(g)
    ours = sorted(idx.sets)
    theirs = sorted([0] + [to_mask(c) for c in nx.enumerate_all_cliques(nx.complement(to_nx(g)))])
    assert ours == theirs
    assert all(idx.position[s] == i for i, s in enumerate(idx.sets))


def test_complement_and_induced_subgraph():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    c = complement(g)
    assert c.num_edges == 3 and c.has_edge(0, 2)
    sub, verts = induced_subgraph(g, 0b1110)
    assert verts == [1, 2, 3] and sub.num_edges == 2


def test_disjoint_union_shifts_second_graph():
    g = disjoint_union(Graph.complete(2), Graph.complete(3))
    assert g.n == 5 and g.num_edges == 4 and not g.has_edge(1, 2)


@given(graphs(max_n=7), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_canonical_key_is_invariant_under_relabeling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabeled(perm)
    assert canonical_key(g) == canonical_key(h)
    assert is_isomorphic(g, h)


def test_all_graphs_counts_match_known_sequences():
    # graphs / connected graphs up to isomorphism
    assert [len(list(all_graphs(n))) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    assert [len(list(all_graphs(n, connected_only=True))) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_all_graphs_are_pairwise_non_isomorphic():
    gs = list(all_graphs(5))
    for a in range(len(gs)):
        for b in range(a + 1, len(gs)):
            assert not nx.is_isomorphic(to_nx(gs[a]), to_nx(gs[b]))


def test_stable_set_cap_raises():
    from stellate.errors import BudgetExceeded
    with pytest.raises(BudgetExceeded):
        enumerate_stable_sets(Graph.empty(10), cap=100)

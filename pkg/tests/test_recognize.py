"""Recognizers: holes, antiholes, odd stretchers, Meyniel, perfect orderings,
even pairs, clique cutsets, generalized split graphs."""

from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from stellate.errors import BudgetExceeded, DomainError
from stellate.families import antihole, complete_multipartite, hole, odd_stretcher, path
from stellate.graph import Graph, all_graphs, bits, enumerate_maximal_cliques, is_connected
from stellate.recognize import (chordless_cycles, clique_cutset_atoms, even_pairs, find_antihole,
                                find_clique_cutset, find_hole, find_odd_stretcher, find_perfect_ordering,
                                has_dominating_stable_set, induced_p4s, induced_paths, is_chordal,
                                is_even_pair, is_generalized_split, is_meyniel, is_perfect,
                                verify_perfect_ordering)

from test_graph import graphs, to_nx


def small_connected(max_n=6):
    for n in range(1, max_n + 1):
        yield from all_graphs(n, connected_only=True)


@given(graphs(max_n=8))
@settings(max_examples=80, deadline=None)
def test_chordless_cycles_match_networkx(g):
    ours = sorted(tuple(sorted(c)) for c in chordless_cycles(g, 4))
    theirs = sorted(tuple(sorted(c)) for c in nx.chordless_cycles(to_nx(g)) if len(c) >= 4)
    assert ours == theirs


def test_holes_and_antiholes():
    assert find_hole(hole(5), "odd").length == 5
    assert find_hole(hole(6), "odd") is None
    assert find_hole(hole(6), "even").length == 6
    assert find_antihole(antihole(7), "odd").in_complement
    assert find_antihole(antihole(6), "even").length == 6
    assert find_hole(Graph.complete(5)) is None
    cert = find_hole(hole(7))
    assert cert.verify(hole(7))


@given(graphs(max_n=8))
@settings(max_examples=60, deadline=None)
def test_chordal_iff_no_cycle_of_length_four_or_more(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))
    assert is_chordal(g) == (next(chordless_cycles(g, 4), None) is None)


def test_odd_stretcher_found_in_every_small_stretcher():
    for s, t, u in [(1, 1, 1), (1, 1, 2), (2, 1, 3), (1, 2, 2)]:
        g = odd_stretcher(s, t, u)
        emb = find_odd_stretcher(g)
        assert emb is not None and emb.verify(g)


def test_no_stretcher_in_holes_or_perfect_graphs():
    assert find_odd_stretcher(hole(6)) is None
    assert find_odd_stretcher(complete_multipartite([2, 2, 2])) is None
    # the prism is the complement of C6
    assert nx.is_isomorphic(to_nx(odd_stretcher(1, 1, 1)), to_nx(antihole(6)))


def test_stretcher_sizes():
    g = odd_stretcher(1, 1, 2)
    assert (g.n, g.num_edges) == (8, 11)
    g = odd_stretcher(1, 1, 1)
    assert (g.n, g.num_edges) == (6, 9)


def _meyniel_brute(g):
    h = to_nx(g)
    for cyc in nx.simple_cycles(h.to_directed()):
        if len(cyc) < 5 or len(cyc) % 2 == 0:
            continue
        on = set(cyc)
        edges = {frozenset((cyc[i], cyc[(i + 1) % len(cyc)])) for i in range(len(cyc))}
        chords = [e for e in h.subgraph(on).edges() if frozenset(e) not in edges]
        if len(chords) < 2:
            return False
    return True


def test_meyniel_matches_definition_for_small_graphs():
    for g in small_connected(6):
        ok, bad = is_meyniel(g)
        assert ok == _meyniel_brute(g), g
        if not ok:
            assert len(bad.cycle) % 2 == 1 and bad.chords <= 1


def test_meyniel_graphs_are_perfect():
    for g in small_connected(6):
        if is_meyniel(g)[0]:
            assert is_perfect(g)[0]


def test_perfect_matches_hole_free_definition():
    for g in small_connected(6):
        clean = find_hole(g, "odd") is None and find_antihole(g, "odd") is None
        assert is_perfect(g)[0] == clean


def _po_brute(g):
    return any(verify_perfect_ordering(g, p)[0] for p in permutations(range(g.n)))


def test_perfect_ordering_matches_exhaustive_search():
    for n in range(1, 6):
        for g in all_graphs(n, connected_only=True):
            order = find_perfect_ordering(g)
            assert (order is not None) == _po_brute(g)
            if order is not None:
                assert verify_perfect_ordering(g, order)[0]


def test_perfect_ordering_examples():
    assert find_perfect_ordering(hole(5)) is None
    assert find_perfect_ordering(hole(4)) is not None
    ok, p4 = verify_perfect_ordering(path(4), [0, 1, 3, 2])
    assert not ok and len(p4) == 4
    with pytest.raises(DomainError):
        verify_perfect_ordering(path(4), [0, 1, 2])
    with pytest.raises(BudgetExceeded):
        find_perfect_ordering(hole(11), cap=9)


def test_induced_p4s_count():
    assert len(induced_p4s(path(4))) == 2
    assert induced_p4s(Graph.complete(4)) == []


def test_even_pairs():
    c4 = hole(4)
    assert is_even_pair(c4, 0, 2)[0]
    ok, odd = is_even_pair(hole(5), 0, 2)
    assert not ok and len(odd) % 2 == 0  # an odd number of edges
    assert is_even_pair(path(3), 0, 2)[0]
    with pytest.raises(DomainError):
        is_even_pair(c4, 0, 1)
    assert sorted(even_pairs(c4)) == [(0, 2), (1, 3)]


@given(graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_induced_paths_match_networkx(g):
    h = to_nx(g)
    for x, y in combinations(range(g.n), 2):
        if g.has_edge(x, y):
            continue
        ours = sorted(tuple(p) for p in induced_paths(g, x, y))
        theirs = sorted(tuple(p) for p in nx.all_simple_paths(h, x, y)
                        if nx.induced_subgraph(h, p).number_of_edges() == len(p) - 1)
        assert ours == theirs


def test_clique_cutset():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    split = find_clique_cutset(g)
    assert split is not None and split.verify(g)
    assert list(bits(split.cutset)) == [2]
    assert find_clique_cutset(hole(5)) is None
    with pytest.raises(DomainError):
        find_clique_cutset(Graph.empty(2))
    atoms = clique_cutset_atoms(g)
    assert sorted(atoms) == [0b00111, 0b11100]


@given(graphs(max_n=7))
@settings(max_examples=40, deadline=None)
def test_atoms_have_no_clique_cutset(g):
    if not is_connected(g):
        return
    from stellate.graph import induced_subgraph
    atoms = clique_cutset_atoms(g)
    assert all(find_clique_cutset(induced_subgraph(g, a)[0]) is None for a in atoms)
    union = 0
    for a in atoms:
        union |= a
    assert union == g.vertex_mask


def test_generalized_split():
    part = is_generalized_split(complete_multipartite([2, 2, 2]))
    assert part is not None and part.verify(complete_multipartite([2, 2, 2]))
    assert is_generalized_split(hole(5)) is None


def test_dominating_stable_set_meets_all_maximal_cliques():
    for g in small_connected(5):
        s = has_dominating_stable_set(g)
        if s is not None:
            assert g.is_stable(s)
            assert all(s & c for c in enumerate_maximal_cliques(g))
    assert has_dominating_stable_set(hole(5)) is None

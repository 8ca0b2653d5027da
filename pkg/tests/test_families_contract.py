"""Named families, random samplers, even-pair contraction and COLOR."""

import pytest

from stellate.contract import (contract_pair, hertz_color, is_even_contractile, is_perfectly_contractile,
                               trace_pairs_are_even)
from stellate.errors import BudgetExceeded, DomainError
from stellate.families import (antihole, complete_multipartite, glue_along_clique, hole, join,
                               odd_stretcher, path, random_family, clique_separable_sample,
                               stretcher_witness_sets, type1)
from stellate.graph import Graph, bits, canonical_key, enumerate_stable_sets, is_bipartite, to_mask
from stellate.recognize import (clique_cutset_atoms, find_perfect_ordering, is_chordal, is_meyniel,
                                verify_perfect_ordering)
from stellate.toric.groebner import pi_image
from stellate.toric.monomials import ExponentVector


def test_stretcher_parameters_are_validated():
    with pytest.raises(DomainError):
        odd_stretcher(0, 1, 1)


@pytest.mark.parametrize("stu", [(1, 1, 1), (1, 1, 2), (2, 1, 3), (2, 2, 2)])
def test_witness_sets_are_stable_and_balanced(stu):
    g = odd_stretcher(*stu)
    idx = enumerate_stable_sets(g)
    sets = stretcher_witness_sets(*stu)
    assert all(g.is_stable(s) for s in sets)
    assert {s.bit_count() for s in sets} == {sum(stu) - 1}
    lhs = ExponentVector.from_vars(idx.position[s] for s in sets[:3])
    rhs = ExponentVector.from_vars(idx.position[s] for s in sets[3:])
    assert lhs != rhs and pi_image(idx, lhs) == pi_image(idx, rhs)


def test_named_graphs():
    assert hole(5).num_edges == 5 and antihole(7).num_edges == 14
    assert path(4).num_edges == 3
    assert join(Graph.empty(2), Graph.empty(2)) == hole(4).relabeled([0, 2, 1, 3]) or \
        canonical_key(join(Graph.empty(2), Graph.empty(2))) == canonical_key(hole(4))
    assert complete_multipartite([1, 1, 1]) == Graph.complete(3)
    with pytest.raises(DomainError):
        hole(2)
    with pytest.raises(DomainError):
        type1(path(3), 2)


def test_glue_along_clique_keeps_first_graph_numbers():
    g = glue_along_clique(Graph.complete(3), path(3), [1, 2], [0, 1])
    assert g.n == 4 and g.has_edge(2, 3) and not g.has_edge(1, 3)
    assert clique_cutset_atoms(g)
    with pytest.raises(DomainError):
        glue_along_clique(path(3), path(3), [0, 2], [0, 1])


@pytest.mark.parametrize("kind,check", [("chordal", is_chordal),
                                        ("bipartite", lambda g: is_bipartite(g) is not None),
                                        ("meyniel", lambda g: is_meyniel(g)[0])])
def test_random_families_are_members_and_seeded(kind, check):
    for seed in range(5):
        g = random_family(kind, 7, seed)
        assert check(g)
        assert g == random_family(kind, 7, seed)


def test_random_comparability_is_perfectly_orderable():
    for seed in range(5):
        g = random_family("comparability", 7, seed)
        order = find_perfect_ordering(g)
        assert order is not None and verify_perfect_ordering(g, order)[0]


def test_clique_separable_sample_is_deterministic():
    assert clique_separable_sample(4) == clique_separable_sample(4)
    assert len(clique_cutset_atoms(clique_separable_sample(4))) >= 2


def test_contract_pair():
    c6 = hole(6)
    h, where = contract_pair(c6, 0, 3)
    assert h.n == 5 and h.num_edges == 6 and where[3] == 0
    bowtie = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    assert canonical_key(h) == canonical_key(bowtie)
    with pytest.raises(DomainError):
        contract_pair(c6, 0, 1)


def test_hertz_small_examples():
    run = hertz_color(path(3), 0)
    assert sorted(bits(run.stable_set)) == [0, 2] and run.num_colors == 2
    run = hertz_color(hole(4), 0)
    assert run.num_colors == 2 and run.stable_set.bit_count() == 2
    run = hertz_color(Graph.complete(4), 2)
    assert run.stable_set == 1 << 2 and len(run.trace) == 0
    assert trace_pairs_are_even(hertz_color(hole(6), 1).trace)


def test_hertz_on_chordal_graphs_uses_omega_colours():
    from stellate.graph import clique_number
    for seed in range(10):
        g = random_family("chordal", 8, seed)
        for v in range(g.n):
            assert hertz_color(g, v).num_colors == clique_number(g)


def test_even_contractile():
    trace = is_even_contractile(hole(4))
    assert trace is not None and len(trace) == 2
    assert is_even_contractile(hole(5)) is None
    with pytest.raises(BudgetExceeded):
        is_even_contractile(hole(10))


def test_perfectly_contractile_examples():
    assert is_perfectly_contractile(hole(6))[0]
    ok, failing = is_perfectly_contractile(hole(5))
    assert not ok and failing == to_mask(range(5))
    assert not is_perfectly_contractile(odd_stretcher(1, 1, 1))[0]
    for seed in range(3):
        assert is_perfectly_contractile(random_family("chordal", 6, seed))[0]

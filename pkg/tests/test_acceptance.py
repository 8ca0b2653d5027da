"""Acceptance gate: each check runs at its stated size and time limit and
prints one PASS/FAIL line.  Run with ``pytest tests/test_acceptance.py -s``
or directly with ``python tests/test_acceptance.py``."""

from __future__ import annotations

import random
import time
from contextlib import contextmanager

import pytest

from stellate.analysis import quadratic_by_decomposition
from stellate.cli import main as cli_main
from stellate.contract import hertz_color, is_perfectly_contractile, trace_pairs_are_even
from stellate.families import (antihole, glue_along_clique, odd_stretcher, random_family,
                               stretcher_witness_sets)
from stellate.graph import (Graph, all_graphs, clique_number, disjoint_union, enumerate_maximal_cliques,
                            enumerate_stable_sets, bits)
from stellate.recognize import (find_antihole, find_hole, find_odd_stretcher, find_perfect_ordering,
                                is_meyniel)
from stellate.toric.fibers import fiber, fiber_components, is_quadratically_generated_oracle
from stellate.toric.groebner import (initial_ideal_profile, is_quadratically_generated,
                                     quadratic_binomials, toric_groebner)
from stellate.toric.monomials import ExponentVector, MonomialOrder
from stellate.toric.perfect_order import greedy_binomial, perfect_order_index

RESULTS: list[str] = []


@contextmanager
def gate(name: str, limit: float):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        within = elapsed < limit
        line = f"[{'PASS' if ok and within else 'FAIL'}] {name} ({elapsed:.2f}s, limit {limit:.0f}s)"
        RESULTS.append(line)
        print(line)
    assert within, f"{name} took {elapsed:.1f}s, over the {limit}s limit"


def quadgen(g: Graph):
    return is_quadratically_generated(enumerate_stable_sets(g))


def connected_meyniel(max_n: int) -> list[Graph]:
    return [g for n in range(1, max_n + 1) for g in all_graphs(n, connected_only=True) if is_meyniel(g)[0]]


def test_odd_stretcher_obstruction():
    with gate("odd stretcher (1,1,1): not quadratic, two-monomial disconnected fiber", 1.0):
        g = odd_stretcher(1, 1, 1)
        idx = enumerate_stable_sets(g)
        res = is_quadratically_generated(idx)
        assert not res.quadratic and res.witness.degree == 3
        w = stretcher_witness_sets(1, 1, 1)
        target = ExponentVector.from_vars(idx.position[s] for s in w[:3])
        f = fiber(idx, target, 3)
        assert len(f) == 2
        assert len(fiber_components(f, quadratic_binomials(idx))) == 2
    with gate("odd stretcher (1,1,2): not quadratic", 60.0):
        res = quadgen(odd_stretcher(1, 1, 2))
        assert not res.quadratic and res.witness.degree >= 3


def test_even_antiholes_not_quadratic():
    for k in (6, 8):
        with gate(f"antihole {k}: not quadratic", 10.0):
            assert not quadgen(antihole(k)).quadratic


def test_odd_antiholes_quadratic_without_quadratic_basis():
    with gate("antiholes 7 and 9 quadratic; 20 sampled orders on antihole 7 give a cubic or higher basis", 60.0):
        assert quadgen(antihole(7)).quadratic
        assert quadgen(antihole(9)).quadratic
        idx = enumerate_stable_sets(antihole(7))
        rng = random.Random(7)
        for _ in range(20):
            gb = toric_groebner(idx, MonomialOrder.random(len(idx), rng))
            assert gb.max_degree >= 3


def test_meyniel_graphs_quadratic():
    with gate("Meyniel graphs (all connected n<=6, 50 random n=7) are quadratic", 600.0):
        graphs = connected_meyniel(6)
        graphs += [random_family("meyniel", 7, seed) for seed in range(50)]
        for g in graphs:
            assert quadgen(g).quadratic, g


def _check_perfect_order_basis(g: Graph):
    order = find_perfect_ordering(g)
    assert order is not None
    idx, mono = perfect_order_index(g, order)
    gb = toric_groebner(idx, mono, verify=True)
    prof = initial_ideal_profile(gb)
    assert prof.quadratic and prof.squarefree
    for b in gb.elements:
        i, j = b.lead.variables()
        k, l = b.tail.variables()
        assert i < j and k <= min(i, j, l)
        assert greedy_binomial(idx, i, j) == b


def test_perfect_order_bases_squarefree_quadratic():
    with gate("perfectly orderable graphs: squarefree quadratic basis of greedy binomials", 900.0):
        count = 0
        for n in range(1, 7):
            for g in all_graphs(n, connected_only=True):
                if find_perfect_ordering(g) is not None:
                    _check_perfect_order_basis(g)
                    count += 1
        for n in (7, 8):
            for seed in range(4):
                for kind in ("chordal", "bipartite", "comparability"):
                    _check_perfect_order_basis(random_family(kind, n, seed))
                    count += 1
        assert count > 100


def test_hertz_color_on_meyniel_graphs():
    with gate("COLOR on Meyniel graphs n<=6, every seed: omega colours, even pairs, dominating stable set", 600.0):
        for g in connected_meyniel(6):
            omega = clique_number(g)
            cliques = enumerate_maximal_cliques(g)
            for seed in range(g.n):
                run = hertz_color(g, seed)
                assert run.num_colors == omega
                assert all(run.coloring[a] != run.coloring[b] for a, b in g.edges())
                assert trace_pairs_are_even(run.trace)
                assert g.is_stable(run.stable_set) and all(run.stable_set & c for c in cliques)


def test_oracle_agrees_with_groebner_test():
    with gate("fiber oracle agrees with the Groebner test on connected graphs n<=5", 600.0):
        for n in range(1, 6):
            for g in all_graphs(n, connected_only=True):
                idx = enumerate_stable_sets(g)
                res = is_quadratically_generated(idx)
                oracle = is_quadratically_generated_oracle(idx, max(res.basis.max_degree, 2))
                assert oracle == res.quadratic, g


def _random_small(rng: random.Random) -> Graph:
    n = rng.randint(2, 6)
    while True:
        g = Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.5])
        if g.num_edges:
            return g


def _random_composite(rng: random.Random, trial: int) -> Graph:
    # resample until the monolithic ideal stays within the default variable budget
    while True:
        h1, h2 = _random_small(rng), _random_small(rng)
        if trial % 2:
            g = disjoint_union(h1, h2)
        else:
            c1 = rng.choice(enumerate_maximal_cliques(h1))
            c2 = rng.choice(enumerate_maximal_cliques(h2))
            k = rng.randint(1, min(c1.bit_count(), c2.bit_count()))
            g = glue_along_clique(h1, h2, list(bits(c1))[:k], list(bits(c2))[:k])
        if len(enumerate_stable_sets(g)) <= 80:
            return g


def test_decomposition_matches_monolithic():
    with gate("100 gluings and disjoint unions: decomposed verdict equals monolithic verdict", 600.0):
        rng = random.Random(2024)
        for trial in range(100):
            g = _random_composite(rng, trial)
            assert quadratic_by_decomposition(g)["quadratic"] == quadgen(g).quadratic


def test_sweeps_find_no_counterexample(capsys):
    with gate("sweep --n=5: exit 0, no counterexample", 120.0):
        assert cli_main(["sweep", "--n=5"]) == 0
    with gate("sweep --n=6: exit 0, no counterexample", 3600.0):
        assert cli_main(["sweep", "--n=6"]) == 0
    capsys.readouterr()


def test_perfectly_contractile_matches_forbidden_structures():
    with gate("perfectly contractile iff no odd hole, antihole or odd stretcher (connected n<=6)", 1800.0):
        for n in range(1, 7):
            for g in all_graphs(n, connected_only=True):
                clean = (find_hole(g, "odd", 5) is None and find_antihole(g, "any") is None
                         and find_odd_stretcher(g) is None)
                assert is_perfectly_contractile(g)[0] == clean, g


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))

"""Squarefree quadratic Groebner bases from a perfect vertex ordering.

Stable sets are sorted lexicographically by incidence vector, reading the
coordinates in the perfect ordering; with the reverse-lex order in which the
first stable set is the cheapest variable, the reduced basis consists of the
binomials ``x_i x_j - x_k x_l`` built by a greedy (first-fit) stable set.
"""

from __future__ import annotations

from typing import Sequence

from ..errors import DomainError, InternalInconsistency
from ..graph import (Graph, StableSetIndex, bits, connected_components, enumerate_maximal_cliques,
                     enumerate_stable_sets, induced_subgraph, to_mask)
from .monomials import Binomial, ExponentVector, MonomialOrder

POLICY = "perfect-order-lex"


def _lex_key(s: int, order: Sequence[int]) -> tuple[int, ...]:
    return tuple(s >> v & 1 for v in order)


def perfect_order_index(g: Graph, order: Sequence[int], cap: int | None = None):
    """``(index, monomial order)`` for a verified perfect ordering.

    Stable sets are sorted descending by lex comparison of their incidence
    vectors, coordinates read in ``order``; the monomial order is reverse
    lex with the first stable set cheapest.
    """
    from ..recognize import verify_perfect_ordering

    ok, p4 = verify_perfect_ordering(g, order)
    if not ok:
        raise DomainError(f"ordering is not perfect: induced P4 {p4}")
    base = enumerate_stable_sets(g) if cap is None else enumerate_stable_sets(g, cap)
    sets = sorted(base.sets, key=lambda s: _lex_key(s, order), reverse=True)
    idx = StableSetIndex(g, sets, POLICY, vertex_order=order)
    return idx, MonomialOrder.default(len(sets))


def greedy_stable_set(g: Graph, order: Sequence[int], support: int) -> int:
    """First-fit stable set of ``g[support]`` scanning vertices in ``order``."""
    out = 0
    for v in order:
        if support >> v & 1 and not g.adj[v] & out:
            out |= 1 << v
    return out


def _require_order(idx: StableSetIndex) -> Sequence[int]:
    if idx.vertex_order is None:
        raise DomainError("index was not built from a perfect ordering")
    return idx.vertex_order


def greedy_binomial(idx: StableSetIndex, i: int, j: int) -> Binomial | None:
    """``x_i x_j - x_k x_l`` with ``S_k`` greedy on ``S_i | S_j``; ``None`` if ``k == i``.

    Checks that ``S_l`` is stable, that ``rho(S_l)`` satisfies every clique
    inequality of the induced subgraph on ``S_i | S_j`` and that
    ``k <= i, j, l``; any failure raises :class:`InternalInconsistency`.
    """
    if not i < j:
        raise DomainError("need i < j")
    g = idx.graph
    order = _require_order(idx)
    si, sj = idx.sets[i], idx.sets[j]
    support = si | sj
    sk = greedy_stable_set(g, order, support)
    both = si & sj
    if both & ~sk:
        raise InternalInconsistency("greedy set misses a vertex counted twice")
    sl = (support & ~sk) | (both & sk)
    if not g.is_stable(sl):
        raise InternalInconsistency(f"complementary set {sl:#x} is not stable")
    # clique inequalities of the induced subgraph on the support
    h, back = induced_subgraph(g, support)
    for c in enumerate_maximal_cliques(h):
        members = to_mask(back[v] for v in bits(c))
        if (members & sl).bit_count() > 1:
            raise InternalInconsistency("clique inequality violated")
    k, l = idx.position[sk], idx.position[sl]
    if not k <= min(i, j, l):
        raise InternalInconsistency(f"greedy index {k} is not the smallest of ({i}, {j}, {l})")
    if k == i:
        return None
    return Binomial(ExponentVector.from_vars((i, j)), ExponentVector.from_vars((k, l)))


def component_swap_binomials(idx: StableSetIndex, i: int, j: int) -> list[Binomial]:
    """Quadratic moves swapping one component of the bipartite graph on the
    symmetric difference of ``S_i`` and ``S_j``.

    Swaps that reproduce ``{S_i, S_j}`` or coincide with an earlier swap are
    dropped; with exactly two components both swaps give the same binomial.
    """
    g = idx.graph
    si, sj = idx.sets[i], idx.sets[j]
    a, b = si & ~sj, sj & ~si
    out: list[Binomial] = []
    seen = set()
    lhs = ExponentVector.from_vars((i, j))
    for comp in connected_components(g, a | b):
        new_i = (si & ~comp) | (sj & comp)
        new_j = (sj & ~comp) | (si & comp)
        k, l = idx.position[new_i], idx.position[new_j]
        rhs = ExponentVector.from_vars((k, l))
        if rhs == lhs or rhs in seen:
            continue
        seen.add(rhs)
        out.append(Binomial(lhs, rhs))
    return out

"""Exhaustive recognisers for induced structures and graph classes.

Every search here is complete rather than heuristic: a ``None`` result means
the structure was verified absent.  Ties are always broken towards the
lowest-numbered vertex, so outputs are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence

from .errors import BudgetExceeded, DomainError
from .graph import (Graph, bits, complement, connected_components, induced_subgraph,
                    is_bipartite, iter_cliques, iter_stable_sets, enumerate_maximal_cliques,
                    to_mask)

PARITIES = ("odd", "even", "any")
DEFAULT_MEYNIEL_BUDGET = 5_000_000
DEFAULT_ORDERING_CAP = 9
DEFAULT_GSP_CAP = 12


def _parity_ok(length: int, parity: str) -> bool:
    if parity not in PARITIES:
        raise DomainError(f"parity must be one of {PARITIES}")
    return parity == "any" or (length % 2 == 1) == (parity == "odd")


# -- holes and antiholes ---------------------------------------------------------


@dataclass(frozen=True)
class HoleCertificate:
    """A chordless cycle, listed in cycle order."""

    cycle: tuple[int, ...]
    in_complement: bool = False

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def parity(self) -> str:
        return "odd" if self.length % 2 else "even"

    def verify(self, g: Graph) -> bool:
        h = complement(g) if self.in_complement else g
        return is_chordless_cycle(h, self.cycle)


def is_chordless_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if g.has_edge(cycle[a], cycle[b]) != consecutive:
                return False
    return True


def chordless_cycles(g: Graph, min_len: int = 4) -> Iterator[tuple[int, ...]]:
    """Every chordless cycle of length >= ``min_len`` exactly once.

    Each cycle starts at its smallest vertex, with the second vertex smaller
    than the last.  Paths are kept induced while they grow.
    """
    adj = g.adj
    for v0 in range(g.n):
        allowed = g.vertex_mask & ~((1 << (v0 + 1)) - 1)
        for v1 in bits(adj[v0] & allowed):
            # stack entries: path, mask of vertices barred from the next step
            stack = [([v0, v1], (1 << v0) | (1 << v1))]
            while stack:
                path, barred = stack.pop()
                last = path[-1]
                cands = adj[last] & allowed & ~barred
                nxt = []
                for w in bits(cands):
                    if adj[w] >> v0 & 1:
                        if len(path) >= 3 and v1 < w and len(path) + 1 >= min_len:
                            yield tuple(path + [w])
                        continue
                    nxt.append(w)
                for w in reversed(nxt):
                    stack.append((path + [w], barred | (1 << w) | adj[last]))


def find_hole(g: Graph, parity: str = "any", min_len: int = 5) -> HoleCertificate | None:
    """First chordless cycle of length >= ``min_len`` with the given parity."""
    for cyc in chordless_cycles(g, max(min_len, 3)):
        if _parity_ok(len(cyc), parity):
            return HoleCertificate(cyc)
    return None


def find_antihole(g: Graph, parity: str = "any") -> HoleCertificate | None:
    """An induced complement of a cycle of length >= 5; the certificate lists
    the vertices in the cycle order of the complement."""
    cert = find_hole(complement(g), parity, 5)
    return HoleCertificate(cert.cycle, in_complement=True) if cert else None


# -- odd stretchers ----------------------------------------------------------------


@dataclass(frozen=True)
class StretcherEmbedding:
    """Vertex map from the labels ``i1..i2s, j1..j2t, k1..k2u`` into a host."""

    s: int
    t: int
    u: int
    mapping: tuple[tuple[str, int], ...]

    def as_dict(self) -> dict[str, int]:
        return dict(self.mapping)

    def verify(self, g: Graph) -> bool:
        from .families import odd_stretcher
        model = odd_stretcher(self.s, self.t, self.u)
        where = self.as_dict()
        if len(set(where.values())) != model.n:
            return False
        image = [where[model.labels[v]] for v in range(model.n)]
        return all(g.has_edge(image[a], image[b]) == model.has_edge(a, b)
                   for a in range(model.n) for b in range(a + 1, model.n))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for a in range(g.n):
        for b in bits(g.adj[a] >> (a + 1) << (a + 1)):
            for c in bits(g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)):
                out.append((a, b, c))
    return out


def _paths_between(g: Graph, start: int, target: int, chosen: int) -> Iterator[list[int]]:
    """Induced ``start .. target`` paths with an even vertex count whose inner
    vertices avoid ``chosen`` and touch it only at their path neighbours."""
    adj = g.adj
    if adj[start] >> target & 1:
        yield [start, target]
        return
    stack = [[start]]
    while stack:
        path = stack.pop()
        end = path[-1]
        used = chosen | to_mask(path)
        ext = []
        for x in bits(adj[end] & ~used):
            touch = adj[x] & used
            if touch == 1 << end:
                ext.append(path + [x])
            elif touch == (1 << end) | (1 << target) and len(path) % 2 == 0:
                # path + x + target then has an even vertex count
                yield path + [x, target]
        stack.extend(reversed(ext))


def find_odd_stretcher(g: Graph) -> StretcherEmbedding | None:
    """Exhaustive search for an induced odd stretcher.

    Two vertex-disjoint triangles, a matching between them, then three
    mutually non-adjacent induced paths with an even number of vertices each.
    """
    tris = triangles(g)
    adj = g.adj
    for x, t1 in enumerate(tris):
        m1 = to_mask(t1)
        for t2 in tris[x + 1:]:
            m2 = to_mask(t2)
            if m1 & m2:
                continue
            for perm in permutations(t2):
                pairs = list(zip(t1, perm))
                ok = True
                for a in t1:
                    for b in t2:
                        if adj[a] >> b & 1 and (a, b) not in pairs:
                            ok = False
                if not ok:
                    continue
                found = _route(g, pairs, m1 | m2)
                if found is not None:
                    return found
    return None


def _route(g: Graph, pairs, chosen: int):
    def rec(k, chosen, paths):
        if k == 3:
            return paths
        start, target = pairs[k]
        for path in _paths_between(g, start, target, chosen):
            res = rec(k + 1, chosen | to_mask(path), paths + [path])
            if res is not None:
                return res
        return None

    paths = rec(0, chosen, [])
    if paths is None:
        return None
    s, t, u = (len(p) // 2 for p in paths)
    mapping = []
    for name, path in zip("ijk", paths):
        mapping.extend((f"{name}{q + 1}", v) for q, v in enumerate(path))
    return StretcherEmbedding(s, t, u, tuple(mapping))


# -- Meyniel, perfection ---------------------------------------------------------------


@dataclass(frozen=True)
class BadCycle:
    """An odd cycle of length >= 5 with fewer than two chords."""

    cycle: tuple[int, ...]
    chords: int


def is_meyniel(g: Graph, budget: int = DEFAULT_MEYNIEL_BUDGET) -> tuple[bool, BadCycle | None]:
    """Every odd cycle of length >= 5 has at least two chords.

    Cycles are grown from their smallest vertex; a path that already carries
    two non-path edges can only close into cycles with two chords, so it is
    pruned.
    """
    adj = g.adj
    steps = 0
    for v0 in range(g.n):
        allowed = g.vertex_mask & ~((1 << (v0 + 1)) - 1)
        stack = [([v0, v1], (1 << v0) | (1 << v1), 0) for v1 in reversed(list(bits(adj[v0] & allowed)))]
        while stack:
            path, pmask, chords = stack.pop()
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"Meyniel cycle search exceeded {budget} steps", lower_bound=steps)
            last = path[-1]
            for w in bits(adj[last] & allowed & ~pmask):
                extra = (adj[w] & pmask).bit_count() - 1
                total = chords + extra
                closes = adj[w] >> v0 & 1
                length = len(path) + 1
                if closes and length >= 5 and length % 2 == 1 and path[1] < w and total - 1 <= 1:
                    return False, BadCycle(tuple(path + [w]), total - 1)
                if total <= 1:
                    stack.append((path + [w], pmask | (1 << w), total))
    return True, None


def is_perfect(g: Graph):
    """Perfection via the forbidden odd holes and odd antiholes; returns
    ``(flag, certificate)``."""
    hole = find_hole(g, "odd", 5)
    if hole is not None:
        return False, hole
    anti = find_antihole(g, "odd")
    if anti is not None:
        return False, anti
    return True, None


# -- chordality ------------------------------------------------------------------


def maximum_cardinality_search(g: Graph) -> list[int]:
    """MCS visiting order; its reverse is a perfect elimination ordering iff
    the graph is chordal."""
    weight = [0] * g.n
    visited = 0
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        order.append(v)
        visited |= 1 << v
        for u in bits(g.adj[v] & ~visited):
            weight[u] += 1
    return order


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Each vertex's later neighbours form a clique."""
    later = g.vertex_mask
    for v in order:
        later &= ~(1 << v)
        if not g.is_clique(g.adj[v] & later):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    peo = maximum_cardinality_search(g)[::-1]
    return is_perfect_elimination_ordering(g, peo)


# -- perfect orderings -----------------------------------------------------------------


def induced_p4s(g: Graph) -> list[tuple[int, int, int, int]]:
    """Induced paths ``a-b-c-d``, each listed in both directions."""
    adj = g.adj
    out = []
    for b in range(g.n):
        for c in bits(adj[b]):
            for a in bits(adj[b] & ~adj[c] & ~(1 << c)):
                for d in bits(adj[c] & ~adj[b] & ~adj[a] & ~(1 << b) & ~(1 << a)):
                    out.append((a, b, c, d))
    return out


def verify_perfect_ordering(g: Graph, order: Sequence[int]):
    """``(True, None)`` when no induced P4 ``abcd`` has ``a<b`` and ``d<c`` in
    ``order``; otherwise ``(False, (a, b, c, d))``."""
    if sorted(order) != list(range(g.n)):
        raise DomainError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    for a, b, c, d in induced_p4s(g):
        if pos[a] < pos[b] and pos[d] < pos[c]:
            return False, (a, b, c, d)
    return True, None


def _fast_orderings(g: Graph) -> Iterator[list[int]]:
    bip = is_bipartite(g)
    if bip is not None:
        a, b = bip
        yield list(bits(a)) + list(bits(b))
    for h in (g, complement(g)):
        mcs = maximum_cardinality_search(h)
        if is_perfect_elimination_ordering(h, mcs[::-1]):
            yield mcs
            yield mcs[::-1]


def find_perfect_ordering(g: Graph, cap: int = DEFAULT_ORDERING_CAP) -> list[int] | None:
    """A verified perfect ordering, or ``None`` when none exists.

    Class-specific candidates (bipartite sides, chordal and co-chordal
    elimination orders) are tried first; every candidate passes through
    :func:`verify_perfect_ordering`.  Otherwise a backtracking search over
    orders runs for ``n <= cap``.
    """
    for cand in _fast_orderings(g):
        if verify_perfect_ordering(g, cand)[0]:
            return cand
    if g.n > cap:
        raise BudgetExceeded(f"perfect-ordering search supports n <= {cap} without a fast path")
    p4s = induced_p4s(g)
    by_vertex: list[list[tuple[int, int, int, int]]] = [[] for _ in range(g.n)]
    for p in p4s:
        for v in p:
            by_vertex[v].append(p)
    pos = [-1] * g.n
    order: list[int] = []

    def rec() -> bool:
        if len(order) == g.n:
            return True
        k = len(order)
        for x in range(g.n):
            if pos[x] >= 0:
                continue
            pos[x] = k
            bad = False
            for a, b, c, d in by_vertex[x]:
                if min(pos[a], pos[b], pos[c], pos[d]) >= 0 and pos[a] < pos[b] and pos[d] < pos[c]:
                    bad = True
                    break
            if not bad:
                order.append(x)
                if rec():
                    return True
                order.pop()
            pos[x] = -1
        return False

    return list(order) if rec() else None


# -- even pairs ------------------------------------------------------------------------


def induced_paths(g: Graph, x: int, y: int) -> Iterator[list[int]]:
    """Every chordless ``x .. y`` path, lowest vertices explored first."""
    adj = g.adj
    # barred: path vertices plus neighbours of every path vertex but the last
    stack = [([x], 1 << x)]
    while stack:
        path, barred = stack.pop()
        last = path[-1]
        cands = adj[last] & ~barred
        if cands >> y & 1:
            yield path + [y]
            continue
        nxt_barred = barred | adj[last]
        for w in reversed(list(bits(cands))):
            stack.append((path + [w], nxt_barred | (1 << w)))


def is_even_pair(g: Graph, x: int, y: int):
    """``(flag, odd_path)``: flag is True iff every chordless x-y path has an
    even number of edges."""
    if x == y or g.has_edge(x, y):
        raise DomainError("an even pair needs two distinct non-adjacent vertices")
    for path in induced_paths(g, x, y):
        if (len(path) - 1) % 2 == 1:
            return False, path
    return True, None


def even_pairs(g: Graph) -> list[tuple[int, int]]:
    out = []
    for x in range(g.n):
        for y in bits(g.vertex_mask & ~g.adj[x] & ~((1 << (x + 1)) - 1)):
            if is_even_pair(g, x, y)[0]:
                out.append((x, y))
    return out


# -- clique cutsets ----------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueCutsetSplit:
    cutset: int
    h1: int
    h2: int

    def verify(self, g: Graph) -> bool:
        c = self.cutset
        if self.h1 & self.h2 != c or self.h1 | self.h2 != g.vertex_mask:
            return False
        if not g.is_clique(c) or self.h1 == c or self.h2 == c:
            return False
        a, b = self.h1 & ~c, self.h2 & ~c
        return all(not (g.adj[v] & b) for v in bits(a))


def find_clique_cutset(g: Graph) -> CliqueCutsetSplit | None:
    """Smallest clique whose removal disconnects ``g`` (ties: lowest bitset).

    ``h1`` is the cutset plus the component holding the lowest remaining
    vertex, ``h2`` the cutset plus everything else.
    """
    if len(connected_components(g)) > 1:
        raise DomainError("graph is disconnected; split it into components first")
    for c in sorted(iter_cliques(g), key=lambda m: (m.bit_count(), m)):
        if not c:
            continue
        rest = g.vertex_mask & ~c
        comps = connected_components(g, rest)
        if len(comps) >= 2:
            return CliqueCutsetSplit(c, c | comps[0], g.vertex_mask & ~comps[0])
    return None


def clique_cutset_atoms(g: Graph) -> list[int]:
    """Recursively split a connected graph along clique cutsets; returns the
    vertex sets of the atoms (pieces with no clique cutset)."""
    out = []
    stack = [g.vertex_mask]
    while stack:
        vs = stack.pop()
        h, index = induced_subgraph(g, vs)
        split = find_clique_cutset(h) if h.n > 1 else None
        if split is None:
            out.append(vs)
            continue
        stack.append(to_mask(index[v] for v in bits(split.h2)))
        stack.append(to_mask(index[v] for v in bits(split.h1)))
    return out


# -- generalized split graphs ------------------------------------------------------------------


@dataclass(frozen=True)
class GeneralizedSplitPartition:
    side: str  # "graph" or "complement"
    c0: int
    blocks: tuple[int, ...]

    def verify(self, g: Graph) -> bool:
        h = g if self.side == "graph" else complement(g)
        parts = (self.c0,) + self.blocks
        union = 0
        for p in parts:
            if union & p:
                return False
            union |= p
            if not h.is_clique(p):
                return False
        if union != g.vertex_mask:
            return False
        for a in range(len(self.blocks)):
            for b in range(a + 1, len(self.blocks)):
                if any(h.adj[v] & self.blocks[b] for v in bits(self.blocks[a])):
                    return False
        return True


def _cluster_blocks(h: Graph, vs: int) -> list[int] | None:
    comps = connected_components(h, vs)
    if all(h.is_clique(c) for c in comps):
        return comps
    return None


def is_generalized_split(g: Graph, cap: int = DEFAULT_GSP_CAP) -> GeneralizedSplitPartition | None:
    """Search a clique ``C_0`` (largest first) whose removal leaves disjoint
    cliques with no edges between them, in the graph and then in its
    complement."""
    if g.n > cap:
        raise BudgetExceeded(f"generalized-split search supports n <= {cap}")
    for side, h in (("graph", g), ("complement", complement(g))):
        for c0 in sorted(iter_cliques(h), key=lambda m: (-m.bit_count(), m)):
            blocks = _cluster_blocks(h, h.vertex_mask & ~c0)
            if blocks is not None:
                return GeneralizedSplitPartition(side, c0, tuple(blocks))
    return None


# -- stable sets meeting every maximal clique -----------------------------------------------------


def has_dominating_stable_set(g: Graph, anchor: int | None = None) -> int | None:
    """A stable set meeting every maximal clique (containing ``anchor`` if
    given), smallest first; ``None`` when there is none."""
    cliques = enumerate_maximal_cliques(g)
    within = g.vertex_mask
    base = 0
    if anchor is not None:
        base = 1 << anchor
        within &= ~g.adj[anchor] & ~base
    found = []
    for s in iter_stable_sets(g, within):
        s |= base
        if all(s & c for c in cliques):
            found.append(s)
    if not found:
        return None
    return min(found, key=lambda s: (s.bit_count(), s))


def is_strongly_perfect(g: Graph) -> bool:
    return all(has_dominating_stable_set(induced_subgraph(g, vs)[0]) is not None
               for vs in range(1, 1 << g.n))


def is_very_strongly_perfect(g: Graph) -> bool:
    for vs in range(1, 1 << g.n):
        h = induced_subgraph(g, vs)[0]
        if any(has_dominating_stable_set(h, v) is None for v in range(h.n)):
            return False
    return True

"""Constructors for the named graph families and composite operations."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import BudgetExceeded, DomainError
from .graph import Graph, bits, complement, disjoint_union, to_mask

FAMILY_KINDS = ("chordal", "bipartite", "meyniel", "comparability")
MEYNIEL_ATTEMPTS = 2000


@dataclass(frozen=True)
class StretcherSpec:
    s: int
    t: int
    u: int

    def __post_init__(self):
        if min(self.s, self.t, self.u) < 1:
            raise DomainError("stretcher path parameters must be positive")

    @property
    def n(self) -> int:
        return 2 * (self.s + self.t + self.u)


def _spec(spec, t=None, u=None) -> StretcherSpec:
    if isinstance(spec, StretcherSpec):
        return spec
    if t is None:
        return StretcherSpec(*spec)
    return StretcherSpec(spec, t, u)


def stretcher_labels(spec: StretcherSpec) -> list[str]:
    return ([f"i{q}" for q in range(1, 2 * spec.s + 1)]
            + [f"j{q}" for q in range(1, 2 * spec.t + 1)]
            + [f"k{q}" for q in range(1, 2 * spec.u + 1)])


def odd_stretcher(spec, t=None, u=None) -> Graph:
    """Two triangles ``{i1,j1,k1}`` and ``{i2s,j2t,k2u}`` joined by induced
    paths on ``2s``, ``2t`` and ``2u`` vertices.  Accepts a spec or ``s, t, u``."""
    spec = _spec(spec, t, u)
    labels = stretcher_labels(spec)
    at = {name: v for v, name in enumerate(labels)}
    ends = {"i": 2 * spec.s, "j": 2 * spec.t, "k": 2 * spec.u}
    edges = [(at["i1"], at["j1"]), (at["i1"], at["k1"]), (at["j1"], at["k1"])]
    last = {p: f"{p}{ends[p]}" for p in "ijk"}
    edges += [(at[last["i"]], at[last["j"]]), (at[last["i"]], at[last["k"]]),
              (at[last["j"]], at[last["k"]])]
    for p, length in ends.items():
        edges += [(at[f"{p}{q}"], at[f"{p}{q + 1}"]) for q in range(1, length)]
    return Graph.from_edges(spec.n, edges, labels)


def _steps(prefix: str, first: int, last: int) -> list[str]:
    return [f"{prefix}{q}" for q in range(first, last + 1, 2)]


def stretcher_witness_sets(spec, t=None, u=None) -> list[int]:
    """The six stable sets whose first three and last three have the same
    rho-sum, as bitsets in the vertex numbering of :func:`odd_stretcher`."""
    spec = _spec(spec, t, u)
    s, t, u = spec.s, spec.t, spec.u
    at = {name: v for v, name in enumerate(stretcher_labels(spec))}
    named = [
        _steps("i", 1, 2 * s - 1) + _steps("j", 2, 2 * t) + _steps("k", 2, 2 * u - 2),
        _steps("i", 2, 2 * s - 2) + _steps("j", 1, 2 * t - 1) + _steps("k", 2, 2 * u),
        _steps("i", 2, 2 * s) + _steps("j", 2, 2 * t - 2) + _steps("k", 1, 2 * u - 1),
        _steps("i", 1, 2 * s - 1) + _steps("j", 2, 2 * t - 2) + _steps("k", 2, 2 * u),
        _steps("i", 2, 2 * s) + _steps("j", 1, 2 * t - 1) + _steps("k", 2, 2 * u - 2),
        _steps("i", 2, 2 * s - 2) + _steps("j", 2, 2 * t) + _steps("k", 1, 2 * u - 1),
    ]
    return [to_mask(at[x] for x in group) for group in named]


def hole(k: int) -> Graph:
    """The cycle ``C_k``."""
    if k < 3:
        raise DomainError("a cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(v, (v + 1) % k) for v in range(k)])


def antihole(k: int) -> Graph:
    return complement(hole(k))


def path(k: int) -> Graph:
    return Graph.from_edges(k, [(v, v + 1) for v in range(k - 1)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    n1 = g1.n
    edges = list(g1.edges()) + [(a + n1, b + n1) for a, b in g2.edges()]
    edges += [(a, b + n1) for a in range(n1) for b in range(g2.n)]
    return Graph.from_edges(n1 + g2.n, edges)


def glue_along_clique(h1: Graph, h2: Graph, clique1: Sequence[int], clique2: Sequence[int]) -> Graph:
    """Identify ``clique2[q]`` of ``h2`` with ``clique1[q]`` of ``h1``.

    ``h1`` keeps its vertex numbers; the remaining vertices of ``h2`` follow in
    increasing order.
    """
    if len(clique1) != len(clique2):
        raise DomainError("glued cliques must have the same size")
    if len(set(clique1)) != len(clique1) or len(set(clique2)) != len(clique2):
        raise DomainError("glued cliques must not repeat vertices")
    if not h1.is_clique(to_mask(clique1)) or not h2.is_clique(to_mask(clique2)):
        raise DomainError("gluing sets must be cliques")
    where = dict(zip(clique2, clique1))
    nxt = h1.n
    for v in range(h2.n):
        if v not in where:
            where[v] = nxt
            nxt += 1
    edges = set(h1.edges())
    for a, b in h2.edges():
        x, y = where[a], where[b]
        edges.add((min(x, y), max(x, y)))
    return Graph.from_edges(nxt, sorted(edges))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Type 2 pieces: the complement of a disjoint union of cliques."""
    if any(a < 1 for a in sizes):
        raise DomainError("part sizes must be positive")
    return complement(disjoint_union(*(Graph.complete(a) for a in sizes)))


type2 = complete_multipartite


def type1(bipartite: Graph, clique_size: int) -> Graph:
    """Type 1 pieces: a bipartite graph on more than three vertices joined
    with a complete graph."""
    from .graph import is_bipartite
    if bipartite.n <= 3:
        raise DomainError("the bipartite part needs more than 3 vertices")
    if is_bipartite(bipartite) is None:
        raise DomainError("first argument is not bipartite")
    return join(bipartite, Graph.complete(clique_size))


def random_bipartite(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    side = [rng.random() < 0.5 for _ in range(n)]
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)
             if side[a] != side[b] and rng.random() < p]
    return Graph.from_edges(n, edges)


def random_chordal(n: int, rng: random.Random) -> Graph:
    """Add vertices one at a time, each joined to a random clique of the
    current graph; the reverse insertion order is a perfect elimination
    ordering."""
    adj = [0] * n
    for v in range(1, n):
        # grow a random clique among earlier vertices
        cand = (1 << v) - 1
        clique = 0
        for u in rng.sample(range(v), v):
            if cand >> u & 1 and rng.random() < 0.6:
                clique |= 1 << u
                cand &= adj[u]
        for u in bits(clique):
            adj[u] |= 1 << v
        adj[v] = clique
    return Graph(n, tuple(adj))


def random_comparability(n: int, rng: random.Random, p: float = 0.35) -> Graph:
    """Comparability graph of the transitive closure of a random DAG on ``0..n-1``."""
    below = [0] * n
    for b in range(n):
        for a in range(b):
            if rng.random() < p:
                below[b] |= (1 << a) | below[a]
    edges = [(a, b) for b in range(n) for a in bits(below[b])]
    return Graph.from_edges(n, edges)


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def random_family(kind: str, n: int, seed: int = 0, attempts: int = MEYNIEL_ATTEMPTS) -> Graph:
    """A seeded random member of ``kind``, verified before it is returned."""
    from .recognize import is_chordal, is_meyniel
    from .graph import is_bipartite

    if kind not in FAMILY_KINDS:
        raise DomainError(f"kind must be one of {FAMILY_KINDS}")
    if not 1 <= n <= 12:
        raise DomainError("random families support 1 <= n <= 12")
    rng = random.Random(f"{kind}:{n}:{seed}")
    if kind == "chordal":
        g = random_chordal(n, rng)
        assert is_chordal(g)
    elif kind == "bipartite":
        g = random_bipartite(n, rng)
        assert is_bipartite(g) is not None
    elif kind == "comparability":
        g = random_comparability(n, rng)
    else:
        for _ in range(attempts):
            # mixing chordal and dense random graphs keeps the acceptance rate usable
            g = random_chordal(n, rng) if rng.random() < 0.3 else random_graph(n, rng, rng.uniform(0.3, 0.8))
            if is_meyniel(g)[0]:
                break
        else:
            raise BudgetExceeded(f"no Meyniel graph found in {attempts} attempts")
    return g


def clique_separable_sample(seed: int, pieces: int = 3, max_piece: int = 6) -> Graph:
    """Glue random Type 1 / Type 2 pieces along cliques."""
    from .graph import enumerate_maximal_cliques
    rng = random.Random(seed)

    def piece() -> Graph:
        if rng.random() < 0.5:
            parts = [rng.randint(1, 2) for _ in range(rng.randint(2, 3))]
            return complete_multipartite(parts)
        b = random_bipartite(rng.randint(4, max(4, max_piece - 1)), rng)
        return type1(b, rng.randint(1, 2))

    g = piece()
    for _ in range(pieces - 1):
        h = piece()
        cg = rng.choice(enumerate_maximal_cliques(g))
        ch = rng.choice(enumerate_maximal_cliques(h))
        k = rng.randint(1, min(cg.bit_count(), ch.bit_count()))
        g = glue_along_clique(g, h, list(bits(cg))[:k], list(bits(ch))[:k])
    return g

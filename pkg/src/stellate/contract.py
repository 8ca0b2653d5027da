"""Even-pair contraction, Hertz's COLOR algorithm and contractibility checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BudgetExceeded, DomainError, InternalInconsistency
from .graph import Graph, bits, canonical_key, enumerate_maximal_cliques, induced_subgraph
from .recognize import is_even_pair

DEFAULT_CONTRACT_CAP = 9


def contract_pair(g: Graph, x: int, y: int) -> tuple[Graph, list[int]]:
    """Replace non-adjacent ``x, y`` by one vertex joined to ``N(x) | N(y)``.

    The merged vertex takes the smaller of the two numbers, the larger one is
    removed and later vertices shift down.  Returns the new graph and the map
    old vertex -> new vertex.
    """
    if x == y:
        raise DomainError("cannot contract a vertex with itself")
    if g.has_edge(x, y):
        raise DomainError(f"vertices {x} and {y} are adjacent")
    lo, hi = min(x, y), max(x, y)
    where = [v if v < hi else v - 1 for v in range(g.n)]
    where[hi] = lo
    edges = {(min(where[a], where[b]), max(where[a], where[b])) for a, b in g.edges()}
    return Graph.from_edges(g.n - 1, sorted(edges)), where


@dataclass(frozen=True)
class ContractionStep:
    graph: Graph          # the graph before this contraction
    v: int
    w: int
    merged: int           # number of the new vertex in the next graph
    merge_map: tuple[int, ...]

    def to_json(self) -> dict:
        return {"n": self.graph.n, "edges": [[a + 1, b + 1] for a, b in self.graph.edges()],
                "pair": [self.v + 1, self.w + 1], "merged": self.merged + 1,
                "merge_map": [z + 1 for z in self.merge_map]}


@dataclass
class ContractionTrace:
    steps: list[ContractionStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


@dataclass
class HertzRun:
    coloring: list[int]       # vertex -> colour, colours start at 1
    stable_set: int
    trace: ContractionTrace
    seed: int

    @property
    def num_colors(self) -> int:
        return max(self.coloring, default=0)


def _has_nonneighbour(g: Graph, v: int) -> bool:
    return bool(g.vertex_mask & ~g.adj[v] & ~(1 << v))


def hertz_color(g: Graph, seed: int, check: bool = True) -> HertzRun:
    """COLOR with rule R, ties broken by the lowest vertex number.

    Returns the colouring, the stable set ``{v_0, w_0, .., w_s}`` and the
    contraction trace.  When the seed is adjacent to every other vertex it is
    never contracted and the stable set is ``{seed}``, which meets every
    maximal clique.  With ``check`` the stable set is asserted to be stable
    and to meet every maximal clique; those guarantees hold for Meyniel input.
    """
    if not 0 <= seed < g.n:
        raise DomainError("seed vertex out of range")
    cur = g
    vw = seed
    classes = [1 << v for v in range(g.n)]
    steps: list[ContractionStep] = []
    on_chain: list[bool] = []
    chosen: list[tuple[int, int]] = []  # (v_k, w_k) as original-class bitsets
    while not cur.is_clique():
        if _has_nonneighbour(cur, vw):
            v = vw
        else:
            v = next(u for u in range(cur.n) if _has_nonneighbour(cur, u))
        non = cur.vertex_mask & ~cur.adj[v] & ~(1 << v)
        w = max(bits(non), key=lambda u: ((cur.adj[v] & cur.adj[u]).bit_count(), -u))
        nxt, where = contract_pair(cur, v, w)
        on_chain.append(v == vw)
        chosen.append((classes[v], classes[w]))
        steps.append(ContractionStep(cur, v, w, where[v], tuple(where)))
        merged = classes[v] | classes[w]
        new_classes = [0] * nxt.n
        for old, new in enumerate(where):
            new_classes[new] |= classes[old]
        new_classes[where[v]] = merged
        classes = new_classes
        cur = nxt
        vw = where[v]

    coloring = [0] * g.n
    for colour, cls in enumerate(classes, start=1):
        for v in bits(cls):
            coloring[v] = colour

    # s: first index on the chain whose successor leaves it (or ends the run)
    s = None
    if on_chain and on_chain[0]:
        s = next(k for k, flag in enumerate(on_chain)
                 if flag and (k + 1 == len(on_chain) or not on_chain[k + 1]))
    if s is None:
        stable = 1 << seed
    else:
        stable = chosen[0][0]
        for k in range(s + 1):
            stable |= chosen[k][1]
    run = HertzRun(coloring, stable, ContractionTrace(steps), seed)
    if check:
        for a, b in g.edges():
            if coloring[a] == coloring[b]:
                raise InternalInconsistency("COLOR produced an improper colouring")
        if not g.is_stable(stable) or not all(stable & c for c in enumerate_maximal_cliques(g)):
            raise InternalInconsistency("COLOR stable set does not meet every maximal clique")
    return run


# -- even-contractibility ------------------------------------------------------------

_FAILURES: dict[bytes, bool] = {}


def is_even_contractile(g: Graph, cap: int = DEFAULT_CONTRACT_CAP) -> ContractionTrace | None:
    """A sequence of even-pair contractions ending in a clique, or ``None``.

    Depth-first over even pairs (lowest first); graphs known to fail are
    remembered by canonical key, so isomorphic dead ends are pruned.
    """
    if g.n > cap:
        raise BudgetExceeded(f"even-contraction search supports n <= {cap}")

    def search(h: Graph):
        if h.is_clique():
            return []
        key = canonical_key(h)
        if key in _FAILURES:
            return None
        for x in range(h.n):
            for y in bits(h.vertex_mask & ~h.adj[x] & ~((1 << (x + 1)) - 1)):
                if not is_even_pair(h, x, y)[0]:
                    continue
                nxt, where = contract_pair(h, x, y)
                rest = search(nxt)
                if rest is not None:
                    return [ContractionStep(h, x, y, where[x], tuple(where))] + rest
        _FAILURES[key] = True
        return None

    steps = search(g)
    return None if steps is None else ContractionTrace(steps)


def is_perfectly_contractile(g: Graph, cap: int = DEFAULT_CONTRACT_CAP):
    """``(flag, failing)``: every induced subgraph is even-contractile, else
    the smallest failing vertex bitset (by size, then value)."""
    if g.n > cap:
        raise BudgetExceeded(f"perfect-contractibility check supports n <= {cap}")
    checked: dict[bytes, bool] = {}
    subsets = sorted(range(1, 1 << g.n), key=lambda m: (m.bit_count(), m))
    for vs in subsets:
        h = induced_subgraph(g, vs)[0]
        key = canonical_key(h)
        if key not in checked:
            checked[key] = is_even_contractile(h, cap) is not None
        if not checked[key]:
            return False, vs
    return True, None


def trace_pairs_are_even(trace: ContractionTrace) -> bool:
    return all(is_even_pair(step.graph, step.v, step.w)[0] for step in trace.steps)


"""Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

Vertices are ``0 .. n-1``.  A vertex set is an ``int`` whose bit ``v`` is set
when ``v`` belongs to the set; every enumerator in the package works on these
bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, DomainError

MAX_VERTICES = 64
DEFAULT_STABLE_SET_CAP = 20000
DEFAULT_CANONICAL_CAP = 10


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph.

    ``adj[v]`` is the neighbourhood bitset of ``v``.  ``labels`` is optional
    display metadata (used by the stretcher constructor) and never affects
    any algorithm, equality included.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise DomainError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency list length does not match n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise DomainError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {v} and {u}")
        if self.labels is not None and len(self.labels) != self.n:
            raise DomainError("labels length does not match n")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- queries ------------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_clique(self, mask: int | None = None) -> bool:
        if mask is None:
            mask = self.vertex_mask
        return all(mask & ~self.adj[v] == 1 << v for v in bits(mask))

    def is_stable(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            adj[perm[v]] = to_mask(perm[u] for u in bits(self.adj[v]))
        labels = None
        if self.labels is not None:
            lab = [""] * self.n
            for v in range(self.n):
                lab[perm[v]] = self.labels[v]
            labels = tuple(lab)
        return Graph(self.n, tuple(adj), labels)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)), g.labels)


def induced_subgraph(g: Graph, vs: int) -> tuple[Graph, list[int]]:
    """Induce ``g`` on the vertex bitset ``vs``.

    Returns the subgraph (vertices renumbered ``0..|vs|-1`` in increasing
    order) and the index map ``sub vertex -> original vertex``.
    """
    index = list(bits(vs & g.vertex_mask))
    pos = {v: i for i, v in enumerate(index)}
    adj = tuple(to_mask(pos[u] for u in bits(g.adj[v] & vs)) for v in index)
    labels = tuple(g.labels[v] for v in index) if g.labels is not None else None
    return Graph(len(index), adj, labels), index


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(nb << offset for nb in h.adj)
        offset += h.n
    return Graph(offset, tuple(adj))


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Vertex bitsets of the components of ``g`` (restricted to ``within``),
    ordered by smallest vertex."""
    remaining = g.vertex_mask if within is None else within
    blocks = []
    while remaining:
        frontier = remaining & -remaining
        block = 0
        while frontier:
            block |= frontier
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & remaining & ~block
        blocks.append(block)
        remaining &= ~block
    return blocks


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> tuple[int, int] | None:
    """Return a bipartition ``(A, B)`` as bitsets, or ``None`` if an odd cycle exists."""
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return None
    a = to_mask(v for v in range(g.n) if side[v] == 0)
    return a, g.vertex_mask & ~a


# -- stable sets --------------------------------------------------------------


class StableSetIndex:
    """All stable sets ``S_1 .. S_m`` of a graph in a fixed order.

    ``sets[i]`` is the bitset of the ``i``-th stable set (0-based);
    ``position[mask]`` inverts it.  ``policy`` names the ordering and
    ``vertex_order`` records the perfect ordering when the index was built
    for the lex/revlex construction on perfectly orderable graphs.
    """

    def __init__(self, graph: Graph, sets: Sequence[int], policy: str = "size-then-bits",
                 vertex_order: Sequence[int] | None = None):
        self.graph = graph
        self.sets = tuple(sets)
        self.position = {s: i for i, s in enumerate(self.sets)}
        if len(self.position) != len(self.sets):
            raise DomainError("duplicate stable set in index")
        self.policy = policy
        self.vertex_order = tuple(vertex_order) if vertex_order is not None else None

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __getitem__(self, i):
        return self.sets[i]

    def index_of(self, mask: int) -> int:
        return self.position[mask]

    def incidence_vector(self, i: int) -> tuple[int, ...]:
        s = self.sets[i]
        return tuple(s >> v & 1 for v in range(self.graph.n))

    def reordered(self, sets: Sequence[int], policy: str, vertex_order=None) -> "StableSetIndex":
        if sorted(sets) != sorted(self.sets):
            raise DomainError("reordering must be a permutation of the stable sets")
        return StableSetIndex(self.graph, sets, policy, vertex_order)

    def __repr__(self):
        return f"StableSetIndex(m={len(self.sets)}, policy={self.policy!r})"


def iter_stable_sets(g: Graph, within: int | None = None) -> Iterator[int]:
    """Yield every stable set (including the empty set) of ``g`` restricted to
    ``within``; branches on the lowest candidate vertex."""
    cand0 = g.vertex_mask if within is None else within
    stack = [(0, cand0)]
    while stack:
        cur, cand = stack.pop()
        yield cur
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append((cur | low, cand & ~g.adj[v]))


def enumerate_stable_sets(g: Graph, cap: int = DEFAULT_STABLE_SET_CAP) -> StableSetIndex:
    """All stable sets of ``g``, ordered by size and then by bitset value."""
    found = []
    for s in iter_stable_sets(g):
        found.append(s)
        if len(found) > cap:
            raise BudgetExceeded(
                f"graph has more than {cap} stable sets", lower_bound=len(found))
    found.sort(key=lambda s: (s.bit_count(), s))
    return StableSetIndex(g, found)


def count_stable_sets(g: Graph) -> int:
    return sum(1 for _ in iter_stable_sets(g))


# -- cliques ------------------------------------------------------------------


def enumerate_maximal_cliques(g: Graph, within: int | None = None) -> list[int]:
    """Bron-Kerbosch with pivoting on bitsets; result sorted by bitset value."""
    out: list[int] = []
    adj = g.adj

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: (adj[u] & p).bit_count())
        for v in bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    universe = g.vertex_mask if within is None else within
    if universe:
        expand(0, universe, 0)
    return sorted(out)


def iter_cliques(g: Graph, within: int | None = None) -> Iterator[int]:
    """Every clique, the empty one included."""
    cand0 = g.vertex_mask if within is None else within
    stack = [(0, cand0)]
    while stack:
        cur, cand = stack.pop()
        yield cur
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append((cur | low, cand & g.adj[v]))


def clique_number(g: Graph) -> int:
    return max((c.bit_count() for c in enumerate_maximal_cliques(g)), default=0)


# -- canonical form -----------------------------------------------------------


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition; label-invariant."""
    while True:
        masks = [to_mask(c) for c in cells]
        new_cells = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((g.adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _certificate(g: Graph, order: list[int]) -> bytes:
    pos = {v: i for i, v in enumerate(order)}
    rows = bytearray()
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << (g.n - 1 - pos[u])
        rows += row.to_bytes(8, "big")
    return bytes(rows)


def canonical_key(g: Graph, cap: int = DEFAULT_CANONICAL_CAP) -> bytes:
    """Isomorphism-invariant key: equal keys iff the graphs are isomorphic.

    Individualisation-refinement with exhaustive leaf comparison; twin vertices
    inside the target cell are explored once (swapping twins is an automorphism).
    """
    if g.n > cap:
        raise BudgetExceeded(f"canonical_key supports n <= {cap}, got {g.n}")
    best: list[bytes] = []

    def search(cells):
        cells = _refine(g, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert = _certificate(g, [c[0] for c in cells])
            if not best or cert < best[0]:
                best[:] = [cert]
            return
        cell = cells[target]
        seen_twins: list[int] = []
        for v in cell:
            if any(_are_twins(g, v, u) for u in seen_twins):
                continue
            seen_twins.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search([list(range(g.n))])
    return bytes([g.n]) + (best[0] if best else b"")


def _are_twins(g: Graph, u: int, v: int) -> bool:
    bu, bv = 1 << u, 1 << v
    return g.adj[u] & ~bv == g.adj[v] & ~bu


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_key(g, 64) == canonical_key(h, 64)


# -- exhaustive generation --------------------------------------------------------


def all_graphs(n: int, connected_only: bool = False) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices.

    Built by vertex augmentation from the classes on ``n - 1`` vertices with
    canonical-key dedup; intended for ``n <= 7``.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    layer = {canonical_key(Graph(0, ())): Graph(0, ())}
    for k in range(1, n + 1):
        nxt: dict[bytes, Graph] = {}
        for h in layer.values():
            for nb in range(1 << (k - 1)):
                adj = list(h.adj) + [nb]
                for u in bits(nb):
                    adj[u] |= 1 << (k - 1)
                cand = Graph(k, tuple(adj))
                key = canonical_key(cand, cap=max(DEFAULT_CANONICAL_CAP, k))
                if key not in nxt:
                    nxt[key] = cand
        layer = nxt
    graphs = sorted(layer.values(), key=lambda h: (h.num_edges, canonical_key(h, max(n, 1))))
    if connected_only:
        graphs = [h for h in graphs if is_connected(h)]
    return graphs


def subsets_of_size(mask: int, k: int) -> Iterator[int]:
    for combo in combinations(bits(mask), k):
        yield to_mask(combo)

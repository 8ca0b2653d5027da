"""Brute-force fibers of the toric map and their connectivity under moves.

A fiber is the set of degree-``d`` monomials with a fixed rho-sum.  ``I_G`` is
generated in degree <= 2 exactly when every fiber is connected under the
quadratic moves; this module checks that directly and independently of the
Groebner machinery.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from ..errors import BudgetExceeded, DomainError
from ..graph import StableSetIndex
from .groebner import spread
from .monomials import Binomial, ExponentVector

DEFAULT_MAX_DEGREE = 4
DEFAULT_ORACLE_BUDGET = 3_000_000


def _target_counts(idx: StableSetIndex, target) -> list[int]:
    n = idx.graph.n
    if isinstance(target, ExponentVector):
        counts = [0] * n
        for var, e in target.exps:
            for v in range(n):
                if idx.sets[var] >> v & 1:
                    counts[v] += e
        return counts
    counts = list(target)
    if len(counts) == n + 1:
        counts = counts[:n]
    if len(counts) != n:
        raise DomainError("target must have one entry per vertex")
    return counts


def fiber(idx: StableSetIndex, target, degree: int,
          max_degree: int = DEFAULT_MAX_DEGREE) -> list[ExponentVector]:
    """All degree-``degree`` monomials whose rho-sum equals ``target``.

    ``target`` is a vertex-count vector (optionally with the degree appended)
    or a monomial whose rho-sum is used.  Sorted by variable multiset.
    """
    if degree > max_degree:
        raise BudgetExceeded(f"fiber degree {degree} exceeds the budget {max_degree}")
    counts = _target_counts(idx, target)
    n = idx.graph.n
    sets = idx.sets
    out: list[ExponentVector] = []

    def rec(start, left, remaining, chosen):
        support = 0
        for v in range(n):
            if remaining[v] < 0:
                return
            if remaining[v]:
                support |= 1 << v
        if left == 0:
            if not support:
                out.append(ExponentVector.from_vars(chosen))
            return
        if sum(remaining) > left * n:
            return
        for i in range(start, len(sets)):
            s = sets[i]
            if s & ~support:
                continue
            nxt = list(remaining)
            for v in range(n):
                if s >> v & 1:
                    nxt[v] -= 1
            chosen.append(i)
            rec(i, left - 1, nxt, chosen)
            chosen.pop()

    rec(0, degree, counts, [])
    out.sort(key=lambda u: u.variables())
    return out


def _apply(u: tuple[int, ...], src: tuple[int, ...], dst: tuple[int, ...]):
    rest = list(u)
    for v in src:
        try:
            rest.remove(v)
        except ValueError:
            return None
    return tuple(sorted(rest + list(dst)))


def fiber_components(monomials: Iterable[ExponentVector],
                     moves: Sequence[Binomial]) -> list[list[ExponentVector]]:
    """Connected components of ``monomials`` under ``moves`` (either direction)."""
    nodes = [tuple(u.variables()) for u in monomials]
    members = set(nodes)
    pairs = []
    for b in moves:
        a, c = tuple(b.lead.variables()), tuple(b.tail.variables())
        pairs.append((a, c))
        pairs.append((c, a))
    seen: set = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for src, dst in pairs:
                w = _apply(u, src, dst)
                if w is not None and w in members and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    comps.sort()
    return [[ExponentVector.from_vars(u) for u in comp] for comp in comps]


def _quadratic_neighbours(idx: StableSetIndex):
    """Degree-2 fibers keyed by packed rho-sum: ``key -> [(i, j), ...]``."""
    sp = [spread(s) for s in idx.sets]
    by_sum: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i in range(len(sp)):
        for j in range(i, len(sp)):
            by_sum[sp[i] + sp[j]].append((i, j))
    return sp, by_sum


def disconnected_fiber(idx: StableSetIndex, max_degree: int,
                       budget: int = DEFAULT_ORACLE_BUDGET):
    """First fiber of degree 3..``max_degree`` that quadratic moves leave
    disconnected, as a list of monomials; ``None`` when all are connected."""
    m = len(idx)
    sp, by_sum = _quadratic_neighbours(idx)
    visited = 0
    for d in range(3, max_degree + 1):
        groups: dict[int, list[tuple[int, ...]]] = defaultdict(list)
        for combo in combinations_with_replacement(range(m), d):
            visited += 1
            if visited > budget:
                raise BudgetExceeded(f"fiber oracle exceeded {budget} monomials", lower_bound=visited)
            groups[sum(sp[i] for i in combo)].append(combo)
        for members in groups.values():
            if len(members) < 2:
                continue
            member_set = set(members)
            seen = {members[0]}
            stack = [members[0]]
            while stack:
                u = stack.pop()
                for a in range(d):
                    for b in range(a + 1, d):
                        if b > a + 1 and u[b] == u[b - 1]:
                            continue
                        key = sp[u[a]] + sp[u[b]]
                        rest = u[:a] + u[a + 1:b] + u[b + 1:]
                        for k, l in by_sum[key]:
                            w = tuple(sorted(rest + (k, l)))
                            if w not in seen:
                                seen.add(w)
                                stack.append(w)
            if len(seen) != len(member_set):
                return [ExponentVector.from_vars(u) for u in sorted(members)]
    return None


def is_quadratically_generated_oracle(idx: StableSetIndex, max_degree: int,
                                      budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    """True iff every fiber of degree 3..``max_degree`` is connected under
    quadratic moves."""
    return disconnected_fiber(idx, max_degree, budget) is None


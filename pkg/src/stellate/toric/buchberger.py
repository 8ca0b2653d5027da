"""Buchberger's algorithm specialised to binomials with coefficients +1/-1.

Elements are ``(lead, tail)`` pairs of packed monomials (see
:class:`~stellate.toric.monomials.Packing`), always homogeneous, so the lead
is the numerically smaller int.  S-pairs and reductions never leave the set
of pure difference binomials, hence no field arithmetic.

``saturate="all"`` divides every new element by the gcd of its two sides.
That is only valid when the target ideal is prime and contains the input
(toric ideals); it performs saturation on the fly.  ``saturate=var`` strips
only common powers of that one variable, the classic single-variable
saturation step when ``var`` is the cheapest variable of the order.
"""

from __future__ import annotations

import heapq
from typing import Iterable

from ..errors import BudgetExceeded, InternalInconsistency
from .monomials import FIELD_BITS, MAX_EXPONENT, Packing


class Reducer:
    """Divisor lookup over a set of lead monomials.

    Quadratic leads (the bulk of a toric basis) sit in a hash map and are
    found by enumerating the degree-2 divisors of the query; other leads are
    bucketed by the cheapest variable they contain and scanned.
    """

    def __init__(self, packing: Packing):
        self.p = packing
        self.quad: dict[int, tuple[int, int, int]] = {}
        self.buckets: dict[int, list[tuple[int, int, int]]] = {}
        self.lead_of: dict[int, int] = {}

    def __len__(self):
        return len(self.lead_of)

    def add(self, ident: int, lead: int, tail: int) -> None:
        self.lead_of[ident] = lead
        if self.p.degree(lead) == 2:
            self.quad[lead] = (ident, lead, tail)
        else:
            top = self.p.support_guards(lead).bit_length()
            self.buckets.setdefault(top, []).append((ident, lead, tail))

    def remove(self, ident: int) -> None:
        lead = self.lead_of.pop(ident)
        if self.quad.get(lead, (None,))[0] == ident:
            del self.quad[lead]
            return
        items = self.buckets[self.p.support_guards(lead).bit_length()]
        for pos, item in enumerate(items):
            if item[0] == ident:
                del items[pos]
                return

    def items(self):
        yield from self.quad.values()
        for items in self.buckets.values():
            yield from items

    def find(self, u: int):
        """An entry whose lead divides ``u``, or ``None``."""
        p = self.p
        g = p.guard
        s = p.support_guards(u)
        quad = self.quad
        if quad:
            units = []
            while s:
                low = s & -s
                s ^= low
                units.append(low)
            shift = FIELD_BITS - 1
            for a, ga in enumerate(units):
                ua = ga >> shift
                if (u >> (ga.bit_length() - FIELD_BITS)) & MAX_EXPONENT >= 2:
                    item = quad.get(ua + ua)
                    if item is not None:
                        return item
                for gb in units[a + 1:]:
                    item = quad.get(ua + (gb >> shift))
                    if item is not None:
                        return item
            s = p.support_guards(u)
        buckets = self.buckets
        if buckets:
            ug = u | g
            while s:
                low = s & -s
                s ^= low
                items = buckets.get(low.bit_length())
                if items:
                    for item in items:
                        if (ug - item[1]) & g == g:
                            return item
        return None

    def divisors(self, u: int):
        """Every entry whose lead divides ``u``."""
        p = self.p
        g = p.guard
        ug = u | g
        s = p.support_guards(u)
        units = []
        while s:
            low = s & -s
            s ^= low
            units.append(low)
        shift = FIELD_BITS - 1
        quad = self.quad
        for a, ga in enumerate(units):
            ua = ga >> shift
            if (u >> (ga.bit_length() - FIELD_BITS)) & MAX_EXPONENT >= 2:
                item = quad.get(ua + ua)
                if item is not None:
                    yield item
            for gb in units[a + 1:]:
                item = quad.get(ua + (gb >> shift))
                if item is not None:
                    yield item
            for item in self.buckets.get(ga.bit_length(), ()):
                if (ug - item[1]) & g == g:
                    yield item

    def normal_form(self, u: int) -> int:
        find = self.find
        while True:
            item = find(u)
            if item is None:
                return u
            u = u - item[1] + item[2]


def _orient(p: Packing, u: int, v: int) -> tuple[int, int]:
    if p.greater(u, v):
        return u, v
    return v, u


class Buchberger:
    """Incremental Buchberger run with Gebauer-Moeller pair pruning.

    ``max_degree`` truncates: S-pairs whose lcm exceeds it are never formed,
    which for homogeneous input yields a basis that is correct in every
    degree up to ``max_degree``.
    """

    def __init__(self, packing: Packing, saturate=None, max_degree: int | None = None,
                 max_elements: int | None = None):
        self.p = packing
        self.saturate = saturate
        self.max_degree = max_degree
        self.max_elements = max_elements
        self.leads: list[int] = []
        self.tails: list[int] = []
        self.active: set[int] = set()
        self.active_by_var: dict[int, set[int]] = {}
        self.reducer = Reducer(packing)
        self.all_leads = Reducer(packing)
        self.pairs: list[tuple[int, int, int, int, int]] = []
        self.s_pairs_reduced = 0

    # -- element insertion ---------------------------------------------------

    def _normalize(self, u: int, v: int):
        nf = self.reducer.normal_form
        u, v = nf(u), nf(v)
        if u == v:
            return None
        if self.saturate is not None:
            g = self.p.gcd(u, v)
            if g and self.saturate != "all":
                var = self.saturate
                g = self.p.exponent(g, var) << self.p.shift[var]
            if g:
                u -= g
                v -= g
        return _orient(self.p, u, v)

    def _insert(self, lead: int, tail: int) -> None:
        p = self.p
        h = len(self.leads)
        if self.max_elements is not None and h >= self.max_elements:
            raise BudgetExceeded(f"Groebner basis exceeded {self.max_elements} elements",
                                 lower_bound=h)
        if p.degree(lead) > MAX_EXPONENT:
            raise BudgetExceeded("binomial degree exceeds the packed exponent range")
        self.leads.append(lead)
        self.tails.append(tail)
        leads = self.leads
        lcm = p.lcm
        divides = p.divides
        degree = p.degree

        # new pairs (h, g): drop coprime ones, then those whose lcm is
        # divisible by a kept candidate's lcm (one survivor per tie).  Sorted
        # by degree, a proper divisor always precedes its multiple.
        partners: set[int] = set()
        by_var = self.active_by_var
        guards = p.support_guards(lead)
        s = guards
        while s:
            low = s & -s
            s ^= low
            partners |= by_var.get(low, set())
        cand = [(lcm(lead, leads[g]), g) for g in partners]
        cand.sort(key=lambda t: (degree(t[0]), -t[0], t[1]))
        kept: list[tuple[int, int]] = []
        kept_lcms: set[int] = set()
        smaller: list[int] = []
        cur_deg = -1
        for L, g in cand:
            d = degree(L)
            if d != cur_deg:
                smaller = [L2 for L2, _ in kept]
                cur_deg = d
            if L in kept_lcms:
                continue
            if any(divides(L2, L) for L2 in smaller):
                continue
            kept.append((L, g))
            kept_lcms.add(L)
        for L, g in kept:
            d = degree(L)
            if self.max_degree is not None and d > self.max_degree:
                continue
            heapq.heappush(self.pairs, (d, -L, g, h, L))

        # leads made redundant by the new one leave the active set
        common = None
        s = guards
        while s:
            low = s & -s
            s ^= low
            members = by_var.get(low, set())
            common = set(members) if common is None else common & members
        for g in [g for g in (common or ()) if divides(lead, leads[g])]:
            self.active.discard(g)
            self.reducer.remove(g)
            s = p.support_guards(leads[g])
            while s:
                low = s & -s
                s ^= low
                by_var[low].discard(g)
        self.active.add(h)
        s = guards
        while s:
            low = s & -s
            s ^= low
            by_var.setdefault(low, set()).add(h)
        self.reducer.add(h, lead, tail)
        self.all_leads.add(h, lead, tail)

    def add_generator(self, u: int, v: int) -> None:
        norm = self._normalize(u, v)
        if norm is not None:
            self._insert(*norm)

    # -- main loop -------------------------------------------------------------

    def _chain_redundant(self, i: int, j: int, L: int) -> bool:
        """Lazy form of the Gebauer-Moeller test on queued pairs: some element
        added after the pair was formed has a lead dividing ``L`` and does not
        share the lcm with either member."""
        p = self.p
        leads = self.leads
        newest = max(i, j)
        for ident, lead, _ in self.all_leads.divisors(L):
            if ident > newest and p.lcm(leads[i], lead) != L and p.lcm(leads[j], lead) != L:
                return True
        return False

    def run(self) -> None:
        while self.pairs:
            _, _, i, j, L = heapq.heappop(self.pairs)
            if self._chain_redundant(i, j, L):
                continue
            u = L - self.leads[i] + self.tails[i]
            v = L - self.leads[j] + self.tails[j]
            self.s_pairs_reduced += 1
            norm = self._normalize(u, v)
            if norm is not None:
                self._insert(*norm)

    # -- results -------------------------------------------------------------

    def reduced_basis(self) -> list[tuple[int, int]]:
        """Minimal leads with fully reduced tails, sorted by (degree, order)."""
        p = self.p
        out = []
        final = Reducer(p)
        for g in self.active:
            final.add(g, self.leads[g], self.tails[g])
        for g in self.active:
            tail = final.normal_form(self.tails[g])
            lead = self.leads[g]
            if tail == lead:
                raise InternalInconsistency("basis element reduced to zero")
            out.append((lead, tail))
        out.sort(key=lambda bt: (p.degree(bt[0]), -bt[0]))
        return out


def groebner(packing: Packing, generators: Iterable[tuple[int, int]], saturate=None,
             max_degree: int | None = None, max_elements: int | None = None) -> list[tuple[int, int]]:
    run = Buchberger(packing, saturate=saturate, max_degree=max_degree, max_elements=max_elements)
    for u, v in generators:
        run.add_generator(u, v)
    run.run()
    return run.reduced_basis()


def s_pairs_reduce_to_zero(packing: Packing, basis: list[tuple[int, int]]) -> bool:
    """Post-hoc Buchberger criterion over every pair of ``basis``.

    Pairs with coprime leads are skipped; their S-binomials always reduce to zero.
    """
    red = Reducer(packing)
    for k, (lead, tail) in enumerate(basis):
        red.add(k, lead, tail)
    p = packing
    for a in range(len(basis)):
        la, ta = basis[a]
        for b in range(a + 1, len(basis)):
            lb, tb = basis[b]
            if p.degree(p.gcd(la, lb)) == 0:
                continue
            L = p.lcm(la, lb)
            u = red.normal_form(L - la + ta)
            v = red.normal_form(L - lb + tb)
            if u != v:
                return False
    return True


def is_reduced(packing: Packing, basis: list[tuple[int, int]]) -> bool:
    p = packing
    for a, (la, ta) in enumerate(basis):
        if not p.greater(la, ta):
            return False
        for b, (lb, _) in enumerate(basis):
            if a != b and (p.divides(lb, la) or p.divides(lb, ta)):
                return False
    return True

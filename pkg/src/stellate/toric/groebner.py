"""Toric ideal of the stable set polytope: Groebner bases and quadratic generation."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import BudgetExceeded, DomainError, InternalInconsistency
from ..graph import StableSetIndex
from . import lattice
from .buchberger import Buchberger, Reducer, groebner, is_reduced, s_pairs_reduce_to_zero
from .monomials import Binomial, ExponentVector, MonomialOrder, Packing

DEFAULT_MAX_VARS = 200


def spread(mask: int) -> int:
    """Vertex bitset -> packed vertex-count vector (4 bits per vertex)."""
    out = 0
    v = 0
    while mask:
        if mask & 1:
            out |= 1 << (4 * v)
        mask >>= 1
        v += 1
    return out


def pi_image(idx: StableSetIndex, u: ExponentVector) -> tuple[int, ...]:
    """Exponent vector of ``pi(x^u)`` in ``t_1..t_n, s``."""
    n = idx.graph.n
    counts = [0] * (n + 1)
    for var, e in u.exps:
        s = idx.sets[var]
        for v in range(n):
            if s >> v & 1:
                counts[v] += e
        counts[n] += e
    return tuple(counts)


def in_toric_ideal(idx: StableSetIndex, b: Binomial) -> bool:
    return pi_image(idx, b.lead) == pi_image(idx, b.tail)


def check_binomial(idx: StableSetIndex, b: Binomial, require_coprime: bool = True) -> None:
    if not in_toric_ideal(idx, b):
        raise InternalInconsistency(f"binomial {b} is not in the toric ideal")
    if require_coprime and b.lead.gcd(b.tail).degree:
        raise InternalInconsistency(f"binomial {b} has a common factor")


@dataclass
class GroebnerBasis:
    """Reduced Groebner basis of a toric ideal under a fixed order."""

    order: MonomialOrder
    elements: tuple[Binomial, ...]
    index: StableSetIndex | None = None
    reduced: bool = True
    _reducer: Reducer | None = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def max_degree(self) -> int:
        return max((b.degree for b in self.elements), default=0)

    @property
    def packing(self) -> Packing:
        return self.reducer.p

    @property
    def reducer(self) -> Reducer:
        if self._reducer is None:
            p = Packing(self.order)
            red = Reducer(p)
            for k, b in enumerate(self.elements):
                red.add(k, p.pack(b.lead), p.pack(b.tail))
            self._reducer = red
        return self._reducer

    def packed(self) -> list[tuple[int, int]]:
        p = self.packing
        return [(p.pack(b.lead), p.pack(b.tail)) for b in self.elements]

    def degree_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = defaultdict(int)
        for b in self.elements:
            hist[b.degree] += 1
        return dict(sorted(hist.items()))


def _to_binomials(p: Packing, basis: Sequence[tuple[int, int]]) -> tuple[Binomial, ...]:
    return tuple(Binomial(p.unpack(a), p.unpack(b)) for a, b in basis)


def _vector_binomial(p: Packing, u: Sequence[int]) -> tuple[int, int]:
    pos = neg = 0
    for var, c in enumerate(u):
        if c > 0:
            pos += c << p.shift[var]
        elif c < 0:
            neg += (-c) << p.shift[var]
    return pos, neg


def toric_groebner(idx: StableSetIndex, order: MonomialOrder | None = None,
                   max_vars: int = DEFAULT_MAX_VARS, method: str = "structured",
                   lattice_basis: Sequence[Sequence[int]] | None = None,
                   verify: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the toric ideal ``I_G`` under ``order``.

    ``method="structured"`` starts from :func:`lattice.structured_kernel_basis`;
    its binomial ideal agrees with ``I_G`` after inverting the empty-set
    variable, so a single saturation (empty-set variable cheapest, common
    factors stripped on the fly) suffices.  ``method="saturate-all"`` starts
    from a general kernel basis (exact integer elimination unless
    ``lattice_basis`` is given) and saturates one variable per round.  Both
    end with Buchberger completion and autoreduction under ``order``.
    """
    m = len(idx)
    if m > max_vars:
        raise BudgetExceeded(f"{m} stable-set variables exceed the budget of {max_vars}",
                             lower_bound=m)
    if order is None:
        order = MonomialOrder.default(m)
    if order.num_vars != m:
        raise DomainError("order and index disagree on the number of variables")

    if method == "structured":
        basis_vectors = lattice.structured_kernel_basis(idx)
        if lattice_basis is not None:
            if sorted(map(list, lattice_basis)) != sorted(basis_vectors):
                raise DomainError("the structured method only accepts a reordering of its own basis")
            basis_vectors = lattice_basis
        empty = idx.position[0]
        sat_order = order.with_cheapest(empty)
        p = Packing(sat_order)
        gens = [_vector_binomial(p, u) for u in basis_vectors]
        current = groebner(p, gens, saturate="all")
    elif method == "saturate-all":
        if lattice_basis is None:
            lattice_basis = lattice.integer_kernel_basis(lattice.configuration_matrix(idx))
        p = Packing(order)
        current = [_vector_binomial(p, u) for u in lattice_basis]
        for var in range(m):
            q = Packing(order.with_cheapest(var))
            gens = [(q.pack(p.unpack(a)), q.pack(p.unpack(b))) for a, b in current]
            current = groebner(q, gens, saturate=var)
            p = q
    else:
        raise DomainError(f"unknown method {method!r}")

    target = Packing(order)
    if p.order != order or method != "structured":
        gens = [(target.pack(p.unpack(a)), target.pack(p.unpack(b))) for a, b in current]
        current = groebner(target, gens, saturate="all")
    gb = GroebnerBasis(order, _to_binomials(target, current), idx)
    if verify:
        verify_groebner(gb)
    return gb


def verify_groebner(gb: GroebnerBasis) -> None:
    """Post-hoc checks: membership, coprime sides, reducedness, S-pairs."""
    p = gb.packing
    packed = gb.packed()
    for b in gb.elements:
        if gb.index is not None:
            check_binomial(gb.index, b)
    if not is_reduced(p, packed):
        raise InternalInconsistency("basis is not reduced")
    if not s_pairs_reduce_to_zero(p, packed):
        raise InternalInconsistency("an S-pair does not reduce to zero")


def normal_form(f, gb: GroebnerBasis):
    """Normal form of a monomial or binomial modulo ``gb``.

    A monomial (:class:`ExponentVector`) maps to its standard monomial; a
    binomial or ``(u, v)`` pair maps to the reduced binomial, or ``None``
    when it reduces to zero.
    """
    red = gb.reducer
    p = red.p
    if isinstance(f, ExponentVector):
        return p.unpack(red.normal_form(p.pack(f)))
    u, v = (f.lead, f.tail) if isinstance(f, Binomial) else f
    a, b = red.normal_form(p.pack(u)), red.normal_form(p.pack(v))
    if a == b:
        return None
    return Binomial(p.unpack(a), p.unpack(b)).oriented(gb.order)


def quadratic_binomials(idx: StableSetIndex, order: MonomialOrder | None = None) -> list[Binomial]:
    """Every relation ``x_i x_j - x_k x_l`` with equal rho-sums, via fiber hashing.

    Oriented with the larger side first under ``order`` (default order when
    omitted); sorted by that order.
    """
    m = len(idx)
    if order is None:
        order = MonomialOrder.default(m)
    sp = [spread(s) for s in idx.sets]
    fibers: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i in range(m):
        si = sp[i]
        for j in range(i + 1, m):
            fibers[si + sp[j]].append((i, j))
    out = []
    for pairs in fibers.values():
        if len(pairs) < 2:
            continue
        for a in range(len(pairs)):
            for b in range(a + 1, len(pairs)):
                u = ExponentVector.from_vars(pairs[a])
                v = ExponentVector.from_vars(pairs[b])
                out.append(Binomial(u, v).oriented(order))
    out.sort(key=lambda bn: (order.key(bn.lead), order.key(bn.tail)), reverse=True)
    return out


@dataclass
class QuadraticGeneration:
    """Verdict of :func:`is_quadratically_generated`; truthy iff quadratic."""

    quadratic: bool
    witness: Binomial | None
    basis: GroebnerBasis

    def __bool__(self):
        return self.quadratic


def quadratic_part_basis(idx: StableSetIndex, order: MonomialOrder, max_degree: int):
    """Degree-truncated Groebner basis of the ideal generated by all
    quadratic binomials (no saturation: that ideal need not be prime)."""
    p = Packing(order)
    gens = [(p.pack(b.lead), p.pack(b.tail)) for b in quadratic_binomials(idx, order)]
    run = Buchberger(p, saturate=None, max_degree=max_degree)
    for u, v in gens:
        run.add_generator(u, v)
    run.run()
    return run


def is_quadratically_generated(idx: StableSetIndex, order: MonomialOrder | None = None,
                               max_vars: int = DEFAULT_MAX_VARS,
                               gb: GroebnerBasis | None = None) -> QuadraticGeneration:
    """Decide whether ``I_G`` is generated by its quadratic binomials.

    ``I_G`` is homogeneous and its reduced Groebner basis generates it, so it is
    quadratically generated iff every basis element lies in the ideal ``J`` of
    all quadratic binomials; membership uses a basis of ``J`` truncated at the
    top Groebner degree.  On failure the witness is the first basis element
    (by degree, then order) outside ``J``.
    """
    if gb is None:
        gb = toric_groebner(idx, order, max_vars=max_vars)
    order = gb.order
    if gb.max_degree <= 2:
        return QuadraticGeneration(True, None, gb)
    run = quadratic_part_basis(idx, order, gb.max_degree)
    red = run.reducer
    p = run.p
    for b in sorted(gb.elements, key=lambda bn: (bn.degree, order.key(bn.lead))):
        if b.degree <= 2:
            continue
        if red.normal_form(p.pack(b.lead)) != red.normal_form(p.pack(b.tail)):
            return QuadraticGeneration(False, b, gb)
    return QuadraticGeneration(True, None, gb)


@dataclass(frozen=True)
class InitialIdealProfile:
    max_degree: int
    quadratic: bool
    squarefree: bool
    leads: tuple[ExponentVector, ...]


def initial_ideal_profile(gb: GroebnerBasis) -> InitialIdealProfile:
    leads = tuple(b.lead for b in gb.elements)
    return InitialIdealProfile(
        max_degree=max((u.degree for u in leads), default=0),
        quadratic=all(u.degree <= 2 for u in leads),
        squarefree=all(u.is_squarefree() for u in leads),
        leads=leads,
    )

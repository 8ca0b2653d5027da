"""Exponent vectors, binomials and graded reverse-lexicographic orders.

Public values are sparse and immutable.  The Buchberger engine works on a
packed encoding (:class:`Packing`): one 9-bit field per variable (8 value
bits plus a guard bit) inside a Python int, with the *cheapest* variable in
the most significant field.  With that layout, for monomials of equal degree
the larger one in the order is the numerically smaller int, and divisibility,
lcm and gcd are a handful of big-int operations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from ..errors import BudgetExceeded, DomainError

FIELD_BITS = 9
MAX_EXPONENT = 255


@dataclass(frozen=True, order=True)
class ExponentVector:
    """Sparse monomial: sorted ``(variable, exponent)`` pairs, exponents > 0."""

    exps: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "ExponentVector":
        return cls(tuple(sorted((v, e) for v, e in d.items() if e)))

    @classmethod
    def from_vars(cls, variables: Iterable[int]) -> "ExponentVector":
        d: dict[int, int] = {}
        for v in variables:
            d[v] = d.get(v, 0) + 1
        return cls.from_dict(d)

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def variables(self) -> list[int]:
        """The monomial as a sorted multiset of variable indices."""
        return [v for v, e in self.exps for _ in range(e)]

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def divides(self, other: "ExponentVector") -> bool:
        od = other.as_dict()
        return all(od.get(v, 0) >= e for v, e in self.exps)

    def __mul__(self, other: "ExponentVector") -> "ExponentVector":
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return ExponentVector.from_dict(d)

    def gcd(self, other: "ExponentVector") -> "ExponentVector":
        od = other.as_dict()
        return ExponentVector.from_dict({v: min(e, od.get(v, 0)) for v, e in self.exps})

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in self.exps)


@dataclass(frozen=True)
class Binomial:
    """``lead - tail``; ``lead`` is the larger side under the order it came from."""

    lead: ExponentVector
    tail: ExponentVector

    def __post_init__(self):
        if self.lead == self.tail:
            raise DomainError("binomial with equal sides is zero")
        if self.lead.degree != self.tail.degree:
            raise DomainError("binomial is not homogeneous")

    @property
    def degree(self) -> int:
        return self.lead.degree

    def sides(self) -> frozenset:
        return frozenset((self.lead, self.tail))

    def oriented(self, order: "MonomialOrder") -> "Binomial":
        if order.compare(self.lead, self.tail) >= 0:
            return self
        return Binomial(self.tail, self.lead)

    def __str__(self):
        return f"{self.lead} - {self.tail}"


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse-lex order given by a variable priority.

    ``priority[0]`` is the cheapest variable, ``priority[-1]`` the most
    expensive.  ``u > v`` iff ``deg u > deg v``, or the degrees agree and at the
    first variable (cheapest first) where the exponents differ, ``u`` has the
    smaller exponent.
    """

    priority: tuple[int, ...]
    kind: str = "grevlex"

    def __post_init__(self):
        if sorted(self.priority) != list(range(len(self.priority))):
            raise DomainError("priority must be a permutation of the variables")
        if self.kind != "grevlex":
            raise DomainError(f"unsupported order kind {self.kind!r}")

    @classmethod
    def default(cls, m: int) -> "MonomialOrder":
        return cls(tuple(range(m)))

    @classmethod
    def random(cls, m: int, rng: random.Random) -> "MonomialOrder":
        p = list(range(m))
        rng.shuffle(p)
        return cls(tuple(p))

    @property
    def num_vars(self) -> int:
        return len(self.priority)

    def key(self, u: ExponentVector):
        d = u.as_dict()
        return (u.degree, tuple(-d.get(v, 0) for v in self.priority))

    def compare(self, u: ExponentVector, v: ExponentVector) -> int:
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def with_cheapest(self, var: int) -> "MonomialOrder":
        """Same relative priorities, but ``var`` moved to the cheapest slot."""
        return MonomialOrder((var,) + tuple(v for v in self.priority if v != var))


class Packing:
    """Packed-int encoding of monomials for one :class:`MonomialOrder`."""

    def __init__(self, order: MonomialOrder):
        m = order.num_vars
        self.order = order
        self.m = m
        self.shift = [0] * m
        for rank, var in enumerate(order.priority):
            self.shift[var] = (m - 1 - rank) * FIELD_BITS
        low = 0
        for k in range(m):
            low |= 1 << (k * FIELD_BITS)
        self.low = low
        self.guard = low << (FIELD_BITS - 1)
        self.full = low * MAX_EXPONENT
        self.modulus = (1 << FIELD_BITS) - 1
        self.var_at_guard = {self.shift[v] + FIELD_BITS - 1: v for v in range(m)}

    def pack(self, u: ExponentVector) -> int:
        x = 0
        for v, e in u.exps:
            if e > MAX_EXPONENT:
                raise BudgetExceeded(f"exponent {e} exceeds {MAX_EXPONENT}")
            x |= e << self.shift[v]
        return x

    def pack_vars(self, variables: Iterable[int]) -> int:
        x = 0
        for v in variables:
            x += 1 << self.shift[v]
        return x

    def unpack(self, x: int) -> ExponentVector:
        d = {}
        for v in range(self.m):
            e = (x >> self.shift[v]) & MAX_EXPONENT
            if e:
                d[v] = e
        return ExponentVector.from_dict(d)

    def degree(self, x: int) -> int:
        return x % self.modulus

    def divides(self, a: int, b: int) -> bool:
        """True iff monomial ``a`` divides monomial ``b``."""
        g = self.guard
        return ((b | g) - a) & g == g

    def ge_mask(self, a: int, b: int) -> int:
        """Field mask selecting the variables where ``a``'s exponent >= ``b``'s."""
        return ((((a | self.guard) - b) & self.guard) >> (FIELD_BITS - 1)) * MAX_EXPONENT

    def lcm(self, a: int, b: int) -> int:
        mask = self.ge_mask(a, b)
        return (a & mask) | (b & (self.full ^ mask))

    def gcd(self, a: int, b: int) -> int:
        mask = self.ge_mask(a, b)
        return (b & mask) | (a & (self.full ^ mask))

    def support_guards(self, a: int) -> int:
        """Guard bits of the fields where ``a`` is nonzero."""
        return ((a | self.guard) - self.low) & self.guard

    def support(self, a: int) -> list[int]:
        out = []
        s = self.support_guards(a)
        while s:
            low = s & -s
            out.append(self.var_at_guard[low.bit_length() - 1])
            s ^= low
        return out

    def exponent(self, a: int, var: int) -> int:
        return (a >> self.shift[var]) & MAX_EXPONENT

    def greater(self, a: int, b: int) -> bool:
        """``a > b`` in the order (any degrees)."""
        da, db = self.degree(a), self.degree(b)
        if da != db:
            return da > db
        return a < b


def exponent_sum_images(ev: ExponentVector, sets: Sequence[int], n: int) -> tuple[int, ...]:
    """Image of a monomial under ``x_i -> t^rho(S_i) s``: vertex counts plus degree."""
    counts = [0] * (n + 1)
    for var, e in ev.exps:
        s = sets[var]
        for v in range(n):
            if s >> v & 1:
                counts[v] += e
        counts[n] += e
    return tuple(counts)

"""Integer kernels of the stable-set configuration matrix."""

from __future__ import annotations

from typing import Sequence

from ..graph import StableSetIndex


def configuration_matrix(idx: StableSetIndex) -> list[list[int]]:
    """The ``(n+1) x m`` matrix whose column ``i`` is ``(rho(S_i), 1)``."""
    n = idx.graph.n
    rows = [[s >> v & 1 for s in idx.sets] for v in range(n)]
    rows.append([1] * len(idx.sets))
    return rows


def integer_kernel_basis(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """A lattice basis of ``{u in Z^m : A u = 0}`` by exact column operations.

    Unimodular column reduction of ``[A; I]``: once the ``A`` block is in
    column echelon form, the identity-block columns sitting under zero
    ``A``-columns span the kernel lattice.  Arbitrary-precision ints throughout.
    """
    rows = len(matrix)
    m = len(matrix[0]) if rows else 0
    cols = [[matrix[r][c] for r in range(rows)] + [int(c == k) for k in range(m)] for c in range(m)]
    pivot_col = 0
    for r in range(rows):
        if pivot_col >= m:
            break
        # gcd-combine every column from pivot_col onwards into a single nonzero entry at row r
        while True:
            nz = [c for c in range(pivot_col, m) if cols[c][r] != 0]
            if not nz:
                break
            best = min(nz, key=lambda c: abs(cols[c][r]))
            cols[pivot_col], cols[best] = cols[best], cols[pivot_col]
            piv = cols[pivot_col]
            done = True
            for c in range(pivot_col + 1, m):
                a = cols[c][r]
                if a:
                    q = a // piv[r]
                    cols[c] = [x - q * y for x, y in zip(cols[c], piv)]
                    if cols[c][r]:
                        done = False
            if done:
                pivot_col += 1
                break
    return [col[rows:] for col in cols[pivot_col:]]


def structured_kernel_basis(idx: StableSetIndex) -> list[list[int]]:
    """Kernel basis read off the stable sets directly.

    For every stable set ``S`` with ``|S| >= 2``:
    ``x_S * x_empty^(|S|-1) - prod_{j in S} x_{j}``.  The columns of the empty
    set and the singletons form a unimodular basis of the column lattice, so
    these ``m - n - 1`` vectors are a lattice basis of the kernel.
    """
    empty = idx.position[0]
    single = {v: idx.position[1 << v] for v in range(idx.graph.n)}
    basis = []
    for i, s in enumerate(idx.sets):
        k = s.bit_count()
        if k < 2:
            continue
        u = [0] * len(idx.sets)
        u[i] = 1
        u[empty] = k - 1
        for v in range(idx.graph.n):
            if s >> v & 1:
                u[single[v]] -= 1
        basis.append(u)
    return basis


def in_kernel(matrix: Sequence[Sequence[int]], u: Sequence[int]) -> bool:
    return all(sum(a * b for a, b in zip(row, u)) == 0 for row in matrix)


def rank(matrix: Sequence[Sequence[int]]) -> int:
    """Exact rank via fraction-free Gaussian elimination."""
    a = [list(r) for r in matrix]
    if not a:
        return 0
    rk = 0
    ncols = len(a[0])
    for c in range(ncols):
        piv = next((r for r in range(rk, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for r in range(len(a)):
            if r != rk and a[r][c]:
                f, g = a[r][c], a[rk][c]
                a[r] = [g * x - f * y for x, y in zip(a[r], a[rk])]
        rk += 1
    return rk

"""A squarefree quadratic basis from a perfect ordering.

For a perfectly orderable graph, ordering the stable sets lexicographically
along the perfect ordering gives a Groebner basis whose elements are exactly
the greedy exchange binomials.
"""

from stellate.families import hole
from stellate.io import vertex_list
from stellate.recognize import find_perfect_ordering
from stellate.toric import greedy_binomial, initial_ideal_profile, perfect_order_index, toric_groebner


def main():
    g = hole(6)
    order = find_perfect_ordering(g)
    print("perfect ordering (1-based):", [v + 1 for v in order])
    idx, mono = perfect_order_index(g, order)
    for i, s in enumerate(idx.sets):
        print(f"  x{i} = {vertex_list(s)}")

    gb = toric_groebner(idx, mono, verify=True)
    prof = initial_ideal_profile(gb)
    print(f"{len(gb)} basis elements, quadratic={prof.quadratic}, squarefree={prof.squarefree}")
    for b in gb:
        i, j = b.lead.variables()
        assert greedy_binomial(idx, i, j) == b
        print("  ", b)


if __name__ == "__main__":
    main()

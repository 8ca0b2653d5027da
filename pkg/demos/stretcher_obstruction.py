"""Why the prism's toric ideal needs a cubic generator.

Builds the smallest odd stretcher, finds the two degree-3 monomials with the
same image, and shows no quadratic move connects them.
"""

from stellate.families import odd_stretcher, stretcher_witness_sets
from stellate.graph import enumerate_stable_sets
from stellate.io import vertex_list
from stellate.toric import (ExponentVector, fiber, fiber_components, is_quadratically_generated,
                            quadratic_binomials)


def main():
    g = odd_stretcher(1, 1, 1)
    idx = enumerate_stable_sets(g)
    print(f"prism: {g.n} vertices, {g.num_edges} edges, {len(idx)} stable sets")

    sets = stretcher_witness_sets(1, 1, 1)
    print("left  side:", [vertex_list(s) for s in sets[:3]])
    print("right side:", [vertex_list(s) for s in sets[3:]])

    target = ExponentVector.from_vars(idx.position[s] for s in sets[:3])
    mons = fiber(idx, target, 3)
    comps = fiber_components(mons, quadratic_binomials(idx))
    print(f"fiber size {len(mons)}, components under quadratic moves: {len(comps)}")

    res = is_quadratically_generated(idx)
    print("quadratically generated:", res.quadratic)
    print("witness:", res.witness)


if __name__ == "__main__":
    main()

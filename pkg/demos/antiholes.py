"""Odd and even antiholes side by side.

Even antiholes contain a prism-like obstruction; odd ones are generated in
degree two, yet every sampled order still produces a cubic basis element.
"""

import random

from stellate.families import antihole
from stellate.graph import enumerate_stable_sets
from stellate.toric import MonomialOrder, is_quadratically_generated, toric_groebner


def main():
    for k in range(5, 10):
        idx = enumerate_stable_sets(antihole(k))
        res = is_quadratically_generated(idx)
        print(f"antihole {k}: {len(idx):3d} variables, quadratic={res.quadratic}, "
              f"top basis degree {res.basis.max_degree}")

    idx = enumerate_stable_sets(antihole(7))
    rng = random.Random(1)
    degrees = [toric_groebner(idx, MonomialOrder.random(len(idx), rng)).max_degree for _ in range(10)]
    print("antihole 7, top degree under 10 random orders:", degrees)


if __name__ == "__main__":
    main()

"""Colouring a Meyniel graph by contracting even pairs.

Each step merges an even pair chosen by the neighbourhood rule; at the end
the graph is a clique, and unwinding the merges colours the original graph
with clique-number many colours.
"""

from stellate.contract import hertz_color, trace_pairs_are_even
from stellate.families import random_family
from stellate.graph import clique_number
from stellate.io import vertex_list


def main():
    g = random_family("meyniel", 8, seed=3)
    print(f"graph: n={g.n}, edges={g.edges()}")
    run = hertz_color(g, seed=0)
    for step in run.trace.steps:
        print(f"  contract {step.v + 1} and {step.w + 1} in a graph on {step.graph.n} vertices")
    print("colouring:", run.coloring)
    print("colours used:", run.num_colors, "clique number:", clique_number(g))
    print("every contracted pair was even:", trace_pairs_are_even(run.trace))
    print("stable set meeting all maximal cliques:", vertex_list(run.stable_set))


if __name__ == "__main__":
    main()

"""Check every connected graph on up to six vertices.

Each graph is classified by comparing its quadratic-generation verdict with
the presence of even antiholes and odd stretchers.
"""

import sys

from stellate.sweep import sweep


def main(max_n=6):
    state = sweep(max_n=max_n, check_conjecture1=True)
    print(f"{state.cursor} graphs")
    for verdict, count in sorted(state.tallies.items()):
        print(f"  {verdict:24s} {count}")
    print("counterexamples:", state.counterexamples or "none")
    print("contractibility discrepancies:", state.conjecture1_discrepancies or "none")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)

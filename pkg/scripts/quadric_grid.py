"""Print the Betti numbers and the top-degree bound for every quadric rank.

    python3 scripts/quadric_grid.py [--max-n 8]
"""

import argparse

from hsurf.invariants import betti_bounds_table, quadric_table
from hsurf.profile import quadric_profile


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()
    print(f"{'n':>2} {'q':>2} {'s':>2}  {'bound':>5}  betti")
    for n in range(3, args.max_n + 1):
        for q in range(4, n + 2):
            s = n + 1 - q
            Q = [[1 if i == j and i < q else 0 for j in range(n + 2)] for i in range(n + 2)]
            top = betti_bounds_table(quadric_profile(n, Q))[n + s + 1]
            ranks = quadric_table(n, q).ranks()
            print(f"{n:>2} {q:>2} {s:>2}  {top.rank_hi:>5}  {' '.join(map(str, ranks))}")


if __name__ == "__main__":
    main()

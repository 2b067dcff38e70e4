"""Time the rank solver against brute-force enumeration on every small sequence.

    python3 scripts/solver_sweep.py [--max-len 6] [--max-rank 7] [--cap 10]
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from hsurf.sequences import ExactSequenceSpec, solve_ranks  # noqa: E402
from oracles import all_specs, brute_force_intervals  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-len", type=int, default=6)
    ap.add_argument("--max-rank", type=int, default=7)
    ap.add_argument("--cap", type=int, default=10)
    args = ap.parse_args()
    start = time.perf_counter()
    total = mismatches = infeasible = 0
    for values in all_specs(args.max_len, args.max_rank, 2):
        seq = ExactSequenceSpec.from_values(values)
        sol = solve_ranks(seq, upper={u: args.cap for u in seq.unknowns})
        got = sol.intervals if sol.feasible else None
        infeasible += got is None
        if got != brute_force_intervals(values, args.cap):
            mismatches += 1
            print("mismatch:", values, got)
        total += 1
    print(f"{total} sequences, {infeasible} infeasible, {mismatches} mismatches, "
          f"{time.perf_counter() - start:.1f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

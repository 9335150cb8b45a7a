#!/usr/bin/env python3
"""Compare the compiled and pure-Python belief-ranking kernels.

Workload: rank every belief for every valid cover over an n-feature
junction-style world, i.e. the inner loop behind `search-sensors`.  Both
kernels receive identical inputs; outputs are cross-checked while timing.
"""

import argparse
import time

from cover_lattice import _fixpoint_py, make_universe
from cover_lattice.enumeration import canonical_masks, iter_covers
from cover_lattice.planning import PlanningProblem, _post_list

try:
    from cover_lattice import _fixpoint
except ImportError:
    _fixpoint = None


def junction_like(n: int) -> PlanningProblem:
    """Goal next to two junctions; remaining states sink.  Scales the 4-state shape."""
    u = make_universe([str(i + 1) for i in range(n)])
    goal = 2  # state "2"
    sink = 1 << (n - 1)
    left = tuple(goal if i in (0, 1) else sink for i in range(n))
    right = tuple(goal if i in (1, 2) else sink for i in range(n))
    return PlanningProblem(u, ("left", "right"), (left, right), 1 | 4, goal)


def run(kernel, problem, cover_masks) -> tuple[float, int]:
    n = problem.universe.n
    goal = problem.goal
    acount = len(problem.actions)
    post = _post_list(problem)
    solved = 0
    start = time.perf_counter()
    for masks in cover_masks:
        ranks = kernel(n, goal, masks, acount, post)
        if ranks[problem.initial] >= 0:
            solved += 1
    return time.perf_counter() - start, solved


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--features", type=int, default=4, choices=(3, 4))
    parser.add_argument("--repeat", type=int, default=3, help="best-of timing repeats")
    args = parser.parse_args()

    problem = junction_like(args.features)
    covers = [list(c.masks) for c in iter_covers(problem.universe)]
    print(
        f"workload: {len(covers)} covers over {args.features} features "
        f"({len(canonical_masks(problem.universe))} candidate pre-images)"
    )

    kernels = [("pure", _fixpoint_py.rank_table)]
    if _fixpoint is not None:
        kernels.append(("compiled", _fixpoint.rank_table))
    else:
        print("compiled kernel not built; timing the pure kernel only")

    timings = {}
    solved_counts = set()
    for name, kernel in kernels:
        best = min(run(kernel, problem, covers) for _ in range(args.repeat))
        timings[name] = best[0]
        solved_counts.add(best[1])
        per_cover = best[0] / len(covers) * 1e6
        print(f"{name:>9}: {best[0]:8.3f} s total, {per_cover:8.2f} us/cover, {best[1]} solvable")

    if len(solved_counts) != 1:
        raise SystemExit("kernels disagree on the workload!")
    if len(timings) == 2:
        print(f"  speedup: {timings['pure'] / timings['compiled']:.1f}x compiled over pure")


if __name__ == "__main__":
    main()

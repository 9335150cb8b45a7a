"""Shared helpers and independent oracles for the test suite.

Oracles here deliberately avoid the package's own machinery: covers are
re-derived with ``itertools`` over frozensets, solvability with a top-down
AND-OR path search, counts with closed-form formulas.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import comb

from cover_lattice import Cover, PlanningProblem, make_cover


def C(universe, *sets: str) -> Cover:
    """Cover from compact strings of single-character labels, e.g. C(u, "12", "23")."""
    return make_cover(universe, [list(s) for s in sets])


def cover_count_formula(n: int) -> int:
    """Inclusion-exclusion count of covers over an n-element universe."""
    return sum((-1) ** k * comb(n, k) * 2 ** (2 ** (n - k) - 1) for k in range(n + 1))


def bell_number(n: int) -> int:
    """Number of set partitions, via the Bell triangle."""
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[-1]


def brute_cover_families(labels) -> set[frozenset[frozenset[str]]]:
    """Every family of non-empty label subsets whose union is the label set."""
    labels = tuple(labels)
    subsets = [
        frozenset(s) for k in range(1, len(labels) + 1) for s in combinations(labels, k)
    ]
    out = set()
    for r in range(1, len(subsets) + 1):
        for family in combinations(subsets, r):
            if frozenset().union(*family) == frozenset(labels):
                out.add(frozenset(family))
    return out


def as_family(cover: Cover) -> frozenset[frozenset[str]]:
    return frozenset(frozenset(s) for s in cover.sets())


def fam_bits(index: dict[int, int], cover: Cover) -> int:
    """Cover as one integer: bit i set iff pre-image ``index``-ed i is present."""
    fam = 0
    for m in cover.masks:
        fam |= 1 << index[m]
    return fam


def random_problem(universe, seed: int, n_actions: int = 2) -> PlanningProblem:
    rng = random.Random(seed)
    full = universe.full_mask
    actions = tuple(f"a{i}" for i in range(n_actions))
    transitions = tuple(
        tuple(rng.randint(1, full) for _ in range(universe.n)) for _ in actions
    )
    return PlanningProblem(universe, actions, transitions, rng.randint(1, full), rng.randint(1, full))


def andor_solvable(problem: PlanningProblem, cover: Cover) -> bool:
    """Top-down AND-OR search over execution paths with visited-set pruning.

    Independent oracle for the bottom-up ranking kernel.  A belief repeated
    along the current path is a losing branch; results are memoized per
    (belief, path) pair, which is sound because the path fully determines
    the subtree.
    """
    goal = problem.goal
    acount = len(problem.actions)
    trans = problem.transitions
    readings = cover.masks

    def post(b: int, a: int) -> int:
        out = 0
        row = trans[a]
        while b:
            low = b & -b
            out |= row[low.bit_length() - 1]
            b ^= low
        return out

    memo: dict[tuple[int, frozenset], bool] = {}

    def win(b: int, path: frozenset) -> bool:
        if not b & ~goal:
            return True
        if b in path:
            return False
        key = (b, path)
        cached = memo.get(key)
        if cached is not None:
            return cached
        deeper = path | {b}
        result = all(
            any(win(post(b & r, a), deeper) for a in range(acount))
            for r in readings
            if b & r
        )
        memo[key] = result
        return result

    return win(problem.initial, frozenset())

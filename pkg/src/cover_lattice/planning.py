"""Worst-case nondeterministic planning in belief space.

The execution loop is: test the goal, sense, act, repeat.  The adversary
picks any reading whose pre-image meets the current belief and resolves
every transition, so sensing intersects the belief with the reading's
pre-image and acting unions the successor sets.  A cover's operational
value is exactly the set of beliefs from which this game is winnable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import _kernel
from .core import Cover, FeatureUniverse
from .errors import SizeGuardError, UniverseMismatchError, UnsolvableError, ValidationError

__all__ = [
    "Belief",
    "PlanningProblem",
    "Policy",
    "PolicyFailure",
    "TraceStep",
    "extract_policy",
    "find_policy_counterexample",
    "make_problem",
    "maximal_solvable_covers",
    "solvable",
    "verify_policy",
    "winning_beliefs",
]

MAX_STATES = 16
SEARCH_LIMIT = 4

Belief = frozenset


@dataclass(frozen=True)
class PlanningProblem:
    """States (= world features), nondeterministic actions, initial belief, goal region.

    ``transitions[a][s]`` is the successor-set bitmask of state ``s`` under
    action ``actions[a]`` and must be non-empty for every pair; model an
    unavailable action as a self-loop or a sink.
    """

    universe: FeatureUniverse
    actions: tuple[str, ...]
    transitions: tuple[tuple[int, ...], ...]
    initial: int
    goal: int

    def __post_init__(self):
        object.__setattr__(self, "actions", tuple(self.actions))
        object.__setattr__(self, "transitions", tuple(tuple(row) for row in self.transitions))
        full = self.universe.full_mask
        n = self.universe.n
        if len(set(self.actions)) != len(self.actions):
            raise ValidationError("duplicate action label")
        for a in self.actions:
            if not isinstance(a, str) or not a:
                raise ValidationError(f"action labels must be non-empty strings, got {a!r}")
        if len(self.transitions) != len(self.actions):
            raise ValidationError("one transition row per action required")
        for label, row in zip(self.actions, self.transitions):
            if len(row) != n:
                raise ValidationError(
                    f"action {label!r} must define successors for all {n} states"
                )
            for s, succ in enumerate(row):
                if succ == 0:
                    raise ValidationError(
                        f"empty successor set for state {self.universe.labels[s]!r} "
                        f"under action {label!r}"
                    )
                if succ & ~full:
                    raise ValidationError("successor set not within universe")
        for name, mask in (("initial", self.initial), ("goal", self.goal)):
            if mask == 0:
                raise ValidationError(f"{name} belief must be non-empty")
            if mask & ~full:
                raise ValidationError(f"{name} belief not within universe")

    @property
    def initial_states(self) -> Belief:
        return frozenset(self.universe.labels_of(self.initial))

    @property
    def goal_states(self) -> Belief:
        return frozenset(self.universe.labels_of(self.goal))


def make_problem(
    universe: FeatureUniverse | Iterable[str],
    actions: Iterable[str],
    transition: Mapping[str, Mapping[str, Iterable[str]]],
    initial: Iterable[str],
    goal: Iterable[str],
) -> PlanningProblem:
    """Build a problem from label-keyed data.

    ``transition[state][action]`` lists the possible successor states and
    must be defined for every state/action pair.
    """
    if not isinstance(universe, FeatureUniverse):
        universe = FeatureUniverse(universe)
    actions = tuple(actions)
    rows = []
    for a in actions:
        row = []
        for state in universe.labels:
            try:
                successors = transition[state][a]
            except (KeyError, TypeError):
                raise ValidationError(
                    f"transition undefined for state {state!r} and action {a!r}"
                ) from None
            row.append(universe.mask_of(successors))
        rows.append(tuple(row))
    return PlanningProblem(
        universe, actions, tuple(rows), universe.mask_of(initial), universe.mask_of(goal)
    )


@dataclass(frozen=True)
class Policy:
    """Belief-indexed plan with a steps-to-goal certificate.

    ``action_of`` is keyed by post-sensing beliefs.  ``rank_of`` ranks
    every belief reachable at the top of the execution loop; ranks
    strictly decrease along adversarial branches until the belief enters
    the goal.
    """

    action_of: Mapping[Belief, str]
    rank_of: Mapping[Belief, int]


@dataclass(frozen=True)
class TraceStep:
    """One adversarial round: pre-sensing belief, reading received, action taken."""

    belief: Belief
    reading: Belief
    action: str | None


@dataclass(frozen=True)
class PolicyFailure:
    """Counterexample branch: the rounds taken and the belief where execution breaks."""

    reason: str  # "missing-action" or "cycle"
    steps: tuple[TraceStep, ...]
    belief: Belief


def _check_pair(p: PlanningProblem, c: Cover) -> None:
    if p.universe != c.universe:
        raise UniverseMismatchError("cover and problem are over different universes")
    if p.universe.n > MAX_STATES:
        raise SizeGuardError(
            f"belief fixpoint limited to {MAX_STATES} states (got {p.universe.n})"
        )


@lru_cache(maxsize=64)
def _post_list(p: PlanningProblem) -> list[int]:
    """``post[b * len(actions) + a]``: belief reached from ``b`` by action ``a``."""
    n = p.universe.n
    acount = len(p.actions)
    post = [0] * ((1 << n) * acount)
    trans = p.transitions
    for b in range(1, 1 << n):
        low = b & -b
        s = low.bit_length() - 1
        rest_base = (b ^ low) * acount
        base = b * acount
        for a in range(acount):
            post[base + a] = post[rest_base + a] | trans[a][s]
    return post


def _ranks(p: PlanningProblem, c: Cover) -> list[int]:
    return _kernel.rank_table(
        p.universe.n, p.goal, list(c.masks), len(p.actions), _post_list(p)
    )


def winning_beliefs(p: PlanningProblem, c: Cover) -> set[Belief]:
    """Beliefs from which some policy guarantees reaching the goal under ``c``."""
    _check_pair(p, c)
    ranks = _ranks(p, c)
    labels_of = p.universe.labels_of
    return {
        frozenset(labels_of(b)) for b in range(1, 1 << p.universe.n) if ranks[b] >= 0
    }


def solvable(p: PlanningProblem, c: Cover) -> bool:
    """True iff the initial belief is winning under ``c``."""
    _check_pair(p, c)
    return _ranks(p, c)[p.initial] >= 0


def extract_policy(p: PlanningProblem, c: Cover) -> Policy:
    """Rank-greedy policy for a solvable problem/cover pair.

    At each post-sensing belief the action minimizing the successor rank
    is chosen, ties broken by action order, so ranks strictly decrease
    along every adversarial branch.  Raises ``UnsolvableError`` when the
    initial belief is not winning.
    """
    _check_pair(p, c)
    ranks = _ranks(p, c)
    if ranks[p.initial] < 0:
        raise UnsolvableError("no guaranteed plan under this cover")
    acount = len(p.actions)
    post = _post_list(p)
    goal = p.goal
    labels_of = p.universe.labels_of

    def belief(mask: int) -> Belief:
        return frozenset(labels_of(mask))

    chosen: dict[int, int] = {}
    action_of: dict[Belief, str] = {}
    rank_of: dict[Belief, int] = {belief(p.initial): ranks[p.initial]}
    seen = {p.initial}
    stack = [p.initial]
    while stack:
        b = stack.pop()
        if not b & ~goal:
            continue
        for r in c.masks:
            br = b & r
            if not br:
                continue
            a_idx = chosen.get(br)
            if a_idx is None:
                base = br * acount
                best_rank = None
                for a in range(acount):
                    ra = ranks[post[base + a]]
                    if ra >= 0 and (best_rank is None or ra < best_rank):
                        best_rank = ra
                        a_idx = a
                assert a_idx is not None, "reachable post-sensing belief has no safe action"
                chosen[br] = a_idx
                action_of[belief(br)] = p.actions[a_idx]
            nb = post[br * acount + a_idx]
            if nb not in seen:
                seen.add(nb)
                rank_of[belief(nb)] = ranks[nb]
                stack.append(nb)
    return Policy(action_of, rank_of)


def find_policy_counterexample(
    p: PlanningProblem, c: Cover, pol: Policy
) -> PolicyFailure | None:
    """Adversarial branch on which ``pol`` fails, or ``None`` if it always wins.

    Exhaustive traversal over readings with on-path cycle detection; a
    repeated belief means that branch never reaches the goal.  Independent
    of the ranking kernel, so it doubles as that kernel's oracle.
    """
    _check_pair(p, c)
    mask_of = p.universe.mask_of
    labels_of = p.universe.labels_of
    amap: dict[int, int] = {}
    for b, a in pol.action_of.items():
        try:
            a_idx = p.actions.index(a)
        except ValueError:
            raise ValidationError(f"policy uses unknown action {a!r}") from None
        amap[mask_of(b)] = a_idx
    acount = len(p.actions)
    post = _post_list(p)
    goal = p.goal

    def belief(mask: int) -> Belief:
        return frozenset(labels_of(mask))

    def make_frame(b: int) -> list:
        return [b, [(r, b & r) for r in c.masks if b & r], 0]

    def trace(frames) -> tuple[TraceStep, ...]:
        steps = []
        for fb, branches, idx in frames:
            r, br = branches[idx]
            a_idx = amap.get(br)
            steps.append(
                TraceStep(belief(fb), belief(r), None if a_idx is None else p.actions[a_idx])
            )
        return tuple(steps)

    if not p.initial & ~goal:
        return None
    good: set[int] = set()
    frames = [make_frame(p.initial)]
    onpath = {p.initial}
    while frames:
        frame = frames[-1]
        b, branches, i = frame
        if i == len(branches):
            good.add(b)
            onpath.discard(b)
            frames.pop()
            if frames:
                frames[-1][2] += 1
            continue
        br = branches[i][1]
        a_idx = amap.get(br)
        if a_idx is None:
            return PolicyFailure("missing-action", trace(frames), belief(br))
        nb = post[br * acount + a_idx]
        if not nb & ~goal or nb in good:
            frame[2] += 1
            continue
        if nb in onpath:
            return PolicyFailure("cycle", trace(frames), belief(nb))
        frames.append(make_frame(nb))
        onpath.add(nb)
    return None


def verify_policy(p: PlanningProblem, c: Cover, pol: Policy) -> bool:
    """True iff every adversarial branch from the initial belief reaches the goal."""
    return find_policy_counterexample(p, c, pol) is None


def maximal_solvable_covers(p: PlanningProblem, *, limit: int | None = None) -> set[Cover]:
    """Sub-collection-maximal covers under which the problem stays solvable.

    Worst-case sensing only loses plans when readings are added, so the
    solvable covers are closed under covering sub-collections and a cover
    is maximal iff no single-pre-image extension is solvable.  Applying
    u-inflation to the result regenerates the full solvable set.
    """
    n = p.universe.n
    bound = SEARCH_LIMIT if limit is None else limit
    if n > bound:
        raise SizeGuardError(f"cover search limited to {bound} features (got {n})")
    from .enumeration import canonical_masks, iter_covers

    masks = canonical_masks(p.universe)
    bit = {m: i for i, m in enumerate(masks)}
    solvable_fams: set[int] = set()
    by_fam: dict[int, Cover] = {}
    for cover in iter_covers(p.universe, unbounded=True):
        if solvable(p, cover):
            fam = 0
            for m in cover.masks:
                fam |= 1 << bit[m]
            solvable_fams.add(fam)
            by_fam[fam] = cover
    width = len(masks)
    out = set()
    for fam, cover in by_fam.items():
        if not any(
            not fam >> j & 1 and (fam | (1 << j)) in solvable_fams for j in range(width)
        ):
            out.add(cover)
    return out

"""Star-closure, its equivalence classes, the combined ordering, and partitions.

The star-closure adds every finer reading (non-empty subset) of each
pre-image until a fixed point is reached.  Goal attainment under
worst-case sensing is driven by the coarsest reading, so closing a cover
this way never changes what it can solve; covers with equal closures form
one equivalence class.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Cover, FeatureUniverse, bits
from .errors import SizeGuardError, ValidationError
from .order import _check_universes, meet

__all__ = [
    "OrderDiagram",
    "StarClass",
    "canonical_rep",
    "class_members",
    "is_partition",
    "partition_slice",
    "proceeds",
    "quotient_meet",
    "refines",
    "star_class",
    "star_closure",
    "star_equivalent",
    "star_subsumes",
]

MAX_PREIMAGE_BITS = 20
MAX_CLASS_EXTRA = 20
PARTITION_SLICE_LIMIT = 6


def star_closure(v: Cover, *, max_preimage_size: int = MAX_PREIMAGE_BITS) -> Cover:
    """Downward closure: every non-empty subset of every pre-image of ``v``.

    Idempotent and extensive; guarded because a pre-image of size ``s``
    contributes ``2**s - 1`` subsets.
    """
    if v._closure is not None:
        return v._closure
    widest = max(m.bit_count() for m in v.masks)
    if widest > max_preimage_size:
        raise SizeGuardError(
            f"a pre-image of size {widest} closes into 2**{widest} subsets "
            f"(limit {max_preimage_size})"
        )
    subsets: set[int] = set()
    labels: dict[int, str] = {}
    for p in v.preimages:
        s = p.mask
        while s:
            subsets.add(s)
            s = (s - 1) & p.mask
        if p.label is not None:
            labels[p.mask] = p.label
    closed = Cover.from_masks(v.universe, subsets, labels)
    closed._closure = closed
    v._closure = closed
    return closed


def star_equivalent(a: Cover, b: Cover) -> bool:
    """True iff the star-closures coincide."""
    _check_universes(a, b)
    return star_closure(a) == star_closure(b)


def canonical_rep(c: Cover) -> Cover:
    """The inclusion-maximal pre-images of ``c``.

    This antichain is star-equivalent to ``c`` and is the unique smallest
    member of its star-equivalence class.
    """
    masks = c.masks
    keep: list[int] = []
    labels: dict[int, str] = {}
    for p in c.preimages:
        if not any(p.mask != m and p.mask & m == p.mask for m in masks):
            keep.append(p.mask)
            if p.label is not None:
                labels[p.mask] = p.label
    return Cover.from_masks(c.universe, keep, labels)


def class_members(c: Cover, *, limit: int = MAX_CLASS_EXTRA) -> set[Cover]:
    """All covers with the same star-closure as ``c``.

    Every member is the canonical representative plus some subset of the
    remaining closure elements, so there are exactly
    ``2**(len(closure) - len(representative))`` of them.
    """
    closed = star_closure(c)
    rep = canonical_rep(c)
    extras = sorted(closed.mask_set - rep.mask_set)
    if len(extras) > limit:
        raise SizeGuardError(
            f"class has 2**{len(extras)} members (limit 2**{limit})"
        )
    members = set()
    base = rep.masks
    for pick in range(1 << len(extras)):
        members.add(Cover.from_masks(c.universe, base + tuple(extras[i] for i in bits(pick))))
    return members


def star_subsumes(a: Cover, b: Cover) -> bool:
    """Subsumption of the star-closures."""
    _check_universes(a, b)
    return star_closure(a).mask_set <= star_closure(b).mask_set


def proceeds(a: Cover, b: Cover) -> bool:
    """The combined ordering: subsumption, or inclusion of the star-closures.

    Closure is monotone, so subsumption is a special case of closure
    inclusion; the fast path just avoids closing comparable pairs.
    Excluding comparable pairs from the closure clause would break
    transitivity, so it is not done here.  A preorder, not a partial
    order: distinct covers with equal closures relate in both directions.
    """
    _check_universes(a, b)
    if a.mask_set <= b.mask_set:
        return True
    return star_closure(a).mask_set <= star_closure(b).mask_set


@dataclass(frozen=True, slots=True)
class StarClass:
    """A star-equivalence class, named by its canonical representative and shared closure."""

    representative: Cover
    closure: Cover


def star_class(c: Cover) -> StarClass:
    """The star-equivalence class of ``c``."""
    return StarClass(canonical_rep(c), star_closure(c))


def quotient_meet(a: Cover, b: Cover) -> StarClass:
    """Class of the meet; well defined because closure distributes over the collection union."""
    return star_class(meet(a, b))


def is_partition(c: Cover) -> bool:
    """True iff the pre-images are pairwise disjoint."""
    return sum(m.bit_count() for m in c.masks) == c.universe.n


def refines(p: Cover, q: Cover) -> bool:
    """True iff every block of partition ``p`` lies inside a block of partition ``q``."""
    _check_universes(p, q)
    for c in (p, q):
        if not is_partition(c):
            raise ValidationError("refines is defined on partitions only")
    return all(any(bm & qm == bm for qm in q.masks) for bm in p.masks)


@dataclass(frozen=True, slots=True)
class OrderDiagram:
    """Nodes plus the immediate-successor edges of an order's transitive reduction."""

    nodes: tuple[Cover, ...]
    edges: frozenset[tuple[Cover, Cover]]


def partition_slice(universe: FeatureUniverse, *, limit: int | None = None) -> OrderDiagram:
    """All partitions of the universe under the refinement order.

    Edge ``(p, q)`` means ``p`` is an immediate refinement of ``q``; finer
    partitions sit higher.  Restricted to partitions, refinement agrees
    with the combined cover ordering.
    """
    bound = PARTITION_SLICE_LIMIT if limit is None else limit
    if universe.n > bound:
        raise SizeGuardError(f"partition slice limited to {bound} features (got {universe.n})")
    from .enumeration import all_partitions

    parts = all_partitions(universe, limit=bound)
    strict = {(a, b) for a in parts for b in parts if a != b and refines(a, b)}
    edges = frozenset(
        (a, b)
        for (a, b) in strict
        if not any(c is not a and c is not b and (a, c) in strict and (c, b) in strict for c in parts)
    )
    return OrderDiagram(parts, edges)

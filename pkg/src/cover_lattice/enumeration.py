"""Exhaustive generation of covers, star classes, and partitions at desk scale.

A universe of ``n`` features has ``2**n - 1`` candidate pre-images, so
covers are subsets of that list filtered for coverage; the default bounds
keep the candidate counts in the tens of thousands.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .core import Cover, FeatureUniverse, bits, preimage_key
from .errors import CycleError, SizeGuardError, UniverseMismatchError, ValidationError
from .order import subsumes
from .star import StarClass, proceeds, star_closure, star_subsumes

__all__ = [
    "all_classes",
    "all_covers",
    "all_partitions",
    "canonical_masks",
    "hasse_edges",
    "iter_covers",
]

COVER_ENUM_LIMIT = 4
CLASS_ENUM_LIMIT = 4
PARTITION_ENUM_LIMIT = 8

ORDERS = {
    "subsumption": subsumes,
    "star": star_subsumes,
    "proceeds": proceeds,
}


def canonical_masks(universe: FeatureUniverse) -> tuple[int, ...]:
    """Every non-empty feature subset, in canonical (cardinality, index) order."""
    return tuple(sorted(range(1, universe.full_mask + 1), key=preimage_key))


def iter_covers(universe: FeatureUniverse, *, unbounded: bool = False) -> Iterator[Cover]:
    """Stream every valid cover exactly once, in canonical order.

    ``2**(2**n - 1)`` candidate collections exist; universes larger than
    ``COVER_ENUM_LIMIT`` features need ``unbounded=True``.
    """
    if not unbounded and universe.n > COVER_ENUM_LIMIT:
        raise SizeGuardError(
            f"cover enumeration limited to {COVER_ENUM_LIMIT} features "
            f"(got {universe.n}); pass unbounded=True to stream anyway"
        )
    masks = canonical_masks(universe)
    full = universe.full_mask
    for k in range(1, len(masks) + 1):
        for combo in combinations(masks, k):
            union = 0
            for m in combo:
                union |= m
            if union == full:
                yield Cover._from_canonical(universe, combo)


def all_covers(universe: FeatureUniverse, *, limit: int | None = None) -> tuple[Cover, ...]:
    """Materialize every valid cover in canonical order (guarded)."""
    bound = COVER_ENUM_LIMIT if limit is None else limit
    if universe.n > bound:
        raise SizeGuardError(
            f"cover enumeration limited to {bound} features (got {universe.n})"
        )
    return tuple(iter_covers(universe, unbounded=True))


def all_classes(universe: FeatureUniverse, *, limit: int | None = None) -> set[StarClass]:
    """One star class per star-equivalence class of covers.

    The class representatives are exactly the covering antichains of
    non-empty subsets, so those are enumerated directly.
    """
    bound = CLASS_ENUM_LIMIT if limit is None else limit
    if universe.n > bound:
        raise SizeGuardError(
            f"class enumeration limited to {bound} features (got {universe.n})"
        )
    out = set()
    for c in iter_covers(universe, unbounded=True):
        masks = c.masks
        antichain = not any(
            a != b and a & b == a for a in masks for b in masks
        )
        if antichain:
            out.add(StarClass(c, star_closure(c)))
    return out


def _iter_index_partitions(n: int) -> Iterator[tuple[int, ...]]:
    # Blocks as bitmasks; element i either joins an existing block or opens
    # a new one, which yields every set partition exactly once.
    blocks: list[int] = []

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(blocks)
            return
        bit = 1 << i
        for j in range(len(blocks)):
            blocks[j] |= bit
            yield from rec(i + 1)
            blocks[j] &= ~bit
        blocks.append(bit)
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def all_partitions(universe: FeatureUniverse, *, limit: int | None = None) -> tuple[Cover, ...]:
    """Every partition of the universe, as covers in canonical order."""
    bound = PARTITION_ENUM_LIMIT if limit is None else limit
    if universe.n > bound:
        raise SizeGuardError(
            f"partition enumeration limited to {bound} features (got {universe.n})"
        )
    parts = [
        Cover.from_masks(universe, blocks) for blocks in _iter_index_partitions(universe.n)
    ]
    parts.sort(key=lambda c: c.canonical_key)
    return tuple(parts)


def hasse_edges(items: Iterable[Cover], order: str = "subsumption") -> set[tuple[Cover, Cover]]:
    """Transitive-reduction edges of the chosen order on ``items``.

    Edge ``(a, b)`` places ``a`` immediately above ``b`` in the diagram.
    ``star`` and ``proceeds`` are preorders in general, so the relation
    must be antisymmetric on ``items``; a violating pair raises
    ``CycleError`` with the witness attached.
    """
    try:
        rel = ORDERS[order]
    except KeyError:
        raise ValidationError(
            f"unknown order {order!r}; choose from {sorted(ORDERS)}"
        ) from None
    nodes = list(dict.fromkeys(items))
    if not nodes:
        return set()
    universe = nodes[0].universe
    for c in nodes[1:]:
        if c.universe != universe:
            raise UniverseMismatchError("covers are over different universes")
    k = len(nodes)
    rows = []
    for i in range(k):
        row = 0
        for j in range(k):
            if i != j and rel(nodes[i], nodes[j]):
                row |= 1 << j
        rows.append(row)
    if order != "subsumption":
        for i in range(k):
            for j in bits(rows[i]):
                if rows[j] >> i & 1:
                    raise CycleError(
                        f"{order} is not antisymmetric on these items: "
                        f"{nodes[i]} and {nodes[j]} relate in both directions",
                        witness=(nodes[i], nodes[j]),
                    )
    edges = set()
    for i in range(k):
        row = rows[i]
        through = 0
        for j in bits(row):
            through |= rows[j]
        for j in bits(row & ~through):
            edges.add((nodes[i], nodes[j]))
    return edges

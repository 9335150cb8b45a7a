"""Universes, pre-images, covers, and sensor maps.

A sensor over a finite feature set is identified with the cover formed by
the pre-images of its readings.  Feature subsets are bitmasks over the
universe's fixed label order, which keeps every derived structure
deterministic and cheap to compare.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .errors import ValidationError

__all__ = [
    "Cover",
    "FeatureUniverse",
    "Preimage",
    "RelationTag",
    "SensorMap",
    "bits",
    "invert_sensor_map",
    "make_cover",
    "make_universe",
    "preimage_key",
]


def bits(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def preimage_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical pre-image sort key: cardinality, then feature indices."""
    return (mask.bit_count(), bits(mask))


class FeatureUniverse:
    """Ordered set of distinct world-feature labels.

    The label order is fixed at construction and defines the bit layout
    used by every subset in the package: feature ``labels[i]`` is bit ``i``.
    """

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValidationError("universe needs at least one feature label")
        index: dict[str, int] = {}
        for pos, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise ValidationError(f"feature labels must be non-empty strings, got {label!r}")
            if label in index:
                raise ValidationError(f"duplicate label: {label}")
            index[label] = pos
        self.labels = labels
        self._index = index

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown feature label: {label!r}") from None

    def mask_of(self, labels: Iterable[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(label)
        return mask

    def labels_of(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def __eq__(self, other):
        return isinstance(other, FeatureUniverse) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"FeatureUniverse({list(self.labels)!r})"


@dataclass(frozen=True, slots=True)
class Preimage:
    """One reading's pre-image as a bitmask, with an optional reading label."""

    mask: int
    label: str | None = None


class Cover:
    """Distinct non-empty pre-images whose union is the whole universe.

    Pre-images are stored in canonical order (cardinality, then feature
    indices); equality and hashing ignore reading labels.
    """

    __slots__ = ("universe", "preimages", "masks", "mask_set", "_key", "_hash", "_closure")

    def __init__(self, universe: FeatureUniverse, preimages: Iterable[Preimage]):
        items = tuple(preimages)
        full = universe.full_mask
        seen: set[int] = set()
        union = 0
        for p in items:
            if p.mask == 0:
                raise ValidationError("empty pre-image")
            if p.mask & ~full:
                raise ValidationError("pre-image not within universe")
            if p.mask in seen:
                raise ValidationError(
                    "duplicate pre-image set: {%s}" % ",".join(universe.labels_of(p.mask))
                )
            seen.add(p.mask)
            union |= p.mask
        if union != full:
            missing = ", ".join(universe.labels_of(full & ~union))
            raise ValidationError(f"uncovered feature(s): {missing}")
        self.universe = universe
        self.preimages = tuple(sorted(items, key=lambda p: preimage_key(p.mask)))
        self.masks = tuple(p.mask for p in self.preimages)
        self.mask_set = frozenset(seen)
        self._key = None
        self._hash = None
        self._closure = None

    @classmethod
    def from_masks(
        cls,
        universe: FeatureUniverse,
        masks: Iterable[int],
        labels: Mapping[int, str] | None = None,
    ) -> "Cover":
        labels = labels or {}
        return cls(universe, [Preimage(m, labels.get(m)) for m in masks])

    @classmethod
    def _from_canonical(cls, universe: FeatureUniverse, masks: tuple[int, ...]) -> "Cover":
        # Trusted fast path for enumeration: masks already distinct, non-empty,
        # covering, and in canonical order.
        c = cls.__new__(cls)
        c.universe = universe
        c.preimages = tuple(Preimage(m) for m in masks)
        c.masks = masks
        c.mask_set = frozenset(masks)
        c._key = None
        c._hash = None
        c._closure = None
        return c

    @property
    def canonical_key(self):
        key = self._key
        if key is None:
            key = (len(self.masks), tuple(preimage_key(m) for m in self.masks))
            self._key = key
        return key

    def sets(self) -> tuple[tuple[str, ...], ...]:
        """The pre-images as label tuples, in canonical order."""
        return tuple(self.universe.labels_of(m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other):
        return (
            isinstance(other, Cover)
            and self.universe == other.universe
            and self.masks == other.masks
        )

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.universe.labels, self.masks))
            self._hash = h
        return h

    def __str__(self):
        return "|".join("{%s}" % ",".join(self.universe.labels_of(m)) for m in self.masks)

    def __repr__(self):
        return f"Cover({self})"


class SensorMap:
    """Many-to-many map from world features to the readings that may occur.

    ``readings`` maps each reading label to the feature set on which the
    reading is possible; every feature must admit at least one reading, so
    the sensor always outputs something.
    """

    __slots__ = ("universe", "readings")

    def __init__(self, universe: FeatureUniverse, readings: Mapping[str, Iterable[str]]):
        if not readings:
            raise ValidationError("sensor map needs at least one reading")
        table: dict[str, int] = {}
        union = 0
        for label, features in readings.items():
            if not isinstance(label, str) or not label:
                raise ValidationError(f"reading labels must be non-empty strings, got {label!r}")
            mask = universe.mask_of(features)
            if mask == 0:
                raise ValidationError(f"reading {label!r} has an empty feature set")
            table[label] = mask
            union |= mask
        if union != universe.full_mask:
            missing = ", ".join(universe.labels_of(universe.full_mask & ~union))
            raise ValidationError(f"feature(s) with no possible reading: {missing}")
        self.universe = universe
        self.readings = dict(sorted(table.items()))

    def __repr__(self):
        body = ", ".join(
            f"{label}->{{{','.join(self.universe.labels_of(mask))}}}"
            for label, mask in self.readings.items()
        )
        return f"SensorMap({body})"


class RelationTag(Enum):
    """How two covers over one universe relate under subsumption."""

    EQUAL = "equal"
    FIRST_SUBSUMES_SECOND = "first-subsumes-second"
    SECOND_SUBSUMES_FIRST = "second-subsumes-first"
    INCOMPARABLE = "incomparable"


def make_universe(labels: Iterable[str]) -> FeatureUniverse:
    """Build a universe from an ordered sequence of distinct labels."""
    return FeatureUniverse(labels)


def make_cover(universe: FeatureUniverse, sets: Iterable[Iterable[str]]) -> Cover:
    """Build a canonical cover from label subsets; duplicate subsets merge.

    Raises ``ValidationError`` for an empty subset, an unknown label, or a
    union that misses part of the universe (the gap is reported by name).
    """
    masks: list[int] = []
    seen: set[int] = set()
    for subset in sets:
        mask = universe.mask_of(subset)
        if mask == 0:
            raise ValidationError("empty pre-image")
        if mask not in seen:
            seen.add(mask)
            masks.append(mask)
    return Cover(universe, [Preimage(m) for m in masks])


def invert_sensor_map(m: SensorMap) -> Cover:
    """The cover formed by the per-reading pre-images.

    Readings with identical pre-images collapse into one pre-image whose
    label concatenates theirs.
    """
    grouped: dict[int, list[str]] = {}
    for label, mask in m.readings.items():
        grouped.setdefault(mask, []).append(label)
    return Cover(m.universe, [Preimage(mask, "+".join(labs)) for mask, labs in grouped.items()])

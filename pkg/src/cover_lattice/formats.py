"""Canonical JSON documents, text renderings, and DOT export.

One JSON layout per value kind; serialization follows the canonical
pre-image order, so parse -> serialize -> parse is the identity and
repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from typing import Any, Iterable, Sequence

from .core import Cover, FeatureUniverse, Preimage, SensorMap
from .errors import SchemaError
from .planning import PlanningProblem, Policy, make_problem
from .stipulations import Stipulation

__all__ = [
    "belief_text",
    "cover_text",
    "covers_doc",
    "export_dot",
    "json_text",
    "parse_document",
    "policy_doc",
    "serialize_document",
]


def cover_text(c: Cover) -> str:
    """Canonical cover string: pre-images in braces, joined by pipes."""
    return str(c)


def belief_text(universe: FeatureUniverse, belief) -> str:
    """Canonical belief string, e.g. ``{1,3}``."""
    mask = belief if isinstance(belief, int) else universe.mask_of(belief)
    return "{%s}" % ",".join(universe.labels_of(mask))


def json_text(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# parsing

def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise SchemaError(path, message)


def _string_array(value, path: str) -> list[str]:
    _expect(isinstance(value, list), path, "expected an array")
    for i, v in enumerate(value):
        _expect(isinstance(v, str), f"{path}[{i}]", "expected a string")
    return value


def _universe_of(doc: dict, path: str = "$") -> FeatureUniverse:
    _expect("universe" in doc, path, "missing key: universe")
    return FeatureUniverse(_string_array(doc["universe"], f"{path}.universe"))


def _cover_body(universe: FeatureUniverse, arr, labels, path: str) -> Cover:
    _expect(isinstance(arr, list), path, "expected an array")
    if labels is not None:
        _expect(isinstance(labels, list), "$.labels", "expected an array")
        _expect(len(labels) == len(arr), "$.labels", "labels must parallel the cover array")
        for i, lab in enumerate(labels):
            _expect(
                lab is None or isinstance(lab, str), f"$.labels[{i}]", "expected a string or null"
            )
    merged: dict[int, str | None] = {}
    order: list[int] = []
    for i, subset in enumerate(arr):
        mask = universe.mask_of(_string_array(subset, f"{path}[{i}]"))
        label = labels[i] if labels is not None else None
        if mask not in merged:
            merged[mask] = label
            order.append(mask)
        elif merged[mask] is None:
            merged[mask] = label
    return Cover(universe, [Preimage(m, merged[m]) for m in order])


def _parse_cover(doc: dict) -> Cover:
    universe = _universe_of(doc)
    return _cover_body(universe, doc["cover"], doc.get("labels"), "$.cover")


def _parse_cover_list(doc: dict) -> tuple[Cover, ...]:
    universe = _universe_of(doc)
    arr = doc["covers"]
    _expect(isinstance(arr, list), "$.covers", "expected an array")
    if "count" in doc:
        _expect(
            isinstance(doc["count"], int) and not isinstance(doc["count"], bool),
            "$.count",
            "expected an integer",
        )
    return tuple(
        _cover_body(universe, body, None, f"$.covers[{i}]") for i, body in enumerate(arr)
    )


def _parse_sensor_map(doc: dict) -> SensorMap:
    universe = _universe_of(doc)
    readings = doc["readings"]
    _expect(isinstance(readings, dict), "$.readings", "expected an object")
    table = {}
    for label, features in readings.items():
        table[label] = _string_array(features, f"$.readings.{label}")
    return SensorMap(universe, table)


def _parse_problem(doc: dict) -> PlanningProblem:
    states = _string_array(doc["states"], "$.states")
    universe = FeatureUniverse(states)
    _expect("actions" in doc, "$", "missing key: actions")
    actions = _string_array(doc["actions"], "$.actions")
    _expect("transition" in doc, "$", "missing key: transition")
    transition = doc["transition"]
    _expect(isinstance(transition, dict), "$.transition", "expected an object")
    for state, row in transition.items():
        _expect(state in states, f"$.transition.{state}", "unknown state")
        _expect(isinstance(row, dict), f"$.transition.{state}", "expected an object")
        for action, succs in row.items():
            _expect(action in actions, f"$.transition.{state}.{action}", "unknown action")
            _string_array(succs, f"$.transition.{state}.{action}")
    _expect("initial" in doc, "$", "missing key: initial")
    _expect("goal" in doc, "$", "missing key: goal")
    return make_problem(
        universe,
        actions,
        transition,
        _string_array(doc["initial"], "$.initial"),
        _string_array(doc["goal"], "$.goal"),
    )


def _parse_stipulation(doc: dict) -> Stipulation:
    sensitive = _string_array(doc["sensitive"], "$.sensitive")
    k = doc.get("max_resolution")
    if k is not None:
        _expect(
            isinstance(k, int) and not isinstance(k, bool),
            "$.max_resolution",
            "expected an integer",
        )
    return Stipulation(frozenset(sensitive), k)


def parse_document(text: str):
    """Parse a JSON document into its domain value.

    Recognizes universe, cover, cover-list, sensor-map, planning-problem,
    and stipulation layouts.  Shape violations raise ``SchemaError`` with a
    JSON path; semantic violations come from the value constructors.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("$", f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SchemaError("$", "document must be a JSON object")
    if "sensitive" in doc:
        return _parse_stipulation(doc)
    if "states" in doc:
        return _parse_problem(doc)
    if "readings" in doc:
        return _parse_sensor_map(doc)
    if "cover" in doc:
        return _parse_cover(doc)
    if "covers" in doc:
        return _parse_cover_list(doc)
    if "universe" in doc:
        return _universe_of(doc)
    raise SchemaError("$", "unrecognized document layout")


# ---------------------------------------------------------------------------
# serialization

def _cover_arrays(c: Cover) -> list[list[str]]:
    return [list(c.universe.labels_of(m)) for m in c.masks]


def _cover_doc(c: Cover) -> dict:
    doc: dict[str, Any] = {
        "universe": list(c.universe.labels),
        "cover": _cover_arrays(c),
    }
    if any(p.label is not None for p in c.preimages):
        doc["labels"] = [p.label for p in c.preimages]
    return doc


def covers_doc(universe: FeatureUniverse, covers: Sequence[Cover]) -> dict:
    """Multi-cover document; also the layout emitted by enumeration commands."""
    return {
        "universe": list(universe.labels),
        "count": len(covers),
        "covers": [_cover_arrays(c) for c in covers],
    }


def _problem_doc(p: PlanningProblem) -> dict:
    labels_of = p.universe.labels_of
    return {
        "states": list(p.universe.labels),
        "actions": list(p.actions),
        "transition": {
            state: {
                action: list(labels_of(p.transitions[ai][si]))
                for ai, action in enumerate(p.actions)
            }
            for si, state in enumerate(p.universe.labels)
        },
        "initial": list(labels_of(p.initial)),
        "goal": list(labels_of(p.goal)),
    }


def _stipulation_doc(s: Stipulation) -> dict:
    doc: dict[str, Any] = {"sensitive": sorted(s.sensitive)}
    if s.max_resolution is not None:
        doc["max_resolution"] = s.max_resolution
    return doc


def _sensor_map_doc(m: SensorMap) -> dict:
    return {
        "universe": list(m.universe.labels),
        "readings": {
            label: list(m.universe.labels_of(mask)) for label, mask in m.readings.items()
        },
    }


def policy_doc(p: PlanningProblem, pol: Policy) -> dict:
    """JSON form of a policy, keyed by canonical belief strings."""
    universe = p.universe

    def sort_key(item):
        mask = universe.mask_of(item[0])
        return (mask.bit_count(), universe.labels_of(mask))

    return {
        "actions": {
            belief_text(universe, b): a for b, a in sorted(pol.action_of.items(), key=sort_key)
        },
        "ranks": {
            belief_text(universe, b): r for b, r in sorted(pol.rank_of.items(), key=sort_key)
        },
    }


def serialize_document(value) -> str:
    """Canonical JSON text for any interchange value."""
    if isinstance(value, Cover):
        doc = _cover_doc(value)
    elif isinstance(value, FeatureUniverse):
        doc = {"universe": list(value.labels)}
    elif isinstance(value, PlanningProblem):
        doc = _problem_doc(value)
    elif isinstance(value, Stipulation):
        doc = _stipulation_doc(value)
    elif isinstance(value, SensorMap):
        doc = _sensor_map_doc(value)
    elif isinstance(value, (tuple, list)):
        if not value:
            raise ValueError("cannot serialize an empty cover sequence without a universe")
        doc = covers_doc(value[0].universe, list(value))
    else:
        raise TypeError(f"cannot serialize values of type {type(value).__name__}")
    return json_text(doc)


# ---------------------------------------------------------------------------
# DOT export

def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(
    nodes: Iterable[Cover],
    edges: Iterable[tuple[Cover, Cover]],
    *,
    name: str = "covers",
) -> str:
    """Deterministic DOT digraph; higher diagram elements are emitted first.

    Node identifiers are canonical cover strings such as ``{1,2}|{2,3}``.
    """
    ordered = sorted(dict.fromkeys(nodes), key=lambda c: c.canonical_key)
    edge_list = sorted(set(edges), key=lambda e: (e[0].canonical_key, e[1].canonical_key))
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for c in ordered:
        lines.append(f'  "{_dot_escape(cover_text(c))}";')
    for a, b in edge_list:
        lines.append(f'  "{_dot_escape(cover_text(a))}" -> "{_dot_escape(cover_text(b))}";')
    lines.append("}")
    return "\n".join(lines) + "\n"

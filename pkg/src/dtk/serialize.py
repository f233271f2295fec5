"""Canonical JSON serialization for instances, networks, trees, knapsacks.

Documents are UTF-8 JSON.  Exact-mode numbers are decimal strings or
"p/q" rational strings; float mode uses plain JSON numbers.  save(...)
emits one canonical byte form so that round-trips are byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import UsageError
from .geom import EXACT, FLOAT, Instance, Point

_MODES = (FLOAT, EXACT)


def fraction_str(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _num_out(value, mode):
    if mode == FLOAT:
        return float(value)
    return fraction_str(value)


def _num_in(value, mode, what):
    if mode == FLOAT:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise UsageError(f"malformed document: {what} must be a JSON number")
        return float(value)
    if isinstance(value, bool) or isinstance(value, float):
        raise UsageError(
            f"malformed document: exact-mode {what} must be a string or integer"
        )
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"malformed document: bad exact number for {what}") from exc
    raise UsageError(f"malformed document: {what} has unsupported type")


def _loads(data) -> dict:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise UsageError(f"malformed document: {exc}") from exc
    if not isinstance(doc, dict):
        raise UsageError("malformed document: top level must be an object")
    return doc


def save_instance(instance: Instance) -> bytes:
    doc = {
        "mode": instance.mode,
        "points": [[_num_out(p.x, instance.mode), _num_out(p.y, instance.mode)]
                   for p in instance.points],
        "root": instance.root,
        "delta": _num_out(instance.delta, instance.mode),
    }
    if instance.cost_bound is not None:
        doc["cost_bound"] = _num_out(instance.cost_bound, instance.mode)
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")


def load_instance(data) -> Instance:
    doc = _loads(data)
    mode = doc.get("mode")
    if mode not in _MODES:
        raise UsageError(f"malformed document: mode must be one of {_MODES}")
    raw_points = doc.get("points")
    if not isinstance(raw_points, list) or not raw_points:
        raise UsageError("malformed document: points must be a non-empty list")
    points = []
    for entry in raw_points:
        if not isinstance(entry, list) or len(entry) != 2:
            raise UsageError("malformed document: each point must be an [x,y] pair")
        points.append(Point(_num_in(entry[0], mode, "coordinate"),
                            _num_in(entry[1], mode, "coordinate")))
    root = doc.get("root")
    if isinstance(root, bool) or not isinstance(root, int):
        raise UsageError("malformed document: root must be an integer")
    if "delta" not in doc:
        raise UsageError("malformed document: missing delta")
    delta = _num_in(doc["delta"], mode, "delta")
    cost_bound = None
    if "cost_bound" in doc:
        cost_bound = _num_in(doc["cost_bound"], mode, "cost_bound")
    return Instance(tuple(points), root, delta, cost_bound)


def _check_index(i, n, what):
    if isinstance(i, bool) or not isinstance(i, int) or not (0 <= i < n):
        raise UsageError(f"malformed document: {what} index {i!r} out of range")


def save_network_edges(edges) -> bytes:
    doc = {"edges": [[int(i), int(j)] for i, j in sorted(edges)]}
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")


def load_network_edges(data, n: int) -> frozenset:
    doc = _loads(data)
    raw = doc.get("edges")
    if not isinstance(raw, list):
        raise UsageError("malformed document: edges must be a list")
    edges = set()
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 2:
            raise UsageError("malformed document: each edge must be an [i,j] pair")
        i, j = entry
        _check_index(i, n, "edge")
        _check_index(j, n, "edge")
        if i == j:
            raise UsageError(f"malformed document: self-loop at {i}")
        edge = (min(i, j), max(i, j))
        if edge in edges:
            raise UsageError(f"malformed document: duplicate edge {edge}")
        edges.add(edge)
    return frozenset(edges)


def save_tree_parent(parent: dict) -> bytes:
    doc = {"parent": {str(v): int(p) for v, p in sorted(parent.items())}}
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")


def load_tree_parent(data, n: int, root: int) -> dict:
    doc = _loads(data)
    raw = doc.get("parent")
    if not isinstance(raw, dict):
        raise UsageError("malformed document: parent must be an object")
    parent = {}
    for key, value in raw.items():
        try:
            v = int(key)
        except ValueError as exc:
            raise UsageError(f"malformed document: bad vertex key {key!r}") from exc
        _check_index(v, n, "vertex")
        _check_index(value, n, "parent")
        if v == root:
            raise UsageError("malformed document: root must not have a parent")
        parent[v] = value
    return parent


def save_knapsack(instance) -> bytes:
    doc = {
        "items": [[int(p), int(w)] for p, w in instance.items],
        "P": int(instance.profit_bound),
        "W": int(instance.weight_bound),
    }
    return (json.dumps(doc, separators=(",", ":")) + "\n").encode("utf-8")


def load_knapsack(data):
    from .knapsack import KnapsackInstance

    doc = _loads(data)
    raw = doc.get("items")
    if not isinstance(raw, list):
        raise UsageError("malformed document: items must be a list")
    items = []
    for entry in raw:
        if not isinstance(entry, list) or len(entry) != 2:
            raise UsageError("malformed document: each item must be a [p,w] pair")
        p, w = entry
        for x in (p, w):
            if isinstance(x, bool) or not isinstance(x, int):
                raise UsageError("malformed document: item values must be integers")
        items.append((p, w))
    for key in ("P", "W"):
        if key not in doc or isinstance(doc[key], bool) or not isinstance(doc[key], int):
            raise UsageError(f"malformed document: {key} must be an integer")
    return KnapsackInstance(tuple(items), doc["P"], doc["W"])

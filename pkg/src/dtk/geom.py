"""Planar points, instances, and coordinate arithmetic in two modes.

Float mode uses 64-bit binary floats throughout.  Exact mode stores
arbitrary-precision rationals; distances are irrational in general, so
exact-mode comparisons work on squared values and exact-mode lengths
are reported as enclosing intervals (see `intervals`).  The two modes
never mix within one instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ModeMismatchError, UsageError
from .intervals import Interval

FLOAT = "float"
EXACT = "exact"


@dataclass(frozen=True)
class Point:
    x: object
    y: object

    def __post_init__(self):
        fx, fy = isinstance(self.x, float), isinstance(self.y, float)
        if fx != fy:
            raise ModeMismatchError("point mixes float and exact coordinates")
        if not fx:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def mode(self) -> str:
        return FLOAT if isinstance(self.x, float) else EXACT


def _require_same_mode(u: Point, v: Point) -> str:
    if u.mode != v.mode:
        raise ModeMismatchError(f"mixed arithmetic modes: {u.mode} vs {v.mode}")
    return u.mode


def squared_distance(u: Point, v: Point):
    """|uv|**2 in the points' own arithmetic."""
    _require_same_mode(u, v)
    dx = u.x - v.x
    dy = u.y - v.y
    return dx * dx + dy * dy


def distance(u: Point, v: Point, precision_bits: int | None = None):
    """Euclidean distance |uv|.

    Float mode returns the float distance.  Exact mode returns the
    SQUARED distance unless precision_bits is given, in which case an
    enclosing Interval of the true distance is returned.
    """
    mode = _require_same_mode(u, v)
    if mode == FLOAT:
        return math.dist((u.x, u.y), (v.x, v.y))
    if precision_bits is None:
        return squared_distance(u, v)
    return Interval.sqrt(squared_distance(u, v), precision_bits)


def distance_interval(u: Point, v: Point, precision_bits: int) -> Interval:
    """Enclosing interval of |uv| for exact-mode points."""
    if _require_same_mode(u, v) != EXACT:
        raise ModeMismatchError("distance_interval requires exact-mode points")
    return Interval.sqrt(squared_distance(u, v), precision_bits)


def _coerce_scalar(value, mode: str):
    if value is None:
        return None
    if mode == FLOAT:
        if isinstance(value, Fraction):
            return float(value)
        return float(value)
    return Fraction(value)


@dataclass(frozen=True)
class Instance:
    """A point set with designated source and problem bounds.

    points are ordered (the order is semantic: gadget constructions fix
    an index convention), root indexes into them, delta >= 1 is the
    dilation bound, cost_bound is optional.
    """

    points: tuple
    root: int
    delta: object
    cost_bound: object = None
    mode: str = field(default=None)

    def __post_init__(self):
        points = tuple(self.points)
        if not points:
            raise UsageError("instance needs at least one point")
        object.__setattr__(self, "points", points)
        mode = points[0].mode
        for p in points:
            if p.mode != mode:
                raise ModeMismatchError("instance mixes float and exact points")
        if self.mode is not None and self.mode != mode:
            raise ModeMismatchError(
                f"instance tagged {self.mode} but points are {mode}"
            )
        object.__setattr__(self, "mode", mode)
        seen = {}
        for i, p in enumerate(points):
            key = (p.x, p.y)
            if key in seen:
                raise UsageError(f"duplicate point: indices {seen[key]} and {i}")
            seen[key] = i
        if not (0 <= self.root < len(points)):
            raise UsageError(f"root out of range: {self.root}")
        object.__setattr__(self, "delta", _coerce_scalar(self.delta, mode))
        if self.delta < 1:
            raise UsageError(f"delta must be >= 1, got {self.delta}")
        object.__setattr__(self, "cost_bound", _coerce_scalar(self.cost_bound, mode))
        if self.cost_bound is not None and self.cost_bound < 0:
            raise UsageError("cost_bound must be >= 0")

    @property
    def n(self) -> int:
        return len(self.points)

    def root_point(self) -> Point:
        return self.points[self.root]


def float_instance(coords, root=0, delta=2.0, cost_bound=None) -> Instance:
    points = tuple(Point(float(x), float(y)) for x, y in coords)
    return Instance(points, root, delta, cost_bound)


def exact_instance(coords, root=0, delta=Fraction(2), cost_bound=None) -> Instance:
    points = tuple(Point(Fraction(x), Fraction(y)) for x, y in coords)
    return Instance(points, root, delta, cost_bound)

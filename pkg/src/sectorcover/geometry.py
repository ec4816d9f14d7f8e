"""Points, sectors, and the directional coverage predicate.

The strip is the band ``0 <= y <= 1``. A sector ``(R, alpha)`` placed at a
vertex sees a point when the point lies in the closed circular sector *and*
the vertex is not to the left of the point (``vertex.x >= p.x``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParametersError

TWO_PI = 2.0 * math.pi
BOUNDARY_TOL = 1e-12


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidParametersError(f"non-finite point ({self.x}, {self.y})")


@dataclass(frozen=True)
class SectorShape:
    """Device footprint: a circular sector of radius ``radius`` and apex angle ``angle``."""

    radius: float
    angle: float

    def __post_init__(self):
        if not self.radius > 0:
            raise InvalidParametersError(f"radius must be positive, got {self.radius}")
        if not 0 < self.angle <= math.pi:
            raise InvalidParametersError(f"angle must lie in (0, pi], got {self.angle}")


@dataclass(frozen=True)
class SectorPlacement:
    """A sector positioned at ``vertex`` spanning ``[start_direction, start_direction + angle]``."""

    shape: SectorShape
    vertex: Point
    start_direction: float

    @property
    def radius(self) -> float:
        return self.shape.radius

    @property
    def angle(self) -> float:
        return self.shape.angle

    def translated(self, dx: float, dy: float = 0.0) -> "SectorPlacement":
        return SectorPlacement(self.shape, Point(self.vertex.x + dx, self.vertex.y + dy), self.start_direction)

    def side_endpoints(self) -> tuple[Point, Point]:
        """Far ends of the two straight sides."""
        v, r = self.vertex, self.radius
        t0, t1 = self.start_direction, self.start_direction + self.angle
        return (
            Point(v.x + r * math.cos(t0), v.y + r * math.sin(t0)),
            Point(v.x + r * math.cos(t1), v.y + r * math.sin(t1)),
        )


@dataclass(frozen=True)
class StripWindow:
    """Finite x-range of the unit-width strip used for construction and checks."""

    x_min: float
    x_max: float

    def __post_init__(self):
        if not self.x_max - self.x_min > 0:
            raise InvalidParametersError(f"empty window [{self.x_min}, {self.x_max}]")

    @property
    def length(self) -> float:
        return self.x_max - self.x_min


def contains_mask(s: SectorPlacement, x, y) -> np.ndarray:
    """Vectorised closed-sector membership for coordinate arrays ``x``, ``y``."""
    dx = np.asarray(x, dtype=float) - s.vertex.x
    dy = np.asarray(y, dtype=float) - s.vertex.y
    dist = np.hypot(dx, dy)
    in_disk = dist <= s.radius * (1.0 + BOUNDARY_TOL)
    rel = np.mod(np.arctan2(dy, dx) - s.start_direction, TWO_PI)
    in_span = (rel <= s.angle + BOUNDARY_TOL) | (rel >= TWO_PI - BOUNDARY_TOL) | (dist == 0.0)
    return in_disk & in_span


def directional_mask(s: SectorPlacement, x, y) -> np.ndarray:
    """Vectorised :func:`directionally_covers`."""
    return contains_mask(s, x, y) & (s.vertex.x >= np.asarray(x, dtype=float))


def sector_contains(s: SectorPlacement, p: Point) -> bool:
    return bool(contains_mask(s, p.x, p.y))


def directionally_covers(s: SectorPlacement, p: Point) -> bool:
    """True iff ``s`` contains ``p`` and its vertex is not to the left of ``p``."""
    return sector_contains(s, p) and s.vertex.x >= p.x


def sector_area(shape: SectorShape) -> float:
    return shape.radius**2 * shape.angle / 2.0

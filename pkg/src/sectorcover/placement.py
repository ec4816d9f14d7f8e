"""Periodic sector placements realising each coverage model.

Every model uses boundary-hugging sectors that open toward ``-x``:

* floor sectors sit on ``y = 0`` spanning ``[pi - alpha, pi]``;
* ceiling sectors sit on ``y = 1`` spanning ``[pi, pi + alpha]``.

S1 and S2 pair a floor sector with its mirror image across ``y = 1/2``;
S3 pairs two ceiling sectors. The second sector of a pair is shifted by an
intra-pair offset ``s``; half a period works for every model, and a 1-D
search over ``s`` is the fallback.

At height ``y`` each sector's cross-section is a single interval, so the
periodic pattern covers the strip iff, at every height, the two interval
families cover the circle ``R / period``. :func:`coverage_margin` measures
the worst slack of that condition.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import models
from .errors import ConstructionError, InfeasibleParametersError, InvalidParametersError
from .geometry import Point, SectorPlacement, SectorShape, StripWindow
from .models import CoverageModel

MARGIN_TOL = 1e-10
MARGIN_HEIGHTS = 4001
OFFSET_GRID = 512


@dataclass(frozen=True)
class Cover:
    model: CoverageModel
    shape: SectorShape
    placements: tuple[SectorPlacement, ...]
    period: float
    window: StripWindow
    offset: float

    def to_dict(self) -> dict:
        return {
            "model": self.model.value,
            "radius": self.shape.radius,
            "angle": self.shape.angle,
            "period": self.period,
            "offset": self.offset,
            "window": {"x_min": self.window.x_min, "x_max": self.window.x_max},
            "placements": [
                {
                    "vertex": [p.vertex.x, p.vertex.y],
                    "start_direction": p.start_direction,
                    "angle": p.angle,
                    "radius": p.radius,
                }
                for p in self.placements
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Cover":
        try:
            placements = tuple(
                SectorPlacement(
                    SectorShape(float(p["radius"]), float(p["angle"])),
                    Point(float(p["vertex"][0]), float(p["vertex"][1])),
                    float(p["start_direction"]),
                )
                for p in d["placements"]
            )
            return cls(
                CoverageModel.parse(d["model"]),
                SectorShape(float(d["radius"]), float(d["angle"])),
                placements,
                float(d["period"]),
                StripWindow(float(d["window"]["x_min"]), float(d["window"]["x_max"])),
                float(d.get("offset", 0.0)),
            )
        except (KeyError, TypeError, IndexError) as exc:
            raise InvalidParametersError(f"malformed cover document: {exc}") from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Cover":
        return cls.from_dict(json.loads(text))

    def without(self, indices) -> "Cover":
        """Copy with the placements at ``indices`` removed."""
        drop = set(indices)
        kept = tuple(p for i, p in enumerate(self.placements) if i not in drop)
        return Cover(self.model, self.shape, kept, self.period, self.window, self.offset)


def floor_sector(shape: SectorShape, x: float) -> SectorPlacement:
    return SectorPlacement(shape, Point(x, 0.0), math.pi - shape.angle)


def ceiling_sector(shape: SectorShape, x: float) -> SectorPlacement:
    return SectorPlacement(shape, Point(x, 1.0), math.pi)


def _pair_makers(model: CoverageModel):
    if model is CoverageModel.S3:
        return ceiling_sector, ceiling_sector
    return floor_sector, ceiling_sector


def _cross_section(R, alpha, depth):
    """Interval covered at distance ``depth`` from the host boundary, vertex at x=0."""
    cot = math.cos(alpha) / math.sin(alpha)
    return -np.sqrt(R * R - depth * depth), -depth * cot


def coverage_margin(model, R: float, alpha: float, period: float, offset: float, heights: int = MARGIN_HEIGHTS) -> float:
    """Worst-case covering slack of the pattern over all heights (>= 0 means covered)."""
    model = CoverageModel.parse(model)
    y = np.linspace(0.0, 1.0, heights)
    depth_a = 1.0 - y if model is CoverageModel.S3 else y
    a1, a2 = _cross_section(R, alpha, depth_a)
    b1, b2 = _cross_section(R, alpha, 1.0 - y)
    b1, b2 = b1 + offset, b2 + offset
    alone = np.maximum(a2 - a1, b2 - b1) - period
    kmax = int(math.ceil((R + abs(offset)) / period)) + 2
    k = np.arange(-kmax, kmax + 1)[:, None] * period
    joint = np.minimum(a2[None, :] - (b1[None, :] + k), (b2[None, :] + k) - (a1[None, :] + period)).max(axis=0)
    return float(np.maximum(alone, joint).min())


def find_offset(model, R: float, alpha: float, period: float) -> tuple[float, float]:
    """Intra-pair offset with the best covering margin; returns ``(offset, margin)``."""
    half = 0.5 * period
    m = coverage_margin(model, R, alpha, period, half)
    if m >= -MARGIN_TOL:
        return half, m
    grid = np.linspace(0.0, period, OFFSET_GRID, endpoint=False)
    margins = np.array([coverage_margin(model, R, alpha, period, s) for s in grid])
    i = int(np.argmax(margins))
    best_s, best_m = float(grid[i]), float(margins[i])
    # refine inside the neighbouring grid cells
    step = period / OFFSET_GRID
    lo, hi = best_s - step, best_s + step
    for _ in range(60):
        s1, s2 = lo + (hi - lo) / 3, hi - (hi - lo) / 3
        if coverage_margin(model, R, alpha, period, s1) >= coverage_margin(model, R, alpha, period, s2):
            hi = s2
        else:
            lo = s1
    s = 0.5 * (lo + hi)
    ms = coverage_margin(model, R, alpha, period, s)
    if ms > best_m:
        best_s, best_m = s % period, ms
    return best_s, best_m


def build_pattern(model, R: float, alpha: float, window: StripWindow, offset: float | None = None) -> Cover:
    """Lay out the pair pattern over ``window`` plus margins, without the coverage gate."""
    model = CoverageModel.parse(model)
    period = models.tile_width(model, R, alpha)
    if not period > 0:
        raise InfeasibleParametersError(f"degenerate tile width {period}")
    if offset is None:
        offset = find_offset(model, R, alpha, period)[0]
    shape = SectorShape(R, alpha)
    first, second = _pair_makers(model)
    reach = period + R
    k_lo = -int(math.ceil(reach / period)) - 1
    k_hi = int(math.ceil((window.length + reach) / period)) + 1
    placements = []
    for k in range(k_lo, k_hi + 1):
        x = window.x_min + k * period
        if window.x_min - reach <= x <= window.x_max + reach:
            placements += [first(shape, x), second(shape, x + offset)]
    placements.sort(key=lambda p: (p.vertex.x, p.vertex.y))
    return Cover(model, shape, tuple(placements), period, window, offset)


def generate_cover(model, R: float, alpha: float, window: StripWindow) -> Cover:
    """Construct a verified periodic cover for feasible ``(R, alpha)``.

    Raises :class:`InfeasibleParametersError` outside the model's domain and
    :class:`ConstructionError` when no intra-pair offset covers the strip at
    period ``tile_width(model, R, alpha)``.
    """
    model = CoverageModel.parse(model)
    if not models.is_feasible(model, R, alpha):
        raise InfeasibleParametersError(f"{model.value} infeasible at R={R}, alpha={alpha}")
    period = models.tile_width(model, R, alpha)
    offset, margin = find_offset(model, R, alpha, period)
    if margin < -MARGIN_TOL:
        raise ConstructionError(
            f"{model.value} pattern at R={R}, alpha={alpha} leaves gaps at period {period} "
            f"(best offset {offset:.6g}, margin {margin:.3g})"
        )
    return build_pattern(model, R, alpha, window, offset)

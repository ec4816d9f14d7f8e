"""Sampling oracle for directional coverage and empirical density.

Checks run on one period in the middle of the cover's window; periodicity
extends the verdict to the whole strip. Samples are inset by
``edge_shrink`` so that ties on closed boundaries never decide a result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import Point, contains_mask, directional_mask, sector_area
from .placement import Cover

CHUNK = 200_000


@dataclass(frozen=True)
class SamplingSpec:
    grid_nx: int = 2000
    grid_ny: int = 1000
    random_samples: int = 100_000
    seed: int = 42
    edge_shrink: float = 1e-9

    def __post_init__(self):
        if self.grid_nx < 2 or self.grid_ny < 2:
            raise ValueError("grid needs at least 2 x 2 points")
        if self.random_samples < 0:
            raise ValueError("random_samples must be non-negative")
        if not self.edge_shrink > 0:
            raise ValueError("edge_shrink must be positive")


@dataclass(frozen=True)
class CoverageReport:
    coverage_fraction: float
    worst_uncovered: Point | None
    empirical_density: float
    samples_used: int

    def to_dict(self) -> dict:
        w = self.worst_uncovered
        return {
            "coverage_fraction": self.coverage_fraction,
            "worst_uncovered": None if w is None else [w.x, w.y],
            "empirical_density": self.empirical_density,
            "samples_used": self.samples_used,
        }


def check_period(cover: Cover) -> tuple[float, float]:
    """The x-range ``[lo, hi]`` of the interior period used by the checks."""
    mid = 0.5 * (cover.window.x_min + cover.window.x_max)
    return mid - 0.5 * cover.period, mid + 0.5 * cover.period


def _covered(cover: Cover, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    out = np.zeros(x.shape, dtype=bool)
    if x.size == 0:
        return out
    lo, hi = x.min(), x.max()
    for s in cover.placements:
        if s.vertex.x < lo or s.vertex.x - s.radius > hi:
            continue
        out |= directional_mask(s, x, y)
    return out


def verify_cover(cover: Cover, spec: SamplingSpec | None = None) -> CoverageReport:
    """Sample one period on a grid plus seeded uniform points and test each for coverage."""
    spec = spec or SamplingSpec()
    lo, hi = check_period(cover)
    eps = spec.edge_shrink
    xs = np.linspace(lo + eps, hi - eps, spec.grid_nx)
    ys = np.linspace(eps, 1.0 - eps, spec.grid_ny)

    n_ok = 0
    witness = None
    cols = max(1, CHUNK // spec.grid_ny)
    for start in range(0, spec.grid_nx, cols):
        gx, gy = np.meshgrid(xs[start:start + cols], ys, indexing="ij")
        ok = _covered(cover, gx.ravel(), gy.ravel())
        n_ok += int(ok.sum())
        if witness is None and not ok.all():
            # x-major ravel order makes the first miss the lexicographic minimum
            k = int(np.argmin(ok))
            witness = Point(float(gx.ravel()[k]), float(gy.ravel()[k]))

    rng = np.random.default_rng(spec.seed)
    rx = rng.uniform(lo + eps, hi - eps, spec.random_samples)
    ry = rng.uniform(eps, 1.0 - eps, spec.random_samples)
    ok_r = np.concatenate([_covered(cover, rx[i:i + CHUNK], ry[i:i + CHUNK]) for i in range(0, rx.size, CHUNK)] or [np.ones(0, bool)])
    n_ok += int(ok_r.sum())
    if witness is None and not ok_r.all():
        miss = np.flatnonzero(~ok_r)
        k = miss[np.lexsort((ry[miss], rx[miss]))[0]]
        witness = Point(float(rx[k]), float(ry[k]))

    total = spec.grid_nx * spec.grid_ny + spec.random_samples
    fraction = 1.0 if witness is None else n_ok / total
    return CoverageReport(fraction, witness, empirical_density(cover), total)


def _counting_start(cover: Cover, lo: float) -> float:
    # nudge the half-open period so no vertex sits on its ends
    xs = np.array([s.vertex.x for s in cover.placements])
    tol = 1e-9 * cover.period
    for j in range(64):
        t = lo + j * cover.period / 67.0
        if xs.size == 0 or (np.abs(xs - t).min() > tol and np.abs(xs - t - cover.period).min() > tol):
            return t
    return lo


def empirical_density(cover: Cover) -> float:
    """Total area of the sectors with a vertex in one period, per unit strip area."""
    t = _counting_start(cover, check_period(cover)[0])
    area = sum(sector_area(s.shape) for s in cover.placements if t <= s.vertex.x < t + cover.period)
    return area / cover.period


def multiplicity_density(cover: Cover, samples: int = 1_000_000, seed: int = 42) -> float:
    """Monte Carlo estimate of the mean number of sectors over a point, per period slab.

    The slab spans one period in x and every height any sector reaches, so
    area outside the strip is counted exactly as in :func:`empirical_density`.
    """
    lo, hi = check_period(cover)
    relevant = [s for s in cover.placements if s.vertex.x + s.radius >= lo and s.vertex.x - s.radius <= hi]
    if not relevant:
        return 0.0
    y_lo = min(s.vertex.y - s.radius for s in relevant)
    y_hi = max(s.vertex.y + s.radius for s in relevant)
    rng = np.random.default_rng(seed)
    total = 0
    for start in range(0, samples, CHUNK):
        n = min(CHUNK, samples - start)
        x = rng.uniform(lo, hi, n)
        y = rng.uniform(y_lo, y_hi, n)
        total += sum(int(contains_mask(s, x, y).sum()) for s in relevant)
    return total / samples * (y_hi - y_lo)

"""
Why the S2 optimum does not cover the strip
===========================================

At R = sqrt(2) and a 60 degree angle the S2 tile is 2 units wide, so
each of its two sectors must cover one unit of strip area. No placement
of that sector keeps more than about 0.9967 of its area inside the strip,
so the pattern must leave holes. The best pattern that really covers
is found by restricting to realizable angles.
"""

import math

import numpy as np

from sectorcover import CoverageModel, models, optimize, placement
from sectorcover.errors import ConstructionError
from sectorcover.geometry import StripWindow
from sectorcover.verify import SamplingSpec, verify_cover

R, alpha = math.sqrt(2), math.pi / 3
print(f"tile width {models.tile_width(CoverageModel.S2, R, alpha):.6f}")

# best in-strip area: vertex on the floor and the sector leaning into the strip
phi = np.linspace(2 * math.pi / 3, math.pi, 200_001)
r = np.minimum(R, 1 / np.sin(phi).clip(1e-300))
print(f"in-strip area of one sector (side on the boundary): {np.trapezoid(0.5 * r**2, phi):.6f}")

try:
    placement.generate_cover(CoverageModel.S2, R, alpha, StripWindow(0, 8))
except ConstructionError as exc:
    print("construction refused:", exc)

forced = placement.build_pattern(CoverageModel.S2, R, alpha, StripWindow(0, 8))
print("forced pattern coverage:", verify_cover(forced, SamplingSpec(600, 300, 10_000)).coverage_fraction)

best = optimize.optimize_s2_realizable()
print(
    f"best realizable S2: R={best.radius_star:.5f} alpha={math.degrees(best.alpha_star):.3f} deg"
    f" density={best.density_star:.6f}"
)

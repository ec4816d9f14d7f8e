"""
Comparing models and drawing a cover
====================================

Energy is proportional to sector area, so the density ratio says how much
more energy one model spends than another and how much longer the cheaper
one lasts. The S3 optimum is then written out as an SVG picture.
"""

import math

from sectorcover import CoverageModel, compare, placement
from sectorcover.geometry import StripWindow
from sectorcover.render import RenderSpec, write_svg

for a, b in [(CoverageModel.S1, CoverageModel.S2), (CoverageModel.S3, CoverageModel.S2)]:
    rep = compare.compare_optima(a, b)
    print(f"{a.value} vs {b.value}: energy excess {rep.energy_excess:.4f}, lifetime gain {rep.lifetime_gain:.4f}")
    if rep.note:
        print("  note:", rep.note)

cover = placement.generate_cover(CoverageModel.S3, math.sqrt(2), math.pi / 2, StripWindow(0, 8))
path = write_svg(cover, RenderSpec("s3_optimum.svg", pixels_per_unit=80))
print("wrote", path)

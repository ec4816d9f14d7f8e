"""
Densities and optima of the three strip models
==============================================

Evaluate the closed-form densities and let the optimizer find the best
(radius, angle) pair for each model. A brute-force grid is run alongside
as a sanity check.
"""

import math

from sectorcover import CoverageModel, optimize
from sectorcover.models import density

# one point per model, densities are area per unit strip area
for model, R, alpha in [(CoverageModel.S1, 1.5, 0.8), (CoverageModel.S2, 1.2, 1.4), (CoverageModel.S3, 2.0, 1.0)]:
    rep = density(model, R, alpha)
    print(f"{model.value}: R={R:.3f} alpha={alpha:.3f} width={rep.tile_width:.4f} density={rep.density:.4f}")

print()
for model in CoverageModel:
    best = optimize.optimize_model(optimize.default_domain(model))
    grid = optimize.grid_cross_check(model, 500)
    print(
        f"{model.value}: alpha*={math.degrees(best.alpha_star):7.3f} deg  R*={best.radius_star:.6f}"
        f"  D*={best.density_star:.6f}  (grid D={grid.density_star:.6f})"
    )

"""
The unconstrained stationary angle and the capped-angle rule
============================================================

With the radius pinned to the smallest value that still reaches across
the strip, the S1 density has a stationary point outside the admissible
angle range. Capping the angle below 60 degrees gives a closed form, but
letting the radius grow a little past the reach does slightly better.
"""

import math

from sectorcover import CoverageModel, optimize
from sectorcover.models import remark_restricted_density

alpha1, d1 = optimize.find_alpha1()
print(f"stationary angle {alpha1:.6f} rad ({math.degrees(alpha1):.3f} deg), density {d1:.6f}")

cap = math.pi / 4
rule = remark_restricted_density(cap)
tight = optimize.optimize_model(optimize.default_domain(CoverageModel.S1, cap, optimize.TIGHT))
free = optimize.optimize_model(optimize.default_domain(CoverageModel.S1, cap, optimize.FREE))
print(f"cap at 45 deg: closed form {rule.density:.6f}, tight search {tight.density_star:.6f}")
print(f"free radius: {free.density_star:.6f} at R={free.radius_star:.4f} (delta={free.delta_star:.4f})")

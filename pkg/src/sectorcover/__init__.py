"""Minimum-density directional covers of a unit strip by identical sectors."""

from .errors import (
    ConstructionError,
    ConvergenceError,
    EmptyDomainError,
    InfeasibleParametersError,
    InvalidParametersError,
)
from .geometry import Point, SectorPlacement, SectorShape, StripWindow, directionally_covers, sector_area, sector_contains
from .models import (
    CoverageModel,
    DensityReport,
    bidirectional_density,
    density,
    is_feasible,
    obtuse_midline_density,
    remark_restricted_density,
    tile_width,
)
from .optimize import OptimalResult, OptimizationDomain, default_domain, find_alpha1, grid_cross_check, optimize_model
from .placement import Cover, generate_cover
from .verify import CoverageReport, SamplingSpec, empirical_density, multiplicity_density, verify_cover
from .compare import ComparisonReport, compare_models, compare_optima

__version__ = "0.1.0"
